// Copyright 2026 The physinfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "physinfo/description.hpp"

#include <cstdio>
#include <map>
#include <sstream>

namespace physinfo {
namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void append_level(std::string& out, const DescriptionLevel& lvl) {
    out += "LEVEL " + std::to_string(lvl.level) + " " + std::to_string(lvl.width) + " " +
           std::to_string(lvl.height) + "\n";
    out += "REGIONS " + std::to_string(lvl.regions.size()) + "\n";
    for (const RegionDescriptor& r : lvl.regions) {
        out += std::to_string(r.id) + " " + std::to_string(r.size) + " " + fixed6(r.centroid_x) +
               " " + fixed6(r.centroid_y) + " " + fixed6(r.mean_intensity) + " " +
               std::to_string(r.x0) + " " + std::to_string(r.y0) + " " + std::to_string(r.x1) +
               " " + std::to_string(r.y1) + " " +
               (r.parent ? std::to_string(*r.parent) : std::string("-")) + "\n";
    }
    out += "RLE\n";
    for (int y = 0; y < lvl.height; ++y) {
        RegionId run_id = lvl.labels.at(0, y);
        int run_len = 1;
        std::string row;
        for (int x = 1; x < lvl.width; ++x) {
            const RegionId id = lvl.labels.at(x, y);
            if (id == run_id) {
                ++run_len;
            } else {
                row += std::to_string(run_id) + ":" + std::to_string(run_len) + " ";
                run_id = id;
                run_len = 1;
            }
        }
        row += std::to_string(run_id) + ":" + std::to_string(run_len);
        out += row;
        out += "\n";
    }
}

// Pulls the next line; reports the running 1-based line number.
class LineReader {
public:
    explicit LineReader(const std::string& text) : text_(text) {}

    bool next(std::string& line) {
        if (pos_ >= text_.size()) return false;
        const std::size_t nl = text_.find('\n', pos_);
        if (nl == std::string::npos) {
            line = text_.substr(pos_);
            pos_ = text_.size();
        } else {
            line = text_.substr(pos_, nl - pos_);
            pos_ = nl + 1;
        }
        ++line_no_;
        return true;
    }

    int line_no() const { return line_no_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_no_ = 0;
};

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const std::string& tok, int line, const std::string& what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer for " + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(line, "expected integer for " + what + ", got '" + tok + "'");
    return v;
}

double parse_real(const std::string& tok, int line, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected number for " + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(line, "expected number for " + what + ", got '" + tok + "'");
    return v;
}

std::string expect_line(LineReader& reader, const std::string& what) {
    std::string line;
    if (!reader.next(line)) throw ParseError(reader.line_no(), "unexpected end of document, expected " + what);
    return line;
}

}  // namespace

const DescriptionLevel& Description::level_block(int level) const {
    for (const DescriptionLevel& l : levels)
        if (l.level == level) return l;
    throw std::invalid_argument("unknown level " + std::to_string(level));
}

bool Description::has_level(int level) const {
    for (const DescriptionLevel& l : levels)
        if (l.level == level) return true;
    return false;
}

std::string encode(const Description& desc) {
    std::string out;
    out += "PHYSINFO 1\n";
    out += "SIZE " + std::to_string(desc.width) + " " + std::to_string(desc.height) + "\n";
    out += "LEVELS " + std::to_string(desc.levels.size()) + "\n";
    out += "CONFIG " + std::to_string(desc.config.k_bins) + " " + fixed6(desc.config.deviation_tau) +
           " " + std::to_string(desc.config.seed_min_px) + " " +
           std::to_string(desc.config.max_refine_iters) + " " +
           std::to_string(desc.config.min_region_px) + " " + std::to_string(desc.stop_threshold) +
           "\n";
    for (const DescriptionLevel& lvl : desc.levels) append_level(out, lvl);
    out += "RELATIONS " + std::to_string(desc.relations.size()) + "\n";
    for (const RelationEdge& e : desc.relations) {
        out += std::string(relation_kind_name(e.kind)) + " " + std::to_string(e.level) + " " +
               std::to_string(e.subject) + " " + std::to_string(e.object) + "\n";
    }
    return out;
}

Description decode(const std::string& text) {
    LineReader reader(text);
    std::string line;
    if (!reader.next(line)) throw ParseError(0, "missing header");
    if (line != "PHYSINFO 1") {
        if (line.rfind("PHYSINFO", 0) == 0)
            throw ParseError(reader.line_no(), "unsupported format version: '" + line + "'");
        throw ParseError(reader.line_no(), "missing header");
    }

    Description desc;

    auto tokens = split_ws(expect_line(reader, "SIZE"));
    if (tokens.size() != 3 || tokens[0] != "SIZE")
        throw ParseError(reader.line_no(), "expected 'SIZE <w> <h>'");
    desc.width = static_cast<int>(parse_int(tokens[1], reader.line_no(), "width"));
    desc.height = static_cast<int>(parse_int(tokens[2], reader.line_no(), "height"));
    if (desc.width < 1 || desc.height < 1)
        throw ParseError(reader.line_no(), "non-positive image dimensions");

    tokens = split_ws(expect_line(reader, "LEVELS"));
    if (tokens.size() != 2 || tokens[0] != "LEVELS")
        throw ParseError(reader.line_no(), "expected 'LEVELS <n>'");
    const int level_count = static_cast<int>(parse_int(tokens[1], reader.line_no(), "level count"));
    if (level_count < 1) throw ParseError(reader.line_no(), "level count must be >= 1");

    tokens = split_ws(expect_line(reader, "CONFIG"));
    if (tokens.size() != 7 || tokens[0] != "CONFIG")
        throw ParseError(reader.line_no(), "expected 'CONFIG <k_bins> <tau> <seed_min_px> "
                                           "<max_refine_iters> <min_region_px> <stop_threshold>'");
    desc.config.k_bins = static_cast<int>(parse_int(tokens[1], reader.line_no(), "k_bins"));
    desc.config.deviation_tau = parse_real(tokens[2], reader.line_no(), "tau");
    desc.config.seed_min_px = static_cast<int>(parse_int(tokens[3], reader.line_no(), "seed_min_px"));
    desc.config.max_refine_iters =
        static_cast<int>(parse_int(tokens[4], reader.line_no(), "max_refine_iters"));
    desc.config.min_region_px =
        static_cast<int>(parse_int(tokens[5], reader.line_no(), "min_region_px"));
    desc.stop_threshold = static_cast<int>(parse_int(tokens[6], reader.line_no(), "stop_threshold"));

    for (int block = 0; block < level_count; ++block) {
        const int expected_level = level_count - 1 - block;
        tokens = split_ws(expect_line(reader, "LEVEL"));
        if (tokens.size() != 4 || tokens[0] != "LEVEL")
            throw ParseError(reader.line_no(), "expected 'LEVEL <level> <w> <h>'");
        DescriptionLevel lvl;
        lvl.level = static_cast<int>(parse_int(tokens[1], reader.line_no(), "level"));
        lvl.width = static_cast<int>(parse_int(tokens[2], reader.line_no(), "level width"));
        lvl.height = static_cast<int>(parse_int(tokens[3], reader.line_no(), "level height"));
        if (lvl.level != expected_level)
            throw ParseError(reader.line_no(), "levels must run from " +
                                                   std::to_string(level_count - 1) +
                                                   " down to 0, got " + std::to_string(lvl.level));
        if (lvl.width < 1 || lvl.height < 1)
            throw ParseError(reader.line_no(), "non-positive level dimensions");
        if (lvl.level == 0 && (lvl.width != desc.width || lvl.height != desc.height))
            throw ParseError(reader.line_no(), "level 0 dimensions disagree with SIZE");

        tokens = split_ws(expect_line(reader, "REGIONS"));
        if (tokens.size() != 2 || tokens[0] != "REGIONS")
            throw ParseError(reader.line_no(), "expected 'REGIONS <count>'");
        const long long region_count = parse_int(tokens[1], reader.line_no(), "region count");
        if (region_count < 1) throw ParseError(reader.line_no(), "region count must be >= 1");

        std::map<RegionId, std::int64_t> declared_size;
        for (long long r = 0; r < region_count; ++r) {
            tokens = split_ws(expect_line(reader, "a region row"));
            if (tokens.size() != 10)
                throw ParseError(reader.line_no(),
                                 "region row needs 10 fields: id size cx cy mean x0 y0 x1 y1 parent");
            RegionDescriptor d;
            d.id = static_cast<RegionId>(parse_int(tokens[0], reader.line_no(), "region id"));
            d.level = lvl.level;
            d.size = parse_int(tokens[1], reader.line_no(), "region size");
            d.centroid_x = parse_real(tokens[2], reader.line_no(), "centroid x");
            d.centroid_y = parse_real(tokens[3], reader.line_no(), "centroid y");
            d.mean_intensity = parse_real(tokens[4], reader.line_no(), "mean intensity");
            d.x0 = static_cast<int>(parse_int(tokens[5], reader.line_no(), "bbox x0"));
            d.y0 = static_cast<int>(parse_int(tokens[6], reader.line_no(), "bbox y0"));
            d.x1 = static_cast<int>(parse_int(tokens[7], reader.line_no(), "bbox x1"));
            d.y1 = static_cast<int>(parse_int(tokens[8], reader.line_no(), "bbox y1"));
            if (tokens[9] != "-")
                d.parent = static_cast<RegionId>(parse_int(tokens[9], reader.line_no(), "parent id"));
            if (d.id == 0) throw ParseError(reader.line_no(), "region id 0 is reserved");
            if (d.size < 1) throw ParseError(reader.line_no(), "region size must be >= 1");
            if (declared_size.count(d.id))
                throw ParseError(reader.line_no(), "duplicate region id " + std::to_string(d.id));
            declared_size[d.id] = d.size;
            lvl.regions.push_back(d);
        }

        line = expect_line(reader, "RLE");
        if (line != "RLE") throw ParseError(reader.line_no(), "expected 'RLE'");

        lvl.labels = LabelMap(lvl.width, lvl.height, lvl.level, 0);
        std::map<RegionId, std::int64_t> painted;
        for (int y = 0; y < lvl.height; ++y) {
            tokens = split_ws(expect_line(reader, "an RLE row"));
            if (tokens.empty()) throw ParseError(reader.line_no(), "empty RLE row");
            int x = 0;
            for (const std::string& tok : tokens) {
                const std::size_t colon = tok.find(':');
                if (colon == std::string::npos)
                    throw ParseError(reader.line_no(), "bad RLE token '" + tok + "'");
                const RegionId id = static_cast<RegionId>(
                    parse_int(tok.substr(0, colon), reader.line_no(), "RLE label"));
                const long long len =
                    parse_int(tok.substr(colon + 1), reader.line_no(), "RLE run length");
                if (len < 1) throw ParseError(reader.line_no(), "RLE run length must be >= 1");
                if (!declared_size.count(id))
                    throw ParseError(reader.line_no(),
                                     "RLE label " + std::to_string(id) + " has no region row");
                if (x + len > lvl.width)
                    throw ParseError(reader.line_no(), "RLE row exceeds level width " +
                                                           std::to_string(lvl.width));
                for (long long k = 0; k < len; ++k) lvl.labels.at(x + static_cast<int>(k), y) = id;
                painted[id] += len;
                x += static_cast<int>(len);
            }
            if (x != lvl.width)
                throw ParseError(reader.line_no(), "RLE row sums to " + std::to_string(x) +
                                                       ", expected width " +
                                                       std::to_string(lvl.width));
        }
        for (const auto& [id, size] : declared_size) {
            const auto it = painted.find(id);
            const std::int64_t got = (it == painted.end()) ? 0 : it->second;
            if (got != size)
                throw ParseError(reader.line_no(),
                                 "region " + std::to_string(id) + " declares size " +
                                     std::to_string(size) + " but RLE paints " + std::to_string(got));
        }
        desc.levels.push_back(std::move(lvl));
    }

    tokens = split_ws(expect_line(reader, "RELATIONS"));
    if (tokens.size() != 2 || tokens[0] != "RELATIONS")
        throw ParseError(reader.line_no(), "expected 'RELATIONS <count>'");
    const long long relation_count = parse_int(tokens[1], reader.line_no(), "relation count");
    for (long long i = 0; i < relation_count; ++i) {
        tokens = split_ws(expect_line(reader, "a relation row"));
        if (tokens.size() != 4)
            throw ParseError(reader.line_no(), "relation row needs 4 fields: kind level subject object");
        const auto kind = relation_kind_from_name(tokens[0]);
        if (!kind) throw ParseError(reader.line_no(), "unknown relation kind '" + tokens[0] + "'");
        RelationEdge e;
        e.kind = *kind;
        e.level = static_cast<int>(parse_int(tokens[1], reader.line_no(), "relation level"));
        e.subject = static_cast<RegionId>(parse_int(tokens[2], reader.line_no(), "subject id"));
        e.object = static_cast<RegionId>(parse_int(tokens[3], reader.line_no(), "object id"));
        desc.relations.push_back(e);
    }
    while (reader.next(line)) {
        if (!split_ws(line).empty())
            throw ParseError(reader.line_no(), "trailing content after RELATIONS block");
    }
    return desc;
}

RasterImage reconstruct(const Description& desc, int level) {
    const DescriptionLevel& lvl = desc.level_block(level);
    std::map<RegionId, double> mean;
    for (const RegionDescriptor& r : lvl.regions) mean[r.id] = r.mean_intensity;
    RasterImage img(lvl.width, lvl.height);
    for (std::size_t i = 0; i < img.intensities.size(); ++i)
        img.intensities[i] = mean.at(lvl.labels.labels[i]);
    return img;
}

CompressionReport compression_report(const Description& desc, const RasterImage& original) {
    if (desc.width != original.width || desc.height != original.height)
        throw std::invalid_argument("compression_report: dimension mismatch");
    CompressionReport rep;
    const std::string whole = encode(desc);
    rep.encoded_bytes = whole.size();
    rep.raw_bytes = original.pixel_count();
    rep.ratio = static_cast<double>(rep.encoded_bytes) / static_cast<double>(rep.raw_bytes);
    for (const DescriptionLevel& lvl : desc.levels) {
        std::string section;
        append_level(section, lvl);
        rep.level_bytes.emplace_back(lvl.level, section.size());
    }
    return rep;
}

}  // namespace physinfo
