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

#include "physinfo/kb.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace physinfo {
namespace {

// Shortest decimal that parses back to the same double.
std::string canonical_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
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

// '<key>=<lo>:<hi>' with range-specific validity bounds.
AttrRange parse_range(const std::string& tok, const std::string& key, int line) {
    const std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw ParseError(line, "expected '" + key + "=<lo>:<hi>', got '" + tok + "'");
    const std::string body = tok.substr(prefix.size());
    const std::size_t colon = body.find(':');
    if (colon == std::string::npos)
        throw ParseError(line, "expected '" + key + "=<lo>:<hi>', got '" + tok + "'");
    AttrRange r;
    r.lo = parse_real(body.substr(0, colon), line, key + " lower bound");
    r.hi = parse_real(body.substr(colon + 1), line, key + " upper bound");
    if (r.lo > r.hi)
        throw ParseError(line, key + " range has lo > hi");
    return r;
}

struct PendingRelation {
    SceneRelation rel;
    int line = 0;
};

}  // namespace

KnowledgeBase parse_kb(const std::string& text) {
    KnowledgeBase kb;
    Story* story = nullptr;
    Scene* scene = nullptr;
    std::vector<PendingRelation> pending;
    std::set<std::string> story_names;
    std::set<std::string> scene_names;
    std::set<std::string> word_names;
    bool saw_version = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    auto close_scene = [&]() {
        for (const PendingRelation& p : pending) {
            if (!word_names.count(p.rel.subject))
                throw ParseError(p.line, "relation references undeclared word '" + p.rel.subject + "'");
            if (!word_names.count(p.rel.object))
                throw ParseError(p.line, "relation references undeclared word '" + p.rel.object + "'");
            scene->expected_relations.push_back(p.rel);
        }
        pending.clear();
        if (scene->prototypes.empty())
            throw ParseError(line_no, "scene '" + scene->name + "' declares no objects");
        scene = nullptr;
        word_names.clear();
    };

    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::vector<std::string> tok = split_ws(raw);
        if (tok.empty()) continue;

        if (!saw_version) {
            if (tok.size() != 2 || tok[0] != "kb")
                throw ParseError(line_no, "expected version line 'kb 1'");
            if (tok[1] != "1")
                throw ParseError(line_no, "unsupported kb version '" + tok[1] + "'");
            saw_version = true;
            continue;
        }

        const std::string& kw = tok[0];
        if (kw == "story") {
            if (story) throw ParseError(line_no, "nested 'story' (missing 'end'?)");
            if (tok.size() != 2 || !is_identifier(tok[1]))
                throw ParseError(line_no, "expected 'story <name>'");
            if (!story_names.insert(tok[1]).second)
                throw ParseError(line_no, "duplicate story name '" + tok[1] + "'");
            kb.stories.emplace_back();
            story = &kb.stories.back();
            story->name = tok[1];
            scene_names.clear();
        } else if (kw == "scene") {
            if (!story) throw ParseError(line_no, "'scene' outside a story");
            if (scene) throw ParseError(line_no, "nested 'scene' (missing 'end'?)");
            if (tok.size() != 2 || !is_identifier(tok[1]))
                throw ParseError(line_no, "expected 'scene <name>'");
            if (!scene_names.insert(tok[1]).second)
                throw ParseError(line_no, "duplicate scene name '" + tok[1] + "' in story '" +
                                              story->name + "'");
            story->scenes.emplace_back();
            scene = &story->scenes.back();
            scene->name = tok[1];
        } else if (kw == "object") {
            if (!scene) throw ParseError(line_no, "'object' outside a scene");
            if (tok.size() != 6)
                throw ParseError(line_no, "expected 'object <word> mean=<lo>:<hi> relsize=<lo>:<hi> "
                                          "aspect=<lo>:<hi> weights=<wm>,<ws>,<wa>'");
            if (!is_identifier(tok[1]))
                throw ParseError(line_no, "bad object word '" + tok[1] + "'");
            if (!word_names.insert(tok[1]).second)
                throw ParseError(line_no, "duplicate object word '" + tok[1] + "' in scene '" +
                                              scene->name + "'");
            ObjectPrototype proto;
            proto.word = tok[1];
            proto.mean = parse_range(tok[2], "mean", line_no);
            proto.relsize = parse_range(tok[3], "relsize", line_no);
            proto.aspect = parse_range(tok[4], "aspect", line_no);
            if (proto.mean.lo < 0.0 || proto.mean.hi > 255.0)
                throw ParseError(line_no, "mean range must lie within [0,255]");
            if (proto.relsize.lo <= 0.0 || proto.relsize.hi > 1.0)
                throw ParseError(line_no, "relsize range must lie within (0,1]");
            if (proto.aspect.lo <= 0.0)
                throw ParseError(line_no, "aspect range must be positive");
            const std::string wprefix = "weights=";
            if (tok[5].rfind(wprefix, 0) != 0)
                throw ParseError(line_no, "expected 'weights=<wm>,<ws>,<wa>', got '" + tok[5] + "'");
            std::string body = tok[5].substr(wprefix.size());
            std::replace(body.begin(), body.end(), ',', ' ');
            const std::vector<std::string> w = split_ws(body);
            if (w.size() != 3)
                throw ParseError(line_no, "expected three comma-separated weights");
            proto.w_mean = parse_real(w[0], line_no, "mean weight");
            proto.w_size = parse_real(w[1], line_no, "size weight");
            proto.w_aspect = parse_real(w[2], line_no, "aspect weight");
            if (proto.w_mean < 0.0 || proto.w_size < 0.0 || proto.w_aspect < 0.0)
                throw ParseError(line_no, "weights must be >= 0");
            if (proto.w_mean == 0.0 && proto.w_size == 0.0 && proto.w_aspect == 0.0)
                throw ParseError(line_no, "weights must not all be zero");
            scene->prototypes.push_back(std::move(proto));
        } else if (kw == "relation") {
            if (!scene) throw ParseError(line_no, "'relation' outside a scene");
            if (tok.size() != 4)
                throw ParseError(line_no, "expected 'relation <word> <kind> <word>'");
            const auto kind = relation_kind_from_name(tok[2]);
            if (!kind || *kind == RelationKind::sub_part_of)
                throw ParseError(line_no, "relation kind must be one of left-of, above, contains");
            if (tok[1] == tok[3])
                throw ParseError(line_no, "relation subject and object must differ");
            pending.push_back({SceneRelation{tok[1], *kind, tok[3]}, line_no});
        } else if (kw == "end") {
            if (tok.size() != 1) throw ParseError(line_no, "'end' takes no arguments");
            if (scene) {
                close_scene();
            } else if (story) {
                if (story->scenes.empty())
                    throw ParseError(line_no, "story '" + story->name + "' declares no scenes");
                story = nullptr;
            } else {
                throw ParseError(line_no, "'end' without an open block");
            }
        } else {
            throw ParseError(line_no, "unknown keyword '" + kw + "'");
        }
    }

    if (!saw_version) throw ParseError(0, "empty knowledge base: missing 'kb 1' version line");
    if (scene) throw ParseError(line_no, "unterminated scene '" + scene->name + "'");
    if (story) throw ParseError(line_no, "unterminated story '" + story->name + "'");
    if (kb.stories.empty()) throw ParseError(line_no, "empty knowledge base: no stories");
    return kb;
}

std::string serialize_kb(const KnowledgeBase& kb) {
    std::string out = "kb 1\n";
    for (const Story& story : kb.stories) {
        out += "story " + story.name + "\n";
        for (const Scene& scene : story.scenes) {
            out += "  scene " + scene.name + "\n";
            for (const ObjectPrototype& p : scene.prototypes) {
                out += "    object " + p.word + " mean=" + canonical_real(p.mean.lo) + ":" +
                       canonical_real(p.mean.hi) + " relsize=" + canonical_real(p.relsize.lo) + ":" +
                       canonical_real(p.relsize.hi) + " aspect=" + canonical_real(p.aspect.lo) + ":" +
                       canonical_real(p.aspect.hi) + " weights=" + canonical_real(p.w_mean) + "," +
                       canonical_real(p.w_size) + "," + canonical_real(p.w_aspect) + "\n";
            }
            for (const SceneRelation& r : scene.expected_relations) {
                out += "    relation " + r.subject + " " + relation_kind_name(r.kind) + " " +
                       r.object + "\n";
            }
            out += "  end\n";
        }
        out += "end\n";
    }
    return out;
}

}  // namespace physinfo
