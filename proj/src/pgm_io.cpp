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

#include "physinfo/pgm_io.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <vector>

namespace physinfo {
namespace {

// Skips whitespace and '#' comment lines between header tokens.
void skip_header_separators(std::istream& in) {
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            in.get();
        } else {
            return;
        }
    }
}

long read_header_number(std::istream& in, const std::string& what) {
    skip_header_separators(in);
    long value = -1;
    if (!(in >> value) || value < 0)
        throw PgmError(PgmError::Kind::malformed_header, "malformed header: bad " + what);
    return value;
}

unsigned char quantize(double v) {
    double r = std::floor(v + 0.5);  // round half-up
    if (r < 0.0) r = 0.0;
    if (r > 255.0) r = 255.0;
    return static_cast<unsigned char>(r);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RasterImage load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw PgmError(PgmError::Kind::missing_file, "cannot open image file: " + path);

    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (!in || m0 != 'P')
        throw PgmError(PgmError::Kind::malformed_header, "malformed header: missing PNM magic in " + path);
    if (m1 != '2' && m1 != '5') {
        if (m1 == '1' || m1 == '3' || m1 == '4' || m1 == '6')
            throw PgmError(PgmError::Kind::unsupported_format,
                           "unsupported format: only grayscale P2/P5 accepted, got P" + std::string(1, m1));
        throw PgmError(PgmError::Kind::malformed_header, "malformed header: unknown magic in " + path);
    }
    const bool binary = (m1 == '5');

    const long width = read_header_number(in, "width");
    const long height = read_header_number(in, "height");
    const long maxval = read_header_number(in, "maxval");
    if (width < 1 || height < 1)
        throw PgmError(PgmError::Kind::malformed_header, "malformed header: non-positive dimensions");
    if (maxval != 255)
        throw PgmError(PgmError::Kind::unsupported_format,
                       "unsupported format: maxval must be 255, got " + std::to_string(maxval));

    RasterImage img(static_cast<int>(width), static_cast<int>(height));
    const std::size_t n = img.intensities.size();

    if (binary) {
        // Exactly one whitespace byte separates the header from the payload.
        int sep = in.get();
        if (sep == EOF)
            throw PgmError(PgmError::Kind::truncated_data, "unexpected end of data in " + path);
        std::vector<unsigned char> raw(n);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in.gcount()) != n)
            throw PgmError(PgmError::Kind::truncated_data, "unexpected end of data in " + path);
        for (std::size_t i = 0; i < n; ++i) img.intensities[i] = static_cast<double>(raw[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            skip_header_separators(in);
            long v = -1;
            if (!(in >> v))
                throw PgmError(PgmError::Kind::truncated_data, "unexpected end of data in " + path);
            if (v < 0 || v > 255)
                throw PgmError(PgmError::Kind::malformed_header,
                               "pixel value out of range: " + std::to_string(v));
            img.intensities[i] = static_cast<double>(v);
        }
    }
    return img;
}

void save_image(const RasterImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw PgmError(PgmError::Kind::write_failure, "cannot open for writing: " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    std::vector<unsigned char> raw(img.intensities.size());
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = quantize(img.intensities[i]);
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!out)
        throw PgmError(PgmError::Kind::write_failure, "write failed: " + path);
}

void label_color(RegionId id, unsigned char rgb[3]) {
    const std::uint64_t h = splitmix64(static_cast<std::uint64_t>(id));
    rgb[0] = static_cast<unsigned char>(h & 0xff);
    rgb[1] = static_cast<unsigned char>((h >> 8) & 0xff);
    rgb[2] = static_cast<unsigned char>((h >> 16) & 0xff);
}

void save_overlay(const LabelMap& labels, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw PgmError(PgmError::Kind::write_failure, "cannot open for writing: " + path);
    out << "P6\n" << labels.width << " " << labels.height << "\n255\n";
    std::vector<unsigned char> raw;
    raw.reserve(labels.labels.size() * 3);
    unsigned char rgb[3];
    for (RegionId id : labels.labels) {
        label_color(id, rgb);
        raw.push_back(rgb[0]);
        raw.push_back(rgb[1]);
        raw.push_back(rgb[2]);
    }
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!out)
        throw PgmError(PgmError::Kind::write_failure, "write failed: " + path);
}

}  // namespace physinfo
