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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "physinfo/label_map.hpp"
#include "physinfo/registry.hpp"
#include "physinfo/top_segmenter.hpp"

namespace physinfo {

// A structured error with the 1-based line it was detected on (0 when the
// document ended early).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

struct DescriptionLevel {
    int level = 0;
    int width = 0;
    int height = 0;
    std::vector<RegionDescriptor> regions;  // sorted by id
    LabelMap labels;
};

// The self-contained multi-level description document: everything needed to
// re-create the label maps, descriptor tables, relations and a
// piecewise-constant rendering of the source, without the source pixels.
struct Description {
    int width = 0;   // level-0 dimensions
    int height = 0;
    SegConfig config;
    int stop_threshold = 128;
    std::vector<DescriptionLevel> levels;  // coarsest first
    std::vector<RelationEdge> relations;

    const DescriptionLevel& level_block(int level) const;
    bool has_level(int level) const;
};

// Deterministic text serialization, coarse-to-fine. Two encodes of the same
// description are byte-identical.
std::string encode(const Description& desc);

// Exact inverse of encode on encode's output. Throws ParseError with the
// offending line on malformed input.
Description decode(const std::string& text);

// Paints each pixel of the requested level with its region's mean intensity.
RasterImage reconstruct(const Description& desc, int level);

struct CompressionReport {
    std::size_t encoded_bytes = 0;
    std::int64_t raw_bytes = 0;  // 8-bit baseline: W*H
    double ratio = 0.0;
    std::vector<std::pair<int, std::size_t>> level_bytes;  // (level, section size)
};

CompressionReport compression_report(const Description& desc, const RasterImage& original);

}  // namespace physinfo
