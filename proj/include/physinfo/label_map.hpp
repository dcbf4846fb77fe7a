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
#include <map>
#include <vector>

#include "physinfo/raster_image.hpp"

namespace physinfo {

using RegionId = std::uint32_t;

// Per-pixel region assignment at one pyramid level. Region ids are positive
// and unique across all levels of one run; a region keeps its id when
// inherited downward.
struct LabelMap {
    int width = 0;
    int height = 0;
    int level = 0;
    std::vector<RegionId> labels;  // row-major, one id per pixel

    LabelMap() = default;
    LabelMap(int w, int h, int lvl, RegionId fill = 0)
        : width(w),
          height(h),
          level(lvl),
          labels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    RegionId& at(int x, int y) {
        return labels[static_cast<std::size_t>(y) * width + x];
    }
    RegionId at(int x, int y) const {
        return labels[static_cast<std::size_t>(y) * width + x];
    }

    std::int64_t pixel_count() const {
        return static_cast<std::int64_t>(width) * height;
    }

    bool operator==(const LabelMap& other) const = default;
};

// Running pixel count and intensity sum of one region; the mean is the
// region's characteristic intensity.
struct RegionStats {
    std::int64_t pixel_count = 0;
    double intensity_sum = 0.0;

    double mean() const { return intensity_sum / static_cast<double>(pixel_count); }
};

using StatsTable = std::map<RegionId, RegionStats>;

// Scratch recompute of all region stats over a reference image.
StatsTable compute_stats(const LabelMap& labels, const RasterImage& reference);

// True iff every pixel carries a positive label and every label's pixel set
// is 4-connected.
bool is_valid_partition(const LabelMap& labels);

}  // namespace physinfo
