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

#include <vector>

#include "physinfo/raster_image.hpp"

namespace physinfo {

struct PyramidLevel {
    int level = 0;  // 0 = original resolution, increasing upward
    RasterImage image;
};

// Bottom-up squeeze hierarchy: level L+1 is the 4-to-1 block average of
// level L, stopping once the pixel count drops to the configured bound.
struct Pyramid {
    std::vector<PyramidLevel> levels;  // index == level

    int top_level() const { return static_cast<int>(levels.size()) - 1; }
    const RasterImage& top_image() const { return levels.back().image; }
    const RasterImage& image_at(int level) const { return levels[level].image; }
};

// One 4-to-1 squeeze: each output pixel is the mean of its 2x2 source block.
// Odd widths/heights are handled by replicating the last column/row.
RasterImage squeeze_once(const RasterImage& img);

inline constexpr int kDefaultStopThreshold = 128;

// Squeezes until the current level's pixel count is <= stop_threshold.
// Level 0 is always present.
Pyramid build_pyramid(const RasterImage& img, int stop_threshold = kDefaultStopThreshold);

}  // namespace physinfo
