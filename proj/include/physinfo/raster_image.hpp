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
#include <vector>

namespace physinfo {

// 2-D grayscale intensity field. Intensities are reals in [0, 255];
// quantization to 8 bits happens only at file boundaries.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<double> intensities;  // row-major, one entry per pixel

    RasterImage() = default;
    RasterImage(int w, int h, double fill = 0.0)
        : width(w),
          height(h),
          intensities(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    double& at(int x, int y) {
        return intensities[static_cast<std::size_t>(y) * width + x];
    }
    double at(int x, int y) const {
        return intensities[static_cast<std::size_t>(y) * width + x];
    }

    std::int64_t pixel_count() const {
        return static_cast<std::int64_t>(width) * height;
    }

    bool valid() const {
        if (width < 1 || height < 1) return false;
        if (intensities.size() != static_cast<std::size_t>(pixel_count())) return false;
        for (double v : intensities)
            if (!(v >= 0.0 && v <= 255.0)) return false;
        return true;
    }
};

}  // namespace physinfo
