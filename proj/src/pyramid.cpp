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

#include "physinfo/pyramid.hpp"

#include <stdexcept>

namespace physinfo {

RasterImage squeeze_once(const RasterImage& img) {
    if (!img.valid()) throw std::invalid_argument("squeeze_once: invalid image");
    const int w = img.width;
    const int h = img.height;
    const int ow = (w + 1) / 2;
    const int oh = (h + 1) / 2;
    RasterImage out(ow, oh);
    for (int oy = 0; oy < oh; ++oy) {
        // Edge replication: an out-of-range source column/row reuses the last one.
        const int y0 = 2 * oy;
        const int y1 = (2 * oy + 1 < h) ? 2 * oy + 1 : h - 1;
        for (int ox = 0; ox < ow; ++ox) {
            const int x0 = 2 * ox;
            const int x1 = (2 * ox + 1 < w) ? 2 * ox + 1 : w - 1;
            // Fixed summation order keeps the result bit-reproducible.
            const double sum = img.at(x0, y0) + img.at(x1, y0) + img.at(x0, y1) + img.at(x1, y1);
            out.at(ox, oy) = sum / 4.0;
        }
    }
    return out;
}

Pyramid build_pyramid(const RasterImage& img, int stop_threshold) {
    if (!img.valid()) throw std::invalid_argument("build_pyramid: invalid image");
    if (stop_threshold < 1) throw std::invalid_argument("build_pyramid: stop_threshold must be >= 1");
    Pyramid pyr;
    pyr.levels.push_back({0, img});
    while (pyr.levels.back().image.pixel_count() > stop_threshold) {
        pyr.levels.push_back(
            {static_cast<int>(pyr.levels.size()), squeeze_once(pyr.levels.back().image)});
    }
    return pyr;
}

}  // namespace physinfo
