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

#include "physinfo/label_map.hpp"
#include "physinfo/raster_image.hpp"

namespace physinfo {

// All segmentation tunables in one place.
struct SegConfig {
    int k_bins = 4;              // intensity clusters for the top-level split
    int min_region_px = 2;       // top-level regions below this are merged away
    double deviation_tau = 10.0; // intensity units; beyond this a pixel deviates
    int seed_min_px = 4;         // smallest deviating cluster that seeds a region
    int max_refine_iters = 5;    // refinement passes per level

    bool valid() const {
        return k_bins >= 2 && min_region_px >= 1 && deviation_tau > 0.0 && seed_min_px >= 1 &&
               max_refine_iters >= 1;
    }
};

// 1-D Lloyd clustering of intensities into k bins. Centers start at equally
// spaced quantiles; assignment ties go to the lower center index. If the
// image has fewer distinct values than k, each distinct value is its own bin.
std::vector<int> quantize_intensities(const RasterImage& img, int k_bins);

// 4-connected flood labeling of equal-bin pixels. Labels are assigned in
// raster-scan discovery order starting at 1.
LabelMap connected_components(const std::vector<int>& bins, int width, int height, int level = 0);

// Absorbs every region smaller than min_region_px into the adjacent region
// with the closest mean intensity, smallest region first (ties by lower id),
// until none remain. A lone undersized region covering the image is kept.
LabelMap merge_small_regions(const LabelMap& labels, const RasterImage& img, int min_region_px);

// The composed top-of-pyramid segmentation: quantize, label, merge.
LabelMap segment_top(const RasterImage& img, const SegConfig& cfg, int level = 0);

}  // namespace physinfo
