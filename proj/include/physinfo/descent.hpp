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
#include <utility>
#include <vector>

#include "physinfo/label_map.hpp"
#include "physinfo/pyramid.hpp"
#include "physinfo/top_segmenter.hpp"

namespace physinfo {

// Where a region entered the hierarchy: the level it first appeared at and
// the region it emerged under (a seeding parent or the region it split from).
struct ParentLink {
    int level = 0;
    RegionId parent = 0;
};

// The full top-down pass: one label map and stats table per level, plus the
// lineage of every region created below the top.
struct DescentResult {
    std::vector<LabelMap> maps;    // index == level, 0 .. top
    std::vector<StatsTable> stats; // index == level
    std::map<RegionId, ParentLink> emerged;

    int top_level() const { return static_cast<int>(maps.size()) - 1; }
};

// 1-to-4 nearest-neighbor expansion of a coarse label map. Each coarse pixel
// fills its 2x2 block (edge blocks truncated for odd targets); the predicted
// image carries each region's mean. Target dims must squeeze back to the
// coarse dims.
std::pair<LabelMap, RasterImage> expand_maps(const LabelMap& coarse, const StatsTable& stats,
                                             int target_w, int target_h);

// A pixel deviates if its reference intensity is more than tau away from the
// predicted value, or if it sits on a region border.
std::vector<std::uint8_t> find_deviating_pixels(const LabelMap& expanded,
                                                const RasterImage& predicted,
                                                const RasterImage& reference, double tau);

struct RefineOutcome {
    LabelMap labels;
    StatsTable stats;
    std::map<RegionId, ParentLink> emerged;  // regions created at this level
};

// One level of border refinement: reassign deviating pixels to the
// nearest-mean region among their neighborhood (synchronous updates, up to
// cfg.max_refine_iters passes), then seed new regions from persistent
// deviating clusters, then split any region that lost 4-connectivity.
// entry_stats must be consistent with (expanded, reference); next_id supplies
// fresh region ids and is advanced.
RefineOutcome refine_level(const LabelMap& expanded, const RasterImage& reference,
                           const StatsTable& entry_stats, const SegConfig& cfg,
                           RegionId& next_id);

// Runs expansion + refinement from the pyramid top down to level 0.
DescentResult run_descent(const Pyramid& pyr, const LabelMap& top_labels, const SegConfig& cfg);

}  // namespace physinfo
