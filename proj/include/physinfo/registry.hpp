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

#include <optional>
#include <string>
#include <vector>

#include "physinfo/descent.hpp"
#include "physinfo/label_map.hpp"

namespace physinfo {

// One segmented object-region's registered attributes: the entry in the
// per-level objects' appearance list.
struct RegionDescriptor {
    RegionId id = 0;
    int level = 0;
    std::int64_t size = 0;
    double centroid_x = 0.0;
    double centroid_y = 0.0;
    double mean_intensity = 0.0;
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // inclusive bounding box
    std::optional<RegionId> parent;      // region at level+1 this one sits under
};

enum class RelationKind { left_of, above, contains, sub_part_of };

const char* relation_kind_name(RelationKind kind);
std::optional<RelationKind> relation_kind_from_name(const std::string& name);

struct RelationEdge {
    RelationKind kind = RelationKind::left_of;
    int level = 0;  // subject's level; sub-part-of objects live one level up
    RegionId subject = 0;
    RegionId object = 0;

    bool operator==(const RelationEdge&) const = default;
};

// One descriptor per region: size, centroid, mean over the reference image,
// tight bbox. Output sorted by region id; parent is left unset here.
std::vector<RegionDescriptor> compute_descriptors(const LabelMap& labels,
                                                  const RasterImage& reference);

// sub-part-of edges for every region below the top, targeting the level-above
// region that covers the plurality of its footprint. A seeded region whose
// recorded parent disagrees with the plurality yields both edges, plurality
// first.
std::vector<RelationEdge> link_hierarchy(const DescentResult& result);

// Pairwise spatial relations at one level, decided on bounding boxes:
// left-of / above need separated boxes, contains needs strict bbox nesting
// plus a larger size. Edges come out in (subject, object) order.
std::vector<RelationEdge> compute_topology(const std::vector<RegionDescriptor>& descs);

}  // namespace physinfo
