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

#include "physinfo/registry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace physinfo {

const char* relation_kind_name(RelationKind kind) {
    switch (kind) {
        case RelationKind::left_of: return "left-of";
        case RelationKind::above: return "above";
        case RelationKind::contains: return "contains";
        case RelationKind::sub_part_of: return "sub-part-of";
    }
    return "?";
}

std::optional<RelationKind> relation_kind_from_name(const std::string& name) {
    if (name == "left-of") return RelationKind::left_of;
    if (name == "above") return RelationKind::above;
    if (name == "contains") return RelationKind::contains;
    if (name == "sub-part-of") return RelationKind::sub_part_of;
    return std::nullopt;
}

std::vector<RegionDescriptor> compute_descriptors(const LabelMap& labels,
                                                  const RasterImage& reference) {
    if (labels.width != reference.width || labels.height != reference.height)
        throw std::invalid_argument("compute_descriptors: dimension mismatch");

    struct Acc {
        std::int64_t size = 0;
        double sum_x = 0.0, sum_y = 0.0, sum_v = 0.0;
        double min_v = 256.0, max_v = -1.0;
        int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
        bool seen = false;
    };
    std::map<RegionId, Acc> acc;
    for (int y = 0; y < labels.height; ++y) {
        for (int x = 0; x < labels.width; ++x) {
            Acc& a = acc[labels.at(x, y)];
            const double v = reference.at(x, y);
            a.size += 1;
            a.sum_x += x;
            a.sum_y += y;
            a.sum_v += v;
            a.min_v = std::min(a.min_v, v);
            a.max_v = std::max(a.max_v, v);
            if (!a.seen) {
                a.x0 = a.x1 = x;
                a.y0 = a.y1 = y;
                a.seen = true;
            } else {
                a.x0 = std::min(a.x0, x);
                a.x1 = std::max(a.x1, x);
                a.y0 = std::min(a.y0, y);
                a.y1 = std::max(a.y1, y);
            }
        }
    }

    std::vector<RegionDescriptor> out;
    out.reserve(acc.size());
    for (const auto& [id, a] : acc) {
        RegionDescriptor d;
        d.id = id;
        d.level = labels.level;
        d.size = a.size;
        d.centroid_x = a.sum_x / static_cast<double>(a.size);
        d.centroid_y = a.sum_y / static_cast<double>(a.size);
        // Clamp so a constant region's mean is bit-exactly its value.
        d.mean_intensity = std::clamp(a.sum_v / static_cast<double>(a.size), a.min_v, a.max_v);
        d.x0 = a.x0;
        d.y0 = a.y0;
        d.x1 = a.x1;
        d.y1 = a.y1;
        out.push_back(d);
    }
    return out;
}

std::vector<RelationEdge> link_hierarchy(const DescentResult& result) {
    std::vector<RelationEdge> edges;
    const int top = result.top_level();
    for (int level = top - 1; level >= 0; --level) {
        const LabelMap& lm = result.maps[level];
        const LabelMap& up = result.maps[level + 1];

        // Count, per region, the level-above labels at the parent coordinates
        // of its pixels.
        std::map<RegionId, std::map<RegionId, std::int64_t>> votes;
        for (int y = 0; y < lm.height; ++y)
            for (int x = 0; x < lm.width; ++x)
                votes[lm.at(x, y)][up.at(x / 2, y / 2)] += 1;

        for (const auto& [id, tally] : votes) {
            RegionId plurality = 0;
            std::int64_t best = -1;
            for (const auto& [cand, n] : tally) {
                if (n > best) {  // map order breaks ties toward the lower id
                    best = n;
                    plurality = cand;
                }
            }
            edges.push_back({RelationKind::sub_part_of, level, id, plurality});
            const auto it = result.emerged.find(id);
            if (it != result.emerged.end() && it->second.level == level &&
                it->second.parent != plurality)
                edges.push_back({RelationKind::sub_part_of, level, id, it->second.parent});
        }
    }
    return edges;
}

std::vector<RelationEdge> compute_topology(const std::vector<RegionDescriptor>& descs) {
    std::vector<RegionDescriptor> sorted = descs;
    std::sort(sorted.begin(), sorted.end(),
              [](const RegionDescriptor& a, const RegionDescriptor& b) { return a.id < b.id; });

    std::vector<RelationEdge> edges;
    for (const RegionDescriptor& a : sorted) {
        for (const RegionDescriptor& b : sorted) {
            if (a.id == b.id) continue;
            if (a.x1 < b.x0) edges.push_back({RelationKind::left_of, a.level, a.id, b.id});
            if (a.y1 < b.y0) edges.push_back({RelationKind::above, a.level, a.id, b.id});
            if (a.x0 < b.x0 && a.y0 < b.y0 && a.x1 > b.x1 && a.y1 > b.y1 && a.size > b.size)
                edges.push_back({RelationKind::contains, a.level, a.id, b.id});
        }
    }
    return edges;
}

}  // namespace physinfo
