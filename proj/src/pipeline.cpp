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

#include "physinfo/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "physinfo/top_segmenter.hpp"

namespace physinfo {
namespace {

// Fills descriptor parents: a region present one level up keeps its own id
// as parent (it is the same object), a region that emerged at this level
// records its seeding or split source, top-level regions have none.
void assign_parents(std::vector<RegionDescriptor>& descs, int level, int top,
                    const DescentResult& descent) {
    if (level == top) return;
    for (RegionDescriptor& d : descs) {
        const auto it = descent.emerged.find(d.id);
        if (it != descent.emerged.end() && it->second.level == level)
            d.parent = it->second.parent;  // seeded or split off here
        else
            d.parent = d.id;  // inherited: the same object one level up
    }
}

}  // namespace

Analysis analyze(const RasterImage& img, const AnalysisConfig& cfg) {
    if (!img.valid()) throw std::invalid_argument("analyze: invalid image");
    if (!cfg.seg.valid()) throw std::invalid_argument("analyze: invalid segmentation config");
    if (cfg.stop_threshold < 1) throw std::invalid_argument("analyze: invalid stop threshold");

    Analysis a;
    a.pyramid = build_pyramid(img, cfg.stop_threshold);
    const LabelMap top = segment_top(a.pyramid.top_image(), cfg.seg, a.pyramid.top_level());
    a.descent = run_descent(a.pyramid, top, cfg.seg);

    const int top_level = a.descent.top_level();
    a.descriptors.resize(top_level + 1);
    for (int level = 0; level <= top_level; ++level) {
        a.descriptors[level] =
            compute_descriptors(a.descent.maps[level], a.pyramid.image_at(level));
        assign_parents(a.descriptors[level], level, top_level, a.descent);
    }

    // Canonical relation order: per level from the top down, spatial edges
    // first, then the sub-part-of links anchored at that level.
    std::vector<RelationEdge> hierarchy = link_hierarchy(a.descent);
    for (int level = top_level; level >= 0; --level) {
        const std::vector<RelationEdge> topo = compute_topology(a.descriptors[level]);
        a.relations.insert(a.relations.end(), topo.begin(), topo.end());
        for (const RelationEdge& e : hierarchy)
            if (e.level == level) a.relations.push_back(e);
    }
    return a;
}

Description describe(const Analysis& analysis, const AnalysisConfig& cfg) {
    Description doc;
    const RasterImage& base = analysis.pyramid.image_at(0);
    doc.width = base.width;
    doc.height = base.height;
    doc.config = cfg.seg;
    doc.stop_threshold = cfg.stop_threshold;
    for (int level = analysis.descent.top_level(); level >= 0; --level) {
        DescriptionLevel lvl;
        lvl.level = level;
        lvl.width = analysis.descent.maps[level].width;
        lvl.height = analysis.descent.maps[level].height;
        lvl.regions = analysis.descriptors[level];
        lvl.labels = analysis.descent.maps[level];
        doc.levels.push_back(std::move(lvl));
    }
    doc.relations = analysis.relations;
    return doc;
}

}  // namespace physinfo
