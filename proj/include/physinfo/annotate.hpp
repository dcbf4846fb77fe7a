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

#include <string>
#include <vector>

#include "physinfo/kb.hpp"
#include "physinfo/registry.hpp"

namespace physinfo {

// Similarity of one region against one prototype, in [0, 1]. Each attribute
// contributes zero when inside its template range, otherwise its distance to
// the nearest endpoint normalized by the range width; the weighted sum is
// squashed by 1/(1+x). Inside every range gives exactly 1.
double match_object(const RegionDescriptor& desc, int image_w, int image_h,
                    const ObjectPrototype& proto);

struct AnnotationLabel {
    RegionId region = 0;
    std::string word;
    double score = 0.0;
};

struct RelationCheck {
    std::string subject;
    RelationKind kind = RelationKind::left_of;
    std::string object;
    bool satisfied = false;
};

struct AnnotationReport {
    bool recognized = false;
    std::string story;
    std::string scene;
    double scene_score = 0.0;
    std::vector<AnnotationLabel> labels;     // sorted by region id
    std::vector<RelationCheck> relations;    // scene declaration order

    // Stable line rendering used by the CLI and the dissociation check.
    std::string to_text() const;
};

// Scores every scene in the knowledgebase against the level-0 descriptors:
// greedy one-to-one prototype/region assignment by descending match score
// (kept at score >= theta), relation verification against the registered
// edges, scene score = mean kept score x fraction of satisfied relations.
// Best scene wins; ties fall to lexicographic (story, scene) order.
AnnotationReport annotate_scene(const std::vector<RegionDescriptor>& descs, int image_w,
                                int image_h, const std::vector<RelationEdge>& relations,
                                const KnowledgeBase& kb, double theta = 0.5);

}  // namespace physinfo
