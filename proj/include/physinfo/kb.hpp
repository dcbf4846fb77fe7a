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

#include "physinfo/description.hpp"  // ParseError
#include "physinfo/registry.hpp"

namespace physinfo {

struct AttrRange {
    double lo = 0.0;
    double hi = 0.0;
};

// A word: an object prototype whose attribute templates are remembered
// physical descriptions.
struct ObjectPrototype {
    std::string word;
    AttrRange mean;     // within [0, 255]
    AttrRange relsize;  // region size / image size, within (0, 1]
    AttrRange aspect;   // bbox width / height, > 0
    double w_mean = 1.0;
    double w_size = 1.0;
    double w_aspect = 1.0;
};

struct SceneRelation {
    std::string subject;
    RelationKind kind = RelationKind::left_of;
    std::string object;
};

struct Scene {
    std::string name;
    std::vector<ObjectPrototype> prototypes;
    std::vector<SceneRelation> expected_relations;
};

struct Story {
    std::string name;
    std::vector<Scene> scenes;
};

// Designer-authored narrative hierarchy: stories hold scenes, scenes hold
// words, words hold attribute templates and expected relations.
struct KnowledgeBase {
    std::vector<Story> stories;
};

// Parses the line-oriented KB format; all structural invariants are checked
// here, with line-numbered ParseErrors.
KnowledgeBase parse_kb(const std::string& text);

// Canonical serialization; parse_kb(serialize_kb(kb)) reproduces kb.
std::string serialize_kb(const KnowledgeBase& kb);

}  // namespace physinfo
