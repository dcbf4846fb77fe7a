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

#include "physinfo/descent.hpp"
#include "physinfo/description.hpp"
#include "physinfo/pyramid.hpp"
#include "physinfo/registry.hpp"

namespace physinfo {

struct AnalysisConfig {
    SegConfig seg;
    int stop_threshold = kDefaultStopThreshold;
};

// Everything the physical part produces for one image.
struct Analysis {
    Pyramid pyramid;
    DescentResult descent;
    std::vector<std::vector<RegionDescriptor>> descriptors;  // index == level
    std::vector<RelationEdge> relations;                     // canonical order
};

// Squeeze, segment the top, descend, register descriptors and relations.
Analysis analyze(const RasterImage& img, const AnalysisConfig& cfg);

// Packs an analysis into the self-contained description document.
Description describe(const Analysis& analysis, const AnalysisConfig& cfg);

}  // namespace physinfo
