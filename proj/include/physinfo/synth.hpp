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
#include <string>
#include <vector>

#include "physinfo/label_map.hpp"
#include "physinfo/raster_image.hpp"

namespace physinfo {

struct SynthRect {
    int x = 0, y = 0, w = 0, h = 0;
    double mean = 0.0;
};

// Axis-aligned rectangles on a constant background. Rectangles must stay in
// bounds and must not overlap, so the ground truth is unambiguous.
struct SceneSpec {
    int width = 0;
    int height = 0;
    double background_mean = 0.0;
    std::vector<SynthRect> rects;
};

struct SynthScene {
    RasterImage image;
    LabelMap ground_truth;  // background = 1, rectangles 2.. in declaration order
};

// Throws std::invalid_argument on out-of-bounds or overlapping rectangles.
void validate_scene_spec(const SceneSpec& spec);

// Renders the spec plus i.i.d. Gaussian noise (sigma in intensity units),
// clamped to [0, 255]. Identical (spec, sigma, seed) give identical output.
SynthScene render_scene(const SceneSpec& spec, double sigma, std::uint64_t seed);

// Named presets: the rects5 benchmark scene and the ten semantic demo scenes.
SceneSpec preset_scene(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace physinfo
