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

#include "physinfo/synth.hpp"

#include <stdexcept>

#include "physinfo/rng.hpp"

namespace physinfo {
namespace {

bool rects_overlap(const SynthRect& a, const SynthRect& b) {
    return a.x < b.x + b.w && b.x < a.x + a.w && a.y < b.y + b.h && b.y < a.y + a.h;
}

}  // namespace

void validate_scene_spec(const SceneSpec& spec) {
    if (spec.width < 1 || spec.height < 1)
        throw std::invalid_argument("scene spec: non-positive dimensions");
    if (spec.background_mean < 0.0 || spec.background_mean > 255.0)
        throw std::invalid_argument("scene spec: background mean outside [0,255]");
    for (std::size_t i = 0; i < spec.rects.size(); ++i) {
        const SynthRect& r = spec.rects[i];
        if (r.w < 1 || r.h < 1)
            throw std::invalid_argument("scene spec: rectangle with non-positive size");
        if (r.x < 0 || r.y < 0 || r.x + r.w > spec.width || r.y + r.h > spec.height)
            throw std::invalid_argument("scene spec: rectangle out of bounds");
        if (r.mean < 0.0 || r.mean > 255.0)
            throw std::invalid_argument("scene spec: rectangle mean outside [0,255]");
        for (std::size_t j = 0; j < i; ++j)
            if (rects_overlap(r, spec.rects[j]))
                throw std::invalid_argument("scene spec: overlapping rectangles");
    }
}

SynthScene render_scene(const SceneSpec& spec, double sigma, std::uint64_t seed) {
    validate_scene_spec(spec);
    if (sigma < 0.0) throw std::invalid_argument("render_scene: negative sigma");

    SynthScene scene;
    scene.image = RasterImage(spec.width, spec.height, spec.background_mean);
    scene.ground_truth = LabelMap(spec.width, spec.height, 0, 1);
    for (std::size_t i = 0; i < spec.rects.size(); ++i) {
        const SynthRect& r = spec.rects[i];
        const RegionId id = static_cast<RegionId>(i + 2);
        for (int y = r.y; y < r.y + r.h; ++y) {
            for (int x = r.x; x < r.x + r.w; ++x) {
                scene.image.at(x, y) = r.mean;
                scene.ground_truth.at(x, y) = id;
            }
        }
    }
    if (sigma > 0.0) {
        GaussianSampler noise(seed);
        for (double& v : scene.image.intensities) {
            v += sigma * noise.sample();
            if (v < 0.0) v = 0.0;
            if (v > 255.0) v = 255.0;
        }
    }
    return scene;
}

SceneSpec preset_scene(const std::string& name) {
    // The rects5 benchmark: five rectangles, all pairwise mean gaps >= 40,
    // the bottom bar too thin to survive to the 8x8 pyramid top.
    if (name == "rects5")
        return {256, 256, 16.0,
                {{16, 16, 64, 48, 56.0},
                 {96, 24, 80, 40, 96.0},
                 {32, 96, 48, 80, 136.0},
                 {120, 112, 72, 64, 176.0},
                 {48, 200, 144, 32, 216.0}}};

    // Semantic demo scenes, two variants each; full-width/full-height bars
    // leave the background as the remaining band.
    if (name == "sky_ground_a") return {128, 128, 40.0, {{0, 0, 128, 64, 210.0}}};
    if (name == "sky_ground_b") return {128, 128, 60.0, {{0, 0, 128, 80, 190.0}}};
    if (name == "beach_a")
        return {128, 128, 110.0, {{0, 0, 128, 48, 200.0}, {0, 96, 128, 32, 235.0}}};
    if (name == "beach_b")
        return {128, 128, 95.0, {{0, 0, 128, 56, 180.0}, {0, 104, 128, 24, 225.0}}};
    if (name == "window_wall_a") return {128, 128, 70.0, {{40, 32, 32, 40, 230.0}}};
    if (name == "window_wall_b") return {128, 128, 50.0, {{72, 56, 24, 32, 210.0}}};
    if (name == "framed_picture_a")
        return {128, 128, 130.0, {{32, 24, 64, 48, 220.0}, {48, 88, 32, 16, 30.0}}};
    if (name == "framed_picture_b")
        return {128, 128, 150.0, {{24, 16, 72, 56, 200.0}, {40, 84, 48, 20, 20.0}}};
    if (name == "tricolor_a")
        return {128, 128, 130.0, {{0, 0, 40, 128, 30.0}, {88, 0, 40, 128, 230.0}}};
    if (name == "tricolor_b")
        return {128, 128, 140.0, {{0, 0, 48, 128, 50.0}, {80, 0, 48, 128, 210.0}}};

    throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
    return {"rects5",          "sky_ground_a",      "sky_ground_b",  "beach_a",
            "beach_b",         "window_wall_a",     "window_wall_b", "framed_picture_a",
            "framed_picture_b", "tricolor_a",       "tricolor_b"};
}

}  // namespace physinfo
