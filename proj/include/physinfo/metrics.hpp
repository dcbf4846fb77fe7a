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

#include "physinfo/label_map.hpp"

namespace physinfo {

// Chance-corrected partition agreement; 1 means identical up to relabeling.
// Identical trivial partitions (the degenerate zero-denominator case) score 1.
double adjusted_rand_index(const LabelMap& a, const LabelMap& b);

// Boundary agreement: a boundary pixel has a 4-neighbor with a different
// label; a boundary pixel matches when the other map has one within a
// 1-pixel (Chebyshev) tolerance. F = harmonic mean of the two directions;
// two boundary-free maps agree perfectly.
double boundary_f_measure(const LabelMap& a, const LabelMap& b);

}  // namespace physinfo
