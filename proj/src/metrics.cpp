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

#include "physinfo/metrics.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace physinfo {
namespace {

std::vector<std::uint8_t> boundary_mask(const LabelMap& m) {
    const int w = m.width;
    const int h = m.height;
    std::vector<std::uint8_t> mask(m.labels.size(), 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const RegionId id = m.at(x, y);
            if ((x + 1 < w && m.at(x + 1, y) != id) || (x > 0 && m.at(x - 1, y) != id) ||
                (y + 1 < h && m.at(x, y + 1) != id) || (y > 0 && m.at(x, y - 1) != id))
                mask[static_cast<std::size_t>(y) * w + x] = 1;
        }
    }
    return mask;
}

// Fraction of boundary pixels in `from` that have a boundary pixel of `to`
// within Chebyshev distance 1; vacuously 1 when `from` has no boundary.
double boundary_coverage(const std::vector<std::uint8_t>& from,
                         const std::vector<std::uint8_t>& to, int w, int h) {
    std::int64_t total = 0;
    std::int64_t matched = 0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!from[static_cast<std::size_t>(y) * w + x]) continue;
            ++total;
            bool hit = false;
            for (int dy = -1; dy <= 1 && !hit; ++dy) {
                for (int dx = -1; dx <= 1 && !hit; ++dx) {
                    const int nx = x + dx;
                    const int ny = y + dy;
                    if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                    hit = to[static_cast<std::size_t>(ny) * w + nx] != 0;
                }
            }
            if (hit) ++matched;
        }
    }
    if (total == 0) return 1.0;
    return static_cast<double>(matched) / static_cast<double>(total);
}

double comb2(std::int64_t n) { return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1); }

}  // namespace

double adjusted_rand_index(const LabelMap& a, const LabelMap& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("adjusted_rand_index: dimension mismatch");

    std::map<std::pair<RegionId, RegionId>, std::int64_t> joint;
    std::map<RegionId, std::int64_t> row;
    std::map<RegionId, std::int64_t> col;
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
        joint[{a.labels[i], b.labels[i]}] += 1;
        row[a.labels[i]] += 1;
        col[b.labels[i]] += 1;
    }

    double sum_joint = 0.0;
    for (const auto& [key, n] : joint) sum_joint += comb2(n);
    double sum_row = 0.0;
    for (const auto& [id, n] : row) sum_row += comb2(n);
    double sum_col = 0.0;
    for (const auto& [id, n] : col) sum_col += comb2(n);

    const double total_pairs = comb2(a.pixel_count());
    const double expected = sum_row * sum_col / total_pairs;
    const double maximum = 0.5 * (sum_row + sum_col);
    if (maximum == expected) {
        // Both partitions trivial in the same way; identical by construction.
        return 1.0;
    }
    return (sum_joint - expected) / (maximum - expected);
}

double boundary_f_measure(const LabelMap& a, const LabelMap& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("boundary_f_measure: dimension mismatch");
    const std::vector<std::uint8_t> ba = boundary_mask(a);
    const std::vector<std::uint8_t> bb = boundary_mask(b);

    bool a_empty = true, b_empty = true;
    for (std::uint8_t v : ba)
        if (v) { a_empty = false; break; }
    for (std::uint8_t v : bb)
        if (v) { b_empty = false; break; }
    if (a_empty && b_empty) return 1.0;
    if (a_empty != b_empty) return 0.0;

    const double precision = boundary_coverage(ba, bb, a.width, a.height);
    const double recall = boundary_coverage(bb, ba, a.width, a.height);
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
}

}  // namespace physinfo
