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

#include "physinfo/label_map.hpp"

#include <stdexcept>

namespace physinfo {

StatsTable compute_stats(const LabelMap& labels, const RasterImage& reference) {
    if (labels.width != reference.width || labels.height != reference.height)
        throw std::invalid_argument("compute_stats: label map and reference image dimensions differ");
    StatsTable table;
    for (std::size_t i = 0; i < labels.labels.size(); ++i) {
        RegionStats& s = table[labels.labels[i]];
        s.pixel_count += 1;
        s.intensity_sum += reference.intensities[i];
    }
    return table;
}

bool is_valid_partition(const LabelMap& labels) {
    const int w = labels.width;
    const int h = labels.height;
    if (w < 1 || h < 1) return false;
    if (labels.labels.size() != static_cast<std::size_t>(labels.pixel_count())) return false;

    // Flood from the first pixel of each label; any pixel not reached from
    // its label's first occurrence means the region is disconnected.
    std::vector<char> seen(labels.labels.size(), 0);
    std::vector<std::size_t> stack;
    std::map<RegionId, bool> started;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            const RegionId id = labels.labels[idx];
            if (id == 0) return false;
            if (seen[idx]) continue;
            if (started.count(id)) return false;  // second component of this label
            started[id] = true;
            stack.assign(1, idx);
            seen[idx] = 1;
            while (!stack.empty()) {
                const std::size_t cur = stack.back();
                stack.pop_back();
                const int cx = static_cast<int>(cur % w);
                const int cy = static_cast<int>(cur / w);
                const int nx[4] = {cx - 1, cx + 1, cx, cx};
                const int ny[4] = {cy, cy, cy - 1, cy + 1};
                for (int k = 0; k < 4; ++k) {
                    if (nx[k] < 0 || nx[k] >= w || ny[k] < 0 || ny[k] >= h) continue;
                    const std::size_t nidx = static_cast<std::size_t>(ny[k]) * w + nx[k];
                    if (!seen[nidx] && labels.labels[nidx] == id) {
                        seen[nidx] = 1;
                        stack.push_back(nidx);
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace physinfo
