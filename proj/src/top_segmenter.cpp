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

#include "physinfo/top_segmenter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>

namespace physinfo {
namespace {

constexpr int kMaxLloydIters = 100;

// Linear-interpolated quantile of a sorted sample.
double quantile(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

int nearest_center(const std::vector<double>& centers, double v) {
    int best = 0;
    double best_d = std::abs(v - centers[0]);
    for (int i = 1; i < static_cast<int>(centers.size()); ++i) {
        const double d = std::abs(v - centers[i]);
        if (d < best_d) {  // ties stay with the lower index
            best_d = d;
            best = i;
        }
    }
    return best;
}

}  // namespace

std::vector<int> quantize_intensities(const RasterImage& img, int k_bins) {
    if (k_bins < 2) throw std::invalid_argument("quantize_intensities: k_bins must be >= 2");
    if (!img.valid()) throw std::invalid_argument("quantize_intensities: invalid image");

    const std::vector<double>& vals = img.intensities;

    std::vector<double> distinct(vals);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<int> bins(vals.size());
    if (static_cast<int>(distinct.size()) < k_bins) {
        // Degenerate input: every distinct value gets its own bin, by rank.
        for (std::size_t i = 0; i < vals.size(); ++i) {
            bins[i] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), vals[i]) - distinct.begin());
        }
        return bins;
    }

    std::vector<double> sorted(vals);
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> centers(k_bins);
    for (int i = 0; i < k_bins; ++i)
        centers[i] = quantile(sorted, (static_cast<double>(i) + 0.5) / static_cast<double>(k_bins));

    std::vector<int> prev(vals.size(), -1);
    for (int iter = 0; iter < kMaxLloydIters; ++iter) {
        for (std::size_t i = 0; i < vals.size(); ++i) bins[i] = nearest_center(centers, vals[i]);
        if (bins == prev) break;
        prev = bins;
        std::vector<double> sum(k_bins, 0.0);
        std::vector<std::int64_t> count(k_bins, 0);
        for (std::size_t i = 0; i < vals.size(); ++i) {
            sum[bins[i]] += vals[i];
            count[bins[i]] += 1;
        }
        for (int c = 0; c < k_bins; ++c)
            if (count[c] > 0) centers[c] = sum[c] / static_cast<double>(count[c]);
        // An empty bin keeps its center; 1-D means preserve center order.
    }
    return bins;
}

LabelMap connected_components(const std::vector<int>& bins, int width, int height, int level) {
    if (width < 1 || height < 1 ||
        bins.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
        throw std::invalid_argument("connected_components: bad dimensions");

    LabelMap out(width, height, level, 0);
    RegionId next = 1;
    std::vector<std::size_t> stack;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * width + x;
            if (out.labels[idx] != 0) continue;
            const int bin = bins[idx];
            const RegionId id = next++;
            out.labels[idx] = id;
            stack.assign(1, idx);
            while (!stack.empty()) {
                const std::size_t cur = stack.back();
                stack.pop_back();
                const int cx = static_cast<int>(cur % width);
                const int cy = static_cast<int>(cur / width);
                const int nx[4] = {cx - 1, cx + 1, cx, cx};
                const int ny[4] = {cy, cy, cy - 1, cy + 1};
                for (int k = 0; k < 4; ++k) {
                    if (nx[k] < 0 || nx[k] >= width || ny[k] < 0 || ny[k] >= height) continue;
                    const std::size_t nidx = static_cast<std::size_t>(ny[k]) * width + nx[k];
                    if (out.labels[nidx] == 0 && bins[nidx] == bin) {
                        out.labels[nidx] = id;
                        stack.push_back(nidx);
                    }
                }
            }
        }
    }
    return out;
}

LabelMap merge_small_regions(const LabelMap& labels, const RasterImage& img, int min_region_px) {
    if (labels.width != img.width || labels.height != img.height)
        throw std::invalid_argument("merge_small_regions: dimension mismatch");
    if (min_region_px < 1) throw std::invalid_argument("merge_small_regions: min_region_px must be >= 1");

    LabelMap out = labels;
    StatsTable stats = compute_stats(out, img);

    for (;;) {
        if (stats.size() <= 1) break;
        // Smallest undersized region first; ties by smaller label id
        // (map order already gives ascending ids).
        RegionId victim = 0;
        std::int64_t victim_size = std::numeric_limits<std::int64_t>::max();
        for (const auto& [id, s] : stats) {
            if (s.pixel_count < min_region_px && s.pixel_count < victim_size) {
                victim = id;
                victim_size = s.pixel_count;
            }
        }
        if (victim == 0) break;

        // Adjacent region with the closest mean absorbs it.
        std::set<RegionId> neighbors;
        for (int y = 0; y < out.height; ++y) {
            for (int x = 0; x < out.width; ++x) {
                if (out.at(x, y) != victim) continue;
                const int nx[4] = {x - 1, x + 1, x, x};
                const int ny[4] = {y, y, y - 1, y + 1};
                for (int k = 0; k < 4; ++k) {
                    if (nx[k] < 0 || nx[k] >= out.width || ny[k] < 0 || ny[k] >= out.height) continue;
                    const RegionId n = out.at(nx[k], ny[k]);
                    if (n != victim) neighbors.insert(n);
                }
            }
        }

        const double victim_mean = stats[victim].mean();
        RegionId target = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (RegionId n : neighbors) {
            const double d = std::abs(stats[n].mean() - victim_mean);
            if (d < best_d) {  // set order breaks ties toward the lower id
                best_d = d;
                target = n;
            }
        }

        for (RegionId& l : out.labels)
            if (l == victim) l = target;
        stats[target].pixel_count += stats[victim].pixel_count;
        stats[target].intensity_sum += stats[victim].intensity_sum;
        stats.erase(victim);
    }
    return out;
}

LabelMap segment_top(const RasterImage& img, const SegConfig& cfg, int level) {
    if (!cfg.valid()) throw std::invalid_argument("segment_top: invalid config");
    const std::vector<int> bins = quantize_intensities(img, cfg.k_bins);
    LabelMap cc = connected_components(bins, img.width, img.height, level);
    return merge_small_regions(cc, img, cfg.min_region_px);
}

}  // namespace physinfo
