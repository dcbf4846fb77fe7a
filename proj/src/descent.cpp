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

#include "physinfo/descent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace physinfo {
namespace {

// Deviation test against the current region means: border pixels always
// count, interior pixels only when the reference strays beyond tau.
std::vector<std::uint8_t> deviating_mask(const LabelMap& lm, const StatsTable& stats,
                                         const RasterImage& ref, double tau) {
    const int w = lm.width;
    const int h = lm.height;
    std::vector<std::uint8_t> mask(lm.labels.size(), 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            const RegionId id = lm.labels[idx];
            if (std::abs(ref.intensities[idx] - stats.at(id).mean()) > tau) {
                mask[idx] = 1;
                continue;
            }
            if ((x > 0 && lm.at(x - 1, y) != id) || (x + 1 < w && lm.at(x + 1, y) != id) ||
                (y > 0 && lm.at(x, y - 1) != id) || (y + 1 < h && lm.at(x, y + 1) != id))
                mask[idx] = 1;
        }
    }
    return mask;
}

// 4-connected components of a pixel mask, in raster discovery order.
std::vector<std::vector<std::size_t>> mask_components(const std::vector<std::uint8_t>& mask,
                                                      int w, int h) {
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::uint8_t> seen(mask.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < mask.size(); ++start) {
        if (!mask[start] || seen[start]) continue;
        comps.emplace_back();
        std::vector<std::size_t>& comp = comps.back();
        seen[start] = 1;
        stack.assign(1, start);
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            comp.push_back(cur);
            const int cx = static_cast<int>(cur % w);
            const int cy = static_cast<int>(cur / w);
            const int nx[4] = {cx - 1, cx + 1, cx, cx};
            const int ny[4] = {cy, cy, cy - 1, cy + 1};
            for (int k = 0; k < 4; ++k) {
                if (nx[k] < 0 || nx[k] >= w || ny[k] < 0 || ny[k] >= h) continue;
                const std::size_t nidx = static_cast<std::size_t>(ny[k]) * w + nx[k];
                if (mask[nidx] && !seen[nidx]) {
                    seen[nidx] = 1;
                    stack.push_back(nidx);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
    }
    return comps;
}

void subtract_pixel(StatsTable& stats, RegionId id, double v) {
    RegionStats& s = stats.at(id);
    s.pixel_count -= 1;
    s.intensity_sum -= v;
    if (s.pixel_count == 0) stats.erase(id);
}

}  // namespace

std::pair<LabelMap, RasterImage> expand_maps(const LabelMap& coarse, const StatsTable& stats,
                                             int target_w, int target_h) {
    if ((target_w + 1) / 2 != coarse.width || (target_h + 1) / 2 != coarse.height)
        throw std::invalid_argument("expand_maps: target dims do not squeeze back to the coarse dims");

    LabelMap labels(target_w, target_h, coarse.level - 1, 0);
    RasterImage predicted(target_w, target_h);
    for (int y = 0; y < target_h; ++y) {
        for (int x = 0; x < target_w; ++x) {
            const RegionId id = coarse.at(x / 2, y / 2);
            labels.at(x, y) = id;
            predicted.at(x, y) = stats.at(id).mean();
        }
    }
    return {std::move(labels), std::move(predicted)};
}

std::vector<std::uint8_t> find_deviating_pixels(const LabelMap& expanded,
                                                const RasterImage& predicted,
                                                const RasterImage& reference, double tau) {
    if (expanded.width != predicted.width || expanded.height != predicted.height ||
        expanded.width != reference.width || expanded.height != reference.height)
        throw std::invalid_argument("find_deviating_pixels: dimension mismatch");

    const int w = expanded.width;
    const int h = expanded.height;
    std::vector<std::uint8_t> mask(expanded.labels.size(), 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            if (std::abs(reference.intensities[idx] - predicted.intensities[idx]) > tau) {
                mask[idx] = 1;
                continue;
            }
            const RegionId id = expanded.labels[idx];
            if ((x > 0 && expanded.at(x - 1, y) != id) || (x + 1 < w && expanded.at(x + 1, y) != id) ||
                (y > 0 && expanded.at(x, y - 1) != id) || (y + 1 < h && expanded.at(x, y + 1) != id))
                mask[idx] = 1;
        }
    }
    return mask;
}

RefineOutcome refine_level(const LabelMap& expanded, const RasterImage& reference,
                           const StatsTable& entry_stats, const SegConfig& cfg,
                           RegionId& next_id) {
    if (expanded.width != reference.width || expanded.height != reference.height)
        throw std::invalid_argument("refine_level: dimension mismatch");
    if (!cfg.valid()) throw std::invalid_argument("refine_level: invalid config");

    const int w = expanded.width;
    const int h = expanded.height;
    const double tau = cfg.deviation_tau;

    RefineOutcome out;
    out.labels = expanded;
    out.stats = entry_stats;
    LabelMap& lm = out.labels;
    StatsTable& stats = out.stats;

    // Border correction passes. Reads go to the start-of-iteration map and
    // stats, writes to a fresh map, so visiting order cannot matter.
    for (int iter = 0; iter < cfg.max_refine_iters; ++iter) {
        const std::vector<std::uint8_t> mask = deviating_mask(lm, stats, reference, tau);
        LabelMap next = lm;
        std::map<RegionId, RegionStats> delta;
        bool changed = false;
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                const std::size_t idx = static_cast<std::size_t>(y) * w + x;
                if (!mask[idx]) continue;
                const double v = reference.intensities[idx];
                const RegionId cur = lm.labels[idx];
                const double d_cur = std::abs(v - stats.at(cur).mean());

                // Nearest mean wins; a tie with the current region keeps it,
                // a tie among neighbors goes to the lower id.
                const int nx[4] = {x - 1, x + 1, x, x};
                const int ny[4] = {y, y, y - 1, y + 1};
                double d_min = d_cur;
                for (int k = 0; k < 4; ++k) {
                    if (nx[k] < 0 || nx[k] >= w || ny[k] < 0 || ny[k] >= h) continue;
                    const RegionId cand = lm.at(nx[k], ny[k]);
                    if (cand == cur) continue;
                    d_min = std::min(d_min, std::abs(v - stats.at(cand).mean()));
                }
                RegionId best = cur;
                if (d_min < d_cur) {
                    best = std::numeric_limits<RegionId>::max();
                    for (int k = 0; k < 4; ++k) {
                        if (nx[k] < 0 || nx[k] >= w || ny[k] < 0 || ny[k] >= h) continue;
                        const RegionId cand = lm.at(nx[k], ny[k]);
                        if (cand == cur || cand >= best) continue;
                        if (std::abs(v - stats.at(cand).mean()) == d_min) best = cand;
                    }
                }
                if (best != cur) {
                    next.labels[idx] = best;
                    delta[cur].pixel_count -= 1;
                    delta[cur].intensity_sum -= v;
                    delta[best].pixel_count += 1;
                    delta[best].intensity_sum += v;
                    changed = true;
                }
            }
        }
        if (!changed) break;
        for (const auto& [id, d] : delta) {
            RegionStats& s = stats[id];
            s.pixel_count += d.pixel_count;
            s.intensity_sum += d.intensity_sum;
            if (s.pixel_count == 0) stats.erase(id);
        }
        lm = std::move(next);
    }

    // Seeding: clusters that still stray from their region's characteristic
    // intensity are structure invisible at the coarser levels.
    std::vector<std::uint8_t> still(lm.labels.size(), 0);
    for (std::size_t i = 0; i < lm.labels.size(); ++i)
        if (std::abs(reference.intensities[i] - stats.at(lm.labels[i]).mean()) > tau) still[i] = 1;
    for (const std::vector<std::size_t>& comp : mask_components(still, w, h)) {
        if (static_cast<int>(comp.size()) < cfg.seed_min_px) continue;
        std::map<RegionId, std::int64_t> holder_count;
        for (std::size_t idx : comp) holder_count[lm.labels[idx]] += 1;
        RegionId parent = 0;
        std::int64_t best = -1;
        for (const auto& [id, c] : holder_count) {
            if (c > best) {  // ties fall to the lower id via map order
                best = c;
                parent = id;
            }
        }
        const RegionId id = next_id++;
        RegionStats seed_stats;
        for (std::size_t idx : comp) {
            subtract_pixel(stats, lm.labels[idx], reference.intensities[idx]);
            lm.labels[idx] = id;
            seed_stats.pixel_count += 1;
            seed_stats.intensity_sum += reference.intensities[idx];
        }
        stats[id] = seed_stats;
        out.emerged[id] = ParentLink{lm.level, parent};
    }

    // Reassignment and seeding may have cut regions apart; restore the
    // one-region-one-component invariant.
    std::vector<RegionId> ids;
    ids.reserve(stats.size());
    for (const auto& [id, s] : stats) ids.push_back(id);
    for (RegionId id : ids) {
        std::vector<std::uint8_t> mask(lm.labels.size(), 0);
        for (std::size_t i = 0; i < lm.labels.size(); ++i) mask[i] = (lm.labels[i] == id);
        std::vector<std::vector<std::size_t>> comps = mask_components(mask, w, h);
        if (comps.size() <= 1) continue;
        // Largest component keeps the id; ties go to the earliest in raster
        // order (components arrive in that order already).
        std::size_t keeper = 0;
        for (std::size_t c = 1; c < comps.size(); ++c)
            if (comps[c].size() > comps[keeper].size()) keeper = c;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if (c == keeper) continue;
            const RegionId nid = next_id++;
            RegionStats part;
            for (std::size_t idx : comps[c]) {
                lm.labels[idx] = nid;
                part.pixel_count += 1;
                part.intensity_sum += reference.intensities[idx];
            }
            stats[nid] = part;
            stats[id].pixel_count -= part.pixel_count;
            stats[id].intensity_sum -= part.intensity_sum;
            out.emerged[nid] = ParentLink{lm.level, id};
        }
    }
    return out;
}

DescentResult run_descent(const Pyramid& pyr, const LabelMap& top_labels, const SegConfig& cfg) {
    const int top = pyr.top_level();
    if (top_labels.width != pyr.top_image().width || top_labels.height != pyr.top_image().height)
        throw std::invalid_argument("run_descent: top labels do not match the pyramid top");

    DescentResult result;
    result.maps.resize(top + 1);
    result.stats.resize(top + 1);
    result.maps[top] = top_labels;
    result.maps[top].level = top;
    result.stats[top] = compute_stats(top_labels, pyr.top_image());

    RegionId next_id = 1;
    for (RegionId id : top_labels.labels) next_id = std::max(next_id, id + 1);

    for (int level = top - 1; level >= 0; --level) {
        const RasterImage& ref = pyr.image_at(level);
        auto [expanded, predicted] = expand_maps(result.maps[level + 1], result.stats[level + 1],
                                                 ref.width, ref.height);
        (void)predicted;  // refinement re-derives predictions from level stats
        const StatsTable entry = compute_stats(expanded, ref);
        RefineOutcome out = refine_level(expanded, ref, entry, cfg, next_id);
        result.maps[level] = std::move(out.labels);
        result.stats[level] = std::move(out.stats);
        result.emerged.insert(out.emerged.begin(), out.emerged.end());
    }
    return result;
}

}  // namespace physinfo
