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

#include "physinfo/annotate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace physinfo {
namespace {

double range_distance(double v, const AttrRange& r) {
    if (v >= r.lo && v <= r.hi) return 0.0;
    const double width = std::max(r.hi - r.lo, 1e-6);
    return (v < r.lo ? r.lo - v : v - r.hi) / width;
}

std::string fixed3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

struct SceneOutcome {
    const Story* story = nullptr;
    const Scene* scene = nullptr;
    double score = 0.0;
    std::vector<AnnotationLabel> labels;
    std::vector<RelationCheck> relations;
};

}  // namespace

double match_object(const RegionDescriptor& desc, int image_w, int image_h,
                    const ObjectPrototype& proto) {
    const double mean = desc.mean_intensity;
    const double relsize = static_cast<double>(desc.size) /
                           (static_cast<double>(image_w) * static_cast<double>(image_h));
    const double aspect = static_cast<double>(desc.x1 - desc.x0 + 1) /
                          static_cast<double>(desc.y1 - desc.y0 + 1);
    const double penalty = proto.w_mean * range_distance(mean, proto.mean) +
                           proto.w_size * range_distance(relsize, proto.relsize) +
                           proto.w_aspect * range_distance(aspect, proto.aspect);
    return 1.0 / (1.0 + penalty);
}

std::string AnnotationReport::to_text() const {
    if (!recognized) return "no recognition\n";
    std::string out;
    out += "story " + story + "\n";
    out += "scene " + scene + "\n";
    out += "score " + fixed3(scene_score) + "\n";
    for (const AnnotationLabel& l : labels)
        out += "label " + std::to_string(l.region) + " " + l.word + " " + fixed3(l.score) + "\n";
    for (const RelationCheck& r : relations)
        out += "relation " + r.subject + " " + std::string(relation_kind_name(r.kind)) + " " +
               r.object + " " + (r.satisfied ? "ok" : "unsatisfied") + "\n";
    return out;
}

AnnotationReport annotate_scene(const std::vector<RegionDescriptor>& descs, int image_w,
                                int image_h, const std::vector<RelationEdge>& relations,
                                const KnowledgeBase& kb, double theta) {
    if (kb.stories.empty()) throw std::invalid_argument("annotate_scene: empty knowledge base");
    if (!(theta > 0.0 && theta <= 1.0))
        throw std::invalid_argument("annotate_scene: theta must lie in (0,1]");

    AnnotationReport report;
    if (descs.empty()) return report;  // nothing to recognize

    SceneOutcome best;
    bool have_best = false;

    for (const Story& story : kb.stories) {
        for (const Scene& scene : story.scenes) {
            // All candidate pairs at or above theta, strongest first. Ties
            // prefer the earlier prototype, then the lower region id.
            struct Cand {
                double score;
                std::size_t proto;
                std::size_t region;
            };
            std::vector<Cand> cands;
            for (std::size_t p = 0; p < scene.prototypes.size(); ++p) {
                for (std::size_t r = 0; r < descs.size(); ++r) {
                    const double s = match_object(descs[r], image_w, image_h, scene.prototypes[p]);
                    if (s >= theta) cands.push_back({s, p, r});
                }
            }
            std::stable_sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
                if (a.score != b.score) return a.score > b.score;
                if (a.proto != b.proto) return a.proto < b.proto;
                return descs[a.region].id < descs[b.region].id;
            });

            std::vector<char> proto_used(scene.prototypes.size(), 0);
            std::vector<char> region_used(descs.size(), 0);
            std::map<std::string, RegionId> word_region;
            SceneOutcome outcome;
            outcome.story = &story;
            outcome.scene = &scene;
            double score_sum = 0.0;
            for (const Cand& c : cands) {
                if (proto_used[c.proto] || region_used[c.region]) continue;
                proto_used[c.proto] = 1;
                region_used[c.region] = 1;
                outcome.labels.push_back(
                    {descs[c.region].id, scene.prototypes[c.proto].word, c.score});
                word_region[scene.prototypes[c.proto].word] = descs[c.region].id;
                score_sum += c.score;
            }
            std::sort(outcome.labels.begin(), outcome.labels.end(),
                      [](const AnnotationLabel& a, const AnnotationLabel& b) {
                          return a.region < b.region;
                      });

            int satisfied = 0;
            for (const SceneRelation& want : scene.expected_relations) {
                RelationCheck check{want.subject, want.kind, want.object, false};
                const auto s = word_region.find(want.subject);
                const auto o = word_region.find(want.object);
                if (s != word_region.end() && o != word_region.end()) {
                    for (const RelationEdge& e : relations) {
                        if (e.kind == want.kind && e.level == 0 && e.subject == s->second &&
                            e.object == o->second) {
                            check.satisfied = true;
                            break;
                        }
                    }
                }
                satisfied += check.satisfied ? 1 : 0;
                outcome.relations.push_back(check);
            }
            const double relation_satisfaction =
                scene.expected_relations.empty()
                    ? 1.0
                    : static_cast<double>(satisfied) /
                          static_cast<double>(scene.expected_relations.size());
            const double mean_score =
                outcome.labels.empty() ? 0.0
                                       : score_sum / static_cast<double>(outcome.labels.size());
            outcome.score = mean_score * relation_satisfaction;

            if (!have_best || outcome.score > best.score ||
                (outcome.score == best.score &&
                 std::pair(story.name, scene.name) <
                     std::pair(best.story->name, best.scene->name))) {
                best = std::move(outcome);
                have_best = true;
            }
        }
    }

    if (best.labels.empty()) return report;  // below theta everywhere
    report.recognized = true;
    report.story = best.story->name;
    report.scene = best.scene->name;
    report.scene_score = best.score;
    report.labels = std::move(best.labels);
    report.relations = std::move(best.relations);
    return report;
}

}  // namespace physinfo
