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

#include "cli_app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "physinfo/annotate.hpp"
#include "physinfo/description.hpp"
#include "physinfo/kb.hpp"
#include "physinfo/metrics.hpp"
#include "physinfo/pgm_io.hpp"
#include "physinfo/pipeline.hpp"
#include "physinfo/synth.hpp"

namespace physinfo::cli {
namespace {

namespace fs = std::filesystem;

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PgmError(PgmError::Kind::missing_file, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LabelMap image_as_labels(const RasterImage& img) {
    LabelMap m(img.width, img.height, 0, 0);
    for (std::size_t i = 0; i < m.labels.size(); ++i)
        m.labels[i] = static_cast<RegionId>(img.intensities[i]);
    return m;
}

struct SegFlags {
    AnalysisConfig cfg;
    void attach(CLI::App* cmd) {
        cmd->add_option("--k-bins", cfg.seg.k_bins, "intensity clusters for the top segmentation")
            ->check(CLI::Range(2, 255));
        cmd->add_option("--tau", cfg.seg.deviation_tau, "deviation threshold, intensity units")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed-min-px", cfg.seg.seed_min_px, "minimum pixels to seed a region")
            ->check(CLI::Range(1, 1 << 20));
        cmd->add_option("--max-refine-iters", cfg.seg.max_refine_iters,
                        "refinement passes per level")
            ->check(CLI::Range(1, 1000));
        cmd->add_option("--min-region-px", cfg.seg.min_region_px,
                        "top-level regions smaller than this merge away")
            ->check(CLI::Range(1, 1 << 20));
        cmd->add_option("--stop-threshold", cfg.stop_threshold,
                        "squeeze until the level has at most this many pixels")
            ->check(CLI::Range(1, 1 << 24));
    }
};

int cmd_segment(const std::string& input, const std::string& outdir, const AnalysisConfig& cfg,
                std::ostream& out, std::ostream& err) {
    try {
        const auto t0 = std::chrono::steady_clock::now();
        const RasterImage img = load_image(input);
        const Analysis analysis = analyze(img, cfg);
        const Description doc = describe(analysis, cfg);
        const std::string encoded = encode(doc);
        const auto t1 = std::chrono::steady_clock::now();

        fs::create_directories(outdir);
        {
            std::ofstream f(fs::path(outdir) / "description.physinfo", std::ios::binary);
            f << encoded;
            if (!f) throw PgmError(PgmError::Kind::write_failure, "cannot write description");
        }
        for (int level = 0; level <= analysis.descent.top_level(); ++level) {
            save_overlay(analysis.descent.maps[level],
                         (fs::path(outdir) / ("overlay_" + std::to_string(level) + ".ppm")).string());
        }
        const double ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0).count();
        std::ostringstream summary;
        summary << "input " << input << "\n";
        summary << "size " << img.width << " " << img.height << "\n";
        summary << "levels " << analysis.descent.top_level() + 1 << "\n";
        for (int level = analysis.descent.top_level(); level >= 0; --level) {
            summary << "level " << level << " " << analysis.descent.maps[level].width << " "
                    << analysis.descent.maps[level].height << " regions "
                    << analysis.descriptors[level].size() << "\n";
        }
        summary << "elapsed_ms " << fixed(ms, 3) << "\n";
        {
            std::ofstream f(fs::path(outdir) / "summary.txt", std::ios::binary);
            f << summary.str();
            if (!f) throw PgmError(PgmError::Kind::write_failure, "cannot write summary");
        }
        out << summary.str();
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_reconstruct(const std::string& desc_path, int level, const std::string& out_path,
                    const std::string& reference_path, std::ostream& out, std::ostream& err) {
    try {
        const Description doc = decode(read_file(desc_path));
        const RasterImage img = reconstruct(doc, level);
        save_image(img, out_path);
        if (!reference_path.empty()) {
            const RasterImage ref = load_image(reference_path);
            if (ref.width != img.width || ref.height != img.height)
                throw std::invalid_argument("reference dimensions do not match level " +
                                            std::to_string(level));
            double sq = 0.0;
            for (std::size_t i = 0; i < img.intensities.size(); ++i) {
                const double d = img.intensities[i] - ref.intensities[i];
                sq += d * d;
            }
            out << "RMSE " << fixed(std::sqrt(sq / static_cast<double>(img.pixel_count())), 3)
                << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_annotate(const std::string& desc_path, const std::string& kb_path, double theta,
                 std::ostream& out, std::ostream& err) {
    try {
        const Description doc = decode(read_file(desc_path));
        const KnowledgeBase kb = parse_kb(read_file(kb_path));
        const DescriptionLevel& base = doc.level_block(0);
        const AnnotationReport report =
            annotate_scene(base.regions, doc.width, doc.height, doc.relations, kb, theta);
        out << report.to_text();
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_synth(const std::string& preset, int width, int height, double bg,
              const std::vector<std::string>& rect_specs, double sigma, std::uint64_t seed,
              const std::string& out_path, std::string gt_path, std::ostream& out,
              std::ostream& err) {
    SceneSpec spec;
    try {
        if (!preset.empty()) {
            spec = preset_scene(preset);
        } else {
            spec.width = width;
            spec.height = height;
            spec.background_mean = bg;
            for (const std::string& s : rect_specs) {
                SynthRect r;
                char trailing = 0;
                if (std::sscanf(s.c_str(), "%d,%d,%d,%d,%lf%c", &r.x, &r.y, &r.w, &r.h, &r.mean,
                                &trailing) != 5)
                    throw std::invalid_argument("bad --rect '" + s + "', expected x,y,w,h,mean");
                spec.rects.push_back(r);
            }
        }
        validate_scene_spec(spec);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    try {
        const SynthScene scene = render_scene(spec, sigma, seed);
        save_image(scene.image, out_path);
        if (gt_path.empty()) {
            fs::path p(out_path);
            p.replace_extension();
            gt_path = p.string() + "_gt.pgm";
        }
        RasterImage gt(scene.ground_truth.width, scene.ground_truth.height);
        for (std::size_t i = 0; i < gt.intensities.size(); ++i)
            gt.intensities[i] = static_cast<double>(scene.ground_truth.labels[i]);
        save_image(gt, gt_path);
        out << "image " << out_path << "\n";
        out << "ground_truth " << gt_path << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_score(const std::string& a_path, const std::string& b_path, std::ostream& out,
              std::ostream& err) {
    try {
        const RasterImage a = load_image(a_path);
        const RasterImage b = load_image(b_path);
        if (a.width != b.width || a.height != b.height)
            throw std::invalid_argument("label maps have different dimensions");
        const LabelMap la = image_as_labels(a);
        const LabelMap lb = image_as_labels(b);
        out << "ari " << fixed(adjusted_rand_index(la, lb), 4) << "\n";
        out << "boundary_f " << fixed(boundary_f_measure(la, lb), 4) << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hierarchical image description and annotation tool"};
    app.name("physinfo");
    app.require_subcommand(1);

    // segment
    auto* segment = app.add_subcommand("segment", "segment an image and write its description");
    std::string seg_input;
    std::string seg_outdir;
    SegFlags seg_flags;
    segment->add_option("input", seg_input, "input PGM image")->required();
    segment->add_option("-o,--out-dir", seg_outdir, "output directory")->required();
    seg_flags.attach(segment);

    // reconstruct
    auto* rec = app.add_subcommand("reconstruct", "render an image from a description");
    std::string rec_desc;
    std::string rec_out;
    std::string rec_ref;
    int rec_level = 0;
    rec->add_option("description", rec_desc, "description file")->required();
    rec->add_option("-l,--level", rec_level, "pyramid level to render")->check(CLI::NonNegativeNumber);
    rec->add_option("-o,--out", rec_out, "output PGM path")->required();
    rec->add_option("--reference", rec_ref, "reference image for an RMSE line");

    // annotate
    auto* ann = app.add_subcommand("annotate", "label a described scene against a knowledge base");
    std::string ann_desc;
    std::string ann_kb;
    double ann_theta = 0.5;
    ann->add_option("description", ann_desc, "description file")->required();
    ann->add_option("kb", ann_kb, "knowledge base file")->required();
    ann->add_option("--theta", ann_theta, "minimum match score to keep a label")
        ->check(CLI::Range(std::numeric_limits<double>::min(), 1.0));

    // synth
    auto* synth = app.add_subcommand("synth", "generate a synthetic test scene");
    std::string synth_preset;
    int synth_w = 128, synth_h = 128;
    double synth_bg = 0.0;
    std::vector<std::string> synth_rects;
    double synth_sigma = 0.0;
    std::uint64_t synth_seed = 1;
    std::string synth_out;
    std::string synth_gt;
    synth->add_option("--preset", synth_preset,
                      "named scene (rects5, sky_ground_a, ... ); overrides shape flags");
    synth->add_option("--width", synth_w, "scene width")->check(CLI::Range(1, 1 << 14));
    synth->add_option("--height", synth_h, "scene height")->check(CLI::Range(1, 1 << 14));
    synth->add_option("--bg", synth_bg, "background mean")->check(CLI::Range(0.0, 255.0));
    synth->add_option("--rect", synth_rects, "rectangle as x,y,w,h,mean (repeatable)");
    synth->add_option("--sigma", synth_sigma, "Gaussian noise level")->check(CLI::NonNegativeNumber);
    synth->add_option("--seed", synth_seed, "noise seed");
    synth->add_option("-o,--out", synth_out, "output PGM path")->required();
    synth->add_option("--gt", synth_gt, "ground-truth label PGM path (default: <out>_gt.pgm)");

    // score
    auto* score = app.add_subcommand("score", "compare two label-map PGMs");
    std::string score_a;
    std::string score_b;
    score->add_option("a", score_a, "first label map")->required();
    score->add_option("b", score_b, "second label map")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (segment->parsed()) return cmd_segment(seg_input, seg_outdir, seg_flags.cfg, out, err);
    if (rec->parsed()) return cmd_reconstruct(rec_desc, rec_level, rec_out, rec_ref, out, err);
    if (ann->parsed()) return cmd_annotate(ann_desc, ann_kb, ann_theta, out, err);
    if (synth->parsed())
        return cmd_synth(synth_preset, synth_w, synth_h, synth_bg, synth_rects, synth_sigma,
                         synth_seed, synth_out, synth_gt, out, err);
    if (score->parsed()) return cmd_score(score_a, score_b, out, err);
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace physinfo::cli
