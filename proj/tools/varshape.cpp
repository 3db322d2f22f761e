// Command-line front end: the full batch experiment plus each pipeline
// stage as its own subcommand for debugging and composition.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "varshape/coverage.hpp"
#include "varshape/dataset_io.hpp"
#include "varshape/descriptors.hpp"
#include "varshape/detection.hpp"
#include "varshape/evaluation.hpp"
#include "varshape/experiment.hpp"
#include "varshape/noising.hpp"
#include "varshape/smoothing.hpp"

namespace {

using namespace varshape;

std::vector<Method> parse_methods(const std::string& list) {
    std::vector<Method> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const std::size_t comma = list.find(',', pos);
        const std::string tok = list.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
        if (!tok.empty()) out.push_back(method_from_name(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("no methods given");
    return out;
}

SideRule parse_side(const std::string& s) {
    if (s == "outward") return SideRule::Outward;
    if (s == "inward") return SideRule::Inward;
    if (s == "alternating") return SideRule::Alternating;
    throw std::invalid_argument("side must be outward, inward or alternating");
}

void print_indices(const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i)
        std::printf("%s%zu", i ? "," : "", idx[i]);
    std::printf("\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interesting-point localization on closed planar contours: total-distance "
                 "descriptor with incremental noising, baseline detectors, and a probabilistic "
                 "precision-recall harness"};
    app.require_subcommand(1);

    // ---- run ----
    ExperimentConfig cfg;
    std::string methods_flag = "Vo,V,AI,K,SK";
    auto* run = app.add_subcommand("run", "run the batch experiment over a dataset directory");
    run->add_option("--dataset", cfg.dataset_root, "dataset root: <root>/<class>/<shape>.(csv|pgm)")
        ->envname("VARSHAPE_DATASET")
        ->required();
    run->add_option("--out", cfg.out_dir, "output directory for result tables and plots")->required();
    run->add_option("--base-points", cfg.base_points, "resampled base contour size")
        ->capture_default_str();
    run->add_option("--noise-variance", cfg.noise_variance, "Gaussian boundary distortion variance")
        ->capture_default_str();
    run->add_option("--seed", cfg.seed, "random seed for the distortion step")->capture_default_str();
    run->add_option("--noising-steps", cfg.noising_steps, "number of point-doubling noising steps")
        ->capture_default_str();
    run->add_option("--perturbation-ratio", cfg.perturbation_ratio,
                    "noising offset as a fraction of the edge length")
        ->capture_default_str();
    run->add_option("--window-ratio", cfg.window_ratio,
                    "extremum window size as a fraction of the perimeter")
        ->capture_default_str();
    run->add_option("--sharpness-threshold", cfg.sharpness_threshold,
                    "sharp-change threshold for the V detector")
        ->capture_default_str();
    run->add_option("--ai-radius", cfg.ai_radius, "disk radius of the area integral invariant")
        ->capture_default_str();
    run->add_option("--methods", methods_flag, "comma list from Vo,V,AI,K,SK")->capture_default_str();
    run->add_option("--jobs", cfg.jobs, "parallel shapes (0 = hardware)")->capture_default_str();

    // ---- shared stage options ----
    std::string in_path, out_path = "-";
    int points = 100;
    double variance = 2.0;
    std::uint64_t seed = 0;
    int steps = 4;
    double ratio = 0.01;
    std::string side = "outward";
    std::string method = "Vo";
    double window_ratio = 0.017;
    double sharpness = 0.15;
    double ai_radius = 15.0;
    double cell = 2.0;

    auto add_io = [&](CLI::App* sub, bool with_out) {
        sub->add_option("input", in_path, "input contour CSV")->required();
        if (with_out) sub->add_option("output", out_path, "output CSV path")->required();
    };

    auto* trace = app.add_subcommand("trace", "trace a binary PGM silhouette into a contour CSV");
    trace->add_option("input", in_path, "binary PGM (P5)")->required();
    trace->add_option("output", out_path, "output CSV path")->required();

    auto* rsmp = app.add_subcommand("resample", "resample a contour to n equally spaced points");
    add_io(rsmp, true);
    rsmp->add_option("--points", points, "target point count")->capture_default_str();

    auto* dist = app.add_subcommand("distort", "move each point along its normal by Gaussian noise");
    add_io(dist, true);
    dist->add_option("--variance", variance, "noise variance")->capture_default_str();
    dist->add_option("--seed", seed, "random seed")->capture_default_str();

    auto* noise = app.add_subcommand("noise", "incremental noising (doubles points per step)");
    add_io(noise, true);
    noise->add_option("--steps", steps, "noising steps")->capture_default_str();
    noise->add_option("--ratio", ratio, "perturbation ratio")->capture_default_str();
    noise->add_option("--side", side, "outward|inward|alternating")->capture_default_str();

    auto* gt = app.add_subcommand("gt", "ground-truth interesting points of the base contour");
    gt->add_option("input", in_path, "input contour CSV")->required();
    gt->add_option("--points", points, "base contour size the input is resampled to")
        ->capture_default_str();

    auto* det = app.add_subcommand("detect", "run one detector and print the IP indices");
    det->add_option("input", in_path, "input contour CSV")->required();
    det->add_option("--method", method, "Vo|V|AI|K|SK")->capture_default_str();
    det->add_option("--window-ratio", window_ratio, "window size ratio")->capture_default_str();
    det->add_option("--sharpness-threshold", sharpness, "V sharpness threshold")->capture_default_str();
    det->add_option("--ai-radius", ai_radius, "AI disk radius")->capture_default_str();

    auto* dens = app.add_subcommand("density", "per-point IP probability mass for one detector");
    dens->add_option("input", in_path, "input contour CSV")->required();
    dens->add_option("--method", method, "Vo|V|AI|K|SK")->capture_default_str();
    dens->add_option("--window-ratio", window_ratio, "window size ratio")->capture_default_str();

    auto* pr = app.add_subcommand("pr", "single-shape pipeline; prints the PR table per level");
    pr->add_option("input", in_path, "input contour CSV")->required();
    pr->add_option("--method", method, "Vo|V|AI|K|SK")->capture_default_str();
    pr->add_option("--base-points", points, "base contour size")->capture_default_str();
    pr->add_option("--variance", variance, "distortion variance")->capture_default_str();
    pr->add_option("--seed", seed, "random seed")->capture_default_str();
    pr->add_option("--steps", steps, "noising steps")->capture_default_str();

    auto* cov = app.add_subcommand("coverage", "space-filling statistics of noising vs smoothing");
    cov->add_option("input", in_path, "input contour CSV")->required();
    cov->add_option("--base-points", points, "base contour size")->capture_default_str();
    cov->add_option("--steps", steps, "noising steps")->capture_default_str();
    cov->add_option("--cell", cell, "grid cell size (shape units)")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            cfg.methods = parse_methods(methods_flag);
            const ExperimentResult res = run_experiment(cfg);
            for (const std::string& f : res.failures) std::fprintf(stderr, "failed: %s\n", f.c_str());
            std::printf("shapes: %zu ok, %zu failed; files written: %zu\n", res.shapes.size(),
                        res.failures.size(), res.manifest.size());
            return res.failures.empty() ? 0 : 1;
        }
        if (trace->parsed()) {
            save_contour_csv(out_path, trace_binary_image(in_path));
            return 0;
        }
        if (rsmp->parsed()) {
            save_contour_csv(out_path, resample(load_contour_csv(in_path), points));
            return 0;
        }
        if (dist->parsed()) {
            save_contour_csv(out_path, gaussian_distort(load_contour_csv(in_path), variance, seed));
            return 0;
        }
        if (noise->parsed()) {
            NoisingConfig nc{ratio, steps, parse_side(side)};
            const std::vector<Contour> levels = incremental_noising(load_contour_csv(in_path), nc);
            save_contour_csv(out_path, levels.back());
            return 0;
        }
        if (gt->parsed()) {
            const Contour base = resample(load_contour_csv(in_path), points);
            const GroundTruth g = detail::ground_truth_any(base, {}, {});
            print_indices(g.indices.indices);
            return 0;
        }
        if (det->parsed()) {
            const Contour c = load_contour_csv(in_path);
            const WindowConfig w{window_ratio, sharpness};
            IPSet ips;
            switch (method_from_name(method)) {
                case Method::Vo: ips = detect_Vo(c, w); break;
                case Method::V: ips = detect_V(c, w); break;
                case Method::AI: ips = detect_AI(c, w, ai_radius); break;
                case Method::K: ips = detect_K(c, w); break;
                case Method::SK: ips = detect_SK(c, w); break;
                case Method::GT: throw std::invalid_argument("use the gt subcommand");
            }
            print_indices(ips.indices);
            return 0;
        }
        if (dens->parsed()) {
            const Contour c = load_contour_csv(in_path);
            const WindowConfig w{window_ratio, sharpness};
            IPSet ips;
            switch (method_from_name(method)) {
                case Method::Vo: ips = detect_Vo(c, w); break;
                case Method::V: ips = detect_V(c, w); break;
                case Method::AI: ips = detect_AI(c, w); break;
                case Method::K: ips = detect_K(c, w); break;
                case Method::SK: ips = detect_SK(c, w); break;
                case Method::GT: throw std::invalid_argument("use the gt subcommand");
            }
            const DensityProfile d = ips.indices.empty() ? uniform_density(c) : density_profile(ips, c);
            for (std::size_t i = 0; i < d.mass.size(); ++i) std::printf("%zu,%.12g\n", i, d.mass[i]);
            return 0;
        }
        if (pr->parsed()) {
            ShapeRecord rec{"cli", "shape", load_contour_csv(in_path), in_path};
            ExperimentConfig c;
            c.base_points = points;
            c.noise_variance = variance;
            c.seed = seed;
            c.noising_steps = steps;
            c.methods = {method_from_name(method)};
            const ShapeResult r = run_shape(rec, c);
            std::printf("method,points,recall_pos,precision\n");
            for (const auto& e : r.entries)
                for (std::size_t m = 0; m < e.pr.values.size(); ++m)
                    std::printf("%s,%zu,%zu,%.12g\n", method_name(e.method).c_str(), e.points, m + 1,
                                e.pr.values[m]);
            return 0;
        }
        if (cov->parsed()) {
            const Contour base = resample(load_contour_csv(in_path), points);
            const GroundTruth g = detail::ground_truth_any(base, {}, {});
            NoisingConfig nc;
            nc.steps = steps;
            const std::vector<Contour> levels = incremental_noising(base, nc);
            const CoverageGrid ng = noising_coverage(levels, cell);
            const CoverageGrid sg = smoothing_coverage(base, {}, cell);
            const CorrelationReport rep = coverage_correlation(ng, sg, g, base);
            std::printf("gt_points,%zu\n", g.indices.indices.size());
            std::printf("rank_correlation,%.6f\n", rep.rank_correlation);
            std::printf("gt_above_median_fraction,%.6f\n", rep.gt_above_median_fraction);
            std::printf("box_counting_dimension,%.4f\n", box_counting_dimension(levels, cell));
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
