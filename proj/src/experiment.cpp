#include "varshape/experiment.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "varshape/descriptors.hpp"
#include "varshape/evaluation.hpp"
#include "varshape/noising.hpp"
#include "varshape/smoothing.hpp"

namespace varshape {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

IPSet detect(Method m, const Contour& c, const ExperimentConfig& cfg) {
    const WindowConfig w{cfg.window_ratio, cfg.sharpness_threshold};
    switch (m) {
        case Method::Vo: return detect_Vo(c, w);
        case Method::V: return detect_V(c, w);
        case Method::AI: return detect_AI(c, w, cfg.ai_radius);
        case Method::K: return detect_K(c, w);
        case Method::SK: return detect_SK(c, w);
        case Method::GT: break;
    }
    throw std::invalid_argument("detect: GT is not a detector");
}

}  // namespace

std::uint64_t shape_seed(std::uint64_t base_seed, const std::string& class_name,
                         const std::string& shape_name) {
    return splitmix64(base_seed ^ fnv1a(class_name + "/" + shape_name));
}

ShapeResult run_shape(const ShapeRecord& record, const ExperimentConfig& cfg) {
    if (cfg.base_points < 3) throw std::invalid_argument("run_shape: base_points must be >= 3");
    if (cfg.noising_steps < 1) throw std::invalid_argument("run_shape: noising_steps must be >= 1");

    const WindowConfig w{cfg.window_ratio, cfg.sharpness_threshold};
    const Contour base = resample(record.contour, static_cast<std::size_t>(cfg.base_points));
    const GroundTruth gt = detail::ground_truth_any(base, SmoothingSchedule{}, w);
    if (gt.indices.indices.empty())
        throw std::runtime_error("no ground-truth points (constant cumulative curvature)");

    const Contour noisy = gaussian_distort(
        base, cfg.noise_variance, shape_seed(cfg.seed, record.class_name, record.shape_name));
    NoisingConfig noise_cfg;
    noise_cfg.perturbation_ratio = cfg.perturbation_ratio;
    noise_cfg.steps = cfg.noising_steps;
    const std::vector<Contour> levels = incremental_noising(noisy, noise_cfg);

    ShapeResult result;
    result.class_name = record.class_name;
    result.shape_name = record.shape_name;

    for (std::size_t li = 0; li < levels.size(); ++li) {
        const Contour& level = levels[li];
        const std::uint64_t stride = std::uint64_t{1} << (li + 1);

        IPSet gt_mapped{{}, Method::GT};
        for (std::size_t idx : gt.indices.indices)
            gt_mapped.indices.push_back(static_cast<std::size_t>(stride * idx));
        const DensityProfile gt_density = density_profile(gt_mapped, level);

        for (Method m : cfg.methods) {
            const IPSet ips = detect(m, level, cfg);
            const DensityProfile d =
                ips.indices.empty() ? uniform_density(level) : density_profile(ips, level);
            result.entries.push_back({m, level.size(), pr_curve(d, gt_density, gt_mapped)});
        }
    }

    const Contour& top = levels.back();
    result.series_points = top.size();
    result.phi_series = var_descriptor(top);
    result.ai_series = area_integral_invariant(top, cfg.ai_radius);
    return result;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    const std::vector<ShapeRecord> records = load_dataset(cfg.dataset_root);

    ExperimentResult result;
    std::vector<ShapeResult> shapes(records.size());
    std::vector<std::string> failures(records.size());
    std::vector<char> ok(records.size(), 0);

#ifdef _OPENMP
    const int jobs = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (long long i = 0; i < static_cast<long long>(records.size()); ++i) {
        try {
            shapes[i] = run_shape(records[i], cfg);
            ok[i] = 1;
        } catch (const std::exception& e) {
            failures[i] = records[i].class_name + "/" + records[i].shape_name + ": " + e.what();
        }
    }

    for (std::size_t i = 0; i < records.size(); ++i) {
        if (ok[i])
            result.shapes.push_back(std::move(shapes[i]));
        else
            result.failures.push_back(std::move(failures[i]));
    }
    if (!cfg.out_dir.empty()) result.manifest = write_results(result.shapes, cfg.out_dir);
    return result;
}

}  // namespace varshape
