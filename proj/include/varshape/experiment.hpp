#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "varshape/dataset_io.hpp"
#include "varshape/detection.hpp"

namespace varshape {

/// Batch pipeline settings. The numeric defaults are the experiment's
/// canonical values; every one of them is a CLI flag.
struct ExperimentConfig {
    std::filesystem::path dataset_root;
    std::filesystem::path out_dir;
    int base_points = 100;
    double noise_variance = 2.0;
    std::uint64_t seed = 0;
    int noising_steps = 4;
    double perturbation_ratio = 0.01;
    double window_ratio = 0.017;
    double sharpness_threshold = 0.15;
    double ai_radius = 15.0;
    std::vector<Method> methods = {Method::Vo, Method::V, Method::AI, Method::K, Method::SK};
    int jobs = 0;  // 0 = hardware concurrency
};

struct ExperimentResult {
    std::vector<ShapeResult> shapes;
    std::vector<std::string> failures;  // "class/shape: message", sorted
    std::vector<std::filesystem::path> manifest;
};

/// Per shape: resample to base_points, extract ground truth, distort,
/// noise incrementally, run the configured detectors at every level,
/// compare densities against the mapped ground-truth density, and write
/// the result tables. Shape failures are isolated; the run continues.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Same pipeline for a single already-loaded shape (no file output).
ShapeResult run_shape(const ShapeRecord& record, const ExperimentConfig& config);

/// Stable per-shape seed: the config seed mixed with a hash of
/// "class/shape", so results do not depend on dataset ordering.
std::uint64_t shape_seed(std::uint64_t base_seed, const std::string& class_name,
                         const std::string& shape_name);

}  // namespace varshape
