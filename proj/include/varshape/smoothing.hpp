#pragma once

#include <cstdint>

#include "varshape/detection.hpp"
#include "varshape/geometry.hpp"

namespace varshape {

struct SmoothingSchedule {
    double step_factor = 0.25;  // neighbor-averaging weight per step, in (0, 0.5]
    int num_steps = -1;         // < 0 derives round(n/10), floor 1
};

/// Steps actually run for a contour of n points under the schedule.
int smoothing_steps(const SmoothingSchedule& s, std::size_t n);

/// One neighbor-averaging pass:
/// p_i <- (1-f) p_i + f (p_{i-1}+p_{i+1})/2. Point count preserved,
/// centroid preserved.
Contour smooth_once(const Contour& c, double step_factor = 0.25);

/// Point-wise sum of the signed Heron curvature over the progressively
/// smoothed family (smoothing levels 0..num_steps, correspondence by
/// index).
ScalarSeries cumulative_curvature(const Contour& c, const SmoothingSchedule& schedule = {});

/// Interesting points of the clean base contour: sliding-window extrema of
/// the cumulative curvature.
struct GroundTruth {
    IPSet indices;            // tag GT
    ScalarSeries cumulative;  // the series the extrema came from
};

/// Ground truth on the canonical 100-point stage. Throws
/// std::invalid_argument for any other point count.
GroundTruth ground_truth_ips(const Contour& c100, const SmoothingSchedule& schedule = {},
                             const WindowConfig& w = {});

namespace detail {
/// Same extraction for any base size; the 100-point contract lives in
/// ground_truth_ips.
GroundTruth ground_truth_any(const Contour& c, const SmoothingSchedule& schedule,
                             const WindowConfig& w);
}  // namespace detail

/// The 1-based index map from the 100-point stage onto a noised contour of
/// N = 100*2^p points: n -> 2^p (n-1) + 1. Throws std::invalid_argument
/// when N is not a power-of-two multiple of 100 or n is outside [1, 100].
std::uint64_t gt_index_map(std::uint64_t n, std::uint64_t N);

}  // namespace varshape
