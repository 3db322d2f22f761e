#include "varshape/smoothing.hpp"

#include <cmath>
#include <stdexcept>

#include "varshape/descriptors.hpp"

namespace varshape {

int smoothing_steps(const SmoothingSchedule& s, std::size_t n) {
    if (s.num_steps >= 0) return s.num_steps;
    return std::max(1, static_cast<int>(std::lround(static_cast<double>(n) / 10.0)));
}

Contour smooth_once(const Contour& c, double step_factor) {
    if (!(step_factor > 0.0 && step_factor <= 0.5))
        throw std::invalid_argument("smooth_once: step_factor must lie in (0, 0.5]");
    const std::size_t n = c.size();
    std::vector<Vec2> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& prv = c.point((i + n - 1) % n);
        const Vec2& nxt = c.point((i + 1) % n);
        out[i] = c.point(i) * (1.0 - step_factor) + (prv + nxt) * (0.5 * step_factor);
    }
    return Contour(std::move(out));
}

ScalarSeries cumulative_curvature(const Contour& c, const SmoothingSchedule& schedule) {
    const std::size_t n = c.size();
    const std::size_t k = default_heron_offset(n);
    const int steps = smoothing_steps(schedule, n);
    ScalarSeries sk(n, 0.0);
    Contour cur = c;
    for (int t = 0;; ++t) {
        const ScalarSeries kappa = heron_curvature(cur, k);
        for (std::size_t i = 0; i < n; ++i) sk[i] += kappa[i];
        if (t == steps) break;
        cur = smooth_once(cur, schedule.step_factor);
    }
    return sk;
}

namespace detail {

GroundTruth ground_truth_any(const Contour& c, const SmoothingSchedule& schedule,
                             const WindowConfig& w) {
    GroundTruth gt;
    gt.cumulative = cumulative_curvature(c, schedule);
    gt.indices = IPSet{sliding_extrema(gt.cumulative, c, w), Method::GT};
    return gt;
}

}  // namespace detail

GroundTruth ground_truth_ips(const Contour& c100, const SmoothingSchedule& schedule,
                             const WindowConfig& w) {
    if (c100.size() != 100)
        throw std::invalid_argument("ground_truth_ips: expected the 100-point stage");
    return detail::ground_truth_any(c100, schedule, w);
}

std::uint64_t gt_index_map(std::uint64_t n, std::uint64_t N) {
    if (n < 1 || n > 100) throw std::invalid_argument("gt_index_map: n must lie in [1, 100]");
    if (N < 100 || N % 100 != 0)
        throw std::invalid_argument("gt_index_map: N must be a power-of-two multiple of 100");
    std::uint64_t q = N / 100;
    if ((q & (q - 1)) != 0)
        throw std::invalid_argument("gt_index_map: N must be a power-of-two multiple of 100");
    return q * (n - 1) + 1;
}

}  // namespace varshape
