#include "varshape/detection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "varshape/descriptors.hpp"
#include "varshape/smoothing.hpp"

namespace varshape {

std::string method_name(Method m) {
    switch (m) {
        case Method::Vo: return "Vo";
        case Method::V: return "V";
        case Method::AI: return "AI";
        case Method::K: return "K";
        case Method::SK: return "SK";
        case Method::GT: return "GT";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "Vo") return Method::Vo;
    if (name == "V") return Method::V;
    if (name == "AI") return Method::AI;
    if (name == "K") return Method::K;
    if (name == "SK") return Method::SK;
    if (name == "GT") return Method::GT;
    throw std::invalid_argument("unknown method: " + name);
}

namespace {

struct WindowScan {
    const Contour& c;
    double half_width;

    // widest t with both arc distances from i inside the half-window;
    // the immediate neighbors always count
    std::size_t max_offset(std::size_t i) const {
        const std::size_t n = c.size();
        std::size_t tmax = 1;
        for (std::size_t t = 2; 2 * t < n; ++t) {
            const double dl = boundary_distance(c, i, (i + n - t) % n);
            const double dr = boundary_distance(c, i, (i + t) % n);
            if (dl <= half_width && dr <= half_width)
                tmax = t;
            else
                break;
        }
        return tmax;
    }
};

void validate_window(const Contour& c, const WindowConfig& w) {
    if (!(w.window_ratio > 0.0 && w.window_ratio < 0.5))
        throw std::invalid_argument("sliding_extrema: window_ratio must lie in (0, 0.5)");
    const double mean_spacing = c.perimeter() / static_cast<double>(c.size());
    if (w.window_ratio * c.perimeter() < mean_spacing)
        throw std::invalid_argument("sliding_extrema: window smaller than one inter-point spacing");
}

}  // namespace

std::vector<std::size_t> sliding_extrema(const ScalarSeries& series, const Contour& c,
                                         const WindowConfig& w) {
    const std::size_t n = c.size();
    if (series.size() != n) throw std::invalid_argument("sliding_extrema: series/contour size mismatch");
    validate_window(c, w);

    double sup = 0.0;
    for (double v : series) sup = std::max(sup, std::abs(v));
    const double tie = w.tie_epsilon * sup;

    const WindowScan scan{c, w.window_ratio * c.perimeter() / 2.0};
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t tmax = scan.max_offset(i);
        int sign = 0;
        bool ok = true;
        for (std::size_t t = 1; t <= tmax && ok; ++t) {
            for (std::size_t j : {(i + n - t) % n, (i + t) % n}) {
                const double d = series[i] - series[j];
                if (std::abs(d) <= tie) {
                    ok = false;
                    break;
                }
                const int s = d > 0.0 ? 1 : -1;
                if (sign == 0)
                    sign = s;
                else if (sign != s) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.push_back(i);
    }
    return out;
}

IPSet detect_Vo(const Contour& c, const WindowConfig& w) {
    return {sliding_extrema(var_descriptor(c), c, w), Method::Vo};
}

IPSet detect_V(const Contour& c, const WindowConfig& w) {
    const ScalarSeries phi = var_descriptor(c);
    const std::vector<std::size_t> vo = sliding_extrema(phi, c, w);

    const auto [mn_it, mx_it] = std::minmax_element(phi.begin(), phi.end());
    const double range = *mx_it - *mn_it;
    IPSet out{{}, Method::V};
    if (range <= 0.0) return out;

    const double threshold = w.sharpness_threshold * w.window_ratio;
    const std::size_t n = c.size();
    const WindowScan scan{c, w.window_ratio * c.perimeter() / 2.0};
    for (std::size_t i : vo) {
        const std::size_t tmax = scan.max_offset(i);
        double max_diff = 0.0;
        for (std::size_t t = 1; t <= tmax; ++t)
            for (std::size_t j : {(i + n - t) % n, (i + t) % n})
                max_diff = std::max(max_diff, std::abs(phi[i] - phi[j]) / range);
        if (max_diff > threshold) out.indices.push_back(i);
    }
    return out;
}

IPSet detect_AI(const Contour& c, const WindowConfig& w, double radius) {
    return {sliding_extrema(area_integral_invariant(c, radius), c, w), Method::AI};
}

IPSet detect_K(const Contour& c, const WindowConfig& w) {
    const std::size_t k = default_heron_offset(c.size(), w.window_ratio);
    return {sliding_extrema(heron_curvature(c, k), c, w), Method::K};
}

IPSet detect_SK(const Contour& c, const WindowConfig& w, const SmoothingSchedule& schedule) {
    return {sliding_extrema(cumulative_curvature(c, schedule), c, w), Method::SK};
}

IPSet detect_SK(const Contour& c, const WindowConfig& w) {
    return detect_SK(c, w, SmoothingSchedule{});
}

}  // namespace varshape
