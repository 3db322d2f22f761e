#pragma once

// Synthetic contours with known geometry, shared by the unit and
// acceptance suites.

#include <cmath>
#include <random>
#include <vector>

#include "varshape/geometry.hpp"

namespace varshape::testing {

inline constexpr double kPi = 3.14159265358979323846;

/// Dense parametric sampling followed by equal arc-length resampling.
/// param_out (optional) receives the curve parameter at each resampled
/// point, for analytic oracles.
template <typename F>
Contour parametric_contour(F&& pos, std::size_t n, std::vector<double>* param_out = nullptr,
                           std::size_t dense = 65536) {
    std::vector<Vec2> pts(dense);
    std::vector<double> params(dense);
    for (std::size_t i = 0; i < dense; ++i) {
        params[i] = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(dense);
        pts[i] = pos(params[i]);
    }
    std::vector<double> cum(dense + 1, 0.0);
    for (std::size_t i = 0; i < dense; ++i)
        cum[i + 1] = cum[i] + norm(pts[(i + 1) % dense] - pts[i]);
    const double lambda = cum[dense];

    std::vector<Vec2> out(n);
    if (param_out) param_out->assign(n, 0.0);
    std::size_t seg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double target = static_cast<double>(k) * lambda / static_cast<double>(n);
        while (seg + 1 < dense && cum[seg + 1] <= target) ++seg;
        const double t = (target - cum[seg]) / (cum[seg + 1] - cum[seg]);
        const Vec2& a = pts[seg];
        const Vec2& b = pts[(seg + 1) % dense];
        out[k] = a + (b - a) * t;
        if (param_out)
            (*param_out)[k] = params[seg] + t * (2.0 * kPi / static_cast<double>(dense));
    }
    return Contour(std::move(out));
}

/// Regular n-gon on the circle (vertices exactly at equal angles).
inline Contour circle(double radius, std::size_t n, Vec2 center = {0, 0}) {
    std::vector<Vec2> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
        v[k] = {center.x + radius * std::cos(t), center.y + radius * std::sin(t)};
    }
    return Contour(std::move(v));
}

inline Contour ellipse(double a, double b, std::size_t n, std::vector<double>* param_out = nullptr) {
    return parametric_contour([&](double t) { return Vec2{a * std::cos(t), b * std::sin(t)}; }, n,
                              param_out);
}

/// Curvature of the axis-aligned ellipse at parameter t.
inline double ellipse_curvature(double a, double b, double t) {
    const double s = std::sin(t), c = std::cos(t);
    return a * b / std::pow(a * a * s * s + b * b * c * c, 1.5);
}

inline Contour square(double side, std::size_t n) {
    std::vector<Vec2> v{{0, 0}, {side, 0}, {side, side}, {0, side}};
    return resample(Contour(std::move(v)), n);
}

inline Contour star(int tips, double r_outer, double r_inner, std::size_t n, double phase = 0.0) {
    std::vector<Vec2> v;
    for (int i = 0; i < 2 * tips; ++i) {
        const double ang = phase + static_cast<double>(i) * kPi / tips;
        const double r = (i % 2 == 0) ? r_outer : r_inner;
        v.push_back({r * std::cos(ang), r * std::sin(ang)});
    }
    return resample(Contour(std::move(v)), n);
}

/// Smooth lumpy contour: radius modulated by a few random cosine modes.
inline Contour blob(std::size_t n, std::uint64_t seed, double base_radius = 100.0, int modes = 4,
                    double amplitude = 0.25) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * kPi);
    std::vector<double> phases(modes);
    for (double& p : phases) p = uni(rng);
    return parametric_contour(
        [&](double t) {
            double r = base_radius;
            for (int m = 0; m < modes; ++m)
                r += base_radius * amplitude / static_cast<double>(m + 2) *
                     std::cos(static_cast<double>(m + 2) * t + phases[m]);
            return Vec2{r * std::cos(t), r * std::sin(t)};
        },
        n);
}

/// Star polygon with randomized tip radii; always simple for these ranges.
inline Contour random_star(std::uint64_t seed, std::size_t n = 100) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> tips_d(4, 8);
    std::uniform_real_distribution<double> outer_d(80.0, 120.0);
    std::uniform_real_distribution<double> inner_d(35.0, 60.0);
    const int tips = tips_d(rng);
    std::vector<Vec2> v;
    for (int i = 0; i < 2 * tips; ++i) {
        const double ang = static_cast<double>(i) * kPi / tips;
        const double r = (i % 2 == 0) ? outer_d(rng) : inner_d(rng);
        v.push_back({r * std::cos(ang), r * std::sin(ang)});
    }
    return resample(Contour(std::move(v)), n);
}

inline double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
    return norm(p - (a + ab * t));
}

inline double point_polyline_distance(const Vec2& p, const Contour& c) {
    double best = 1e300;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_distance(p, c.point(i), c.point((i + 1) % n)));
    return best;
}

/// Symmetric Hausdorff distance between two closed polylines (vertex sets
/// against segments, both directions).
inline double hausdorff_distance(const Contour& a, const Contour& b) {
    double worst = 0.0;
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (long long i = 0; i < static_cast<long long>(a.size()); ++i)
        worst = std::max(worst, point_polyline_distance(a.point(i), b));
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (long long i = 0; i < static_cast<long long>(b.size()); ++i)
        worst = std::max(worst, point_polyline_distance(b.point(i), a));
    return worst;
}

inline double contour_diameter(const Contour& c) {
    double best = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            best = std::max(best, norm(c.point(i) - c.point(j)));
    return best;
}

}  // namespace varshape::testing
