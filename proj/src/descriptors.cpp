#include "varshape/descriptors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace varshape {

namespace detail {

inline double phi_at(const Contour& c, std::size_t i) {
    const std::size_t n = c.size();
    const Vec2 pi = c.point(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        acc += norm(c.point(j) - pi) * c.arc_element(j);
    return acc;
}

struct PointQuantities {
    double phi, phi_dot, A, B;
};

inline PointQuantities quantities_at(const Contour& c, const std::vector<Vec2>& nrm, std::size_t i) {
    const std::size_t n = c.size();
    const Vec2 pi = c.point(i);
    const Vec2 ni = nrm[i];
    PointQuantities q{0.0, 0.0, 0.0, 2.0};  // B starts at the self term
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const Vec2 v = c.point(j) - pi;
        const double d = norm(v);
        const double ds = c.arc_element(j);
        q.phi += d * ds;
        const double cosw = dot(ni, v) / d;
        const double sinw = cross(ni, v) / d;
        q.phi_dot -= sinw * ds;
        q.A += cosw * ds;
        q.B += cosw * cosw / d * ds;
    }
    return q;
}

inline double disk_edge_contribution(Vec2 a, Vec2 b, double r) {
    const Vec2 d = b - a;
    const double qa = dot(d, d);
    if (qa == 0.0) return 0.0;
    const double qb = 2.0 * dot(a, d);
    const double qc = dot(a, a) - r * r;

    double ts[4] = {0.0, 1.0, 1.0, 1.0};
    int nt = 2;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc > 0.0) {
        const double sq = std::sqrt(disc);
        const double t1 = (-qb - sq) / (2.0 * qa);
        const double t2 = (-qb + sq) / (2.0 * qa);
        if (t1 > 0.0 && t1 < 1.0) ts[nt++] = t1;
        if (t2 > 0.0 && t2 < 1.0) ts[nt++] = t2;
    }
    // at most 4 breakpoints; keep sorted
    for (int x = 1; x < nt; ++x)
        for (int y = x; y > 0 && ts[y] < ts[y - 1]; --y) std::swap(ts[y], ts[y - 1]);

    double acc = 0.0;
    for (int x = 0; x + 1 < nt; ++x) {
        const double t0 = ts[x], t1 = ts[x + 1];
        if (t1 <= t0) continue;
        const Vec2 p0 = a + d * t0;
        const Vec2 p1 = a + d * t1;
        const Vec2 pm = a + d * (0.5 * (t0 + t1));
        if (dot(pm, pm) <= r * r) {
            acc += 0.5 * cross(p0, p1);  // chord segment inside the disk
        } else {
            acc += 0.5 * r * r * std::atan2(cross(p0, p1), dot(p0, p1));  // arc sector
        }
    }
    return acc;
}

inline double ai_at(const Contour& c, std::size_t i, double radius) {
    return std::abs(disk_polygon_overlap(c, c.point(i), radius));
}

}  // namespace detail

double disk_polygon_overlap(const Contour& c, const Vec2& center, double radius) {
    const std::size_t n = c.size();
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        acc += detail::disk_edge_contribution(c.point(j) - center, c.point((j + 1) % n) - center, radius);
    return acc;
}

ScalarSeries var_descriptor(const Contour& c) {
    const std::size_t n = c.size();
    ScalarSeries phi(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        phi[i] = detail::phi_at(c, static_cast<std::size_t>(i));
    return phi;
}

GlobalQuantities global_quantities(const Contour& c) {
    const std::size_t n = c.size();
    const std::vector<Vec2> nrm = normals(c);
    GlobalQuantities g{ScalarSeries(n), ScalarSeries(n), ScalarSeries(n), ScalarSeries(n)};
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const auto q = detail::quantities_at(c, nrm, static_cast<std::size_t>(i));
        g.phi[i] = q.phi;
        g.phi_dot[i] = q.phi_dot;
        g.A[i] = q.A;
        g.B[i] = q.B;
    }
    return g;
}

ScalarSeries var_first_derivative(const Contour& c) { return global_quantities(c).phi_dot; }
ScalarSeries global_A(const Contour& c) { return global_quantities(c).A; }
ScalarSeries global_B(const Contour& c) { return global_quantities(c).B; }

ScalarSeries second_arc_difference(const ScalarSeries& s, const Contour& c) {
    const std::size_t n = c.size();
    if (s.size() != n) throw std::invalid_argument("second_arc_difference: series/contour size mismatch");
    ScalarSeries out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double hp = c.edge_length((i + n - 1) % n);
        const double hn = c.edge_length(i);
        const double fp = s[(i + n - 1) % n];
        const double fn = s[(i + 1) % n];
        out[i] = 2.0 * (hp * fn - (hp + hn) * s[i] + hn * fp) / (hp * hn * (hp + hn));
    }
    return out;
}

std::vector<double> kappa_global(const Contour& c, const std::vector<std::size_t>& extremum_indices) {
    const GlobalQuantities g = global_quantities(c);
    const ScalarSeries phi_ddot = second_arc_difference(g.phi, c);
    const double a_floor = 1e-9 * c.perimeter();
    std::vector<double> out;
    out.reserve(extremum_indices.size());
    for (std::size_t idx : extremum_indices) {
        if (idx >= c.size()) throw std::invalid_argument("kappa_global: index out of range");
        if (std::abs(g.A[idx]) < a_floor)
            throw std::domain_error("kappa_global: degenerate descriptor, |A| below tolerance");
        out.push_back((phi_ddot[idx] - g.B[idx]) / g.A[idx]);
    }
    return out;
}

ScalarSeries heron_curvature(const Contour& c, std::size_t k) {
    const std::size_t n = c.size();
    if (k < 1 || 2 * k >= n) throw std::invalid_argument("heron_curvature: offset out of range");
    ScalarSeries out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = c.point((i + n - k) % n);
        const Vec2& b = c.point(i);
        const Vec2& d = c.point((i + k) % n);
        out[i] = 0.5 * cross(b - a, d - a);
    }
    return out;
}

std::size_t default_heron_offset(std::size_t n, double window_ratio) {
    const auto k = static_cast<std::size_t>(std::lround(window_ratio * static_cast<double>(n) / 2.0));
    return std::max<std::size_t>(1, k);
}

ScalarSeries area_integral_invariant(const Contour& c, double radius) {
    if (radius <= 0.0) throw std::invalid_argument("area_integral_invariant: radius must be positive");
    if (std::abs(c.signed_area()) < 1e-12)
        throw std::domain_error("area_integral_invariant: degenerate zero-area contour");
    const std::size_t n = c.size();
    ScalarSeries out(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        out[i] = detail::ai_at(c, static_cast<std::size_t>(i), radius);
    return out;
}

namespace reference {

ScalarSeries var_descriptor(const Contour& c) {
    const std::size_t n = c.size();
    ScalarSeries phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = detail::phi_at(c, i);
    return phi;
}

GlobalQuantities global_quantities(const Contour& c) {
    const std::size_t n = c.size();
    const std::vector<Vec2> nrm = normals(c);
    GlobalQuantities g{ScalarSeries(n), ScalarSeries(n), ScalarSeries(n), ScalarSeries(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const auto q = detail::quantities_at(c, nrm, i);
        g.phi[i] = q.phi;
        g.phi_dot[i] = q.phi_dot;
        g.A[i] = q.A;
        g.B[i] = q.B;
    }
    return g;
}

ScalarSeries area_integral_invariant(const Contour& c, double radius) {
    if (radius <= 0.0) throw std::invalid_argument("area_integral_invariant: radius must be positive");
    if (std::abs(c.signed_area()) < 1e-12)
        throw std::domain_error("area_integral_invariant: degenerate zero-area contour");
    const std::size_t n = c.size();
    ScalarSeries out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = detail::ai_at(c, i, radius);
    return out;
}

}  // namespace reference

}  // namespace varshape
