#include "varshape/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace varshape {

double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

Vec2 normalized(const Vec2& a) {
    double n = norm(a);
    return {a.x / n, a.y / n};
}

Contour::Contour(std::vector<Vec2> points) : points_(std::move(points)) {
    const std::size_t n = points_.size();
    if (n < 3) throw std::invalid_argument("contour needs at least 3 points");

    edge_len_.resize(n);
    arc_pos_.resize(n);
    arc_elem_.resize(n);

    double area2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = points_[i];
        const Vec2& b = points_[(i + 1) % n];
        edge_len_[i] = norm(b - a);
        if (edge_len_[i] <= 0.0)
            throw std::invalid_argument("contour has two identical consecutive points");
        area2 += cross(a, b);
    }
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        arc_pos_[i] = s;
        s += edge_len_[i];
    }
    perimeter_ = s;
    for (std::size_t i = 0; i < n; ++i)
        arc_elem_[i] = 0.5 * (edge_len_[(i + n - 1) % n] + edge_len_[i]);
    signed_area_ = 0.5 * area2;
    ccw_ = signed_area_ > 0.0;
}

Contour Contour::ccw(std::vector<Vec2> points) {
    Contour c(std::move(points));
    if (c.is_ccw()) return c;
    return c.reversed();
}

Contour Contour::reversed() const {
    std::vector<Vec2> rev;
    rev.reserve(points_.size());
    rev.push_back(points_.front());
    for (std::size_t i = points_.size(); i-- > 1;) rev.push_back(points_[i]);
    return Contour(std::move(rev));
}

Contour resample(const Contour& c, std::size_t n) {
    if (n < 3) throw std::invalid_argument("resample: need at least 3 points");
    const std::size_t m = c.size();
    const double lambda = c.perimeter();

    std::vector<Vec2> out;
    out.reserve(n);
    std::size_t seg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double target = static_cast<double>(k) * lambda / static_cast<double>(n);
        while (seg + 1 < m && c.arc_position(seg + 1) <= target) ++seg;
        // target lies on the edge leaving `seg` (last edge wraps to point 0)
        double t = (target - c.arc_position(seg)) / c.edge_length(seg);
        t = std::clamp(t, 0.0, 1.0);
        const Vec2& a = c.point(seg);
        const Vec2& b = c.point((seg + 1) % m);
        out.push_back(a + (b - a) * t);
    }
    return Contour(std::move(out));
}

std::vector<Vec2> normals(const Contour& c) {
    const std::size_t n = c.size();
    std::vector<Vec2> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& prv = c.point((i + n - 1) % n);
        const Vec2& cur = c.point(i);
        const Vec2& nxt = c.point((i + 1) % n);
        Vec2 e_in = normalized(cur - prv);
        Vec2 e_out = normalized(nxt - cur);
        Vec2 tangent = e_in + e_out;
        double tn = norm(tangent);
        if (tn < 1e-12)  // adjacent edges fold back on themselves
            tangent = e_out;
        else
            tangent = tangent / tn;
        // rotate the tangent -90 deg; outward for CCW traversal
        Vec2 nrm{tangent.y, -tangent.x};
        out[i] = c.is_ccw() ? nrm : Vec2{-nrm.x, -nrm.y};
    }
    return out;
}

double boundary_distance(const Contour& c, std::size_t i, std::size_t j) {
    if (i >= c.size() || j >= c.size())
        throw std::invalid_argument("boundary_distance: index out of range");
    double d = std::abs(c.arc_position(i) - c.arc_position(j));
    return std::min(d, c.perimeter() - d);
}

double circle_intersection_offset(double d, double r) {
    if (d <= 0.0) throw std::invalid_argument("circle_intersection_offset: edge length must be positive");
    if (r < d / 2.0) throw std::domain_error("circle_intersection_offset: circles do not intersect (r < d/2)");
    return std::sqrt(std::max(0.0, r * r - d * d / 4.0));
}

}  // namespace varshape
