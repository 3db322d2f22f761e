#pragma once

#include <cstddef>
#include <vector>

namespace varshape {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double norm(const Vec2& a);
Vec2 normalized(const Vec2& a);

/// One real value per contour point.
using ScalarSeries = std::vector<double>;

/// Closed planar polyline. Point order is kept as given; the orientation
/// flag records the sign of the polygon's signed area. Arc-length data is
/// computed once at construction and the object is immutable afterwards,
/// so values may be shared freely across threads.
class Contour {
public:
    /// Validates and wraps a point sequence (at least 3 points, no two
    /// consecutive points identical, closing edge included in the checks).
    explicit Contour(std::vector<Vec2> points);

    /// Same as the constructor but reverses clockwise input so the stored
    /// contour is counter-clockwise. The first point stays first.
    static Contour ccw(std::vector<Vec2> points);

    std::size_t size() const { return points_.size(); }
    const Vec2& point(std::size_t i) const { return points_[i]; }
    const std::vector<Vec2>& points() const { return points_; }

    bool is_ccw() const { return ccw_; }
    double signed_area() const { return signed_area_; }
    /// Total perimeter, closing edge included.
    double perimeter() const { return perimeter_; }

    /// Length of the edge leaving point i (to point i+1, wrapping).
    double edge_length(std::size_t i) const { return edge_len_[i]; }
    /// Arc-length position of point i from point 0 along the polyline.
    double arc_position(std::size_t i) const { return arc_pos_[i]; }
    /// Arc element at point i: mean of the two adjacent half-edges.
    double arc_element(std::size_t i) const { return arc_elem_[i]; }

    /// Same points in reverse traversal order, first point kept first.
    Contour reversed() const;

private:
    std::vector<Vec2> points_;
    std::vector<double> edge_len_;
    std::vector<double> arc_pos_;
    std::vector<double> arc_elem_;
    double perimeter_ = 0.0;
    double signed_area_ = 0.0;
    bool ccw_ = true;
};

/// Equal arc-length resampling to exactly n points, starting at the
/// contour's first point. Throws std::invalid_argument for n < 3.
Contour resample(const Contour& c, std::size_t n);

/// Outward unit normal per point, perpendicular to the angle-bisecting
/// tangent of the two adjacent edges. Outward side is chosen from the
/// orientation flag.
std::vector<Vec2> normals(const Contour& c);

/// Shorter of the two along-boundary arc lengths between points i and j.
double boundary_distance(const Contour& c, std::size_t i, std::size_t j);

/// Perpendicular distance from an edge midpoint to either intersection of
/// the two equal-radius circles centered on the edge endpoints:
/// sqrt(r^2 - d^2/4). Throws std::invalid_argument for d <= 0 and
/// std::domain_error when r < d/2 (the circles do not intersect).
double circle_intersection_offset(double d, double r);

}  // namespace varshape
