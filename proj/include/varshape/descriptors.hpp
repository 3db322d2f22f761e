#pragma once

#include <cstddef>
#include <vector>

#include "varshape/geometry.hpp"

namespace varshape {

/// The total-distance descriptor phi and the global quantities tied to its
/// derivatives. All four series share the contour's point count.
///
/// With the outward normal n_i at point i and omega_ij the CCW angle from
/// n_i to p_j - p_i:
///   phi(i)     = sum_j ||p_i - p_j|| ds_j
///   phi_dot(i) = -sum_{j!=i} sin(omega_ij) ds_j
///   A(i)       =  sum_{j!=i} cos(omega_ij) ds_j
///   B(i)       =  2 + sum_{j!=i} cos^2(omega_ij)/||p_i - p_j|| ds_j
///
/// The constant 2 in B is the self term: the kink of ||p - p_j|| at p = p_j
/// contributes exactly 2 to the second arc-length difference of phi (for
/// ds_i = (h_prev+h_next)/2 this holds at any spacing), and the curvature
/// identity phi_ddot = kappa*A + B needs it.
struct GlobalQuantities {
    ScalarSeries phi;
    ScalarSeries phi_dot;
    ScalarSeries A;
    ScalarSeries B;
};

/// phi alone (no normals needed). O(n^2), parallel over the outer index.
ScalarSeries var_descriptor(const Contour& c);

/// All four series in one pass. O(n^2), parallel over the outer index.
GlobalQuantities global_quantities(const Contour& c);

ScalarSeries var_first_derivative(const Contour& c);
ScalarSeries global_A(const Contour& c);
ScalarSeries global_B(const Contour& c);

/// Central second difference of a per-point series over arc length
/// (three-point stencil aware of non-uniform spacing; chord lengths stand
/// in for the arc steps).
ScalarSeries second_arc_difference(const ScalarSeries& s, const Contour& c);

/// Curvature at the given phi-extremum indices via
/// kappa = (phi_ddot - B) / A. Throws std::domain_error when |A| falls
/// below 1e-9 * perimeter (the identity only guarantees A != 0 at true
/// extrema). Returned values align with `extremum_indices`.
std::vector<double> kappa_global(const Contour& c, const std::vector<std::size_t>& extremum_indices);

/// Signed area of the triangle (p_{i-k}, p_i, p_{i+k}) per point, indices
/// wrapping. Positive on convex stretches of a CCW contour; magnitude is
/// the Heron area. Requires 1 <= k < n/2.
ScalarSeries heron_curvature(const Contour& c, std::size_t k);

/// Default triangle offset for a contour of n points: the locality of the
/// detection window, max(1, round(window_ratio * n / 2)).
std::size_t default_heron_offset(std::size_t n, double window_ratio = 0.017);

/// Area of (contour interior intersected with the disk of `radius` centered
/// at p_i), one value per point. Exact per-edge computation: edges clipped
/// against the circle contribute triangle terms, the parts outside
/// contribute circular-sector terms (Green's theorem). Orientation
/// invariant. Throws std::invalid_argument for radius <= 0 and
/// std::domain_error for a degenerate (zero-area) contour.
ScalarSeries area_integral_invariant(const Contour& c, double radius = 15.0);

/// Exact area of (polygon interior ∩ disk); helper behind
/// area_integral_invariant, exposed for tests and coverage statistics.
double disk_polygon_overlap(const Contour& c, const Vec2& center, double radius);

namespace reference {
/// Serial counterparts kept for testing; bit-identical to the parallel
/// kernels because each output slot is a fixed-order inner sum either way.
ScalarSeries var_descriptor(const Contour& c);
GlobalQuantities global_quantities(const Contour& c);
ScalarSeries area_integral_invariant(const Contour& c, double radius = 15.0);
}  // namespace reference

}  // namespace varshape
