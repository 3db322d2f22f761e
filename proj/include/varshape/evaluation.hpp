#pragma once

#include <vector>

#include "varshape/detection.hpp"
#include "varshape/geometry.hpp"

namespace varshape {

/// Normalized probability mass per contour point; sums to 1, every entry
/// positive.
struct DensityProfile {
    std::vector<double> mass;
};

/// Precision per recall position m = 1..|GT|:
/// values[m-1] = 1 - sum of the m smallest |p - p_G| at the GT points.
/// Non-increasing; may go negative once the cumulative diversion passes 1.
struct PRCurve {
    std::vector<double> values;
};

/// Reciprocal-nearest-IP-distance mass: raw(j) = ds_j / max(d_j, ds_j)
/// with d_j the boundary distance from j to its nearest IP (the clamp at
/// one arc element keeps the reciprocal finite), then normalized to total
/// mass 1. Throws std::domain_error on an empty IP set.
DensityProfile density_profile(const IPSet& ips, const Contour& c);

/// Maximum-entropy fallback for methods that predicted nothing.
DensityProfile uniform_density(const Contour& c);

/// Absolute density differences at the GT points, sorted ascending,
/// accumulated and subtracted from 1.
PRCurve pr_curve(const DensityProfile& method_density, const DensityProfile& gt_density,
                 const IPSet& gt_indices);

/// Pointwise mean over curves, aligned by truncation to the shortest.
PRCurve average_pr(const std::vector<PRCurve>& curves);

}  // namespace varshape
