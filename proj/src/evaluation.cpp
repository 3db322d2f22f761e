#include "varshape/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace varshape {

DensityProfile density_profile(const IPSet& ips, const Contour& c) {
    if (ips.indices.empty())
        throw std::domain_error("density_profile: degenerate method, empty IP set");
    const std::size_t n = c.size();
    for (std::size_t l : ips.indices)
        if (l >= n) throw std::invalid_argument("density_profile: IP index out of range");

    DensityProfile out;
    out.mass.resize(n);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t l : ips.indices) nearest = std::min(nearest, boundary_distance(c, j, l));
        const double ds = c.arc_element(j);
        out.mass[j] = ds / std::max(nearest, ds);
        total += out.mass[j];
    }
    for (double& m : out.mass) m /= total;
    return out;
}

DensityProfile uniform_density(const Contour& c) {
    DensityProfile out;
    out.mass.assign(c.size(), 1.0 / static_cast<double>(c.size()));
    return out;
}

PRCurve pr_curve(const DensityProfile& method_density, const DensityProfile& gt_density,
                 const IPSet& gt_indices) {
    if (method_density.mass.size() != gt_density.mass.size())
        throw std::invalid_argument("pr_curve: densities live on different contours");
    std::vector<double> diffs;
    diffs.reserve(gt_indices.indices.size());
    for (std::size_t g : gt_indices.indices) {
        if (g >= method_density.mass.size())
            throw std::invalid_argument("pr_curve: GT index out of range");
        diffs.push_back(std::abs(method_density.mass[g] - gt_density.mass[g]));
    }
    std::sort(diffs.begin(), diffs.end());
    PRCurve out;
    out.values.reserve(diffs.size());
    double acc = 0.0;
    for (double d : diffs) {
        acc += d;
        out.values.push_back(1.0 - acc);
    }
    return out;
}

PRCurve average_pr(const std::vector<PRCurve>& curves) {
    if (curves.empty()) throw std::invalid_argument("average_pr: no curves");
    std::size_t len = curves.front().values.size();
    for (const PRCurve& c : curves) len = std::min(len, c.values.size());
    PRCurve out;
    out.values.assign(len, 0.0);
    for (const PRCurve& c : curves)
        for (std::size_t m = 0; m < len; ++m) out.values[m] += c.values[m];
    for (double& v : out.values) v /= static_cast<double>(curves.size());
    return out;
}

}  // namespace varshape
