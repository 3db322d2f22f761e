#include "varshape/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace varshape {

namespace {

struct Bounds {
    double min_x, min_y, max_x, max_y;
};

Bounds bounds_of(const std::vector<const Contour*>& curves) {
    Bounds b{1e300, 1e300, -1e300, -1e300};
    for (const Contour* c : curves)
        for (const Vec2& p : c->points()) {
            b.min_x = std::min(b.min_x, p.x);
            b.min_y = std::min(b.min_y, p.y);
            b.max_x = std::max(b.max_x, p.x);
            b.max_y = std::max(b.max_y, p.y);
        }
    return b;
}

CoverageGrid make_grid(const Bounds& b, double cell_size) {
    if (cell_size <= 0.0) throw std::invalid_argument("coverage: cell_size must be positive");
    CoverageGrid g;
    g.cell_size = cell_size;
    g.origin = {b.min_x - cell_size, b.min_y - cell_size};
    g.nx = static_cast<std::size_t>(std::floor((b.max_x - g.origin.x) / cell_size)) + 2;
    g.ny = static_cast<std::size_t>(std::floor((b.max_y - g.origin.y) / cell_size)) + 2;
    g.counts.assign(g.nx * g.ny, 0);
    return g;
}

std::size_t samples_for(const Contour& c, double cell_size) {
    return std::max<std::size_t>(4, static_cast<std::size_t>(
                                        std::ceil(c.perimeter() / (cell_size / 2.0))));
}

}  // namespace

bool CoverageGrid::locate(const Vec2& p, std::size_t& ix, std::size_t& iy) const {
    const double fx = std::floor((p.x - origin.x) / cell_size);
    const double fy = std::floor((p.y - origin.y) / cell_size);
    if (fx < 0 || fy < 0 || fx >= static_cast<double>(nx) || fy >= static_cast<double>(ny))
        return false;
    ix = static_cast<std::size_t>(fx);
    iy = static_cast<std::size_t>(fy);
    return true;
}

std::int64_t CoverageGrid::local_sum(const Vec2& p) const {
    std::size_t ix, iy;
    if (!locate(p, ix, iy)) return 0;
    std::int64_t acc = 0;
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
            const long long x = static_cast<long long>(ix) + dx;
            const long long y = static_cast<long long>(iy) + dy;
            if (x < 0 || y < 0 || x >= static_cast<long long>(nx) || y >= static_cast<long long>(ny))
                continue;
            acc += at(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
        }
    return acc;
}

CoverageGrid noising_coverage(const std::vector<Contour>& levels, double cell_size) {
    if (levels.empty()) throw std::invalid_argument("noising_coverage: need at least one level");
    std::vector<const Contour*> ptrs;
    for (const Contour& c : levels) ptrs.push_back(&c);
    CoverageGrid g = make_grid(bounds_of(ptrs), cell_size);
    for (const Contour& c : levels) {
        const Contour dense = resample(c, samples_for(c, cell_size));
        for (const Vec2& p : dense.points()) {
            std::size_t ix, iy;
            if (g.locate(p, ix, iy)) ++g.counts[iy * g.nx + ix];
        }
    }
    return g;
}

CoverageGrid smoothing_coverage(const Contour& c, const SmoothingSchedule& schedule,
                                double cell_size) {
    const int steps = smoothing_steps(schedule, c.size());
    std::vector<Contour> family;
    family.reserve(steps + 1);
    family.push_back(c);
    for (int t = 0; t < steps; ++t) family.push_back(smooth_once(family.back(), schedule.step_factor));

    std::vector<const Contour*> ptrs;
    for (const Contour& f : family) ptrs.push_back(&f);
    CoverageGrid g = make_grid(bounds_of(ptrs), cell_size);

    std::unordered_set<std::size_t> seen;
    for (const Contour& f : family) {
        seen.clear();
        const Contour dense = resample(f, samples_for(f, cell_size));
        for (const Vec2& p : dense.points()) {
            std::size_t ix, iy;
            if (g.locate(p, ix, iy)) seen.insert(iy * g.nx + ix);
        }
        for (std::size_t cell : seen) ++g.counts[cell];
    }
    return g;
}

namespace {

// average ranks, ties shared
std::vector<double> ranks_of(const std::vector<std::int64_t>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> rank(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[order[k]] = shared;
        i = j + 1;
    }
    return rank;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    double ma = 0, mb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    if (saa <= 0.0 || sbb <= 0.0) return 0.0;  // zero variance guard
    return sab / std::sqrt(saa * sbb);
}

}  // namespace

CorrelationReport coverage_correlation(const CoverageGrid& noising, const CoverageGrid& smoothing,
                                       const GroundTruth& gt, const Contour& c) {
    CorrelationReport rep;
    if (gt.indices.indices.empty()) return rep;

    std::vector<std::int64_t> ns, ss;
    for (std::size_t idx : gt.indices.indices) {
        const Vec2& p = c.point(idx);
        ns.push_back(noising.local_sum(p));
        ss.push_back(smoothing.local_sum(p));
    }
    rep.rank_correlation = pearson(ranks_of(ns), ranks_of(ss));

    std::vector<std::int64_t> all;
    all.reserve(c.size());
    for (const Vec2& p : c.points()) all.push_back(noising.local_sum(p));
    std::vector<std::int64_t> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const double median = (n % 2 == 1)
                              ? static_cast<double>(sorted[n / 2])
                              : 0.5 * static_cast<double>(sorted[n / 2 - 1] + sorted[n / 2]);

    std::size_t above = 0;
    for (std::size_t i = 0; i < gt.indices.indices.size(); ++i)
        if (static_cast<double>(ns[i]) > median) ++above;
    rep.gt_above_median_fraction =
        static_cast<double>(above) / static_cast<double>(gt.indices.indices.size());
    return rep;
}

double box_counting_dimension(const std::vector<Contour>& levels, double base_cell_size) {
    if (levels.empty()) throw std::invalid_argument("box_counting_dimension: need at least one level");
    std::vector<double> xs, ys;
    for (int r = 0; r < 4; ++r) {
        const double cell = base_cell_size / static_cast<double>(1 << r);
        const CoverageGrid g = noising_coverage(levels, cell);
        std::int64_t occupied = 0;
        for (std::int64_t v : g.counts)
            if (v > 0) ++occupied;
        xs.push_back(std::log(1.0 / cell));
        ys.push_back(std::log(static_cast<double>(occupied)));
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace varshape
