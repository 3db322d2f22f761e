#include "varshape/noising.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace varshape {

Contour gaussian_distort(const Contour& c, double variance, std::uint64_t seed) {
    if (variance < 0.0) throw std::invalid_argument("gaussian_distort: variance must be non-negative");
    if (variance == 0.0) return c;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(variance));
    const std::vector<Vec2> nrm = normals(c);
    std::vector<Vec2> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double r = gauss(rng);
        out[i] = c.point(i) + nrm[i] * r;
    }
    return Contour(std::move(out));
}

Contour noising_step(const Contour& c, const NoisingConfig& config) {
    const double ratio = config.perturbation_ratio;
    if (ratio < 0.0 || ratio >= 0.5)
        throw std::invalid_argument("noising_step: perturbation_ratio must lie in [0, 0.5)");
    const std::size_t n = c.size();
    const double outward_sign = c.is_ccw() ? 1.0 : -1.0;
    std::vector<Vec2> out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = c.point(i);
        const Vec2& b = c.point((i + 1) % n);
        const Vec2 e = b - a;
        const double d = c.edge_length(i);
        // perpendicular to the edge; (y,-x)/d is the outward side of a CCW edge
        Vec2 perp{e.y / d, -e.x / d};
        double side = outward_sign;
        if (config.side_rule == SideRule::Inward) side = -side;
        if (config.side_rule == SideRule::Alternating && (i % 2) == 1) side = -side;
        out[2 * i] = a;
        out[2 * i + 1] = (a + b) * 0.5 + perp * (side * ratio * d);
    }
    return Contour(std::move(out));
}

std::vector<Contour> incremental_noising(const Contour& c, const NoisingConfig& config) {
    if (config.steps < 1) throw std::invalid_argument("incremental_noising: steps must be >= 1");
    std::vector<Contour> out;
    out.reserve(config.steps);
    const Contour* cur = &c;
    for (int s = 0; s < config.steps; ++s) {
        out.push_back(noising_step(*cur, config));
        cur = &out.back();
    }
    return out;
}

Contour subsample(const Contour& c, int levels) {
    if (levels < 0) throw std::invalid_argument("subsample: levels must be non-negative");
    if (levels == 0) return c;
    const std::size_t stride = std::size_t{1} << levels;
    if (c.size() % stride != 0)
        throw std::invalid_argument("subsample: point count not divisible by 2^levels");
    std::vector<Vec2> out;
    out.reserve(c.size() / stride);
    for (std::size_t i = 0; i < c.size(); i += stride) out.push_back(c.point(i));
    return Contour(std::move(out));
}

}  // namespace varshape
