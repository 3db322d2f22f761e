#pragma once

#include <cstdint>
#include <vector>

#include "varshape/geometry.hpp"

namespace varshape {

enum class SideRule { Outward, Inward, Alternating };

struct NoisingConfig {
    double perturbation_ratio = 0.01;  // offset as a fraction of the edge length, in [0, 0.5)
    int steps = 1;
    SideRule side_rule = SideRule::Outward;
};

/// Moves each point along its outward unit normal by an independent draw
/// from N(0, variance). Deterministic for a fixed seed; variance 0 returns
/// the input unchanged.
Contour gaussian_distort(const Contour& c, double variance, std::uint64_t seed);

/// Doubles the point count: originals stay bit-exact at even slots, each
/// new point sits at an edge midpoint displaced perpendicular to the edge
/// by perturbation_ratio * edge length (side per side_rule; outward means
/// away from the interior). Equivalent to intersecting equal-radius
/// circles centered on the edge endpoints with the radius fixed by
/// circle_intersection_offset(d, r) = ratio * d.
Contour noising_step(const Contour& c, const NoisingConfig& config);

/// Recursive noising: returns [step1, ..., stepk] with point counts
/// n*2, n*4, ..., n*2^k.
std::vector<Contour> incremental_noising(const Contour& c, const NoisingConfig& config);

/// Keeps every 2^levels-th point starting at index 0, inverting
/// incremental_noising bit-exactly. The point count must be divisible by
/// 2^levels.
Contour subsample(const Contour& c, int levels);

}  // namespace varshape
