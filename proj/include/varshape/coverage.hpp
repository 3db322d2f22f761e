#pragma once

#include <cstdint>
#include <vector>

#include "varshape/geometry.hpp"
#include "varshape/smoothing.hpp"

namespace varshape {

/// Occupancy counts over a square-cell grid covering the curves it was
/// built from. The origin is the exact bounding-box corner (minus a
/// one-cell margin), so translating the input translates the grid and
/// leaves every count unchanged.
struct CoverageGrid {
    double cell_size = 1.0;
    Vec2 origin;
    std::size_t nx = 0, ny = 0;
    std::vector<std::int64_t> counts;  // row-major, ny rows of nx

    std::int64_t at(std::size_t ix, std::size_t iy) const { return counts[iy * nx + ix]; }
    /// Cell coordinates of a world point; false when outside the grid.
    bool locate(const Vec2& p, std::size_t& ix, std::size_t& iy) const;
    /// Sum of the 3x3 cell neighborhood around the cell holding p (cells
    /// off the grid contribute zero).
    std::int64_t local_sum(const Vec2& p) const;
};

/// Pools sample points from every noising level (each polyline resampled
/// at cell_size/2 spacing) and counts them per cell.
CoverageGrid noising_coverage(const std::vector<Contour>& levels, double cell_size);

/// Counts, per cell, how many smoothing levels' polylines pass through it
/// (each level at most once per cell). Levels 0..num_steps of the
/// schedule.
CoverageGrid smoothing_coverage(const Contour& c, const SmoothingSchedule& schedule,
                                double cell_size);

struct CorrelationReport {
    double rank_correlation = 0.0;        // Spearman over per-GT-point 3x3 sums
    double gt_above_median_fraction = 0.0;  // GT points whose local noising
                                            // coverage exceeds the contour-wide median
};

/// Compares where the two grids concentrate around the ground-truth
/// vertices of the base contour.
CorrelationReport coverage_correlation(const CoverageGrid& noising, const CoverageGrid& smoothing,
                                       const GroundTruth& gt, const Contour& c);

/// Box-counting statistic: least-squares slope of log(occupied cells)
/// vs log(1/cell_size) over four dyadic grid resolutions starting at
/// base_cell_size. Descriptive only.
double box_counting_dimension(const std::vector<Contour>& levels, double base_cell_size);

}  // namespace varshape
