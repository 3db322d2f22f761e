#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "varshape/detection.hpp"
#include "varshape/evaluation.hpp"
#include "varshape/geometry.hpp"

namespace varshape {

/// One dataset entry: <root>/<class>/<shape>.(csv|pgm).
struct ShapeRecord {
    std::string class_name;
    std::string shape_name;
    Contour contour;
    std::filesystem::path provenance;
};

/// Lines of "x,y" (optional "x,y" header), orientation normalized to CCW.
/// Parse failures carry the line number.
Contour load_contour_csv(const std::filesystem::path& path);

/// Shortest round-trip decimal encoding; load_contour_csv restores the
/// points bit-exactly.
void save_contour_csv(const std::filesystem::path& path, const Contour& c);

/// Binary 8-bit PGM (P5), thresholded at 50% gray. Requires exactly one
/// 8-connected foreground component; returns its outer boundary via
/// Moore-neighbor tracing (Jacob's stopping criterion), CCW.
Contour trace_binary_image(const std::filesystem::path& path);

/// Scans <root>/<class>/<shape>.(csv|pgm), sorted by class then shape.
std::vector<ShapeRecord> load_dataset(const std::filesystem::path& root);

/// Evaluation output for one shape: PR curves per method and point count,
/// plus descriptor traces for the per-shape plot.
struct ShapeResult {
    std::string class_name;
    std::string shape_name;

    struct Entry {
        Method method;
        std::size_t points;
        PRCurve pr;
    };
    std::vector<Entry> entries;

    std::size_t series_points = 0;  // contour size the traces below live on
    ScalarSeries phi_series;
    ScalarSeries ai_series;
};

/// Writes per-shape PR tables (<class>/<shape>/<method>_<points>.csv,
/// columns shape,method,points,recall_pos,precision), per-class averaged
/// tables, and SVG plots (PR curves per class, descriptor series per
/// shape). Returns the list of files written.
std::vector<std::filesystem::path> write_results(const std::vector<ShapeResult>& records,
                                                 const std::filesystem::path& out_dir);

}  // namespace varshape
