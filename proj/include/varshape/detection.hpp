#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "varshape/geometry.hpp"

namespace varshape {

enum class Method { Vo, V, AI, K, SK, GT };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// Ordered indices of detected interesting points on a specific contour.
struct IPSet {
    std::vector<std::size_t> indices;  // strictly increasing
    Method tag = Method::GT;
};

struct WindowConfig {
    double window_ratio = 0.017;       // window size as a fraction of the perimeter
    double sharpness_threshold = 0.15; // V filter, relative to the window ratio
    double tie_epsilon = 1e-9;         // tie tolerance relative to sup|series|
};

/// Level-set extremum scan. Index i qualifies when, for every symmetric
/// pair (i-t, i+t) whose arc distances from i both fit in the half-window
/// window_ratio*perimeter/2, the differences series(i)-series(i±t) all
/// share one strict sign. The immediate-neighbor pair always participates,
/// so the scan stays meaningful when the half-window falls under the point
/// spacing. Differences within tie_epsilon*sup|series| count as ties and
/// reject the candidate.
std::vector<std::size_t> sliding_extrema(const ScalarSeries& series, const Contour& c,
                                         const WindowConfig& w = {});

struct SmoothingSchedule;  // smoothing.hpp

/// phi extrema (zero crossings of phi_dot without computing derivatives).
IPSet detect_Vo(const Contour& c, const WindowConfig& w = {});

/// detect_Vo filtered by a sharpness test: at least one window pair of the
/// range-normalized phi must differ from the center by more than
/// sharpness_threshold * window_ratio.
IPSet detect_V(const Contour& c, const WindowConfig& w = {});

IPSet detect_AI(const Contour& c, const WindowConfig& w = {}, double radius = 15.0);
IPSet detect_K(const Contour& c, const WindowConfig& w = {});
IPSet detect_SK(const Contour& c, const WindowConfig& w, const SmoothingSchedule& schedule);
IPSet detect_SK(const Contour& c, const WindowConfig& w = {});

}  // namespace varshape
