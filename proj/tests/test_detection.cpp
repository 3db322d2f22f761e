#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "support/synthetic.hpp"
#include "varshape/detection.hpp"
#include "varshape/noising.hpp"

using namespace varshape;
using namespace varshape::testing;

TEST_CASE("sliding extrema on analytic series") {
    const Contour c100 = circle(100.0, 100);

    // cosine over the arc position: one max at s=0, one min at s=lambda/2
    ScalarSeries cosser(100);
    for (std::size_t i = 0; i < 100; ++i)
        cosser[i] = std::cos(2.0 * kPi * c100.arc_position(i) / c100.perimeter());
    CHECK(sliding_extrema(cosser, c100) == std::vector<std::size_t>{0, 50});

    // constant series: ties reject every candidate
    CHECK(sliding_extrema(ScalarSeries(100, 3.7), c100).empty());

    // a monotone ramp has no interior extrema; only the wrap pair fires
    ScalarSeries ramp(100);
    for (std::size_t i = 0; i < 100; ++i) ramp[i] = static_cast<double>(i);
    const std::vector<std::size_t> ext = sliding_extrema(ramp, c100);
    for (std::size_t i : ext) CHECK((i == 0 || i == 99));

    CHECK_THROWS_AS(sliding_extrema(ScalarSeries(99, 0.0), c100), std::invalid_argument);
    WindowConfig tiny;
    tiny.window_ratio = 0.005;  // under one inter-point spacing at n=100
    CHECK_THROWS_AS(sliding_extrema(cosser, c100, tiny), std::invalid_argument);
}

TEST_CASE("Vo: circle empty, ellipse axis points, square corners") {
    for (std::size_t n : {100, 400}) CHECK(detect_Vo(circle(100.0, n)).indices.empty());

    CHECK(detect_Vo(ellipse(100.0, 50.0, 200)).indices ==
          std::vector<std::size_t>{0, 50, 100, 150});

    CHECK(detect_Vo(square(200.0, 100)).indices == std::vector<std::size_t>{0, 25, 50, 75});
}

TEST_CASE("V is a subset of Vo and respects the sharpness threshold") {
    const std::vector<Contour> shapes = {square(200.0, 100), star(5, 100, 45, 200),
                                         ellipse(100.0, 50.0, 200), blob(150, 5)};
    for (const Contour& c : shapes) {
        const IPSet vo = detect_Vo(c);
        const IPSet v = detect_V(c);
        CHECK(std::includes(vo.indices.begin(), vo.indices.end(), v.indices.begin(),
                            v.indices.end()));

        WindowConfig lax;
        lax.sharpness_threshold = 0.0;
        CHECK(detect_V(c, lax).indices == detect_Vo(c, lax).indices);
    }

    // nearly circular ellipse: phi varies too little for the sharp filter
    const Contour near = ellipse(101.0, 100.0, 200);
    CHECK_FALSE(detect_Vo(near).indices.empty());
    CHECK(detect_V(near).indices.empty());

    // pronounced star: the sharp filter keeps real vertices
    CHECK_FALSE(detect_V(star(5, 100, 45, 200)).indices.empty());
}

TEST_CASE("AI, K, SK detectors: circle empty, square corners") {
    const Contour c100 = circle(100.0, 100);
    const Contour c400 = circle(100.0, 400);
    for (const Contour* c : {&c100, &c400}) {
        CHECK(detect_AI(*c).indices.empty());
        CHECK(detect_K(*c).indices.empty());
        CHECK(detect_SK(*c).indices.empty());
    }

    CHECK(detect_K(square(200.0, 100)).indices == std::vector<std::size_t>{0, 25, 50, 75});
}

TEST_CASE("noising increases the K detector's point count on a star") {
    const Contour st = star(5, 100, 45, 100);
    NoisingConfig cfg;
    cfg.steps = 4;
    const Contour noised = incremental_noising(st, cfg).back();
    CHECK(detect_K(noised).indices.size() >= detect_K(st).indices.size());
}

TEST_CASE("detectors are orientation-stable") {
    const Contour st = star(5, 100, 45, 150);
    const Contour rev = st.reversed();
    const std::size_t n = st.size();

    auto mapped = [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> out;
        for (std::size_t i : idx) out.push_back((n - i) % n);
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(mapped(detect_Vo(rev).indices) == detect_Vo(st).indices);
    CHECK(mapped(detect_K(rev).indices) == detect_K(st).indices);
}

TEST_CASE("IP counts respect dihedral symmetry on stars") {
    for (int tips : {4, 5, 6}) {
        const IPSet vo = detect_Vo(star(tips, 100, 45, 40 * tips));
        CHECK(vo.indices.size() % tips == 0);
    }
}
