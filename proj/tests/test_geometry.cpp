#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "support/synthetic.hpp"
#include "varshape/geometry.hpp"

using namespace varshape;
using namespace varshape::testing;

namespace {
Contour unit_square() { return Contour({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
}  // namespace

TEST_CASE("contour validation and basic data") {
    CHECK_THROWS_AS(Contour({{0, 0}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Contour({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), std::invalid_argument);

    const Contour sq = unit_square();
    CHECK(sq.perimeter() == doctest::Approx(4.0));
    CHECK(sq.is_ccw());
    CHECK(sq.signed_area() == doctest::Approx(1.0));
    double edges = 0.0;
    for (std::size_t i = 0; i < sq.size(); ++i) edges += sq.edge_length(i);
    CHECK(edges == doctest::Approx(sq.perimeter()));

    const Contour cw = Contour({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK_FALSE(cw.is_ccw());
    CHECK(Contour::ccw({{0, 0}, {0, 1}, {1, 1}, {1, 0}}).is_ccw());
    CHECK(Contour::ccw({{0, 0}, {0, 1}, {1, 1}, {1, 0}}).point(0) == Vec2{0, 0});
}

TEST_CASE("resample hits square corners and midpoints") {
    const Contour sq = unit_square();

    const Contour r4 = resample(sq, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(r4.point(i).x == doctest::Approx(sq.point(i).x));
        CHECK(r4.point(i).y == doctest::Approx(sq.point(i).y));
    }

    const Contour r8 = resample(sq, 8);
    CHECK(r8.point(1).x == doctest::Approx(0.5));
    CHECK(r8.point(1).y == doctest::Approx(0.0));
    CHECK(r8.point(3).x == doctest::Approx(1.0));
    CHECK(r8.point(3).y == doctest::Approx(0.5));
    CHECK(r8.point(7).x == doctest::Approx(0.0));
    CHECK(r8.point(7).y == doctest::Approx(0.5));

    CHECK_THROWS_AS(resample(sq, 2), std::invalid_argument);
}

TEST_CASE("resampled 64-gon keeps the circle perimeter within 1%") {
    const Contour c64 = circle(1.0, 64);
    const Contour r = resample(c64, 128);
    CHECK(std::abs(r.perimeter() - 2.0 * kPi) / (2.0 * kPi) < 0.01);
}

TEST_CASE("resample is idempotent on an equally spaced contour") {
    const Contour st = star(5, 100, 45, 200);
    const Contour again = resample(st, 200);
    for (std::size_t i = 0; i < st.size(); ++i) {
        CHECK(std::abs(st.point(i).x - again.point(i).x) < 1e-9);
        CHECK(std::abs(st.point(i).y - again.point(i).y) < 1e-9);
    }
}

TEST_CASE("normals: axis-aligned edge, hexagon vertex, circle radial") {
    const Contour r8 = resample(unit_square(), 8);
    const std::vector<Vec2> n8 = normals(r8);
    CHECK(n8[1].x == doctest::Approx(0.0));
    CHECK(n8[1].y == doctest::Approx(-1.0));

    const Contour hex = circle(1.0, 6);
    const std::vector<Vec2> nh = normals(hex);
    for (std::size_t i = 0; i < 6; ++i) {
        const Vec2 radial = normalized(hex.point(i));
        CHECK(dot(nh[i], radial) == doctest::Approx(1.0));
    }

    const Contour c100 = circle(1.0, 100);
    const std::vector<Vec2> nc = normals(c100);
    for (std::size_t i = 0; i < 100; ++i) {
        const double cosang = dot(nc[i], normalized(c100.point(i)));
        CHECK(std::acos(std::min(1.0, cosang)) < 2.0 * kPi / 180.0);
    }
}

TEST_CASE("reversal flips orientation; outward normals agree geometrically") {
    const Contour st = star(5, 100, 45, 60);
    const Contour rev = st.reversed();
    CHECK(st.is_ccw());
    CHECK_FALSE(rev.is_ccw());

    const std::vector<Vec2> nf = normals(st);
    const std::vector<Vec2> nr = normals(rev);
    const std::size_t n = st.size();
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t orig = (n - k) % n;
        CHECK(rev.point(k) == st.point(orig));
        CHECK(nr[k].x == doctest::Approx(nf[orig].x));
        CHECK(nr[k].y == doctest::Approx(nf[orig].y));
    }
}

TEST_CASE("boundary distance") {
    const Contour r8 = resample(unit_square(), 8);
    CHECK(boundary_distance(r8, 3, 3) == 0.0);
    CHECK(boundary_distance(r8, 0, 4) == doctest::Approx(2.0));
    CHECK(boundary_distance(r8, 0, 7) == doctest::Approx(0.5));
    CHECK(boundary_distance(r8, 7, 0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(boundary_distance(r8, 0, 8), std::invalid_argument);
}

TEST_CASE("boundary distance triangle inequality") {
    const Contour bl = blob(90, 7);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, bl.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(boundary_distance(bl, a, c) <=
              boundary_distance(bl, a, b) + boundary_distance(bl, b, c) + 1e-12);
    }
}

TEST_CASE("circle intersection offset") {
    CHECK(circle_intersection_offset(2.0, std::sqrt(2.0)) == doctest::Approx(1.0));
    CHECK(circle_intersection_offset(2.0, 1.0) == 0.0);
    CHECK(circle_intersection_offset(1.0, 0.501) ==
          doctest::Approx(std::sqrt(0.501 * 0.501 - 0.25)));
    CHECK_THROWS_AS(circle_intersection_offset(2.0, 0.99), std::domain_error);
    CHECK_THROWS_AS(circle_intersection_offset(0.0, 1.0), std::invalid_argument);

    // exactly zero at the tangency bound, strictly increasing in r
    for (double d : {0.3, 1.0, 7.5}) {
        CHECK(circle_intersection_offset(d, d / 2.0) == 0.0);
        double prev = 0.0;
        for (double r = d / 2.0 + 0.01; r < 3.0 * d; r += 0.17) {
            const double h = circle_intersection_offset(d, r);
            CHECK(h > prev);
            prev = h;
        }
    }
}
