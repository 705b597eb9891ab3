#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hankel/caratheodory.hpp"

using hankel::CaratheodoryCoeffs;
using hankel::cplx;
using hankel::HerglotzAtoms;
using hankel::SampleMode;
using hankel::SchurParams;

namespace {

double dist(cplx a, cplx b) { return std::abs(a - b); }

SchurParams params(cplx t1, cplx t2, cplx t3, cplx t4) { return SchurParams(t1, t2, t3, t4); }

}  // namespace

TEST_CASE("half-plane point gives the constant-2 coefficient string") {
    // p = (1+z)/(1-z) has c_n = 2 for all n
    const CaratheodoryCoeffs c = schur_to_c(params(cplx(1.0), cplx(0.0), cplx(0.0), cplx(0.0)));
    CHECK(dist(c.c1, cplx(2.0)) < 1e-15);
    CHECK(dist(c.c2, cplx(2.0)) < 1e-15);
    CHECK(dist(c.c3, cplx(2.0)) < 1e-15);
    CHECK(dist(c.c4, cplx(2.0)) < 1e-15);
}

TEST_CASE("zero parameters give the constant function") {
    const CaratheodoryCoeffs c = schur_to_c(SchurParams());
    CHECK(dist(c.c1, cplx(0.0)) == 0.0);
    CHECK(dist(c.c2, cplx(0.0)) == 0.0);
    CHECK(dist(c.c3, cplx(0.0)) == 0.0);
    CHECK(dist(c.c4, cplx(0.0)) == 0.0);
}

TEST_CASE("second-slot point gives the even function (1+z^2)/(1-z^2)") {
    const CaratheodoryCoeffs c = schur_to_c(params(cplx(0.0), cplx(1.0), cplx(0.0), cplx(0.0)));
    CHECK(dist(c.c1, cplx(0.0)) < 1e-15);
    CHECK(dist(c.c2, cplx(2.0)) < 1e-15);
    CHECK(dist(c.c3, cplx(0.0)) < 1e-15);
    CHECK(dist(c.c4, cplx(2.0)) < 1e-15);
}

TEST_CASE("herglotz atoms reproduce the matching parameter points") {
    const HerglotzAtoms one({1.0}, {cplx(1.0)});
    const CaratheodoryCoeffs a = herglotz_c(one);
    const CaratheodoryCoeffs b = schur_to_c(params(cplx(1.0), cplx(0.0), cplx(0.0), cplx(0.0)));
    CHECK(dist(a.c1, b.c1) < 1e-15);
    CHECK(dist(a.c4, b.c4) < 1e-15);

    const HerglotzAtoms cosine({0.5, 0.5}, {cplx(1.0), cplx(-1.0)});
    const CaratheodoryCoeffs d = herglotz_c(cosine);
    CHECK(dist(d.c1, cplx(0.0)) < 1e-15);
    CHECK(dist(d.c2, cplx(2.0)) < 1e-15);
    CHECK(dist(d.c3, cplx(0.0)) < 1e-15);
    CHECK(dist(d.c4, cplx(2.0)) < 1e-15);
}

TEST_CASE("herglotz validation rejects bad measures") {
    CHECK_THROWS_AS(HerglotzAtoms({0.5}, {cplx(1.0), cplx(-1.0)}), std::invalid_argument);
    CHECK_THROWS_AS(HerglotzAtoms({-0.25, 1.25}, {cplx(1.0), cplx(-1.0)}), std::domain_error);
    CHECK_THROWS_AS(HerglotzAtoms({0.5, 0.2}, {cplx(1.0), cplx(-1.0)}), std::domain_error);
    CHECK_THROWS_AS(HerglotzAtoms({1.0}, {cplx(0.5)}), std::domain_error);
}

TEST_CASE("cube roots of unity keep only every third coefficient") {
    const cplx w = std::polar(1.0, 2.0943951023931953);  // 2*pi/3
    const HerglotzAtoms thirds({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, {cplx(1.0), w, w * w});
    const CaratheodoryCoeffs c = herglotz_c(thirds);
    CHECK(dist(c.c1, cplx(0.0)) < 1e-14);
    CHECK(dist(c.c2, cplx(0.0)) < 1e-14);
    CHECK(dist(c.c3, cplx(2.0)) < 1e-14);
    CHECK(dist(c.c4, cplx(0.0)) < 1e-14);

    // same coefficient string out of the parameter map
    const CaratheodoryCoeffs d = schur_to_c(params(cplx(0.0), cplx(0.0), cplx(1.0), cplx(0.0)));
    CHECK(dist(d.c1, cplx(0.0)) < 1e-15);
    CHECK(dist(d.c2, cplx(0.0)) < 1e-15);
    CHECK(dist(d.c3, cplx(2.0)) < 1e-15);
    CHECK(dist(d.c4, cplx(0.0)) < 1e-15);
}

TEST_CASE("parameter validation rejects points outside the polydisk") {
    CHECK_THROWS_AS(params(cplx(1.1), cplx(0.0), cplx(0.0), cplx(0.0)), std::domain_error);
    CHECK_THROWS_AS(params(cplx(0.0), cplx(0.0), cplx(0.0), cplx(0.8, 0.7)), std::domain_error);
}

TEST_CASE("toeplitz matrix of the constant function has eigenvalue 2") {
    const CaratheodoryCoeffs c = schur_to_c(SchurParams());
    for (int order = 1; order <= 5; ++order) {
        CHECK(std::abs(toeplitz_min_eig(c, order) - 2.0) < 1e-12);
    }
    CHECK_THROWS_AS((void)toeplitz_min_eig(c, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)toeplitz_min_eig(c, 6), std::invalid_argument);
}

TEST_CASE("extreme points sit on the boundary of the coefficient body") {
    // a single atom makes the Toeplitz matrix singular
    const CaratheodoryCoeffs c = schur_to_c(params(cplx(1.0), cplx(0.0), cplx(0.0), cplx(0.0)));
    const double lo = toeplitz_min_eig(c, 5);
    CHECK(lo > -1e-9);
    CHECK(lo < 1e-9);
}

TEST_CASE("sampled parameters always produce admissible coefficient tuples") {
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const SchurParams t = sample_schur(99, i, SampleMode::uniform);
        CHECK(std::abs(t.t1) <= 1.0 + 1e-12);
        CHECK(std::abs(t.t2) <= 1.0 + 1e-12);
        CHECK(std::abs(t.t3) <= 1.0 + 1e-12);
        CHECK(std::abs(t.t4) <= 1.0 + 1e-12);
        const CaratheodoryCoeffs c = schur_to_c(t);
        CHECK(std::abs(c.c1) <= 2.0 + 1e-12);
        CHECK(std::abs(c.c2) <= 2.0 + 1e-12);
        CHECK(std::abs(c.c3) <= 2.0 + 1e-12);
        CHECK(std::abs(c.c4) <= 2.0 + 1e-12);
        CHECK(toeplitz_min_eig(c, 5) >= -1e-9);
    }
}

TEST_CASE("sampling is a pure function of seed and index") {
    const SchurParams a = sample_schur(7, 123, SampleMode::boundary_biased);
    const SchurParams b = sample_schur(7, 123, SampleMode::boundary_biased);
    CHECK(dist(a.t1, b.t1) == 0.0);
    CHECK(dist(a.t2, b.t2) == 0.0);
    CHECK(dist(a.t3, b.t3) == 0.0);
    CHECK(dist(a.t4, b.t4) == 0.0);
    const SchurParams c = sample_schur(8, 123, SampleMode::boundary_biased);
    CHECK(dist(a.t1, c.t1) + dist(a.t2, c.t2) + dist(a.t3, c.t3) + dist(a.t4, c.t4) > 0.0);
}

TEST_CASE("boundary bias snaps each coordinate with frequency about 1/4") {
    int on_circle = 0, at_zero = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const SchurParams t = sample_schur(5, static_cast<std::uint64_t>(i),
                                           SampleMode::boundary_biased);
        if (std::abs(std::abs(t.t1) - 1.0) < 1e-9) ++on_circle;
        if (std::abs(t.t1) < 1e-15) ++at_zero;
    }
    CHECK(on_circle > n / 5);
    CHECK(on_circle < n / 3);
    CHECK(at_zero > n / 5);
    CHECK(at_zero < n / 3);
}

TEST_CASE("h3 at the sharp configurations") {
    const SchurParams second(cplx(0.0), cplx(1.0), cplx(0.0), cplx(0.0));
    const SchurParams third(cplx(0.0), cplx(0.0), cplx(1.0), cplx(0.0));
    const SchurParams first(cplx(1.0), cplx(0.0), cplx(0.0), cplx(0.0));

    CHECK(std::abs(std::abs(h3_schur_R(second)) - 44.0 / 135.0) < 1e-15);
    CHECK(std::abs(std::abs(h3_schur_R(third)) - 0.25) < 1e-15);
    CHECK(std::abs(std::abs(h3_schur_R(first)) - 208.0 / 8640.0) < 1e-15);

    CHECK(std::abs(std::abs(h3_schur_R1(third)) - 1.0 / 64.0) < 1e-15);
    CHECK(std::abs(std::abs(h3_schur_R1(second)) - 311296.0 / 74649600.0) < 1e-15);
    CHECK(std::abs(std::abs(h3_schur_R1(first)) - 76288.0 / 74649600.0) < 1e-15);
}

TEST_CASE("h3 is invariant under a global rotation of the extremal slot") {
    // value modulus only depends on |t2| when the other slots vanish
    for (int k = 0; k < 8; ++k) {
        const double phi = 0.7853981633974483 * k;
        const SchurParams t(cplx(0.0), std::polar(1.0, phi), cplx(0.0), cplx(0.0));
        CHECK(std::abs(std::abs(h3_schur_R(t)) - 44.0 / 135.0) < 1e-14);
    }
}

TEST_CASE("branch condition selects the expected side at the corners") {
    CHECK(hankel::branch_condition_R(cplx(0.0), cplx(0.0)) == doctest::Approx(15.0));
    CHECK(hankel::branch_condition_R1(cplx(0.0), cplx(0.0)) == doctest::Approx(225.0));
    // at t1 = 1 the first group dominates and both sides collapse
    CHECK(hankel::branch_condition_R(cplx(1.0), cplx(0.5)) ==
          doctest::Approx(std::abs(-8.0 * 0.5) - 8.0));
}
