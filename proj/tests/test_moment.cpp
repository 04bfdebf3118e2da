#include <catch2/catch.hpp>

#include "gz/gz.hpp"
#include "oracles.hpp"

using gz::AlgebraKind;
using gz::Complex;
using gz::FiberTarget;
using gz::MatrixC;

namespace {

MatrixC omega3() {
    return MatrixC::from_rows({{Complex{0}, Complex{20}, Complex{28}},
                               {Complex{1}, Complex{1}, Complex{-14}},
                               {Complex{0}, Complex{1}, Complex{2}}});
}

FiberTarget omega3_target() {
    FiberTarget c;
    c.kind = AlgebraKind::gl(3);
    c.levels.resize(3);
    c.levels[0].data = {Complex{0}};
    c.levels[1].data = {Complex{5}, Complex{-4}};
    c.levels[2].data = {Complex{3}, Complex{2}, Complex{-2}};
    return c;
}

} // namespace

TEST_CASE("moment_map values on a diagonal matrix") {
    MatrixC d(3);
    d(0, 0) = 1.0; d(1, 1) = 2.0; d(2, 2) = 3.0;
    const auto v = gz::moment_map(AlgebraKind::gl(3), d);
    const Complex want[6] = {{1, 0}, {3, 0}, {5, 0}, {6, 0}, {14, 0}, {36, 0}};
    REQUIRE(v.size() == 6);
    for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(v[k] - want[k]) < 1e-12);

    for (Complex z : gz::moment_map(AlgebraKind::gl(4), MatrixC(4))) CHECK(z == Complex{});
}

TEST_CASE("coeff_moment: characteristic coefficients per level") {
    MatrixC d(3);
    d(0, 0) = 1.0; d(1, 1) = 2.0; d(2, 2) = 3.0;
    const auto v = gz::coeff_moment(AlgebraKind::gl(3), d);
    REQUIRE(v.size() == 6);
    // level 3 block: (t-1)(t-2)(t-3) = -6 + 11 t - 6 t^2 + t^3
    CHECK(std::abs(v[3] - Complex{-6}) < 1e-12);
    CHECK(std::abs(v[4] - Complex{11}) < 1e-12);
    CHECK(std::abs(v[5] - Complex{-6}) < 1e-12);

    // nilpotent lower triangular: identically zero
    MatrixC nil(4);
    nil(1, 0) = 2.0; nil(2, 0) = -1.0; nil(2, 1) = 3.0; nil(3, 2) = 0.5;
    for (Complex z : gz::coeff_moment(AlgebraKind::gl(4), nil)) CHECK(z == Complex{});

    CHECK_THROWS_AS(gz::coeff_moment(AlgebraKind::so(4), MatrixC(4)), std::invalid_argument);
}

TEST_CASE("coeff_moment and moment_map cut out the same fibers") {
    const AlgebraKind gl3 = AlgebraKind::gl(3);
    const MatrixC x = omega3();
    const auto mx = gz::moment_map(gl3, x);
    const auto cx = gz::coeff_moment(gl3, x);

    // points on the same orbit-fiber agree under both maps
    for (const MatrixC& y : gz::orbit_sample(gl3, x, 4, 2)) {
        const auto my = gz::moment_map(gl3, y);
        const auto cy = gz::coeff_moment(gl3, y);
        for (std::size_t k = 0; k < mx.size(); ++k) {
            CHECK(std::abs(my[k] - mx[k]) <= 1e-7 * std::max(1.0, std::abs(mx[k])));
            CHECK(std::abs(cy[k] - cx[k]) <= 1e-7 * std::max(1.0, std::abs(cx[k])));
        }
    }

    // a genuinely different point separates under both maps
    gz::Rng rng(71);
    const MatrixC z = gz::random_element(gl3, rng);
    double dm = 0.0, dc = 0.0;
    const auto mz = gz::moment_map(gl3, z);
    const auto cz = gz::coeff_moment(gl3, z);
    for (std::size_t k = 0; k < mx.size(); ++k) {
        dm = std::max(dm, std::abs(mz[k] - mx[k]));
        dc = std::max(dc, std::abs(cz[k] - cx[k]));
    }
    CHECK(dm > 1e-3);
    CHECK(dc > 1e-3);

    // Newton's identities relate the two maps level by level
    std::vector<Complex> power_sums = {mx[3], mx[4], mx[5]};
    const auto e = gz::elementary_from_power_sums(power_sums);
    const auto p = gz::monic_from_elementary(e);
    CHECK(std::abs(p.coeffs[0] - cx[3]) <= 1e-8 * std::max(1.0, std::abs(cx[3])));
    CHECK(std::abs(p.coeffs[1] - cx[4]) <= 1e-8 * std::max(1.0, std::abs(cx[4])));
    CHECK(std::abs(p.coeffs[2] - cx[5]) <= 1e-8 * std::max(1.0, std::abs(cx[5])));
}

TEST_CASE("in_omega on targets") {
    CHECK(gz::in_omega(omega3_target()));

    FiberTarget shared = omega3_target();
    shared.levels[0].data = {Complex{5}};
    CHECK_FALSE(gz::in_omega(shared));

    // adjacent +- overlap for so: level-3 parameter 2 collides with level-4 parameter 2
    FiberTarget so4;
    so4.kind = AlgebraKind::so(4);
    so4.levels.resize(4);
    so4.levels[1].data = {Complex{1}};
    so4.levels[2].data = {Complex{2}};
    so4.levels[3].data = {Complex{2}, Complex{5}};
    CHECK_FALSE(gz::in_omega(so4));
    so4.levels[3].data = {Complex{3}, Complex{5}};
    CHECK(gz::in_omega(so4));
    // zero parameter at an even level collides with the forced zero eigenvalue
    so4.levels[1].data = {Complex{0}};
    CHECK_FALSE(gz::in_omega(so4));
}

TEST_CASE("element_in_omega mirrors the target predicate") {
    const AlgebraKind gl3 = AlgebraKind::gl(3);
    CHECK(gz::element_in_omega(gl3, omega3()));

    MatrixC rep(3);
    rep(0, 0) = 1.0; rep(1, 1) = 1.0; rep(2, 2) = 2.0;
    CHECK_FALSE(gz::element_in_omega(gl3, rep));

    // planted shared adjacent eigenvalue: each cutoff regular semisimple, but
    // the level-1 spectrum {1} reappears at level 2
    MatrixC planted(3);
    planted(0, 0) = 1.0;
    planted(1, 1) = 2.0;
    planted(2, 2) = -3.0;
    planted(0, 1) = 0.4;
    planted(1, 2) = 0.5;
    CHECK_FALSE(gz::element_in_omega(gl3, planted));
}

TEST_CASE("fiber_residual: membership, self-targets and perturbation growth") {
    const MatrixC x = omega3();
    const FiberTarget c = omega3_target();
    CHECK(gz::fiber_residual(x, c) <= 1e-10);

    const FiberTarget self = gz::target_from_element(AlgebraKind::gl(3), x);
    CHECK(gz::fiber_residual(x, self) <= 1e-8);

    // residual grows linearly to first order
    gz::Rng rng(83);
    MatrixC dir = gz::random_element(AlgebraKind::gl(3), rng);
    dir *= Complex{1.0 / dir.frobenius_norm(), 0.0};
    const double r1 = gz::fiber_residual(x + Complex{1e-4} * dir, c);
    const double r2 = gz::fiber_residual(x + Complex{2e-4} * dir, c);
    CHECK(r1 > 1e-7);
    CHECK(std::abs(r2 / r1 - 2.0) < 0.1);
}

TEST_CASE("spectral and invariant-value forms interconvert") {
    gz::Rng rng(91);
    for (const AlgebraKind kind : {AlgebraKind::gl(3), AlgebraKind::gl(5), AlgebraKind::so(4),
                                   AlgebraKind::so(5), AlgebraKind::so(6)}) {
        for (int trial = 0; trial < 5; ++trial) {
            const FiberTarget c = gz::random_omega_target(kind, rng);
            const auto vals = gz::target_invariant_values(c);
            const FiberTarget back = gz::target_from_invariant_values(kind, vals);
            for (std::size_t i = 0; i < kind.n; ++i) {
                REQUIRE(back.levels[i].data.size() == c.levels[i].data.size());
                for (std::size_t k = 0; k < c.levels[i].data.size(); ++k)
                    CHECK(std::abs(back.levels[i].data[k] - c.levels[i].data[k]) <= 1e-8);
                if (kind.is_so() && (i + 1) % 2 == 0)
                    CHECK(back.levels[i].pf_sign == c.levels[i].pf_sign);
            }
        }
    }
}

TEST_CASE("moment map is constant along the composed action") {
    gz::Rng rng(97);
    for (const AlgebraKind kind : {AlgebraKind::gl(4), AlgebraKind::so(5)}) {
        for (int trial = 0; trial < 5; ++trial) {
            const MatrixC x = gz::random_element(kind, rng, 0.6);
            const gz::FlowTime t = gz::random_flow_time(kind, x, rng);
            const auto before = gz::moment_map(kind, x);
            const auto after = gz::moment_map(kind, gz::act(kind, t, x));
            for (std::size_t k = 0; k < before.size(); ++k)
                CHECK(std::abs(after[k] - before[k]) <= 1e-8 * std::max(1.0, std::abs(before[k])));
        }
    }
}
