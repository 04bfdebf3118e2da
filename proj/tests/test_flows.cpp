#include <catch2/catch.hpp>

#include "gz/gz.hpp"
#include "gz/verify.hpp"
#include "oracles.hpp"

using gz::AlgebraKind;
using gz::Complex;
using gz::MatrixC;

namespace {

MatrixC omega3() {
    return MatrixC::from_rows({{Complex{0}, Complex{20}, Complex{28}},
                               {Complex{1}, Complex{1}, Complex{-14}},
                               {Complex{0}, Complex{1}, Complex{2}}});
}

} // namespace

TEST_CASE("flow_step at zero time is the identity and rejects top-level ids") {
    const AlgebraKind gl3 = AlgebraKind::gl(3);
    const MatrixC x = omega3();
    CHECK(gz::flow_step(gl3, gz::make_invariant_id(gl3, 2, 2), Complex{}, x) == x);
    CHECK_THROWS_AS(gz::flow_step(gl3, gz::make_invariant_id(gl3, 3, 1), Complex{1.0}, x),
                    std::invalid_argument);
}

TEST_CASE("first-level flow conjugates by a scalar block") {
    const AlgebraKind gl3 = AlgebraKind::gl(3);
    gz::Rng rng(3);
    const MatrixC x = gz::random_element(gl3, rng);
    const Complex t{0.4, -0.3};
    const MatrixC y = gz::flow_step(gl3, gz::make_invariant_id(gl3, 1, 1), t, x);
    MatrixC g = MatrixC::identity(3);
    g(0, 0) = std::exp(-t);
    CHECK(gz::max_abs_diff(y, gz::conjugate(g, x)) <= 1e-12 * std::max(1.0, x.max_abs()));
}

TEST_CASE("gl flows admit the explicit power-of-cutoff form") {
    const AlgebraKind gl4 = AlgebraKind::gl(4);
    gz::Rng rng(13);
    const MatrixC x = gz::verify::normalized_random_element(gl4, rng, 0.8);
    for (const auto& id : gz::flow_generators(gl4)) {
        const Complex t = rng.box(1.0);
        const MatrixC via_grad = gz::flow_step(gl4, id, t, x);
        // conjugation by exp(-t j x_i^{j-1}) embedded as a group element
        MatrixC pow = MatrixC::identity(id.level);
        const MatrixC xi = gz::cutoff(x, id.level);
        for (std::size_t k = 1; k < id.exponent; ++k) pow = pow * xi;
        const MatrixC g =
            gz::embed_group(gz::mat_exp(-t * static_cast<double>(id.exponent) * pow), 4);
        const MatrixC via_power = gz::conjugate(g, x);
        CHECK(gz::max_abs_diff(via_grad, via_power) <= 1e-10 * std::max(1.0, x.max_abs()));
    }
}

TEST_CASE("flows fix their level cutoff and preserve every invariant") {
    gz::Rng rng(19);
    for (const AlgebraKind kind : {AlgebraKind::gl(4), AlgebraKind::so(5)}) {
        const MatrixC x = gz::verify::normalized_random_element(kind, rng, 0.8);
        const auto before = gz::moment_map(kind, x);
        for (const auto& id : gz::flow_generators(kind)) {
            const Complex t = rng.box(1.0);
            const MatrixC y = gz::flow_step(kind, id, t, x);
            CHECK(gz::max_abs_diff(gz::cutoff(y, id.level), gz::cutoff(x, id.level)) <= 1e-10);
            if (kind.is_so()) CHECK(gz::is_skew(y));
            const auto after = gz::moment_map(kind, y);
            for (std::size_t k = 0; k < before.size(); ++k)
                CHECK(std::abs(after[k] - before[k]) <= 1e-8 * std::max(1.0, std::abs(before[k])));
        }
    }
}

TEST_CASE("flow derivative matches the Hamiltonian field") {
    gz::Rng rng(23);
    const double h = 1e-5;
    for (const AlgebraKind kind : {AlgebraKind::gl(3), AlgebraKind::so(4)}) {
        const MatrixC x = gz::verify::normalized_random_element(kind, rng, 0.8);
        for (const auto& id : gz::flow_generators(kind)) {
            const MatrixC fd = (gz::flow_step(kind, id, Complex{h}, x) -
                                gz::flow_step(kind, id, Complex{-h}, x)) *
                               Complex{1.0 / (2.0 * h)};
            const MatrixC want = gz::ham_field(kind, id, x);
            CHECK(gz::max_abs_diff(fd, want) <= 1e-6 * std::max(1.0, want.max_abs()));
        }
    }
}

TEST_CASE("act: identity, order independence and the group law") {
    const AlgebraKind gl3 = AlgebraKind::gl(3);
    const MatrixC x = omega3();
    CHECK(gz::act(gl3, gz::FlowTime::zero(gl3), x) == x);

    gz::Rng rng(37);
    // scaled times keep the example's large entries well conditioned
    const gz::FlowTime t = gz::random_flow_time(gl3, x, rng, 0.8);
    std::vector<std::size_t> asc = {0, 1, 2};
    std::vector<std::size_t> desc = {2, 1, 0};
    std::vector<std::size_t> mixed = {1, 2, 0};
    const MatrixC y1 = gz::act(gl3, t, x, asc);
    const MatrixC y2 = gz::act(gl3, t, x, desc);
    const MatrixC y3 = gz::act(gl3, t, x, mixed);
    const double scale = std::max(1.0, y1.max_abs());
    CHECK(gz::max_abs_diff(y1, y2) <= 1e-8 * scale);
    CHECK(gz::max_abs_diff(y1, y3) <= 1e-8 * scale);

    // additivity of the abelian action
    gz::FlowTime s = gz::random_flow_time(gl3, x, rng, 0.8);
    gz::FlowTime sum = s;
    for (std::size_t k = 0; k < sum.t.size(); ++k) sum.t[k] += t.t[k];
    const MatrixC via_sum = gz::act(gl3, sum, x);
    const MatrixC via_two = gz::act(gl3, s, gz::act(gl3, t, x));
    CHECK(gz::max_abs_diff(via_sum, via_two) <= 1e-8 * std::max(1.0, via_sum.max_abs()));
}

TEST_CASE("act preserves adjoint orbits") {
    gz::Rng rng(41);
    for (const AlgebraKind kind : {AlgebraKind::gl(4), AlgebraKind::so(5)}) {
        const MatrixC x = gz::verify::normalized_random_element(kind, rng, 0.8);
        const gz::FlowTime t = gz::random_flow_time(kind, x, rng);
        const MatrixC y = gz::act(kind, t, x);
        const auto ex = gz::eigenvalues(x);
        const auto ey = gz::eigenvalues(y);
        for (std::size_t k = 0; k < ex.size(); ++k)
            CHECK(std::abs(ex[k] - ey[k]) <= 1e-8 * std::max(1.0, std::abs(ex[k])));
    }
}

TEST_CASE("orbit_sample stays on the fiber and requires strong regularity") {
    const AlgebraKind gl3 = AlgebraKind::gl(3);
    const MatrixC x = omega3();

    const auto trivial = gz::orbit_sample(gl3, x, 1, 5, 0.0);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0] == x);

    const auto before = gz::moment_map(gl3, x);
    for (const MatrixC& y : gz::orbit_sample(gl3, x, 6, 17)) {
        const auto after = gz::moment_map(gl3, y);
        for (std::size_t k = 0; k < before.size(); ++k)
            CHECK(std::abs(after[k] - before[k]) <= 1e-7 * std::max(1.0, std::abs(before[k])));
        CHECK(gz::element_in_omega(gl3, y));
    }

    MatrixC d(3);
    d(0, 0) = 1.0; d(1, 1) = 2.0; d(2, 2) = 3.0;
    CHECK_THROWS_AS(gz::orbit_sample(gl3, d, 1, 0), gz::GenericityError);
}
