#include <catch2/catch.hpp>

#include "gz/gz.hpp"
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

MatrixC so_blocks(const std::vector<Complex>& a, std::size_t n) {
    MatrixC x(n);
    for (std::size_t j = 0; j < a.size(); ++j) {
        x(2 * j, 2 * j + 1) = a[j];
        x(2 * j + 1, 2 * j) = -a[j];
    }
    return x;
}

} // namespace

TEST_CASE("is_regular by gradient independence") {
    const AlgebraKind gl2 = AlgebraKind::gl(2);
    MatrixC d(2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    CHECK(gz::is_regular(gl2, d, 2));
    d(1, 1) = 1.0;
    CHECK_FALSE(gz::is_regular(gl2, d, 2));

    const AlgebraKind so4 = AlgebraKind::so(4);
    CHECK(gz::is_regular(so4, so_blocks({Complex{1.0}, Complex{2.5}}, 4), 4));
    CHECK_FALSE(gz::is_regular(so4, so_blocks({Complex{1.0}, Complex{1.0}}, 4), 4));
    CHECK_FALSE(gz::is_regular(so4, so_blocks({Complex{1.0}, Complex{-1.0}}, 4), 4));
}

TEST_CASE("is_regular agrees with the centralizer-dimension oracle") {
    gz::Rng rng(47);
    for (const AlgebraKind kind : {AlgebraKind::gl(3), AlgebraKind::gl(4), AlgebraKind::so(4),
                                   AlgebraKind::so(5)}) {
        for (int trial = 0; trial < 20; ++trial) {
            MatrixC x;
            if (trial % 4 == 0 && kind.is_gl()) {
                x = MatrixC(kind.n);
                for (std::size_t i = 0; i < kind.n; ++i) x(i, i) = (i < 2) ? Complex{1.0} : rng.box(2.0);
            } else if (trial % 4 == 1) {
                x = MatrixC(kind.n); // zero matrix
            } else {
                x = gz::random_element(kind, rng);
            }
            const bool via_grads = gz::is_regular(kind, x, kind.n);
            const bool via_kernel = oracle::centralizer_dim(kind, x) == kind.rank(kind.n);
            CHECK(via_grads == via_kernel);
        }
    }
}

TEST_CASE("strong regularity: worked example and degenerate cases") {
    const AlgebraKind gl3 = AlgebraKind::gl(3);
    CHECK(gz::is_strongly_regular(gl3, omega3()));
    CHECK(gz::sreg_via_centralizers(gl3, omega3()));

    // distinct diagonal: every cutoff regular, yet the centralizers are nested
    MatrixC d(3);
    d(0, 0) = 1.0; d(1, 1) = 2.0; d(2, 2) = 3.0;
    CHECK_FALSE(gz::is_strongly_regular(gl3, d));
    CHECK_FALSE(gz::sreg_via_centralizers(gl3, d));
    for (std::size_t i = 1; i <= 3; ++i) CHECK(gz::is_regular(gl3, gz::cutoff(d, i), i));

    // non-regular cutoff forces failure
    gz::Rng rng(53);
    MatrixC x = gz::random_element(gl3, rng);
    x(0, 0) = 1.0; x(0, 1) = 0.0; x(1, 0) = 0.0; x(1, 1) = 1.0;
    CHECK_FALSE(gz::is_strongly_regular(gl3, x));
    CHECK_FALSE(gz::sreg_via_centralizers(gl3, x));
}

TEST_CASE("both strong-regularity formulations agree on random samples") {
    gz::Rng rng(59);
    for (const AlgebraKind kind : {AlgebraKind::gl(3), AlgebraKind::gl(4), AlgebraKind::gl(5),
                                   AlgebraKind::so(4), AlgebraKind::so(5)}) {
        for (int trial = 0; trial < 100; ++trial) {
            MatrixC x;
            if (trial % 5 == 0) {
                x = MatrixC(kind.n);
                if (kind.is_gl())
                    for (std::size_t i = 0; i < kind.n; ++i) x(i, i) = rng.box(2.0);
                else
                    for (std::size_t j = 0; 2 * j + 1 < kind.n; ++j) {
                        const Complex v = rng.annulus(0.4, 2.0);
                        x(2 * j, 2 * j + 1) = v;
                        x(2 * j + 1, 2 * j) = -v;
                    }
            } else {
                x = gz::random_element(kind, rng, rng.uniform(0.2, 1.5));
            }
            CHECK(gz::is_strongly_regular(kind, x) == gz::sreg_via_centralizers(kind, x));
        }
    }
}

TEST_CASE("strong regularity forces full distribution rank and regular cutoffs") {
    gz::Rng rng(67);
    for (const AlgebraKind kind : {AlgebraKind::gl(4), AlgebraKind::so(5)}) {
        for (int trial = 0; trial < 10; ++trial) {
            const MatrixC x = gz::random_element(kind, rng);
            if (!gz::is_strongly_regular(kind, x)) continue;
            CHECK(gz::gz_rank(kind, x) == kind.d());
            for (std::size_t i = 1; i <= kind.n; ++i)
                CHECK(gz::is_regular(kind, gz::cutoff(x, i), i));
        }
    }
}

TEST_CASE("centralizer_basis spans the centralizer at regular points") {
    const AlgebraKind gl2 = AlgebraKind::gl(2);
    MatrixC d(2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    const auto basis = gz::centralizer_basis(gl2, d, 2);
    REQUIRE(basis.size() == 2);
    // all diagonal matrices are reachable: rank of the basis is 2 and every
    // element commutes with d
    CHECK(gz::numerical_rank_mats(basis) == 2);
    for (const auto& v : basis) CHECK(gz::commutator(v, d).max_abs() <= 1e-10);

    // the span equals the kernel of ad(d)
    CHECK(oracle::centralizer_dim(gl2, d) == 2);

    const AlgebraKind so2 = AlgebraKind::so(2);
    MatrixC j(2);
    j(0, 1) = 1.7;
    j(1, 0) = -1.7;
    const auto jb = gz::centralizer_basis(so2, j, 2);
    REQUIRE(jb.size() == 1);
    CHECK(std::abs(jb[0](0, 1)) > 0.0);
    CHECK(gz::commutator(jb[0], j).max_abs() <= 1e-10);

    MatrixC rep(2);
    rep(0, 0) = 1.0;
    rep(1, 1) = 1.0;
    CHECK_THROWS_AS(gz::centralizer_basis(gl2, rep, 2), gz::GenericityError);
}
