#include <catch2/catch.hpp>

#include "gz/gz.hpp"
#include "oracles.hpp"

using gz::AlgebraKind;
using gz::Complex;
using gz::MatrixC;

TEST_CASE("in_nilfibre: triangular, patterned and non-nilpotent inputs") {
    gz::Rng rng(3);
    MatrixC lower(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < i; ++j) lower(i, j) = rng.box(2.0);
    CHECK(gz::in_nilfibre(lower));

    for (int trial = 0; trial < 5; ++trial) {
        std::array<Complex, 6> a;
        for (auto& v : a) v = rng.box(2.0);
        CHECK(gz::in_nilfibre(gz::nilradical_example_matrix(a)));
    }

    MatrixC d(3);
    d(0, 0) = 1.0;
    CHECK_FALSE(gz::in_nilfibre(d));
}

TEST_CASE("the 4-cycle conjugates the lower triangular space onto the pattern") {
    CHECK(gz::check_nilradical_example());
    CHECK_FALSE(gz::permutation_matches_pattern({0, 1, 2, 3}));
    CHECK_FALSE(gz::permutation_matches_pattern({1, 0, 2, 3}));

    // per-basis-element conjugation lands inside the pattern support
    const std::array<std::size_t, 4> image = {3, 0, 1, 2};
    MatrixC p(4);
    for (std::size_t j = 0; j < 4; ++j) p(image[j], j) = 1.0;
    auto pattern = gz::nilradical_example_pattern();
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t col = 0; col < r; ++col) {
            MatrixC e(4);
            e(r, col) = 1.0;
            const MatrixC m = p * e * p.transpose();
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    if (m(i, j) == Complex{}) continue;
                    const bool in_pattern =
                        std::find(pattern.begin(), pattern.end(),
                                  std::make_pair(i, j)) != pattern.end();
                    CHECK(in_pattern);
                }
        }
}

TEST_CASE("flows started at strongly regular pattern points stay in the nilfibre") {
    const AlgebraKind gl4 = AlgebraKind::gl(4);
    gz::Rng rng(7);
    MatrixC seed;
    bool found = false;
    for (int attempt = 0; attempt < 20 && !found; ++attempt) {
        std::array<Complex, 6> a;
        for (auto& v : a) v = rng.annulus(0.5, 1.5);
        seed = gz::nilradical_example_matrix(a);
        found = gz::is_strongly_regular(gl4, seed);
    }
    REQUIRE(found);
    for (const MatrixC& y : gz::orbit_sample(gl4, seed, 8, 11)) CHECK(gz::in_nilfibre(y));
}
