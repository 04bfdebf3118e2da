#include <catch2/catch.hpp>

#include "gz/gz.hpp"
#include "gz/json_io.hpp"
#include "oracles.hpp"

using gz::AlgebraKind;
using gz::Complex;
using gz::MatrixC;

TEST_CASE("matrix serialization round trip is bit-stable") {
    gz::Rng rng(3);
    for (const AlgebraKind kind : {AlgebraKind::gl(4), AlgebraKind::so(5)}) {
        const MatrixC x = gz::random_element(kind, rng);
        const std::string text = gz::matrix_to_json(x).dump();
        const MatrixC back = gz::matrix_from_json(gz::Json::parse(text));
        CHECK(back == x);
    }
}

TEST_CASE("target serialization round trip is bit-stable") {
    gz::Rng rng(5);
    for (const AlgebraKind kind : {AlgebraKind::gl(4), AlgebraKind::so(6)}) {
        const gz::FiberTarget c = gz::random_omega_target(kind, rng);
        const std::string text = gz::target_to_json(c).dump();
        const gz::FiberTarget back = gz::target_from_json(gz::Json::parse(text));
        REQUIRE(back.kind == c.kind);
        for (std::size_t i = 0; i < kind.n; ++i) {
            CHECK(back.levels[i].data == c.levels[i].data);
            if (kind.is_so() && (i + 1) % 2 == 0) CHECK(back.levels[i].pf_sign == c.levels[i].pf_sign);
        }
    }
}

TEST_CASE("torus point serialization round trips") {
    gz::Rng rng(7);
    const gz::GlTorusPoint zg = gz::random_gl_torus(4, rng);
    const gz::GlTorusPoint zg2 = gz::gl_torus_from_json(
        gz::Json::parse(gz::gl_torus_to_json(zg).dump()));
    REQUIRE(zg2.size() == zg.size());
    for (std::size_t i = 0; i < zg.size(); ++i) CHECK(zg2[i] == zg[i]);

    const gz::SoTorusPoint zs = gz::random_so_torus(AlgebraKind::so(5), rng);
    const gz::SoTorusPoint zs2 = gz::so_torus_from_json(
        gz::Json::parse(gz::so_torus_to_json(zs).dump()));
    REQUIRE(zs2.size() == zs.size());
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t k = 0; k < zs[i].size(); ++k) {
            CHECK(zs2[i][k].c == zs[i][k].c);
            CHECK(zs2[i][k].s == zs[i][k].s);
        }
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(gz::matrix_from_json(gz::Json::parse("[[1, 2], [3, 4]]")),
                    std::invalid_argument);
    CHECK_THROWS_AS(gz::matrix_from_json(gz::Json::parse("[[[1, 0]], [[2, 0], [3, 0]]]")),
                    std::invalid_argument);
    CHECK_THROWS_AS(gz::complex_from_json(gz::Json::parse("[1]")), std::invalid_argument);
    CHECK_THROWS_AS(gz::target_from_json(gz::Json::parse("{\"kind\": \"sp\", \"n\": 4, \"levels\": []}")),
                    std::invalid_argument);
}
