#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gz/fiber_target.hpp"
#include "gz/flows.hpp"
#include "gz/solvar_gl.hpp"
#include "gz/solvar_so.hpp"

namespace gz {

using Json = nlohmann::json;

// Wire formats: complex scalar = [re, im]; matrix = array of rows;
// fiber target = {kind, n, levels: [{eigenvalues | block_params, pfaffian_sign?}]};
// torus point = per-level arrays (gl: complex list, so: [c, s] pairs).

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("expected complex scalar as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Json matrix_to_json(const MatrixC& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline MatrixC matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected matrix as array of rows");
    MatrixC m(j.size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != j.size())
            throw std::invalid_argument("matrix rows must all have length n");
        for (std::size_t c = 0; c < j.size(); ++c) m(r, c) = complex_from_json(j[r][c]);
    }
    return m;
}

inline Json complex_list_to_json(const std::vector<Complex>& v) {
    Json a = Json::array();
    for (Complex z : v) a.push_back(complex_to_json(z));
    return a;
}

inline std::vector<Complex> complex_list_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected array of complex scalars");
    std::vector<Complex> v;
    for (const auto& e : j) v.push_back(complex_from_json(e));
    return v;
}

inline Json target_to_json(const FiberTarget& c) {
    Json out;
    out["kind"] = c.kind.name();
    out["n"] = c.kind.n;
    Json levels = Json::array();
    for (std::size_t i = 1; i <= c.kind.n; ++i) {
        Json lv;
        if (c.kind.is_gl()) {
            lv["eigenvalues"] = complex_list_to_json(c.levels[i - 1].data);
        } else {
            lv["block_params"] = complex_list_to_json(c.levels[i - 1].data);
            if (i % 2 == 0) lv["pfaffian_sign"] = c.levels[i - 1].pf_sign;
        }
        levels.push_back(std::move(lv));
    }
    out["levels"] = std::move(levels);
    return out;
}

inline FiberTarget target_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("n") || !j.contains("levels"))
        throw std::invalid_argument("fiber target needs kind, n and levels");
    const std::string kind_name = j["kind"].get<std::string>();
    const std::size_t n = j["n"].get<std::size_t>();
    FiberTarget c;
    if (kind_name == "gl")
        c.kind = AlgebraKind::gl(n);
    else if (kind_name == "so")
        c.kind = AlgebraKind::so(n);
    else
        throw std::invalid_argument("kind must be \"gl\" or \"so\"");
    const Json& levels = j["levels"];
    if (!levels.is_array() || levels.size() != n)
        throw std::invalid_argument("levels must be an array of length n");
    c.levels.resize(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const Json& lv = levels[i - 1];
        const char* key = c.kind.is_gl() ? "eigenvalues" : "block_params";
        if (!lv.is_object() || !lv.contains(key))
            throw std::invalid_argument(std::string("level is missing ") + key);
        c.levels[i - 1].data = complex_list_from_json(lv[key]);
        if (lv.contains("pfaffian_sign")) c.levels[i - 1].pf_sign = lv["pfaffian_sign"].get<int>();
    }
    c.validate();
    return c;
}

inline Json gl_torus_to_json(const GlTorusPoint& z) {
    Json out = Json::array();
    for (const auto& level : z) out.push_back(complex_list_to_json(level));
    return out;
}

inline GlTorusPoint gl_torus_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("gl torus point must be an array of levels");
    GlTorusPoint z;
    for (const auto& level : j) z.push_back(complex_list_from_json(level));
    return z;
}

inline Json so_torus_to_json(const SoTorusPoint& z) {
    Json out = Json::array();
    for (const auto& level : z) {
        Json lv = Json::array();
        for (const Rotation& r : level)
            lv.push_back(Json::array({complex_to_json(r.c), complex_to_json(r.s)}));
        out.push_back(std::move(lv));
    }
    return out;
}

inline SoTorusPoint so_torus_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("so torus point must be an array of levels");
    SoTorusPoint z;
    for (const auto& level : j) {
        if (!level.is_array()) throw std::invalid_argument("so torus level must be an array");
        SoTorusLevel lv;
        for (const auto& r : level) {
            if (!r.is_array() || r.size() != 2)
                throw std::invalid_argument("so torus coordinate must be a [c, s] pair");
            lv.push_back(Rotation{complex_from_json(r[0]), complex_from_json(r[1])});
        }
        z.push_back(std::move(lv));
    }
    return z;
}

inline Json flow_time_to_json(const FlowTime& t) { return complex_list_to_json(t.t); }

inline FlowTime flow_time_from_json(const Json& j) {
    FlowTime t;
    t.t = complex_list_from_json(j);
    return t;
}

} // namespace gz
