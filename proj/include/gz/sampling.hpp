#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "gz/fiber_target.hpp"
#include "gz/flows.hpp"
#include "gz/solvar_gl.hpp"
#include "gz/solvar_so.hpp"

namespace gz {

// Deterministic sampling helpers for tests, the verification driver and the
// orbit sampler.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng);
    }

    Complex box(double half_width) { return {uniform(-half_width, half_width), uniform(-half_width, half_width)}; }

    // nonzero complex with modulus in [lo, hi]
    Complex annulus(double lo, double hi) {
        const double r = uniform(lo, hi);
        const double phi = uniform(0.0, 6.283185307179586);
        return {r * std::cos(phi), r * std::sin(phi)};
    }
};

inline MatrixC random_element(const AlgebraKind& kind, Rng& rng, double scale = 1.0) {
    MatrixC x(kind.n);
    if (kind.is_gl()) {
        for (std::size_t i = 0; i < kind.n; ++i)
            for (std::size_t j = 0; j < kind.n; ++j) x(i, j) = rng.box(scale);
    } else {
        for (std::size_t i = 0; i < kind.n; ++i)
            for (std::size_t j = i + 1; j < kind.n; ++j) {
                const Complex v = rng.box(scale);
                x(i, j) = v;
                x(j, i) = -v;
            }
    }
    return x;
}

inline MatrixC random_invertible(std::size_t n, Rng& rng) {
    for (;;) {
        MatrixC g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.box(1.0);
        for (std::size_t i = 0; i < n; ++i) g(i, i) += 2.0;
        if (std::abs(determinant(g)) > 1e-3) return g;
    }
}

inline MatrixC random_special_orthogonal(std::size_t n, Rng& rng, double scale = 0.7) {
    return mat_exp(random_element(AlgebraKind::so(n), rng, scale));
}

// Generic fiber target: separated spectra within each level and between
// adjacent levels.  Targets whose derived border constants are extreme are
// rejected, so the sampled fibers stay at desk scale.
inline FiberTarget random_omega_target(const AlgebraKind& kind, Rng& rng) {
    const double gap = 0.5;
    for (int attempt = 0; attempt < 400; ++attempt) {
        FiberTarget c;
        c.kind = kind;
        c.levels.resize(kind.n);
        bool drawn = true;
        for (std::size_t i = 1; i <= kind.n && drawn; ++i) {
            FiberLevel& lv = c.levels[i - 1];
            const std::size_t count = kind.is_gl() ? i : i / 2;
            for (int guard = 0; guard < 4000 && lv.data.size() < count; ++guard) {
                const Complex cand = kind.is_gl() ? rng.box(1.6) : rng.annulus(0.6, 1.9);
                bool ok = true;
                auto too_close = [&](Complex u, Complex v) { return std::abs(u - v) < gap; };
                for (Complex prev : lv.data)
                    if (too_close(cand, prev) || (kind.is_so() && too_close(cand, -prev))) ok = false;
                if (kind.is_gl()) {
                    if (i >= 2)
                        for (Complex adj : c.levels[i - 2].data)
                            if (too_close(cand, adj)) ok = false;
                } else {
                    if (std::abs(cand) < gap) ok = false;
                    if (i >= 2)
                        for (Complex adj : c.levels[i - 2].data)
                            if (too_close(cand, adj) || too_close(cand, -adj)) ok = false;
                }
                if (ok) lv.data.push_back(cand);
            }
            drawn = lv.data.size() == count;
            if (kind.is_so() && i % 2 == 0) lv.pf_sign = rng.uniform(0.0, 1.0) < 0.5 ? +1 : -1;
        }
        if (!drawn) continue;
        c = canonicalize(c);

        bool tame = true;
        auto in_range = [](Complex v) {
            const double m = std::abs(v);
            return m >= 0.15 && m <= 25.0;
        };
        if (kind.is_gl()) {
            double kappa_product = 1.0;
            for (std::size_t i = 1; i + 1 <= kind.n && tame; ++i) {
                for (Complex zeta : zeta_values(c.levels[i - 1].data, c.levels[i].data))
                    if (!in_range(zeta)) tame = false;
                if (!tame) break;
                const MatrixC g = gl_diagonalizer(c.levels[i - 1].data, c.levels[i].data,
                                                  GlTorusLevel(i, Complex{1.0, 0.0}));
                kappa_product *= g.max_abs() * inverse(g).max_abs();
            }
            if (kappa_product > 400.0) tame = false;
        } else {
            for (std::size_t i = 2; i + 1 <= kind.n && tame; ++i) {
                const SoSolutionData sd = so_solution_data(c, i);
                for (Complex d : sd.d)
                    if (!in_range(d)) tame = false;
                if (sd.even_target && std::abs(sd.z_corner) > 12.0) tame = false;
            }
            if (tame && kind.n >= 4 && gamma_so(c, so_torus_identity(kind)).max_abs() > 18.0)
                tame = false;
        }
        if (tame) return c;
    }
    throw NumericError("random_omega_target: sampling failed");
}

inline GlTorusPoint random_gl_torus(std::size_t n, Rng& rng) {
    GlTorusPoint z(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        z[i - 1].resize(i);
        for (auto& v : z[i - 1]) v = rng.annulus(0.6, 1.8);
    }
    return z;
}

inline SoTorusPoint random_so_torus(const AlgebraKind& kind, Rng& rng) {
    SoTorusPoint z = so_torus_identity(kind);
    for (auto& level : z)
        for (auto& r : level) r = Rotation::from_angle({rng.uniform(-1.0, 1.0), rng.uniform(-0.35, 0.35)});
    return z;
}

inline FlowTime random_flow_time(const AlgebraKind& kind, const MatrixC& x, Rng& rng,
                                 double amplitude = 1.0) {
    const auto gens = flow_generators(kind);
    FlowTime ft = FlowTime::zero(kind);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const double scale = 1.0 + grad_invariant(kind, gens[k], x).frobenius_norm();
        ft.t[k] = amplitude * rng.box(1.0) / scale;
    }
    return ft;
}

} // namespace gz
