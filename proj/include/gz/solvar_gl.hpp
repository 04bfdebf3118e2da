#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "gz/eigen.hpp"
#include "gz/error.hpp"
#include "gz/fiber_target.hpp"
#include "gz/linsolve.hpp"
#include "gz/moment.hpp"

namespace gz {

// Torus coordinates for a gl fiber: levels[i-1] holds the i nonzero
// coordinates of the level-i solution variety, i = 1..n-1.
using GlTorusLevel = std::vector<Complex>;
using GlTorusPoint = std::vector<GlTorusLevel>;

inline GlTorusPoint gl_torus_identity(std::size_t n) {
    GlTorusPoint z(n - 1);
    for (std::size_t i = 1; i < n; ++i) z[i - 1].assign(i, Complex{1.0, 0.0});
    return z;
}

inline GlTorusPoint gl_torus_mul(const GlTorusPoint& a, const GlTorusPoint& b) {
    if (a.size() != b.size()) throw std::invalid_argument("gl torus: size mismatch");
    GlTorusPoint r = a;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (a[i].size() != b[i].size()) throw std::invalid_argument("gl torus: level mismatch");
        for (std::size_t k = 0; k < r[i].size(); ++k) r[i][k] *= b[i][k];
    }
    return r;
}

namespace detail {

inline void check_gl_genericity(const std::vector<Complex>& mu, const std::vector<Complex>& lambda) {
    double scale = 1.0;
    for (Complex m : mu) scale = std::max(scale, std::abs(m));
    for (Complex l : lambda) scale = std::max(scale, std::abs(l));
    const double floor = 1e-10 * scale;
    for (std::size_t a = 0; a < mu.size(); ++a)
        for (std::size_t b = a + 1; b < mu.size(); ++b)
            if (std::abs(mu[a] - mu[b]) <= floor)
                throw GenericityError("solution variety: repeated lower eigenvalue");
    for (std::size_t a = 0; a < lambda.size(); ++a)
        for (std::size_t b = a + 1; b < lambda.size(); ++b)
            if (std::abs(lambda[a] - lambda[b]) <= floor)
                throw GenericityError("solution variety: repeated upper eigenvalue");
    for (Complex m : mu)
        for (Complex l : lambda)
            if (std::abs(m - l) <= floor)
                throw GenericityError("solution variety: shared adjacent eigenvalue");
}

} // namespace detail

// The unique zeta making the bordered matrix below have char poly
// prod (t - lambda_k): zeta_j = prod_k (mu_j - lambda_k) / prod_{k!=j} (mu_j - mu_k).
inline std::vector<Complex> zeta_values(const std::vector<Complex>& mu,
                                        const std::vector<Complex>& lambda) {
    if (lambda.size() != mu.size() + 1) throw std::invalid_argument("zeta_values: size mismatch");
    detail::check_gl_genericity(mu, lambda);
    std::vector<Complex> zeta(mu.size());
    for (std::size_t j = 0; j < mu.size(); ++j) {
        Complex num{1.0, 0.0}, den{1.0, 0.0};
        for (Complex l : lambda) num *= mu[j] - l;
        for (std::size_t k = 0; k < mu.size(); ++k)
            if (k != j) den *= mu[j] - mu[k];
        zeta[j] = num / den;
    }
    return zeta;
}

// The level-i solution point: diag(mu) bordered by last column -zeta_j / z_j,
// last row z_j, and corner w = sum lambda - sum mu.
inline MatrixC build_gl_point(const std::vector<Complex>& mu, const std::vector<Complex>& lambda,
                              const std::vector<Complex>& z) {
    const std::size_t i = mu.size();
    if (z.size() != i) throw std::invalid_argument("build_gl_point: coordinate count");
    for (Complex c : z)
        if (std::abs(c) == 0.0) throw GenericityError("build_gl_point: zero coordinate");
    const auto zeta = zeta_values(mu, lambda);
    MatrixC m(i + 1);
    Complex w{};
    for (Complex l : lambda) w += l;
    for (std::size_t k = 0; k < i; ++k) {
        m(k, k) = mu[k];
        m(k, i) = -zeta[k] / z[k];
        m(i, k) = z[k];
        w -= mu[k];
    }
    m(i, i) = w;
    return m;
}

// Invertible gamma with gamma M gamma^{-1} = diag(lambda), lambda in
// descending lexicographic order; columns of gamma^{-1} are the closed-form
// eigenvectors of the bordered matrix, last coordinate normalized to 1.
inline MatrixC gl_diagonalizer(const std::vector<Complex>& mu, const std::vector<Complex>& lambda,
                               const std::vector<Complex>& z) {
    const std::size_t i = mu.size();
    const auto zeta = zeta_values(mu, lambda);
    std::vector<Complex> lam = lambda;
    sort_lex_desc(lam);
    MatrixC v(i + 1);
    for (std::size_t m = 0; m < i + 1; ++m) {
        for (std::size_t j = 0; j < i; ++j) {
            const Complex y = -zeta[j] / z[j];
            v(j, m) = y / (lam[m] - mu[j]);
        }
        v(i, m) = 1.0;
    }
    return inverse(v);
}

// Fiber parametrization: start from the top-level solution point and undo the
// diagonalizers level by level.
inline MatrixC gamma_gl(const FiberTarget& c, const GlTorusPoint& z) {
    if (!c.kind.is_gl()) throw std::invalid_argument("gamma_gl: so target");
    const std::size_t n = c.kind.n;
    if (n < 2) throw std::invalid_argument("gamma_gl: need n >= 2");
    if (!in_omega(c)) throw GenericityError("gamma_gl: target outside the generic set");
    if (z.size() != n - 1) throw std::invalid_argument("gamma_gl: torus point has wrong depth");
    for (std::size_t i = 1; i < n; ++i) {
        if (z[i - 1].size() != i) throw std::invalid_argument("gamma_gl: torus level length");
        for (Complex v : z[i - 1])
            if (std::abs(v) == 0.0) throw GenericityError("gamma_gl: zero torus coordinate");
    }
    MatrixC x = embed(build_gl_point(c.levels[n - 2].data, c.levels[n - 1].data, z[n - 2]), n);
    for (std::size_t j = n - 2; j >= 1; --j) {
        const MatrixC g =
            embed_group(gl_diagonalizer(c.levels[j - 1].data, c.levels[j].data, z[j - 1]), n);
        x = inverse(g) * x * g;
    }
    return x;
}

// Level-by-level inverse of gamma_gl: read the border coordinates of each
// cutoff, then diagonalize it and continue.
inline GlTorusPoint gamma_gl_inverse(const MatrixC& x, const FiberTarget& c, double tol = 1e-6) {
    if (!c.kind.is_gl()) throw std::invalid_argument("gamma_gl_inverse: so target");
    const std::size_t n = c.kind.n;
    c.kind.validate_element(x);
    if (!in_omega(c)) throw GenericityError("gamma_gl_inverse: target outside the generic set");
    const double scale = std::max(1.0, x.max_abs());
    if (fiber_residual(x, c) > tol * scale)
        throw GenericityError("gamma_gl_inverse: input is off the fiber");

    GlTorusPoint z(n - 1);
    MatrixC y = x;
    for (std::size_t j = 1; j <= n - 1; ++j) {
        const MatrixC s = cutoff(y, j + 1);
        const std::vector<Complex>& mu = c.levels[j - 1].data;
        const auto zeta = zeta_values(mu, c.levels[j].data);
        // the j x j block must be diag(mu) by this stage
        for (std::size_t a = 0; a < j; ++a)
            for (std::size_t b = 0; b < j; ++b) {
                const Complex want = (a == b) ? mu[a] : Complex{};
                if (std::abs(s(a, b) - want) > tol * scale)
                    throw GenericityError("gamma_gl_inverse: cutoff not in solution form");
            }
        GlTorusLevel zl(j);
        for (std::size_t k = 0; k < j; ++k) {
            zl[k] = s(j, k);
            if (std::abs(zl[k]) <= 1e-10 * scale)
                throw GenericityError("gamma_gl_inverse: vanishing border coordinate");
            if (std::abs(s(k, j) + zeta[k] / zl[k]) > tol * scale)
                throw GenericityError("gamma_gl_inverse: border column mismatch");
        }
        z[j - 1] = zl;
        if (j < n - 1) {
            const MatrixC g = embed_group(gl_diagonalizer(mu, c.levels[j].data, zl), n);
            y = g * y * inverse(g);
        }
    }
    return z;
}

// Free transitive torus action on the fiber through its coordinates.
inline MatrixC torus_act_gl(const GlTorusPoint& zp, const MatrixC& x, const FiberTarget& c) {
    return gamma_gl(c, gl_torus_mul(zp, gamma_gl_inverse(x, c)));
}

} // namespace gz
