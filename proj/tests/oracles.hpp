// Test-only oracles, independent of the library code paths they check.
#pragma once

#include <array>
#include <functional>

#include "gz/gz.hpp"

namespace oracle {

using gz::Complex;
using gz::MatrixC;

// Determinant by recursive cofactor expansion along the first row.
inline Complex det_cofactor(const MatrixC& a) {
    const std::size_t n = a.size();
    if (n == 0) return Complex{1.0, 0.0};
    if (n == 1) return a(0, 0);
    Complex s{};
    double sign = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        if (a(0, c) != Complex{}) {
            MatrixC minor(n - 1);
            for (std::size_t i = 1; i < n; ++i) {
                std::size_t jc = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == c) continue;
                    minor(i - 1, jc++) = a(i, j);
                }
            }
            s += sign * a(0, c) * det_cofactor(minor);
        }
        sign = -sign;
    }
    return s;
}

// Pfaffian by cofactor expansion along the first row.
inline Complex pfaffian_cofactor(const MatrixC& a) {
    const std::size_t n = a.size();
    if (n == 0) return Complex{1.0, 0.0};
    if (n == 2) return a(0, 1);
    Complex s{};
    double sign = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        if (a(0, k) != Complex{}) {
            MatrixC minor(n - 2);
            std::size_t ri = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == 0 || i == k) continue;
                std::size_t rj = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == 0 || j == k) continue;
                    minor(ri, rj++) = a(i, j);
                }
                ++ri;
            }
            s += sign * a(0, k) * pfaffian_cofactor(minor);
        }
        sign = -sign;
    }
    return s;
}

// Central finite difference of f at x along direction z.
inline Complex directional_derivative(const std::function<Complex(const MatrixC&)>& f,
                                      const MatrixC& x, const MatrixC& z, double h = 1e-6) {
    return (f(x + Complex{h, 0.0} * z) - f(x - Complex{h, 0.0} * z)) / Complex{2.0 * h, 0.0};
}

// Dimension of the centralizer of x in its algebra, by the rank of the linear
// map v -> [v, x] over a basis of the algebra.
inline std::size_t centralizer_dim(const gz::AlgebraKind& kind, const MatrixC& x) {
    const std::size_t n = x.size();
    std::vector<MatrixC> basis;
    if (kind.is_gl()) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                MatrixC e(n);
                e(i, j) = 1.0;
                basis.push_back(e);
            }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                MatrixC e(n);
                e(i, j) = 1.0;
                e(j, i) = -1.0;
                basis.push_back(e);
            }
    }
    std::vector<std::vector<Complex>> rows;
    for (const auto& e : basis) rows.push_back(gz::commutator(e, x).flat());
    const std::size_t rank = gz::numerical_rank(rows, 1e-9);
    return basis.size() - rank;
}

// Series exponential without scaling; usable for small norms only.
inline MatrixC exp_series(const MatrixC& x, int terms = 40) {
    MatrixC r = MatrixC::identity(x.size());
    MatrixC term = MatrixC::identity(x.size());
    for (int k = 1; k <= terms; ++k) {
        term = term * x * Complex{1.0 / k, 0.0};
        r += term;
    }
    return r;
}

// Max principal-angle distance between the spans of two families, via
// orthonormalization under the Hermitian inner product.
inline double subspace_distance(const std::vector<MatrixC>& a, const std::vector<MatrixC>& b) {
    auto orthonormalize = [](const std::vector<MatrixC>& fam) {
        std::vector<std::vector<Complex>> basis;
        for (const auto& m : fam) {
            std::vector<Complex> v = m.flat();
            for (const auto& u : basis) {
                Complex proj{};
                for (std::size_t k = 0; k < v.size(); ++k) proj += std::conj(u[k]) * v[k];
                for (std::size_t k = 0; k < v.size(); ++k) v[k] -= proj * u[k];
            }
            double nrm = 0.0;
            for (const auto& c : v) nrm += std::norm(c);
            nrm = std::sqrt(nrm);
            if (nrm > 1e-9) {
                for (auto& c : v) c /= nrm;
                basis.push_back(v);
            }
        }
        return basis;
    };
    const auto ba = orthonormalize(a);
    const auto bb = orthonormalize(b);
    if (ba.empty() || bb.empty() || ba.front().size() != bb.front().size()) return 1.0;
    const std::size_t dim = ba.front().size();
    // distance = max over u in A of || u - P_B u ||
    double worst = 0.0;
    auto residual = [&](const std::vector<Complex>& u, const std::vector<std::vector<Complex>>& onb) {
        std::vector<Complex> v = u;
        for (const auto& w : onb) {
            Complex proj{};
            for (std::size_t k = 0; k < dim; ++k) proj += std::conj(w[k]) * v[k];
            for (std::size_t k = 0; k < dim; ++k) v[k] -= proj * w[k];
        }
        double nrm = 0.0;
        for (const auto& c : v) nrm += std::norm(c);
        return std::sqrt(nrm);
    };
    for (const auto& u : ba) worst = std::max(worst, residual(u, bb));
    for (const auto& u : bb) worst = std::max(worst, residual(u, ba));
    return worst;
}

} // namespace oracle
