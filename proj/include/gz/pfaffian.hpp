#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gz/matrix.hpp"

namespace gz {

// Pfaffian of an even skew-symmetric matrix by skew Gaussian elimination
// with partial pivoting (Parlett-Reid style), O(n^3).
inline Complex pfaffian(MatrixC a) {
    const std::size_t n = a.size();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
    require_skew(a, "pfaffian");
    if (n == 0) return Complex{1.0, 0.0};

    Complex pf{1.0, 0.0};
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t kp = k + 1;
        double best = std::abs(a(k + 1, k));
        for (std::size_t r = k + 2; r < n; ++r) {
            const double v = std::abs(a(r, k));
            if (v > best) { best = v; kp = r; }
        }
        if (kp != k + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k + 1, c), a(kp, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k + 1), a(r, kp));
            pf = -pf;
        }
        if (a(k + 1, k) == Complex{}) return Complex{};
        pf *= a(k, k + 1);
        if (k + 2 < n) {
            std::vector<Complex> tau(n - k - 2);
            for (std::size_t c = k + 2; c < n; ++c) tau[c - k - 2] = a(k, c) / a(k, k + 1);
            for (std::size_t r = k + 2; r < n; ++r)
                for (std::size_t c = k + 2; c < n; ++c)
                    a(r, c) += tau[r - k - 2] * a(c, k + 1) - a(r, k + 1) * tau[c - k - 2];
        }
    }
    return pf;
}

namespace detail {

inline MatrixC delete_rows_cols(const MatrixC& a, std::size_t p, std::size_t q) {
    const std::size_t n = a.size();
    MatrixC r(n - 2);
    std::size_t ri = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == p || i == q) continue;
        std::size_t rj = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == p || j == q) continue;
            r(ri, rj) = a(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

} // namespace detail

// Trace-form gradient of the Pfaffian via sub-Pfaffian cofactors:
// G_{jk} = 1/2 (-1)^{j+k} Pf(a with rows/cols j,k deleted) for j < k, G skew.
// For invertible a this equals 1/2 Pf(a) a^{-1}; the cofactor form is also
// defined at singular a.
inline MatrixC pfaffian_gradient(const MatrixC& a) {
    const std::size_t n = a.size();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian_gradient: odd dimension");
    require_skew(a, "pfaffian_gradient");
    MatrixC g(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            const double sign = ((j + k) % 2 == 0) ? 1.0 : -1.0;
            const Complex v = 0.5 * sign * pfaffian(detail::delete_rows_cols(a, j, k));
            g(j, k) = v;
            g(k, j) = -v;
        }
    return g;
}

} // namespace gz
