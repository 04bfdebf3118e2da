#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "gz/error.hpp"
#include "gz/matrix.hpp"

namespace gz {

// LU with partial pivoting.
struct LuDecomp {
    MatrixC lu;
    std::vector<std::size_t> perm;
    int sign = 1;
    bool singular = false;
};

inline LuDecomp lu_factor(MatrixC a) {
    const std::size_t n = a.size();
    LuDecomp f;
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(a(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double v = std::abs(a(r, k));
            if (v > best) { best = v; p = r; }
        }
        if (best == 0.0) { f.singular = true; continue; }
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
            std::swap(f.perm[k], f.perm[p]);
            f.sign = -f.sign;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const Complex m = a(r, k) / a(k, k);
            a(r, k) = m;
            if (m == Complex{}) continue;
            for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= m * a(k, c);
        }
    }
    f.lu = std::move(a);
    return f;
}

inline std::vector<Complex> lu_solve(const LuDecomp& f, const std::vector<Complex>& b) {
    const std::size_t n = f.lu.size();
    if (f.singular) throw NumericError("lu_solve: singular matrix");
    std::vector<Complex> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = b[f.perm[i]];
        for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * y[j];
        y[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex s = y[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= f.lu(i, j) * y[j];
        y[i] = s / f.lu(i, i);
    }
    return y;
}

inline Complex determinant(const MatrixC& a) {
    const LuDecomp f = lu_factor(a);
    if (f.singular) return Complex{};
    Complex d{static_cast<double>(f.sign), 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) d *= f.lu(i, i);
    return d;
}

inline MatrixC inverse(const MatrixC& a) {
    const std::size_t n = a.size();
    const LuDecomp f = lu_factor(a);
    if (f.singular) throw NumericError("inverse: singular matrix");
    MatrixC r(n);
    std::vector<Complex> e(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(e.begin(), e.end(), Complex{});
        e[c] = 1.0;
        const auto col = lu_solve(f, e);
        for (std::size_t i = 0; i < n; ++i) r(i, c) = col[i];
    }
    return r;
}

// g x g^{-1}
inline MatrixC conjugate(const MatrixC& g, const MatrixC& x) {
    return g * x * inverse(g);
}

// g x g^T, for complex orthogonal g
inline MatrixC conjugate_orthogonal(const MatrixC& g, const MatrixC& x) {
    return g * x * g.transpose();
}

// Null vector of a matrix of rank n-1, by full-pivot elimination.
inline std::vector<Complex> kernel_vector(MatrixC a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> col(n);
    std::iota(col.begin(), col.end(), std::size_t{0});
    // n-1 elimination steps with full pivoting; the last permuted column is free.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pr = k, pc = k;
        double best = -1.0;
        for (std::size_t r = k; r < n; ++r)
            for (std::size_t c = k; c < n; ++c) {
                const double v = std::abs(a(r, c));
                if (v > best) { best = v; pr = r; pc = c; }
            }
        if (pr != k)
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pr, c));
        if (pc != k) {
            for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, pc));
            std::swap(col[k], col[pc]);
        }
        if (best <= 0.0) continue;
        for (std::size_t r = k + 1; r < n; ++r) {
            const Complex m = a(r, k) / a(k, k);
            for (std::size_t c = k; c < n; ++c) a(r, c) -= m * a(k, c);
        }
    }
    // Back-substitute with the free variable set to 1.
    std::vector<Complex> y(n);
    y[n - 1] = 1.0;
    for (std::size_t i = n - 1; i-- > 0;) {
        Complex s{};
        for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * y[j];
        if (a(i, i) == Complex{}) throw NumericError("kernel_vector: rank deficiency above 1");
        y[i] = -s / a(i, i);
    }
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[col[i]] = y[i];
    return v;
}

} // namespace gz
