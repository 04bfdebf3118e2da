#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gz {

using Complex = std::complex<double>;

inline bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Dense square complex matrix, row-major.  Ambient container for algebra
// elements, group elements and tangent vectors.
class MatrixC {
public:
    MatrixC() = default;
    explicit MatrixC(std::size_t n) : n_(n), a_(n * n) {}

    static MatrixC identity(std::size_t n) {
        MatrixC m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static MatrixC from_rows(const std::vector<std::vector<Complex>>& rows) {
        MatrixC m(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != rows.size())
                throw std::invalid_argument("MatrixC::from_rows: not square");
            for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t size() const { return n_; }

    Complex& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    Complex operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    const std::vector<Complex>& flat() const { return a_; }

    MatrixC& operator+=(const MatrixC& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    MatrixC& operator-=(const MatrixC& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    MatrixC& operator*=(Complex s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend MatrixC operator+(MatrixC a, const MatrixC& b) { return a += b; }
    friend MatrixC operator-(MatrixC a, const MatrixC& b) { return a -= b; }
    friend MatrixC operator*(MatrixC a, Complex s) { return a *= s; }
    friend MatrixC operator*(Complex s, MatrixC a) { return a *= s; }
    friend MatrixC operator-(MatrixC a) { return a *= Complex{-1.0, 0.0}; }

    friend MatrixC operator*(const MatrixC& a, const MatrixC& b) {
        a.check_same(b);
        const std::size_t n = a.n_;
        MatrixC r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) continue;
                for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    bool operator==(const MatrixC&) const = default;

    Complex trace() const {
        Complex t{};
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    MatrixC transpose() const {
        MatrixC r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& v : a_) s += std::norm(v);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    bool all_finite() const {
        for (const auto& v : a_)
            if (!finite(v)) return false;
        return true;
    }

private:
    void check_same(const MatrixC& o) const {
        if (n_ != o.n_) throw std::invalid_argument("MatrixC: size mismatch");
    }

    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

// Top-left level x level submatrix; level is 1-based.
inline MatrixC cutoff(const MatrixC& x, std::size_t level) {
    if (level < 1 || level > x.size())
        throw std::invalid_argument("cutoff: level out of range");
    MatrixC y(level);
    for (std::size_t i = 0; i < level; ++i)
        for (std::size_t j = 0; j < level; ++j) y(i, j) = x(i, j);
    return y;
}

// y in the top-left corner of an n x n matrix, zeros elsewhere.
inline MatrixC embed(const MatrixC& y, std::size_t n) {
    if (y.size() > n) throw std::invalid_argument("embed: source larger than target");
    MatrixC x(n);
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) x(i, j) = y(i, j);
    return x;
}

// y in the top-left corner, identity on the remaining diagonal (group embedding).
inline MatrixC embed_group(const MatrixC& y, std::size_t n) {
    MatrixC x = embed(y, n);
    for (std::size_t i = y.size(); i < n; ++i) x(i, i) = 1.0;
    return x;
}

inline MatrixC commutator(const MatrixC& a, const MatrixC& b) {
    return a * b - b * a;
}

inline double skew_defect(const MatrixC& x) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            m = std::max(m, std::abs(x(i, j) + x(j, i)));
    return m;
}

// tau < 0 selects the default threshold 1e-10 * max|x|.
inline bool is_skew(const MatrixC& x, double tau = -1.0) {
    if (tau < 0.0) tau = 1e-10 * x.max_abs();
    return skew_defect(x) <= tau;
}

inline void require_skew(const MatrixC& x, const char* what) {
    if (!is_skew(x)) throw std::invalid_argument(std::string(what) + ": matrix is not skew-symmetric");
}

inline double max_abs_diff(const MatrixC& a, const MatrixC& b) {
    return (a - b).max_abs();
}

} // namespace gz
