#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "gz/charpoly.hpp"
#include "gz/error.hpp"
#include "gz/matrix.hpp"

namespace gz {

// Lexicographic order on C: compare real parts, then imaginary parts.  Real
// parts count as equal when they differ by no more than 1e-9 * scale, so the
// order is stable under roundoff.
inline bool lex_greater(Complex a, Complex b, double re_slack = 1e-9) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (std::abs(a.real() - b.real()) <= re_slack * scale) return a.imag() > b.imag();
    return a.real() > b.real();
}

inline bool lex_positive(Complex a) { return lex_greater(a, -a); }

// Representative of {a, -a} that is larger in the lexicographic order.
inline Complex lex_normalize_sign(Complex a) { return lex_positive(a) ? a : -a; }

inline void sort_lex_desc(std::vector<Complex>& v) {
    std::stable_sort(v.begin(), v.end(),
                     [](Complex a, Complex b) { return lex_greater(a, b); });
}

namespace detail {

inline std::vector<Complex> quadratic_roots(Complex b, Complex c) {
    // roots of t^2 + b t + c, cancellation-safe branch choice
    Complex sq = std::sqrt(b * b - 4.0 * c);
    if ((std::conj(b) * sq).real() < 0.0) sq = -sq;
    const Complex q = -0.5 * (b + sq);
    if (std::abs(q) == 0.0) return {q, q};
    return {q, c / q};
}

} // namespace detail

// All roots of a monic polynomial by Aberth-Ehrlich simultaneous iteration.
// Exact zero constant terms are deflated first, so nilpotent spectra are exact.
inline std::vector<Complex> poly_roots(const PolyC& p, double tol = 1e-12, int max_iter = 200) {
    std::vector<Complex> c = p.coeffs;
    std::vector<Complex> roots;
    while (c.size() > 1 && c.front() == Complex{}) {
        roots.push_back(Complex{});
        c.erase(c.begin());
    }
    const std::size_t m = c.size() - 1;
    if (m == 0) return roots;
    if (m == 1) {
        roots.push_back(-c[0]);
        return roots;
    }
    if (m == 2) {
        for (Complex r : detail::quadratic_roots(c[1], c[0])) roots.push_back(r);
        return roots;
    }

    std::vector<Complex> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);

    double radius = 0.0;
    for (std::size_t k = 0; k < m; ++k) radius = std::max(radius, std::abs(c[k]));
    radius = 1.0 + radius;

    std::mt19937_64 restart_rng(0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<Complex> z(m);
        for (std::size_t k = 0; k < m; ++k) {
            double phase = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.37) / static_cast<double>(m);
            if (attempt > 0) phase += 2.0 * std::numbers::pi * unit(restart_rng);
            const double r = (attempt == 0) ? 0.6 * radius : radius * (0.2 + 0.8 * unit(restart_rng));
            z[k] = r * Complex{std::cos(phase), std::sin(phase)};
        }
        bool converged = false;
        for (int it = 0; it < max_iter; ++it) {
            double max_step = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const Complex pv = eval_coeffs(c, z[k]);
                if (std::abs(pv) == 0.0) continue;
                Complex dv = eval_coeffs(d, z[k]);
                if (std::abs(dv) == 0.0) dv = Complex{tol, tol};
                const Complex newton = pv / dv;
                Complex sum{};
                for (std::size_t j = 0; j < m; ++j) {
                    if (j == k) continue;
                    const Complex diff = z[k] - z[j];
                    if (std::abs(diff) == 0.0) continue;
                    sum += 1.0 / diff;
                }
                Complex denom = 1.0 - newton * sum;
                if (std::abs(denom) == 0.0) denom = Complex{tol, 0.0};
                const Complex step = newton / denom;
                z[k] -= step;
                max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
            }
            if (max_step <= tol) {
                converged = true;
                break;
            }
        }
        if (converged) {
            for (Complex r : z) roots.push_back(r);
            return roots;
        }
    }
    throw NumericError("poly_roots: Aberth iteration did not converge");
}

// Eigenvalues with multiplicity, in descending lexicographic order.
inline std::vector<Complex> eigenvalues(const MatrixC& x) {
    std::vector<Complex> ev = poly_roots(char_poly(x));
    sort_lex_desc(ev);
    return ev;
}

} // namespace gz
