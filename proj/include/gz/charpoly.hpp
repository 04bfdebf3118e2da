#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gz/matrix.hpp"

namespace gz {

// Monic polynomial in t, coefficients ascending: coeffs[k] multiplies t^k,
// coeffs.back() == 1 exactly.
struct PolyC {
    std::vector<Complex> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    Complex eval(Complex t) const {
        Complex v{};
        for (std::size_t k = coeffs.size(); k-- > 0;) v = v * t + coeffs[k];
        return v;
    }

    std::vector<Complex> derivative_coeffs() const {
        std::vector<Complex> d;
        for (std::size_t k = 1; k < coeffs.size(); ++k)
            d.push_back(static_cast<double>(k) * coeffs[k]);
        return d;
    }
};

inline Complex eval_coeffs(const std::vector<Complex>& c, Complex t) {
    Complex v{};
    for (std::size_t k = c.size(); k-- > 0;) v = v * t + c[k];
    return v;
}

// Characteristic polynomial det(t - x) by the Faddeev-LeVerrier recursion.
inline PolyC char_poly(const MatrixC& x) {
    const std::size_t n = x.size();
    if (!x.all_finite()) throw std::invalid_argument("char_poly: non-finite entries");
    PolyC p;
    p.coeffs.assign(n + 1, Complex{});
    p.coeffs[n] = 1.0;
    MatrixC m = MatrixC::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const MatrixC xm = x * m;
        const Complex c = -xm.trace() / static_cast<double>(k);
        p.coeffs[n - k] = c;
        if (k < n) {
            m = xm;
            for (std::size_t i = 0; i < n; ++i) m(i, i) += c;
        }
    }
    return p;
}

inline PolyC poly_from_roots(const std::vector<Complex>& roots) {
    PolyC p;
    p.coeffs = {Complex{1.0, 0.0}};
    for (const Complex& r : roots) {
        p.coeffs.insert(p.coeffs.begin(), Complex{});
        for (std::size_t k = 0; k + 1 < p.coeffs.size(); ++k)
            p.coeffs[k] -= r * p.coeffs[k + 1];
    }
    return p;
}

// Elementary symmetric functions e_1..e_k from power sums p_1..p_k:
// k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
inline std::vector<Complex> elementary_from_power_sums(const std::vector<Complex>& p) {
    const std::size_t k = p.size();
    std::vector<Complex> e(k + 1);
    e[0] = 1.0;
    for (std::size_t m = 1; m <= k; ++m) {
        Complex s{};
        double sign = 1.0;
        for (std::size_t i = 1; i <= m; ++i) {
            s += sign * e[m - i] * p[i - 1];
            sign = -sign;
        }
        e[m] = s / static_cast<double>(m);
    }
    e.erase(e.begin());
    return e;
}

// Monic polynomial with elementary symmetric functions e of its roots:
// t^k - e1 t^{k-1} + e2 t^{k-2} - ...
inline PolyC monic_from_elementary(const std::vector<Complex>& e) {
    const std::size_t k = e.size();
    PolyC p;
    p.coeffs.assign(k + 1, Complex{});
    p.coeffs[k] = 1.0;
    double sign = -1.0;
    for (std::size_t m = 1; m <= k; ++m) {
        p.coeffs[k - m] = sign * e[m - 1];
        sign = -sign;
    }
    return p;
}

} // namespace gz
