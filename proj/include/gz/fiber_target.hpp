#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "gz/algebra.hpp"
#include "gz/eigen.hpp"
#include "gz/error.hpp"
#include "gz/invariants.hpp"

namespace gz {

// Canonical spectral data for one level.
//   gl level i : data = the i eigenvalues, descending lexicographic.
//   so level i : data = the floor(i/2) block parameters a_j, each the
//                lexicographically larger of {a, -a}, sorted descending.
//                Even levels carry the Pfaffian sign: Pf = pf_sign * prod a_j.
struct FiberLevel {
    std::vector<Complex> data;
    int pf_sign = +1;
};

struct FiberTarget {
    AlgebraKind kind;
    std::vector<FiberLevel> levels;   // levels[i-1] holds level i, i = 1..n

    void validate() const {
        if (levels.size() != kind.n) throw std::invalid_argument("fiber target: wrong level count");
        for (std::size_t i = 1; i <= kind.n; ++i) {
            const std::size_t want = kind.is_gl() ? i : i / 2;
            if (levels[i - 1].data.size() != want)
                throw std::invalid_argument("fiber target: wrong data length at a level");
            if (levels[i - 1].pf_sign != 1 && levels[i - 1].pf_sign != -1)
                throw std::invalid_argument("fiber target: Pfaffian sign must be +1 or -1");
        }
    }
};

// Normalize raw spectral data into the canonical order above.
inline FiberTarget canonicalize(FiberTarget c) {
    c.validate();
    for (std::size_t i = 1; i <= c.kind.n; ++i) {
        FiberLevel& lv = c.levels[i - 1];
        if (c.kind.is_gl()) {
            sort_lex_desc(lv.data);
            lv.pf_sign = +1;
        } else {
            int flips = 0;
            for (Complex& a : lv.data) {
                const Complex norm = lex_normalize_sign(a);
                if (norm != a) ++flips;
                a = norm;
            }
            sort_lex_desc(lv.data);
            if (i % 2 == 0 && flips % 2 == 1) lv.pf_sign = -lv.pf_sign;
            if (i % 2 == 1) lv.pf_sign = +1;
        }
    }
    return c;
}

// Block parameters as they appear in the canonical matrix representative:
// even so levels with negative Pfaffian sign flip the last block.
inline std::vector<Complex> so_actual_params(const FiberTarget& c, std::size_t level) {
    std::vector<Complex> a = c.levels[level - 1].data;
    if (level % 2 == 0 && c.levels[level - 1].pf_sign == -1 && !a.empty()) a.back() = -a.back();
    return a;
}

// Canonical matrix representative of an so level: direct sum of a_j J blocks,
// plus a trailing zero for odd levels.
inline MatrixC canonical_so_matrix(const FiberTarget& c, std::size_t level) {
    if (!c.kind.is_so()) throw std::invalid_argument("canonical_so_matrix: gl target");
    const auto a = so_actual_params(c, level);
    MatrixC h(level);
    for (std::size_t j = 0; j < a.size(); ++j) {
        h(2 * j, 2 * j + 1) = a[j];
        h(2 * j + 1, 2 * j) = -a[j];
    }
    return h;
}

// Eigenvalues of one so level: {+-i a_j}, plus 0 at odd levels.
inline std::vector<Complex> so_level_spectrum(const FiberLevel& lv, std::size_t level) {
    std::vector<Complex> s;
    for (Complex a : lv.data) {
        s.push_back(Complex{0.0, 1.0} * a);
        s.push_back(Complex{0.0, -1.0} * a);
    }
    if (level % 2 == 1) s.push_back(Complex{});
    sort_lex_desc(s);
    return s;
}

// Values of the generator family on the target, in generator order.
inline std::vector<Complex> target_invariant_values(const FiberTarget& c) {
    c.validate();
    std::vector<Complex> out;
    for (std::size_t i = 1; i <= c.kind.n; ++i) {
        const FiberLevel& lv = c.levels[i - 1];
        if (c.kind.is_gl()) {
            // power sums of the eigenvalues
            std::vector<Complex> pw(lv.data.size(), Complex{1.0, 0.0});
            for (std::size_t e = 1; e <= i; ++e) {
                Complex s{};
                for (std::size_t k = 0; k < lv.data.size(); ++k) {
                    pw[k] *= lv.data[k];
                    s += pw[k];
                }
                out.push_back(s);
            }
        } else {
            const std::size_t l = i / 2;
            // tr(x^{2j}) = 2 (-1)^j sum_k a_k^{2j}
            std::vector<Complex> sq(lv.data.size());
            for (std::size_t k = 0; k < lv.data.size(); ++k) sq[k] = lv.data[k] * lv.data[k];
            std::vector<Complex> pw(lv.data.size(), Complex{1.0, 0.0});
            double sign = -1.0;
            const std::size_t traces = (i % 2 == 0) ? l - 1 : l;
            for (std::size_t j = 1; j <= traces; ++j) {
                Complex s{};
                for (std::size_t k = 0; k < lv.data.size(); ++k) {
                    pw[k] *= sq[k];
                    s += pw[k];
                }
                out.push_back(2.0 * sign * s);
                sign = -sign;
            }
            if (i % 2 == 0 && l >= 1) {
                Complex pf{1.0, 0.0};
                for (Complex a : lv.data) pf *= a;
                out.push_back(static_cast<double>(lv.pf_sign) * pf);
            }
        }
    }
    return out;
}

namespace detail {

// Pair the spectrum of a skew matrix into {+-i a} pairs (plus one zero at odd
// sizes) and return the canonical a parameters with the Pfaffian-free sign.
inline std::vector<Complex> pair_skew_spectrum(std::vector<Complex> ev, double tol_scale) {
    std::vector<Complex> params;
    std::vector<bool> used(ev.size(), false);
    if (ev.size() % 2 == 1) {
        // remove the eigenvalue closest to zero
        std::size_t zi = 0;
        for (std::size_t k = 1; k < ev.size(); ++k)
            if (std::abs(ev[k]) < std::abs(ev[zi])) zi = k;
        if (std::abs(ev[zi]) > tol_scale)
            throw GenericityError("skew spectrum: no zero eigenvalue at odd size");
        used[zi] = true;
    }
    for (std::size_t k = 0; k < ev.size(); ++k) {
        if (used[k]) continue;
        used[k] = true;
        std::size_t best = ev.size();
        double bestv = 0.0;
        for (std::size_t m = 0; m < ev.size(); ++m) {
            if (used[m]) continue;
            const double v = std::abs(ev[k] + ev[m]);
            if (best == ev.size() || v < bestv) { best = m; bestv = v; }
        }
        if (best == ev.size() || bestv > tol_scale)
            throw GenericityError("skew spectrum: eigenvalues do not pair into +-");
        used[best] = true;
        // lambda = i a  =>  a = -i lambda
        params.push_back(lex_normalize_sign(Complex{0.0, -1.0} * ev[k]));
    }
    sort_lex_desc(params);
    return params;
}

} // namespace detail

// Spectral data of every cutoff, in canonical form.  Requires pairable
// spectra for so; Pfaffian signs are read off the cutoffs directly.
inline FiberTarget target_from_element(const AlgebraKind& kind, const MatrixC& x,
                                       double tol = 1e-6) {
    kind.validate_element(x);
    FiberTarget c;
    c.kind = kind;
    c.levels.resize(kind.n);
    for (std::size_t i = 1; i <= kind.n; ++i) {
        const MatrixC xi = cutoff(x, i);
        std::vector<Complex> ev = eigenvalues(xi);
        FiberLevel& lv = c.levels[i - 1];
        if (kind.is_gl()) {
            lv.data = std::move(ev);
        } else {
            const double scale = std::max(1.0, xi.max_abs());
            lv.data = detail::pair_skew_spectrum(std::move(ev), tol * scale);
            if (i % 2 == 0 && !lv.data.empty()) {
                Complex prod{1.0, 0.0};
                for (Complex a : lv.data) prod *= a;
                const Complex pf = pfaffian(xi);
                lv.pf_sign = ((pf / prod).real() >= 0.0) ? +1 : -1;
            }
        }
    }
    return canonicalize(c);
}

// Inverse of target_invariant_values on regular semisimple data.
inline FiberTarget target_from_invariant_values(const AlgebraKind& kind,
                                                const std::vector<Complex>& values) {
    if (values.size() != kind.num_invariants())
        throw std::invalid_argument("target_from_invariant_values: wrong length");
    FiberTarget c;
    c.kind = kind;
    c.levels.resize(kind.n);
    std::size_t pos = 0;
    for (std::size_t i = 1; i <= kind.n; ++i) {
        const std::size_t r = kind.rank(i);
        FiberLevel& lv = c.levels[i - 1];
        if (kind.is_gl()) {
            const std::vector<Complex> pw(values.begin() + pos, values.begin() + pos + r);
            pos += r;
            lv.data = poly_roots(monic_from_elementary(elementary_from_power_sums(pw)));
        } else {
            if (r == 0) continue;
            const std::size_t traces = (i % 2 == 0) ? r - 1 : r;
            // power sums of the squared parameters
            std::vector<Complex> pw(traces);
            double sign = -1.0;
            for (std::size_t j = 0; j < traces; ++j) {
                pw[j] = sign * 0.5 * values[pos + j];
                sign = -sign;
            }
            Complex pf{};
            if (i % 2 == 0) pf = values[pos + r - 1];
            pos += r;
            // elementary symmetric functions of the squared parameters; at
            // even levels the top one is the squared Pfaffian.
            std::vector<Complex> e = elementary_from_power_sums(pw);
            if (i % 2 == 0) e.push_back(pf * pf);
            std::vector<Complex> sq = poly_roots(monic_from_elementary(e));
            lv.data.clear();
            for (Complex y : sq) lv.data.push_back(lex_normalize_sign(std::sqrt(y)));
            if (i % 2 == 0) {
                Complex prod{1.0, 0.0};
                for (Complex a : lv.data) prod *= a;
                lv.pf_sign = ((pf / prod).real() >= 0.0) ? +1 : -1;
            }
        }
    }
    return canonicalize(c);
}

// Membership in the generic target set: every level regular semisimple and
// adjacent levels spectrally disjoint.
inline bool in_omega(const FiberTarget& c, double tol = 1e-6) {
    c.validate();
    std::vector<std::vector<Complex>> spectra(c.kind.n);
    for (std::size_t i = 1; i <= c.kind.n; ++i)
        spectra[i - 1] = c.kind.is_gl() ? c.levels[i - 1].data
                                        : so_level_spectrum(c.levels[i - 1], i);
    for (std::size_t i = 1; i <= c.kind.n; ++i) {
        const auto& s = spectra[i - 1];
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                if (std::abs(s[a] - s[b]) <= tol) return false;
        if (i >= 2)
            for (Complex u : spectra[i - 2])
                for (Complex v : s)
                    if (std::abs(u - v) <= tol) return false;
    }
    return true;
}

inline bool element_in_omega(const AlgebraKind& kind, const MatrixC& x, double tol = 1e-6) {
    kind.validate_element(x);
    std::vector<std::vector<Complex>> spectra(kind.n);
    for (std::size_t i = 1; i <= kind.n; ++i) spectra[i - 1] = eigenvalues(cutoff(x, i));
    for (std::size_t i = 1; i <= kind.n; ++i) {
        const auto& s = spectra[i - 1];
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                if (std::abs(s[a] - s[b]) <= tol) return false;
        if (i >= 2)
            for (Complex u : spectra[i - 2])
                for (Complex v : s)
                    if (std::abs(u - v) <= tol) return false;
    }
    return true;
}

} // namespace gz
