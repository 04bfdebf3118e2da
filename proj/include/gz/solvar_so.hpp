#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "gz/eigen.hpp"
#include "gz/error.hpp"
#include "gz/fiber_target.hpp"
#include "gz/linsolve.hpp"
#include "gz/moment.hpp"
#include "gz/pfaffian.hpp"

namespace gz {

// A complex SO(2) element in quadric coordinates (c, s), c^2 + s^2 = 1,
// realized as the block [[c, s], [-s, c]].
struct Rotation {
    Complex c{1.0, 0.0};
    Complex s{0.0, 0.0};

    static Rotation from_angle(Complex theta) { return {std::cos(theta), std::sin(theta)}; }

    double quadric_defect() const { return std::abs(c * c + s * s - 1.0); }

    Rotation inverse() const { return {c, -s}; }

    friend Rotation operator*(const Rotation& a, const Rotation& b) {
        return {a.c * b.c - a.s * b.s, a.c * b.s + a.s * b.c};
    }

    bool operator==(const Rotation&) const = default;
};

// Torus coordinates for an so fiber: levels[i-2] holds the r_i rotations of
// level i, i = 2..n-1.
using SoTorusLevel = std::vector<Rotation>;
using SoTorusPoint = std::vector<SoTorusLevel>;

inline SoTorusPoint so_torus_identity(const AlgebraKind& kind) {
    SoTorusPoint z(kind.n >= 3 ? kind.n - 2 : 0);
    for (std::size_t i = 2; i + 1 <= kind.n; ++i) z[i - 2].assign(kind.rank(i), Rotation{});
    return z;
}

inline SoTorusPoint so_torus_mul(const SoTorusPoint& a, const SoTorusPoint& b) {
    if (a.size() != b.size()) throw std::invalid_argument("so torus: size mismatch");
    SoTorusPoint r = a;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (a[i].size() != b[i].size()) throw std::invalid_argument("so torus: level mismatch");
        for (std::size_t k = 0; k < r[i].size(); ++k) r[i][k] = a[i][k] * b[i][k];
    }
    return r;
}

inline void validate_so_torus(const AlgebraKind& kind, const SoTorusPoint& z, double tol = 1e-8) {
    const std::size_t want = kind.n >= 3 ? kind.n - 2 : 0;
    if (z.size() != want) throw std::invalid_argument("so torus point has wrong depth");
    for (std::size_t i = 2; i + 1 <= kind.n; ++i) {
        if (z[i - 2].size() != kind.rank(i))
            throw std::invalid_argument("so torus level has wrong length");
        for (const Rotation& r : z[i - 2])
            if (r.quadric_defect() > tol)
                throw std::invalid_argument("so torus coordinate off the unit quadric");
    }
}

// Rotations embedded as a block-diagonal special orthogonal matrix acting on
// the first 2l coordinates of an ambient space.
inline MatrixC embed_rotations(const SoTorusLevel& z, std::size_t ambient) {
    MatrixC g = MatrixC::identity(ambient);
    for (std::size_t j = 0; j < z.size(); ++j) {
        g(2 * j, 2 * j) = z[j].c;
        g(2 * j, 2 * j + 1) = z[j].s;
        g(2 * j + 1, 2 * j) = -z[j].s;
        g(2 * j + 1, 2 * j + 1) = z[j].c;
    }
    return g;
}

// Derived data for extending the canonical level-i element to a prescribed
// orbit one level up: the quadric constants d_j, and for even target levels
// the fixed corner coordinate carrying the Pfaffian sign.
struct SoSolutionData {
    std::size_t level = 0;            // i: extension so(i) -> so(i+1)
    std::vector<Complex> a;           // actual block values of h at level i
    std::vector<Complex> b;           // canonical parameters of the target level
    int target_pf_sign = +1;          // even target level only
    std::vector<Complex> d;           // quadric constants, one per level-i block
    Complex z_corner{};               // even target level only
    bool even_target = false;
};

namespace detail {

inline void check_so_genericity(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double scale = 1.0;
    for (Complex v : a) scale = std::max(scale, std::abs(v));
    for (Complex v : b) scale = std::max(scale, std::abs(v));
    const double floor = 1e-10 * scale;
    for (Complex v : a)
        if (std::abs(v) <= floor) throw GenericityError("solution variety: zero block parameter");
    for (Complex v : b)
        if (std::abs(v) <= floor) throw GenericityError("solution variety: zero target parameter");
    for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t q = p + 1; q < a.size(); ++q)
            if (std::abs(a[p] - a[q]) <= floor || std::abs(a[p] + a[q]) <= floor)
                throw GenericityError("solution variety: repeated block parameter");
    for (std::size_t p = 0; p < b.size(); ++p)
        for (std::size_t q = p + 1; q < b.size(); ++q)
            if (std::abs(b[p] - b[q]) <= floor || std::abs(b[p] + b[q]) <= floor)
                throw GenericityError("solution variety: repeated target parameter");
    for (Complex u : a)
        for (Complex v : b)
            if (std::abs(u - v) <= floor || std::abs(u + v) <= floor)
                throw GenericityError("solution variety: shared adjacent eigenvalue");
}

} // namespace detail

// Quadric constants for the extension of level i to level i+1 of the target.
//   odd target  (i = 2l even):  d_j = prod_k (b_k^2 - a_j^2) / prod_{k!=j} (a_k^2 - a_j^2)
//   even target (i = 2l+1 odd): d_j = prod_k (b_k^2 - a_j^2)
//                                     / ( -a_j^2 prod_{k!=j} (a_k^2 - a_j^2) )
//                               and z_corner^2 = prod b^2 / prod a^2, its sign
//                               fixed by the target Pfaffian.
inline SoSolutionData so_solution_data(const FiberTarget& c, std::size_t level) {
    if (!c.kind.is_so()) throw std::invalid_argument("so_solution_data: gl target");
    if (level < 2 || level + 1 > c.kind.n)
        throw std::invalid_argument("so_solution_data: level out of range");
    SoSolutionData sd;
    sd.level = level;
    sd.a = so_actual_params(c, level);
    sd.b = c.levels[level].data;
    sd.even_target = (level % 2 == 1);
    sd.target_pf_sign = c.levels[level].pf_sign;
    detail::check_so_genericity(sd.a, sd.b);

    const std::size_t l = sd.a.size();
    sd.d.resize(l);
    for (std::size_t j = 0; j < l; ++j) {
        const Complex aj2 = sd.a[j] * sd.a[j];
        Complex num{1.0, 0.0}, den{1.0, 0.0};
        for (Complex bk : sd.b) num *= bk * bk - aj2;
        for (std::size_t k = 0; k < l; ++k)
            if (k != j) den *= sd.a[k] * sd.a[k] - aj2;
        if (sd.even_target) den *= -aj2;
        sd.d[j] = num / den;
        if (std::abs(sd.d[j]) == 0.0)
            throw GenericityError("so_solution_data: vanishing quadric constant");
    }
    if (sd.even_target) {
        Complex num{1.0, 0.0}, den{1.0, 0.0};
        for (Complex bk : sd.b) num *= bk * bk;
        for (Complex ak : sd.a) den *= ak * ak;
        sd.z_corner = std::sqrt(num / den);
    }
    return sd;
}

// Skew extension of the canonical level element: border coordinates rotated
// from the base point (sqrt(d_j), 0) on each quadric; even targets add the
// fixed corner entry.  The Pfaffian sign is resolved by one evaluation.
inline MatrixC build_so_point(const SoSolutionData& sd, const SoTorusLevel& g) {
    const std::size_t i = sd.level;
    const std::size_t l = sd.a.size();
    if (g.size() != l) throw std::invalid_argument("build_so_point: rotation count");
    for (const Rotation& r : g)
        if (r.quadric_defect() > 1e-8)
            throw std::invalid_argument("build_so_point: rotation off the unit quadric");

    MatrixC x(i + 1);
    for (std::size_t j = 0; j < l; ++j) {
        x(2 * j, 2 * j + 1) = sd.a[j];
        x(2 * j + 1, 2 * j) = -sd.a[j];
        const Complex base = std::sqrt(sd.d[j]);
        const Complex z1 = g[j].c * base;
        const Complex z2 = -g[j].s * base;
        x(2 * j, i) = z1;
        x(i, 2 * j) = -z1;
        x(2 * j + 1, i) = z2;
        x(i, 2 * j + 1) = -z2;
    }
    if (sd.even_target) {
        Complex zc = sd.z_corner;
        x(i - 1, i) = zc;
        x(i, i - 1) = -zc;
        Complex prod_b{1.0, 0.0};
        for (Complex bk : sd.b) prod_b *= bk;
        const Complex want = static_cast<double>(sd.target_pf_sign) * prod_b;
        if (std::abs(pfaffian(x) - want) > std::abs(pfaffian(x) + want)) {
            zc = -zc;
            x(i - 1, i) = zc;
            x(i, i - 1) = -zc;
        }
    }
    return x;
}

// Special orthogonal q with q x q^T in canonical block form: parameters the
// lexicographically positive representatives in descending order, the last
// block sign-flipped when needed to keep det q = 1 (even size) and therefore
// the Pfaffian unchanged.
inline MatrixC block_diagonalize(const MatrixC& x) {
    const std::size_t m = x.size();
    require_skew(x, "block_diagonalize");
    const double scale = std::max(1.0, x.max_abs());
    std::vector<Complex> params = detail::pair_skew_spectrum(eigenvalues(x), 1e-6 * scale);

    MatrixC p(m);
    const Complex inv_sqrt2{1.0 / std::sqrt(2.0), 0.0};
    for (std::size_t j = 0; j < params.size(); ++j) {
        MatrixC mp = x, mm = x;
        const Complex lam = Complex{0.0, 1.0} * params[j];
        for (std::size_t k = 0; k < m; ++k) {
            mp(k, k) -= lam;
            mm(k, k) += lam;
        }
        std::vector<Complex> vp = kernel_vector(mp);
        std::vector<Complex> vm = kernel_vector(mm);
        Complex gram{};
        double np = 0.0, nm = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            gram += vp[k] * vm[k];
            np += std::norm(vp[k]);
            nm += std::norm(vm[k]);
        }
        if (std::abs(gram) < 1e-10 * std::sqrt(np * nm))
            throw NumericError("block_diagonalize: degenerate eigenvector pairing");
        for (std::size_t k = 0; k < m; ++k) {
            const Complex u = (vp[k] + vm[k] / gram) * inv_sqrt2;
            const Complex w = (vp[k] - vm[k] / gram) * inv_sqrt2 / Complex{0.0, 1.0};
            p(k, 2 * j) = u;
            p(k, 2 * j + 1) = w;
        }
    }
    if (m % 2 == 1) {
        std::vector<Complex> v0 = kernel_vector(x);
        Complex q0{};
        for (Complex v : v0) q0 += v * v;
        if (std::abs(q0) == 0.0) throw NumericError("block_diagonalize: isotropic kernel vector");
        const Complex s = std::sqrt(q0);
        for (std::size_t k = 0; k < m; ++k) p(k, m - 1) = v0[k] / s;
    }

    const Complex det = determinant(p);
    if (std::abs(det + 1.0) < std::abs(det - 1.0)) {
        if (m % 2 == 1) {
            for (std::size_t k = 0; k < m; ++k) p(k, m - 1) = -p(k, m - 1);
        } else {
            const std::size_t j = params.size() - 1;
            for (std::size_t k = 0; k < m; ++k) std::swap(p(k, 2 * j), p(k, 2 * j + 1));
        }
    }
    return p.transpose();
}

// Base conjugator p_{i,i+1}: carries the identity-rotation solution point into
// the canonical representative of the level-(i+1) orbit.
inline MatrixC base_conjugator(const FiberTarget& c, std::size_t level) {
    const SoSolutionData sd = so_solution_data(c, level);
    const MatrixC base = build_so_point(sd, SoTorusLevel(sd.a.size()));
    const MatrixC p = block_diagonalize(base);
    const MatrixC target = canonical_so_matrix(c, level + 1);
    const double scale = std::max(1.0, base.max_abs());
    if (max_abs_diff(conjugate_orthogonal(p, base), target) > 1e-7 * scale)
        throw NumericError("base_conjugator: canonical form mismatch");
    return p;
}

// g_{i,i+1}(z) = p_{i,i+1} z^{-1}; conjugates the solution point of z into the
// canonical representative, and satisfies g(z' z) = g(z) z'^{-1}.
inline MatrixC g_map(const FiberTarget& c, std::size_t level, const SoTorusLevel& z) {
    const MatrixC p = base_conjugator(c, level);
    return p * embed_rotations(z, level + 1).transpose();
}

// Fiber parametrization: the top-level solution point of the last rotation
// block, conjugated back through the g maps of the lower levels.
inline MatrixC gamma_so(const FiberTarget& c, const SoTorusPoint& z) {
    if (!c.kind.is_so()) throw std::invalid_argument("gamma_so: gl target");
    const std::size_t n = c.kind.n;
    if (n < 3) throw std::invalid_argument("gamma_so: need n >= 3");
    if (!in_omega(c)) throw GenericityError("gamma_so: target outside the generic set");
    validate_so_torus(c.kind, z);

    MatrixC x = embed(build_so_point(so_solution_data(c, n - 1), z[n - 3]), n);
    for (std::size_t j = n - 2; j >= 2; --j) {
        const MatrixC g = embed_group(g_map(c, j, z[j - 2]), n);
        x = g.transpose() * x * g;
    }
    return x;
}

// Inverse of gamma_so, built level by level: read each cutoff as a solution
// point, then conjugate by its g map and continue.
inline SoTorusPoint psi_inverse(const MatrixC& x, const FiberTarget& c, double tol = 1e-6) {
    if (!c.kind.is_so()) throw std::invalid_argument("psi_inverse: gl target");
    const std::size_t n = c.kind.n;
    if (n < 3) throw std::invalid_argument("psi_inverse: need n >= 3");
    c.kind.validate_element(x);
    if (!in_omega(c)) throw GenericityError("psi_inverse: target outside the generic set");
    const double scale = std::max(1.0, x.max_abs());
    if (fiber_residual(x, c) > tol * scale)
        throw GenericityError("psi_inverse: input is off the fiber");

    SoTorusPoint z(n - 2);
    MatrixC y = x;
    for (std::size_t j = 2; j + 1 <= n; ++j) {
        const MatrixC s = cutoff(y, j + 1);
        const SoSolutionData sd = so_solution_data(c, j);
        const MatrixC h = canonical_so_matrix(c, j);
        if (max_abs_diff(cutoff(s, j), h) > tol * scale)
            throw GenericityError("psi_inverse: cutoff not in solution form");
        SoTorusLevel zl(sd.a.size());
        for (std::size_t k = 0; k < sd.a.size(); ++k) {
            const Complex base = std::sqrt(sd.d[k]);
            const Complex z1 = s(2 * k, j);
            const Complex z2 = s(2 * k + 1, j);
            zl[k] = Rotation{z1 / base, -z2 / base};
            if (zl[k].quadric_defect() > tol)
                throw GenericityError("psi_inverse: border coordinates off the quadric");
            // project back onto the quadric so the coordinates are exactly usable
            const Complex norm = std::sqrt(zl[k].c * zl[k].c + zl[k].s * zl[k].s);
            zl[k].c /= norm;
            zl[k].s /= norm;
        }
        if (sd.even_target) {
            const Complex corner = s(j - 1, j);
            Complex prod_b{1.0, 0.0};
            for (Complex bk : sd.b) prod_b *= bk;
            const Complex want = static_cast<double>(sd.target_pf_sign) * prod_b;
            if (std::abs(pfaffian(s) - want) > tol * std::max(1.0, std::abs(want)))
                throw GenericityError("psi_inverse: Pfaffian mismatch at an even level");
            if (std::abs(corner * corner - sd.z_corner * sd.z_corner) > tol * scale)
                throw GenericityError("psi_inverse: corner coordinate mismatch");
        }
        z[j - 2] = zl;
        if (j + 2 <= n) {
            const MatrixC g = embed_group(g_map(c, j, zl), n);
            y = g * y * g.transpose();
        }
    }
    return z;
}

// Torus action through the fiber coordinates.
inline MatrixC torus_act_so(const SoTorusPoint& zp, const MatrixC& x, const FiberTarget& c) {
    return gamma_so(c, so_torus_mul(zp, psi_inverse(x, c)));
}

// The same action written as a single conjugation
//   Ad(z2' g2^{-1} z3' g3^{-1} ... g_{n-2}^{-1} z_{n-1}' g_{n-2} ... g2) x.
inline MatrixC torus_act_so_conjugation(const SoTorusPoint& zp, const MatrixC& x,
                                        const FiberTarget& c) {
    const std::size_t n = c.kind.n;
    validate_so_torus(c.kind, zp);
    const SoTorusPoint z = psi_inverse(x, c);
    MatrixC g = MatrixC::identity(n);
    for (std::size_t j = 2; j + 2 <= n; ++j) {
        g = g * embed_group(embed_rotations(zp[j - 2], j), n);
        g = g * embed_group(g_map(c, j, z[j - 2]), n).transpose();
    }
    g = g * embed_group(embed_rotations(zp[n - 3], n - 1), n);
    for (std::size_t j = n - 2; j >= 2; --j)
        g = g * embed_group(g_map(c, j, z[j - 2]), n);
    return conjugate_orthogonal(g, x);
}

} // namespace gz
