#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gz/moment.hpp"
#include "gz/nilfibre.hpp"
#include "gz/poisson.hpp"
#include "gz/regularity.hpp"
#include "gz/sampling.hpp"
#include "gz/solvar_gl.hpp"
#include "gz/solvar_so.hpp"

namespace gz::verify {

struct CheckResult {
    std::string name;
    double tol = 0.0;
    double worst = 0.0;
    bool ok = true;
    std::string note;

    CheckResult(std::string name_, double tol_) : name(std::move(name_)), tol(tol_) {}

    void update(double v) { worst = std::max(worst, v); }
    void require(bool b) { ok = ok && b; }
    bool pass() const { return ok && worst <= tol; }
};

// Cofactor-expansion Pfaffian, exponential cost; the independent oracle for
// the elimination-based routine at small sizes.
inline Complex pfaffian_combinatorial(const MatrixC& a) {
    const std::size_t n = a.size();
    if (n % 2 != 0) throw std::invalid_argument("pfaffian_combinatorial: odd dimension");
    if (n == 0) return Complex{1.0, 0.0};
    if (n == 2) return a(0, 1);
    Complex s{};
    double sign = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        if (a(0, k) != Complex{})
            s += sign * a(0, k) * pfaffian_combinatorial(detail::delete_rows_cols(a, 0, k));
        sign = -sign;
    }
    return s;
}

inline MatrixC normalized_random_element(const AlgebraKind& kind, Rng& rng, double target_norm) {
    MatrixC x = random_element(kind, rng);
    const double nrm = x.frobenius_norm();
    if (nrm > 0.0) x *= Complex{target_norm / nrm, 0.0};
    return x;
}

inline double rel_diff(const MatrixC& a, const MatrixC& b) {
    return max_abs_diff(a, b) / std::max(1.0, std::max(a.max_abs(), b.max_abs()));
}

// --- commuting family -------------------------------------------------------

inline CheckResult check_commutativity(const AlgebraKind& kind, std::uint64_t seed,
                                       std::size_t samples) {
    CheckResult r{"gz-commutativity[" + kind.name() + std::to_string(kind.n) + "]", 1e-8};
    Rng rng(seed);
    const auto ids = generators(kind);
    for (std::size_t s = 0; s < samples; ++s) {
        const MatrixC x = random_element(kind, rng);
        std::vector<MatrixC> grads;
        for (const auto& id : ids) grads.push_back(grad_invariant(kind, id, x));
        const double base = std::max(1.0, x.frobenius_norm());
        for (std::size_t p = 0; p < ids.size(); ++p)
            for (std::size_t q = p + 1; q < ids.size(); ++q) {
                const double deg =
                    static_cast<double>(invariant_degree(ids[p]) + invariant_degree(ids[q])) - 2.0;
                const double scale = std::pow(base, deg);
                r.update(std::abs(poisson_bracket_grads(x, grads[p], grads[q])) / scale);
            }
    }
    return r;
}

// Pairwise symplectic pairings of the distribution's spanning fields vanish at
// strongly regular points; the pairing equals the Poisson bracket.
inline CheckResult check_isotropy(const AlgebraKind& kind, std::uint64_t seed,
                                  std::size_t samples) {
    CheckResult r{"isotropy[" + kind.name() + std::to_string(kind.n) + "]", 1e-8};
    Rng rng(seed);
    const auto ids = flow_generators(kind);
    for (std::size_t s = 0; s < samples; ++s) {
        const FiberTarget c = random_omega_target(kind, rng);
        MatrixC x;
        if (kind.is_gl())
            x = gamma_gl(c, random_gl_torus(kind.n, rng));
        else
            x = gamma_so(c, random_so_torus(kind, rng));
        r.require(is_strongly_regular(kind, x));
        const double base = std::max(1.0, x.frobenius_norm());
        for (std::size_t p = 0; p < ids.size(); ++p)
            for (std::size_t q = p + 1; q < ids.size(); ++q) {
                const double deg =
                    static_cast<double>(invariant_degree(ids[p]) + invariant_degree(ids[q])) - 2.0;
                r.update(std::abs(poisson_bracket(kind, ids[p], ids[q], x)) / std::pow(base, deg));
            }
    }
    return r;
}

// --- flows -------------------------------------------------------------------

inline CheckResult check_flow_derivative(const AlgebraKind& kind, std::uint64_t seed,
                                         std::size_t samples) {
    CheckResult r{"flow-derivative[" + kind.name() + std::to_string(kind.n) + "]", 1e-6};
    Rng rng(seed);
    const double h = 1e-5;
    for (std::size_t s = 0; s < samples; ++s) {
        const MatrixC x = normalized_random_element(kind, rng, 0.8);
        for (const auto& id : flow_generators(kind)) {
            const MatrixC plus = flow_step(kind, id, Complex{h, 0.0}, x);
            const MatrixC minus = flow_step(kind, id, Complex{-h, 0.0}, x);
            const MatrixC fd = (plus - minus) * Complex{1.0 / (2.0 * h), 0.0};
            r.update(rel_diff(fd, ham_field(kind, id, x)));
        }
    }
    return r;
}

inline CheckResult check_flow_cutoff_invariance(const AlgebraKind& kind, std::uint64_t seed,
                                                std::size_t samples) {
    CheckResult r{"flow-cutoff-invariance[" + kind.name() + std::to_string(kind.n) + "]", 1e-10};
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const MatrixC x = normalized_random_element(kind, rng, 0.8);
        for (const auto& id : flow_generators(kind)) {
            const Complex t = rng.box(1.0);
            const MatrixC y = flow_step(kind, id, t, x);
            r.update(max_abs_diff(cutoff(y, id.level), cutoff(x, id.level)) /
                     std::max(1.0, x.max_abs()));
        }
    }
    return r;
}

inline CheckResult check_moment_drift(const AlgebraKind& kind, std::uint64_t seed,
                                      std::size_t samples) {
    CheckResult r{"moment-flow-invariance[" + kind.name() + std::to_string(kind.n) + "]", 1e-8};
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const MatrixC x = normalized_random_element(kind, rng, 0.6);
        const auto before = moment_map(kind, x);
        for (const auto& id : flow_generators(kind)) {
            const double phi = rng.uniform(0.0, 6.283185307179586);
            const Complex t = 2.0 * Complex{std::cos(phi), std::sin(phi)};
            const auto after = moment_map(kind, flow_step(kind, id, t, x));
            for (std::size_t k = 0; k < before.size(); ++k)
                r.update(std::abs(after[k] - before[k]) / std::max(1.0, std::abs(before[k])));
        }
    }
    return r;
}

inline CheckResult check_flow_commutation(const AlgebraKind& kind, std::uint64_t seed,
                                          std::size_t pairs) {
    CheckResult r{"flow-commutation[" + kind.name() + std::to_string(kind.n) + "]", 1e-8};
    Rng rng(seed);
    const auto ids = flow_generators(kind);
    for (std::size_t s = 0; s < pairs; ++s) {
        const MatrixC x = normalized_random_element(kind, rng, 0.8);
        const std::size_t p = static_cast<std::size_t>(rng.uniform(0.0, 0.999) * ids.size());
        const std::size_t q = static_cast<std::size_t>(rng.uniform(0.0, 0.999) * ids.size());
        const Complex tp = rng.box(1.0);
        const Complex tq = rng.box(1.0);
        const MatrixC ab = flow_step(kind, ids[p], tp, flow_step(kind, ids[q], tq, x));
        const MatrixC ba = flow_step(kind, ids[q], tq, flow_step(kind, ids[p], tp, x));
        r.update(rel_diff(ab, ba));
    }
    return r;
}

// --- worked 3x3 example ------------------------------------------------------

inline MatrixC omega_example_matrix() {
    return MatrixC::from_rows({{Complex{0}, Complex{20}, Complex{28}},
                               {Complex{1}, Complex{1}, Complex{-14}},
                               {Complex{0}, Complex{1}, Complex{2}}});
}

inline CheckResult check_omega_example() {
    CheckResult r{"omega-example[gl3]", 1e-9};
    const MatrixC x = omega_example_matrix();
    const AlgebraKind kind = AlgebraKind::gl(3);
    const std::vector<Complex> top = eigenvalues(x);
    const std::vector<Complex> mid = eigenvalues(cutoff(x, 2));
    const std::vector<Complex> bot = eigenvalues(cutoff(x, 1));
    const std::vector<Complex> want_top = {Complex{3}, Complex{2}, Complex{-2}};
    const std::vector<Complex> want_mid = {Complex{5}, Complex{-4}};
    for (std::size_t k = 0; k < 3; ++k) r.update(std::abs(top[k] - want_top[k]));
    for (std::size_t k = 0; k < 2; ++k) r.update(std::abs(mid[k] - want_mid[k]));
    r.update(std::abs(bot[0]));
    r.require(is_strongly_regular(kind, x));
    r.require(sreg_via_centralizers(kind, x));
    r.require(element_in_omega(kind, x));
    return r;
}

// --- orthogonal solution-variety identities ----------------------------------

namespace detail_verify {

// Bordered skew matrix with arbitrary border entries z (length i) over the
// canonical block element with parameters a at level i = 2l or 2l + 1.
inline MatrixC bordered_so(const std::vector<Complex>& a, const std::vector<Complex>& z) {
    const std::size_t i = z.size();
    MatrixC x(i + 1);
    for (std::size_t j = 0; j < a.size(); ++j) {
        x(2 * j, 2 * j + 1) = a[j];
        x(2 * j + 1, 2 * j) = -a[j];
    }
    for (std::size_t k = 0; k < i; ++k) {
        x(k, i) = z[k];
        x(i, k) = -z[k];
    }
    return x;
}

// det(t - X) for the bordered matrix, from the closed form:
//   even target: sum_j (z_{j1}^2+z_{j2}^2) t^2 prod_{k!=j}(t^2+a_k^2)
//                + z_corner^2 prod(t^2+a^2) + t^2 prod(t^2+a^2)
//   odd target:  t [ prod(t^2+a^2) + sum_j (z_{j1}^2+z_{j2}^2) prod_{k!=j}(t^2+a_k^2) ]
inline Complex bordered_charpoly_formula(const std::vector<Complex>& a,
                                         const std::vector<Complex>& z, Complex t) {
    const std::size_t l = a.size();
    const bool has_corner = (z.size() == 2 * l + 1);
    const Complex t2 = t * t;
    Complex prod_all{1.0, 0.0};
    for (Complex ak : a) prod_all *= t2 + ak * ak;
    Complex s{};
    for (std::size_t j = 0; j < l; ++j) {
        Complex prod_others{1.0, 0.0};
        for (std::size_t k = 0; k < l; ++k)
            if (k != j) prod_others *= t2 + a[k] * a[k];
        s += (z[2 * j] * z[2 * j] + z[2 * j + 1] * z[2 * j + 1]) * prod_others;
    }
    if (has_corner) return s * t2 + z[2 * l] * z[2 * l] * prod_all + t2 * prod_all;
    return t * (prod_all + s);
}

inline Complex det_t_minus(const MatrixC& x, Complex t) {
    MatrixC m = -x;
    for (std::size_t k = 0; k < m.size(); ++k) m(k, k) += t;
    return determinant(m);
}

} // namespace detail_verify

inline CheckResult check_solution_identities(std::uint64_t seed, std::size_t instances) {
    CheckResult r{"solution-variety-identities[so]", 1e-9};
    Rng rng(seed);
    for (std::size_t s = 0; s < instances; ++s) {
        for (int even_target = 0; even_target < 2; ++even_target) {
            const std::size_t l = 1 + static_cast<std::size_t>(rng.uniform(0.0, 1.999));
            std::vector<Complex> a;
            for (std::size_t k = 0; k < l; ++k) a.push_back(rng.annulus(0.5, 2.0));
            std::vector<Complex> z;
            const std::size_t border = even_target ? 2 * l + 1 : 2 * l;
            for (std::size_t k = 0; k < border; ++k) z.push_back(rng.box(1.5));
            const MatrixC x = detail_verify::bordered_so(a, z);
            for (int probe = 0; probe < 5; ++probe) {
                const Complex t = rng.box(2.0);
                const Complex lhs = detail_verify::det_t_minus(x, t);
                const Complex rhs = detail_verify::bordered_charpoly_formula(a, z, t);
                r.update(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
            }
        }
    }
    // derived constants for the worked extensions
    {
        FiberTarget c;
        c.kind = AlgebraKind::so(3);
        c.levels.resize(3);
        c.levels[1].data = {Complex{1.0}};
        c.levels[2].data = {Complex{2.0}};
        const SoSolutionData sd = so_solution_data(c, 2);
        r.update(std::abs(sd.d[0] - Complex{3.0}));
    }
    {
        FiberTarget c;
        c.kind = AlgebraKind::so(4);
        c.levels.resize(4);
        c.levels[1].data = {Complex{7.0}};
        c.levels[2].data = {Complex{1.0}};
        c.levels[3].data = {Complex{2.0}, Complex{3.0}};
        const SoSolutionData sd = so_solution_data(c, 3);
        r.update(std::abs(sd.d[0] - Complex{-24.0}));
        r.update(std::abs(sd.z_corner * sd.z_corner - Complex{36.0}));
    }
    return r;
}

inline CheckResult check_pfaffian_sign() {
    CheckResult r{"pfaffian-sign-control[so4]", 1e-9};
    FiberTarget c;
    c.kind = AlgebraKind::so(4);
    c.levels.resize(4);
    c.levels[1].data = {Complex{7.0}};
    c.levels[2].data = {Complex{1.0}};
    c.levels[3].data = {Complex{2.0}, Complex{3.0}};
    for (int sign : {+1, -1}) {
        c.levels[3].pf_sign = sign;
        const SoSolutionData sd = so_solution_data(c, 3);
        const MatrixC x = build_so_point(sd, SoTorusLevel(1));
        const Complex want = static_cast<double>(sign) * Complex{6.0};
        r.update(std::abs(pfaffian_combinatorial(x) - want));
        r.update(std::abs(pfaffian(x) - want));
    }
    return r;
}

// --- fibers -------------------------------------------------------------------

inline double gl_torus_distance(const GlTorusPoint& a, const GlTorusPoint& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a[i].size(); ++k) m = std::max(m, std::abs(a[i][k] - b[i][k]));
    return m;
}

inline double so_torus_distance(const SoTorusPoint& a, const SoTorusPoint& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a[i].size(); ++k) {
            m = std::max(m, std::abs(a[i][k].c - b[i][k].c));
            m = std::max(m, std::abs(a[i][k].s - b[i][k].s));
        }
    return m;
}

inline CheckResult check_fiber_roundtrip(const AlgebraKind& kind, std::uint64_t seed,
                                         std::size_t count) {
    CheckResult r{"fiber-roundtrip[" + kind.name() + std::to_string(kind.n) + "]", 1e-8};
    Rng rng(seed);
    for (std::size_t s = 0; s < count; ++s) {
        const FiberTarget c = random_omega_target(kind, rng);
        if (kind.is_gl()) {
            const GlTorusPoint z = random_gl_torus(kind.n, rng);
            const MatrixC x = gamma_gl(c, z);
            r.update(fiber_residual(x, c));
            const GlTorusPoint zi = gamma_gl_inverse(x, c);
            r.update(gl_torus_distance(z, zi));
            r.update(max_abs_diff(gamma_gl(c, zi), x));
        } else {
            const SoTorusPoint z = random_so_torus(kind, rng);
            const MatrixC x = gamma_so(c, z);
            r.update(fiber_residual(x, c));
            const SoTorusPoint zi = psi_inverse(x, c);
            r.update(so_torus_distance(z, zi));
            r.update(max_abs_diff(gamma_so(c, zi), x));
        }
    }
    return r;
}

inline CheckResult check_fiber_sreg(const AlgebraKind& kind, std::uint64_t seed,
                                    std::size_t count) {
    CheckResult r{"fiber-strong-regularity[" + kind.name() + std::to_string(kind.n) + "]", 0.0};
    Rng rng(seed);
    for (std::size_t s = 0; s < count; ++s) {
        const FiberTarget c = random_omega_target(kind, rng);
        const MatrixC x = kind.is_gl() ? gamma_gl(c, random_gl_torus(kind.n, rng))
                                       : gamma_so(c, random_so_torus(kind, rng));
        r.require(is_strongly_regular(kind, x));
        r.require(sreg_via_centralizers(kind, x));
        r.require(gz_rank(kind, x) == kind.d());
    }
    return r;
}

inline CheckResult check_torus_freeness(const AlgebraKind& kind, std::uint64_t seed,
                                        std::size_t max_points = 3000) {
    CheckResult r{"torus-freeness[" + kind.name() + std::to_string(kind.n) + "]", 0.0};
    Rng rng(seed);
    const FiberTarget c = random_omega_target(kind, rng);
    const MatrixC x = kind.is_gl() ? gamma_gl(c, random_gl_torus(kind.n, rng))
                                   : gamma_so(c, random_so_torus(kind, rng));
    const std::size_t d = kind.d();

    double grid_points = 1.0;
    for (std::size_t k = 0; k < d; ++k) grid_points *= 3.0;
    const bool full_grid = grid_points <= static_cast<double>(max_points);
    if (!full_grid) r.note = "sampled grid";

    std::vector<int> digits(d, 0);
    const std::size_t total = full_grid ? static_cast<std::size_t>(grid_points) : max_points;
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (full_grid) {
            std::size_t v = idx;
            for (std::size_t k = 0; k < d; ++k) {
                digits[k] = static_cast<int>(v % 3);
                v /= 3;
            }
        } else {
            for (std::size_t k = 0; k < d; ++k)
                digits[k] = static_cast<int>(rng.uniform(0.0, 2.999));
        }
        const bool identity = std::all_of(digits.begin(), digits.end(), [](int v) { return v == 0; });
        MatrixC y;
        if (kind.is_gl()) {
            GlTorusPoint zp = gl_torus_identity(kind.n);
            std::size_t k = 0;
            for (auto& level : zp)
                for (auto& coord : level) {
                    if (digits[k] == 1) coord = Complex{1.12, 0.0};
                    if (digits[k] == 2) coord = Complex{0.88, 0.0};
                    ++k;
                }
            y = torus_act_gl(zp, x, c);
        } else {
            SoTorusPoint zp = so_torus_identity(kind);
            std::size_t k = 0;
            for (auto& level : zp)
                for (auto& coord : level) {
                    if (digits[k] == 1) coord = Rotation::from_angle(Complex{0.15, 0.0});
                    if (digits[k] == 2) coord = Rotation::from_angle(Complex{-0.15, 0.0});
                    ++k;
                }
            y = torus_act_so(zp, x, c);
        }
        const double dist = max_abs_diff(y, x);
        if (identity)
            r.require(dist <= 1e-7 * std::max(1.0, x.max_abs()));
        else
            r.require(dist > 1e-6);
    }
    return r;
}

// --- regularity ---------------------------------------------------------------

inline CheckResult check_regularity_equivalence(const AlgebraKind& kind, std::uint64_t seed,
                                                std::size_t count) {
    CheckResult r{"regularity-equivalence[" + kind.name() + std::to_string(kind.n) + "]", 0.0};
    Rng rng(seed);
    std::vector<MatrixC> samples;
    const std::size_t structured = count / 3;
    for (std::size_t s = 0; samples.size() < count - structured; ++s)
        samples.push_back(random_element(kind, rng, rng.uniform(0.3, 2.0)));
    // structured cases: degenerate, nested and nilpotent configurations
    while (samples.size() < count) {
        const int which = static_cast<int>(rng.uniform(0.0, 3.999));
        MatrixC x(kind.n);
        if (kind.is_gl()) {
            if (which == 0) {
                for (std::size_t i = 0; i < kind.n; ++i) x(i, i) = rng.box(2.0);
            } else if (which == 1) {
                const Complex v = rng.box(2.0);
                for (std::size_t i = 0; i < kind.n; ++i) x(i, i) = v;
            } else if (which == 2) {
                for (std::size_t i = 0; i < kind.n; ++i)
                    for (std::size_t j = 0; j < i; ++j) x(i, j) = rng.box(1.5);
            } else {
                x = random_element(kind, rng);
                x(0, 0) = 1.0; x(0, 1) = 0.0; x(1, 0) = 0.0; x(1, 1) = 1.0;
            }
        } else {
            if (which == 0) {
                for (std::size_t j = 0; 2 * j + 1 < kind.n; ++j) {
                    const Complex v = rng.annulus(0.4, 2.0);
                    x(2 * j, 2 * j + 1) = v;
                    x(2 * j + 1, 2 * j) = -v;
                }
            } else if (which == 1) {
                // repeated block parameters
                const Complex v = rng.annulus(0.4, 2.0);
                for (std::size_t j = 0; 2 * j + 1 < kind.n && j < 2; ++j) {
                    x(2 * j, 2 * j + 1) = v;
                    x(2 * j + 1, 2 * j) = -v;
                }
            } else if (which == 2) {
                x = MatrixC(kind.n);
            } else {
                x = random_element(kind, rng, 0.1);
            }
        }
        samples.push_back(x);
    }
    std::size_t disagreements = 0;
    for (const MatrixC& x : samples)
        if (is_strongly_regular(kind, x) != sreg_via_centralizers(kind, x)) ++disagreements;
    r.update(static_cast<double>(disagreements));
    return r;
}

// --- nilfibre -----------------------------------------------------------------

inline CheckResult check_nilfibre(std::uint64_t seed) {
    CheckResult r{"nilfibre-example[gl4]", 1e-8};
    r.require(check_nilradical_example());
    r.require(!permutation_matches_pattern({0, 1, 2, 3}));
    Rng rng(seed);
    const AlgebraKind kind = AlgebraKind::gl(4);
    // strictly lower triangular matrices lie in the nilfibre
    for (int s = 0; s < 5; ++s) {
        MatrixC x(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < i; ++j) x(i, j) = rng.box(2.0);
        r.require(in_nilfibre(x));
    }
    // flows started at a strongly regular pattern point stay in the nilfibre
    MatrixC seed_point;
    bool found = false;
    for (int attempt = 0; attempt < 20 && !found; ++attempt) {
        std::array<Complex, 6> a;
        for (auto& v : a) v = rng.annulus(0.5, 1.5);
        seed_point = nilradical_example_matrix(a);
        found = is_strongly_regular(kind, seed_point);
    }
    r.require(found);
    r.require(in_nilfibre(seed_point));
    if (found)
        for (const MatrixC& y : orbit_sample(kind, seed_point, 5, seed ^ 0x5eedULL))
            for (Complex cth : coeff_moment(kind, y)) r.update(std::abs(cth));
    return r;
}

// --- slices -------------------------------------------------------------------

// The property slice for one algebra, used by the command-line verify driver.
inline std::vector<CheckResult> run_slice(const AlgebraKind& kind, std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(check_commutativity(kind, seed, 50));
    out.push_back(check_flow_derivative(kind, seed + 1, 5));
    out.push_back(check_flow_cutoff_invariance(kind, seed + 2, 5));
    out.push_back(check_moment_drift(kind, seed + 3, 5));
    out.push_back(check_flow_commutation(kind, seed + 4, 20));
    out.push_back(check_regularity_equivalence(kind, seed + 5, 100));
    out.push_back(check_isotropy(kind, seed + 6, 3));
    if (kind.n >= 3) {
        out.push_back(check_fiber_roundtrip(kind, seed + 7, 20));
        out.push_back(check_fiber_sreg(kind, seed + 8, 10));
        out.push_back(check_torus_freeness(kind, seed + 9));
    }
    if (kind.is_gl()) {
        out.push_back(check_omega_example());
        out.push_back(check_nilfibre(seed + 10));
    } else {
        out.push_back(check_solution_identities(seed + 10, 50));
        out.push_back(check_pfaffian_sign());
    }
    return out;
}

} // namespace gz::verify
