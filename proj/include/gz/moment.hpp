#pragma once

#include <cmath>
#include <vector>

#include "gz/charpoly.hpp"
#include "gz/fiber_target.hpp"
#include "gz/invariants.hpp"

namespace gz {

// Evaluation of the full generator family, in generator order.
inline std::vector<Complex> moment_map(const AlgebraKind& kind, const MatrixC& x) {
    kind.validate_element(x);
    std::vector<Complex> out;
    for (const InvariantId& id : generators(kind)) out.push_back(eval_invariant(id, x));
    return out;
}

// Characteristic coefficients of every cutoff (gl only): level i contributes
// the coefficients of t^0..t^{i-1} of det(t - x_i).
inline std::vector<Complex> coeff_moment(const AlgebraKind& kind, const MatrixC& x) {
    if (!kind.is_gl()) throw std::invalid_argument("coeff_moment: defined for gl only");
    kind.validate_element(x);
    std::vector<Complex> out;
    for (std::size_t i = 1; i <= kind.n; ++i) {
        const PolyC p = char_poly(cutoff(x, i));
        for (std::size_t j = 0; j < i; ++j) out.push_back(p.coeffs[j]);
    }
    return out;
}

// Max-abs distance between the moment map of x and the target's invariant
// values; zero exactly when x lies on the fiber.
inline double fiber_residual(const MatrixC& x, const FiberTarget& c) {
    const auto got = moment_map(c.kind, x);
    const auto want = target_invariant_values(c);
    double r = 0.0;
    for (std::size_t k = 0; k < got.size(); ++k) r = std::max(r, std::abs(got[k] - want[k]));
    return r;
}

} // namespace gz
