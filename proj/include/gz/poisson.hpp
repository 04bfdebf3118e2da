#pragma once

#include <vector>

#include "gz/invariants.hpp"
#include "gz/rank.hpp"

namespace gz {

// Lie-Poisson bracket evaluated on explicit trace-form gradients:
// {f,g}(x) = tr(x [grad f(x), grad g(x)]).
inline Complex poisson_bracket_grads(const MatrixC& x, const MatrixC& gf, const MatrixC& gg) {
    return (x * commutator(gf, gg)).trace();
}

inline Complex poisson_bracket(const AlgebraKind& kind, const InvariantId& f,
                               const InvariantId& g, const MatrixC& x) {
    return poisson_bracket_grads(x, grad_invariant(kind, f, x), grad_invariant(kind, g, x));
}

// Hamiltonian vector field of f at x, as the matrix [x, grad f(x)].
inline MatrixC ham_field(const AlgebraKind& kind, const InvariantId& f, const MatrixC& x) {
    return commutator(x, grad_invariant(kind, f, x));
}

// Spanning set of the distribution V_x: Hamiltonian fields of all generators
// below the top level, in generator order; length d.
inline std::vector<MatrixC> gz_distribution(const AlgebraKind& kind, const MatrixC& x) {
    kind.validate_element(x);
    std::vector<MatrixC> span;
    for (const InvariantId& id : flow_generators(kind))
        span.push_back(ham_field(kind, id, x));
    return span;
}

inline std::size_t gz_rank(const AlgebraKind& kind, const MatrixC& x, double tau_rel = -1.0) {
    if (tau_rel < 0.0) tau_rel = static_cast<double>(kind.n) * 1e-10;
    const auto span = gz_distribution(kind, x);
    if (span.empty()) return 0;
    return numerical_rank_mats(span, tau_rel);
}

} // namespace gz
