#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gz/expm.hpp"
#include "gz/invariants.hpp"
#include "gz/linsolve.hpp"
#include "gz/poisson.hpp"
#include "gz/regularity.hpp"

namespace gz {

// One complex time per generator below the top level, in generator order.
struct FlowTime {
    std::vector<Complex> t;

    static FlowTime zero(const AlgebraKind& kind) {
        FlowTime ft;
        ft.t.assign(kind.d(), Complex{});
        return ft;
    }
};

// Time-t flow of the Hamiltonian field of f_{i,j}: conjugation by
// exp(-t grad f(x_i)).  The level-i cutoff is left unchanged.
inline MatrixC flow_step(const AlgebraKind& kind, const InvariantId& id, Complex t,
                         const MatrixC& x) {
    kind.validate_element(x);
    if (id.level + 1 > kind.n)
        throw std::invalid_argument("flow_step: top-level invariants generate the trivial flow");
    const MatrixC grad_cut = grad_invariant_cutoff(id, cutoff(x, id.level));
    // exp(-t grad) is block diagonal with identity outside the level block,
    // and its inverse is exp(+t grad).
    const MatrixC g = embed_group(mat_exp(-t * grad_cut), kind.n);
    const MatrixC ginv = embed_group(mat_exp(t * grad_cut), kind.n);
    return g * x * ginv;
}

// Composition of all coordinate flows in the given order (indices into
// flow_generators).  The flows commute, so the result is order-independent.
inline MatrixC act(const AlgebraKind& kind, const FlowTime& time, const MatrixC& x,
                   const std::vector<std::size_t>& order) {
    const auto gens = flow_generators(kind);
    if (time.t.size() != gens.size())
        throw std::invalid_argument("act: flow time has wrong length");
    if (order.size() != gens.size())
        throw std::invalid_argument("act: order has wrong length");
    MatrixC y = x;
    for (std::size_t k : order) {
        if (k >= gens.size()) throw std::invalid_argument("act: order index out of range");
        if (time.t[k] == Complex{}) continue;
        y = flow_step(kind, gens[k], time.t[k], y);
    }
    return y;
}

inline MatrixC act(const AlgebraKind& kind, const FlowTime& time, const MatrixC& x) {
    std::vector<std::size_t> order(kind.d());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return act(kind, time, x, order);
}

// Random points on the orbit of a strongly regular x, by composed flows with
// times scaled against the gradient norms.  amplitude = 0 returns copies of x.
inline std::vector<MatrixC> orbit_sample(const AlgebraKind& kind, const MatrixC& x,
                                         std::size_t count, std::uint64_t seed,
                                         double amplitude = 1.0) {
    if (!is_strongly_regular(kind, x))
        throw GenericityError("orbit_sample: seed point is not strongly regular");
    const auto gens = flow_generators(kind);
    std::vector<double> scale;
    for (const auto& id : gens)
        scale.push_back(1.0 + grad_invariant(kind, id, x).frobenius_norm());

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<MatrixC> samples;
    for (std::size_t s = 0; s < count; ++s) {
        FlowTime ft = FlowTime::zero(kind);
        for (std::size_t k = 0; k < gens.size(); ++k)
            ft.t[k] = amplitude * Complex{u(rng), u(rng)} / scale[k];
        samples.push_back(act(kind, ft, x));
    }
    return samples;
}

} // namespace gz
