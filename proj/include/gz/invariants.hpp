#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gz/algebra.hpp"
#include "gz/matrix.hpp"
#include "gz/pfaffian.hpp"

namespace gz {

enum class InvariantFlavor { trace_power, pfaffian };

// One generator f_{i,j} of the commuting family: trace of a power of the
// level-i cutoff, or its Pfaffian (top index at even orthogonal levels).
struct InvariantId {
    std::size_t level = 0;                              // i, 1-based
    std::size_t index = 0;                              // j, 1-based, <= r_i
    InvariantFlavor flavor = InvariantFlavor::trace_power;
    std::size_t exponent = 0;                           // trace power

    bool operator==(const InvariantId&) const = default;
};

inline std::size_t invariant_degree(const InvariantId& id) {
    return id.flavor == InvariantFlavor::pfaffian ? id.level / 2 : id.exponent;
}

inline InvariantId make_invariant_id(const AlgebraKind& kind, std::size_t level, std::size_t index) {
    if (level < 1 || level > kind.n || index < 1 || index > kind.rank(level))
        throw std::invalid_argument("invariant id out of range");
    InvariantId id;
    id.level = level;
    id.index = index;
    if (kind.is_gl()) {
        id.exponent = index;
    } else if (level % 2 == 0 && index == level / 2) {
        id.flavor = InvariantFlavor::pfaffian;
    } else {
        id.exponent = 2 * index;
    }
    return id;
}

// All generators in level-major order; length d + r_n.
inline std::vector<InvariantId> generators(const AlgebraKind& kind) {
    std::vector<InvariantId> ids;
    for (std::size_t i = 1; i <= kind.n; ++i)
        for (std::size_t j = 1; j <= kind.rank(i); ++j)
            ids.push_back(make_invariant_id(kind, i, j));
    return ids;
}

// Generators below the top level; these index the flow coordinates.
inline std::vector<InvariantId> flow_generators(const AlgebraKind& kind) {
    std::vector<InvariantId> ids;
    for (std::size_t i = 1; i + 1 <= kind.n; ++i)
        for (std::size_t j = 1; j <= kind.rank(i); ++j)
            ids.push_back(make_invariant_id(kind, i, j));
    return ids;
}

namespace detail {

inline MatrixC matrix_power(const MatrixC& x, std::size_t e) {
    MatrixC r = MatrixC::identity(x.size());
    for (std::size_t k = 0; k < e; ++k) r = r * x;
    return r;
}

} // namespace detail

// f_{i,j}(x) = f_{i,j}(x_i)
inline Complex eval_invariant(const InvariantId& id, const MatrixC& x) {
    const MatrixC xi = cutoff(x, id.level);
    if (id.flavor == InvariantFlavor::pfaffian) return pfaffian(xi);
    return detail::matrix_power(xi, id.exponent).trace();
}

// Trace-form gradient at cutoff size: e * x_i^{e-1} for trace powers, the
// Pfaffian cofactor matrix otherwise.  Both commute with x_i.
inline MatrixC grad_invariant_cutoff(const InvariantId& id, const MatrixC& x_level) {
    if (x_level.size() != id.level)
        throw std::invalid_argument("grad_invariant_cutoff: size mismatch");
    if (id.flavor == InvariantFlavor::pfaffian) return pfaffian_gradient(x_level);
    return static_cast<double>(id.exponent) * detail::matrix_power(x_level, id.exponent - 1);
}

// Gradient embedded at ambient size n, supported in the top-left block.
inline MatrixC grad_invariant(const AlgebraKind& kind, const InvariantId& id, const MatrixC& x) {
    kind.validate_element(x);
    return embed(grad_invariant_cutoff(id, cutoff(x, id.level)), kind.n);
}

} // namespace gz
