#pragma once

#include <cstddef>
#include <vector>

#include "gz/error.hpp"
#include "gz/invariants.hpp"
#include "gz/rank.hpp"

namespace gz {

namespace detail {

inline std::vector<MatrixC> level_gradients(const AlgebraKind& kind, const MatrixC& x_level,
                                            std::size_t level) {
    std::vector<MatrixC> g;
    for (std::size_t j = 1; j <= kind.rank(level); ++j)
        g.push_back(grad_invariant_cutoff(make_invariant_id(kind, level, j), x_level));
    return g;
}

inline double default_tau(const AlgebraKind& kind, double tau_rel) {
    return tau_rel < 0.0 ? static_cast<double>(kind.n) * 1e-10 : tau_rel;
}

} // namespace detail

// x_level is regular in its level algebra iff the gradients of the level
// invariants are linearly independent.
inline bool is_regular(const AlgebraKind& kind, const MatrixC& x_level, std::size_t level,
                       double tau_rel = -1.0) {
    const std::size_t r = kind.rank(level);
    if (r == 0) return true;
    tau_rel = detail::default_tau(kind, tau_rel);
    return numerical_rank_mats(detail::level_gradients(kind, x_level, level), tau_rel) == r;
}

// Strong regularity in the differential formulation: the gradients of all
// d + r_n generators, over every level, are independent as vectors.
inline bool is_strongly_regular(const AlgebraKind& kind, const MatrixC& x,
                                double tau_rel = -1.0, bool* low_confidence = nullptr) {
    kind.validate_element(x);
    tau_rel = detail::default_tau(kind, tau_rel);
    std::vector<std::vector<Complex>> rows;
    for (const InvariantId& id : generators(kind))
        rows.push_back(grad_invariant(kind, id, x).flat());
    if (rows.empty()) return true;
    const RankInfo info = numerical_rank_info(std::move(rows), tau_rel);
    if (low_confidence) *low_confidence = info.low_confidence;
    return info.rank == kind.num_invariants();
}

// Gradients of the level invariants at a regular x_level; a basis of the
// centralizer of x_level in its level algebra.
inline std::vector<MatrixC> centralizer_basis(const AlgebraKind& kind, const MatrixC& x_level,
                                              std::size_t level) {
    if (!is_regular(kind, x_level, level))
        throw GenericityError("centralizer_basis: element is not regular");
    return detail::level_gradients(kind, x_level, level);
}

// Strong regularity via the centralizer formulation: every cutoff regular,
// and adjacent centralizers intersect trivially.  The intersection test is
// rank(concatenated bases) == r_i + r_{i+1}.
inline bool sreg_via_centralizers(const AlgebraKind& kind, const MatrixC& x,
                                  double tau_rel = -1.0, bool* low_confidence = nullptr) {
    kind.validate_element(x);
    tau_rel = detail::default_tau(kind, tau_rel);
    if (low_confidence) *low_confidence = false;

    std::vector<std::vector<MatrixC>> bases(kind.n);
    for (std::size_t i = 1; i <= kind.n; ++i) {
        const MatrixC xi = cutoff(x, i);
        const auto grads = detail::level_gradients(kind, xi, i);
        if (!grads.empty()) {
            const RankInfo info = numerical_rank_mats_info(grads, tau_rel);
            if (low_confidence && info.low_confidence) *low_confidence = true;
            if (info.rank != kind.rank(i)) return false;
        }
        bases[i - 1] = grads;
    }
    for (std::size_t i = 1; i + 1 <= kind.n; ++i) {
        const std::size_t want = kind.rank(i) + kind.rank(i + 1);
        if (kind.rank(i) == 0) continue;
        std::vector<std::vector<Complex>> rows;
        for (const auto& m : bases[i - 1]) rows.push_back(embed(m, kind.n).flat());
        for (const auto& m : bases[i]) rows.push_back(embed(m, kind.n).flat());
        const RankInfo info = numerical_rank_info(std::move(rows), tau_rel);
        if (low_confidence && info.low_confidence) *low_confidence = true;
        if (info.rank != want) return false;
    }
    return true;
}

} // namespace gz
