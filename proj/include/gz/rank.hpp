#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gz/matrix.hpp"

namespace gz {

struct RankInfo {
    std::size_t rank = 0;
    // True when some pivot fell within a factor of 10 of the acceptance
    // threshold, so the verdict is sensitive to the choice of tau.
    bool low_confidence = false;
    double threshold = 0.0;
};

// Rank of the matrix whose rows are the given vectors, by full-pivot
// elimination.  Pivots are accepted while they exceed tau_rel times the
// largest initial column norm; tau_rel < 0 selects max(#rows, dim) * 1e-10.
inline RankInfo numerical_rank_info(std::vector<std::vector<Complex>> rows, double tau_rel = -1.0) {
    if (rows.empty()) throw std::invalid_argument("numerical_rank: empty vector list");
    const std::size_t dim = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != dim) throw std::invalid_argument("numerical_rank: dimension mismatch");
    const std::size_t m = rows.size();
    if (tau_rel < 0.0) tau_rel = static_cast<double>(std::max(m, dim)) * 1e-10;

    double col_scale = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r) s += std::norm(rows[r][c]);
        col_scale = std::max(col_scale, std::sqrt(s));
    }
    RankInfo info;
    info.threshold = tau_rel * col_scale;

    const std::size_t steps = std::min(m, dim);
    std::size_t rank = 0;
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t pr = k, pc = k;
        double best = -1.0;
        for (std::size_t r = k; r < m; ++r)
            for (std::size_t c = k; c < dim; ++c) {
                const double v = std::abs(rows[r][c]);
                if (v > best) { best = v; pr = r; pc = c; }
            }
        if (best > info.threshold / 10.0 && best < info.threshold * 10.0)
            info.low_confidence = true;
        if (best <= info.threshold) break;
        if (pr != k) std::swap(rows[pr], rows[k]);
        if (pc != k)
            for (std::size_t r = 0; r < m; ++r) std::swap(rows[r][pc], rows[r][k]);
        for (std::size_t r = k + 1; r < m; ++r) {
            const Complex f = rows[r][k] / rows[k][k];
            for (std::size_t c = k; c < dim; ++c) rows[r][c] -= f * rows[k][c];
        }
        ++rank;
    }
    info.rank = rank;
    return info;
}

inline std::size_t numerical_rank(const std::vector<std::vector<Complex>>& rows, double tau_rel = -1.0) {
    return numerical_rank_info(rows, tau_rel).rank;
}

inline RankInfo numerical_rank_mats_info(const std::vector<MatrixC>& mats, double tau_rel = -1.0) {
    std::vector<std::vector<Complex>> rows;
    rows.reserve(mats.size());
    for (const auto& m : mats) rows.push_back(m.flat());
    return numerical_rank_info(std::move(rows), tau_rel);
}

inline std::size_t numerical_rank_mats(const std::vector<MatrixC>& mats, double tau_rel = -1.0) {
    return numerical_rank_mats_info(mats, tau_rel).rank;
}

} // namespace gz
