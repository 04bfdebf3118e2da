#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "gz/moment.hpp"

namespace gz {

// Membership in the zero fiber of the coefficient moment map: every cutoff
// characteristic coefficient vanishes, i.e. every cutoff is nilpotent.
inline bool in_nilfibre(const MatrixC& x, double tau = 1e-8) {
    const AlgebraKind kind = AlgebraKind::gl(x.size());
    for (Complex c : coeff_moment(kind, x))
        if (std::abs(c) > tau) return false;
    return true;
}

// Support pattern of the 4x4 nilradical swept out by one distinguished orbit
// closure: row-major positions with a free entry.
inline std::vector<std::pair<std::size_t, std::size_t>> nilradical_example_pattern() {
    return {{0, 3}, {1, 0}, {1, 3}, {2, 0}, {2, 1}, {2, 3}};
}

inline MatrixC nilradical_example_matrix(const std::array<Complex, 6>& a) {
    MatrixC m(4);
    const auto pattern = nilradical_example_pattern();
    for (std::size_t k = 0; k < pattern.size(); ++k) m(pattern[k].first, pattern[k].second) = a[k];
    return m;
}

// True when the permutation (given by 0-based images) conjugates the strictly
// lower triangular support of gl(4) exactly onto the pattern above.
inline bool permutation_matches_pattern(const std::array<std::size_t, 4>& image) {
    std::vector<std::pair<std::size_t, std::size_t>> mapped;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < r; ++c) mapped.emplace_back(image[r], image[c]);
    auto pattern = nilradical_example_pattern();
    std::sort(mapped.begin(), mapped.end());
    std::sort(pattern.begin(), pattern.end());
    return mapped == pattern;
}

// The 4-cycle sending 1 -> 4 -> 3 -> 2 -> 1 carries the strictly lower
// triangular matrices onto the example pattern.
inline bool check_nilradical_example() {
    return permutation_matches_pattern({3, 0, 1, 2});
}

} // namespace gz
