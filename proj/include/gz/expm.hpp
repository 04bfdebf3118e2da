#pragma once

#include <cmath>

#include "gz/matrix.hpp"

namespace gz {

// Matrix exponential by scaling and squaring; the scaled argument has
// Frobenius norm <= 0.5 and is fed to a degree-18 Taylor kernel.
inline MatrixC mat_exp(const MatrixC& x) {
    const std::size_t n = x.size();
    int squarings = 0;
    double nrm = x.frobenius_norm();
    if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
    MatrixC y = x * Complex{std::ldexp(1.0, -squarings), 0.0};

    MatrixC r = MatrixC::identity(n);
    for (int k = 18; k >= 1; --k) {
        r = y * r * Complex{1.0 / static_cast<double>(k), 0.0};
        for (std::size_t i = 0; i < n; ++i) r(i, i) += 1.0;
    }
    for (int s = 0; s < squarings; ++s) r = r * r;
    return r;
}

} // namespace gz
