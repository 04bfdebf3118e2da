#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "gz/matrix.hpp"

namespace gz {

enum class Family { general_linear, orthogonal };

// Ambient algebra gl(n) or so(n) with its chain of level ranks
// r_i = rank gl(i) = i, or r_i = rank so(i) = floor(i/2).
struct AlgebraKind {
    Family family = Family::general_linear;
    std::size_t n = 0;

    static AlgebraKind gl(std::size_t n) { return {Family::general_linear, n}; }
    static AlgebraKind so(std::size_t n) { return {Family::orthogonal, n}; }

    bool is_gl() const { return family == Family::general_linear; }
    bool is_so() const { return family == Family::orthogonal; }

    std::size_t rank(std::size_t level) const {
        if (level < 1 || level > n) throw std::invalid_argument("rank: level out of range");
        return is_gl() ? level : level / 2;
    }

    // d = sum of r_i over levels below the top; half the dimension of a
    // regular adjoint orbit.
    std::size_t d() const {
        std::size_t s = 0;
        for (std::size_t i = 1; i < n; ++i) s += rank(i);
        return s;
    }

    std::size_t num_invariants() const { return d() + rank(n); }

    std::string name() const { return is_gl() ? "gl" : "so"; }

    void validate_element(const MatrixC& x) const {
        if (x.size() != n) throw std::invalid_argument("element has wrong dimension");
        if (!x.all_finite()) throw std::invalid_argument("element has non-finite entries");
        if (is_so()) require_skew(x, "so element");
    }

    bool operator==(const AlgebraKind&) const = default;
};

} // namespace gz
