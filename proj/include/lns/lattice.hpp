#pragma once

// Exact integral LLL and the lower bound for the distance from a point to a
// lattice used in the reduction steps.

#include "lns/arith.hpp"

#include <vector>

namespace lns {

// Basis vectors are rows.
using IntMatrix = std::vector<std::vector<Int>>;

struct ReducedBasis {
    IntMatrix basis;
    // d[0] = 1, d[i] = Gram determinant of the first i vectors, so that
    // |b*_i|^2 = d[i+1] / d[i] (0-based i).
    std::vector<Int> d;

    std::size_t dim() const { return basis.size(); }
    Rat gs_norm_sq(std::size_t i) const;
};

// Integral LLL with parameter 3/4; input rows must be linearly independent.
ReducedBasis lll_reduce(IntMatrix basis);

// Coordinates of y with respect to the rows of b (b square, nonsingular).
std::vector<Rat> lattice_coordinates(const IntMatrix& b, const std::vector<Int>& y);

struct DistanceBound {
    Rat l_sq;              // lower bound for min |x - y|^2 over lattice points x
    bool y_in_lattice = false;
    std::size_t index = 0;  // largest index with non-integral coordinate
    Rat sigma;              // its distance to the nearest integer
};

// min(sigma^2 |b*_i0|^2, min_{j > i0} |b*_j|^2); for y = 0 this is |b_1|^2 / 2^(n-1).
DistanceBound distance_lower_bound(const ReducedBasis& rb, const std::vector<Int>& y);

Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

}  // namespace lns
