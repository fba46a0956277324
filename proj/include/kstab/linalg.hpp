#pragma once

// Small dense exact linear algebra over Rat. Dimensions here never exceed a
// few dozen rows, so plain Gaussian elimination is used throughout.

#include <optional>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab::linalg {

using Matrix = std::vector<RatVec>;  // row-major

std::size_t rank(Matrix rows);

/// Basis of {x : rows * x = 0}; `cols` is needed when `rows` is empty.
std::vector<RatVec> nullspace(Matrix rows, std::size_t cols);

Rat determinant(Matrix square);

/// Solves rows * x = rhs. Returns nullopt if inconsistent; picks free
/// variables = 0 if the solution is not unique.
std::optional<RatVec> solve(Matrix rows, RatVec rhs);

/// Dimension of the affine hull of the given points; -1 for an empty set.
int affine_dim(const std::vector<const RatVec*>& points);

}  // namespace kstab::linalg
