#pragma once

#include "phk/rational.hpp"

#include <optional>
#include <vector>

namespace phk {

using Matrix = std::vector<Vec>; // row-major, all rows same length

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix &m);

/// Dimension of the linear span of `vectors`. Throws InputError on an empty list.
std::size_t affine_rank(const std::vector<Vec> &vectors);

/// Basis of {d : row·d = 0 for every row}, for rows of length `cols`.
std::vector<Vec> null_space(const Matrix &rows, std::size_t cols);

/// Unique solution of the square system m·x = rhs, or nullopt when singular.
std::optional<Vec> solve_square(Matrix m, Vec rhs);

} // namespace phk
