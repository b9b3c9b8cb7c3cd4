#ifndef FUCHSIAN_EXACTALG_LINALG_HPP
#define FUCHSIAN_EXACTALG_LINALG_HPP

#include "fuchsian/exactalg/rational.hpp"

#include <optional>
#include <vector>

namespace fuchsian {

using RationalMatrix = std::vector<std::vector<Rational>>;  // row-major

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> row_reduce(RationalMatrix& m, int ncols);

int rank(RationalMatrix m, int ncols);

/// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m, int ncols);

/// Some solution of m x = rhs, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix m, const std::vector<Rational>& rhs,
                                                  int ncols);

}  // namespace fuchsian

#endif
