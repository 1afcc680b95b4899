#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace fgerbe {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Result of reducing an integer matrix to diagonal form, U A V = diag(d_0, ..., d_{r-1}, 0, ...).
/// U is not stored; it is applied to the right-hand sides handed to smith_diagonalize.
struct SmithReduction {
  std::vector<std::int64_t> diagonal;  // nonzero pivots, length = rank
  IntMatrix column_transform;          // V, unimodular
};

/// Diagonalizes a over Z. Every row operation is also applied to each column of rhs
/// (entries reduced modulo rhs_modulus when it is positive).
/// Throws ResourceError on int64 overflow.
SmithReduction smith_diagonalize(IntMatrix a, IntMatrix* rhs = nullptr,
                                 std::int64_t rhs_modulus = 0);

/// A vector of elements of Q/Z with a common denominator.
struct QZVector {
  std::int64_t denominator = 1;
  std::vector<std::int64_t> numerators;  // each in [0, denominator)
};

/// Solves A x = b/n in (Q/Z)^cols, where b is an integer vector read modulo n.
/// Returns nullopt when no solution exists. Throws ResourceError when the solution's
/// common denominator exceeds max_denominator.
std::optional<QZVector> solve_mod_one(const IntMatrix& a, const std::vector<std::int64_t>& b,
                                      std::int64_t n, std::int64_t max_denominator = 1000000);

}  // namespace fgerbe
