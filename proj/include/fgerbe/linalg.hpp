#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace fgerbe {

using Complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;

/// Relative singular-value threshold for rank decisions.
inline constexpr double kRankTolerance = 1e-7;

/// Kronecker product; entry ((a, b), (c, d)) = A(a, c) B(b, d), row index a*B.rows() + b.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                                               a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Largest entrywise modulus of a - b; zero for empty matrices.
template <typename DerivedA, typename DerivedB>
double max_abs_diff(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

/// Homogeneous linear system assembled row by row from sparse entries.
///
/// nullity() splits the unknowns into connected components (unknowns sharing an
/// equation) and takes singular values of each dense block; the rank threshold is
/// kRankTolerance times the largest singular value over all blocks.
template <typename Scalar>
class SparseSystem {
 public:
  explicit SparseSystem(int unknowns) : unknowns_(unknowns) {}

  int unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_.size(); }

  void add_row(std::vector<std::pair<int, Scalar>> row);

  /// Dimension of the solution space.
  int nullity(double relative_tolerance = kRankTolerance) const;

 private:
  int unknowns_;
  std::vector<std::vector<std::pair<int, Scalar>>> rows_;
};

extern template class SparseSystem<Complex>;
extern template class SparseSystem<double>;

/// Rank of a dense matrix by singular values relative to the largest one.
int numerical_rank(const MatrixXc& m, double relative_tolerance = kRankTolerance);

}  // namespace fgerbe
