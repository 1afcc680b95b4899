#include "fgerbe/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace fgerbe {

template <typename Scalar>
void SparseSystem<Scalar>::add_row(std::vector<std::pair<int, Scalar>> row) {
  // Merge duplicate columns and drop exact zeros.
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Scalar>> merged;
  for (const auto& [c, v] : row) {
    if (!merged.empty() && merged.back().first == c)
      merged.back().second += v;
    else
      merged.emplace_back(c, v);
  }
  std::erase_if(merged, [](const auto& e) { return e.second == Scalar(0); });
  if (!merged.empty()) rows_.push_back(std::move(merged));
}

template <typename Scalar>
int SparseSystem<Scalar>::nullity(double relative_tolerance) const {
  std::vector<int> parent(unknowns_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& row : rows_)
    for (std::size_t k = 1; k < row.size(); ++k) {
      const int a = find(row[0].first), b = find(row[k].first);
      if (a != b) parent[a] = b;
    }

  // Components: local column numbering and the rows that touch them.
  std::vector<int> comp_of(unknowns_), local(unknowns_);
  std::vector<int> comp_size;
  std::vector<int> root_to_comp(unknowns_, -1);
  for (int c = 0; c < unknowns_; ++c) {
    const int r = find(c);
    if (root_to_comp[r] < 0) {
      root_to_comp[r] = static_cast<int>(comp_size.size());
      comp_size.push_back(0);
    }
    comp_of[c] = root_to_comp[r];
    local[c] = comp_size[comp_of[c]]++;
  }
  std::vector<std::vector<std::size_t>> comp_rows(comp_size.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) comp_rows[comp_of[rows_[r][0].first]].push_back(r);

  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  std::vector<Eigen::VectorXd> singular;
  double sigma_max = 0.0;
  for (std::size_t k = 0; k < comp_size.size(); ++k) {
    if (comp_rows[k].empty()) continue;
    Mat m = Mat::Zero(static_cast<Eigen::Index>(comp_rows[k].size()), comp_size[k]);
    for (std::size_t r = 0; r < comp_rows[k].size(); ++r)
      for (const auto& [c, v] : rows_[comp_rows[k][r]]) m(static_cast<Eigen::Index>(r), local[c]) = v;
    Eigen::VectorXd s;
    if (m.rows() * m.cols() <= 64 * 64)
      s = Eigen::JacobiSVD<Mat>(m).singularValues();
    else
      s = Eigen::BDCSVD<Mat>(m).singularValues();
    if (s.size() > 0) sigma_max = std::max(sigma_max, s.maxCoeff());
    singular.push_back(std::move(s));
  }
  int rank = 0;
  const double threshold = relative_tolerance * sigma_max;
  for (const auto& s : singular)
    for (Eigen::Index k = 0; k < s.size(); ++k)
      if (s[k] > threshold) ++rank;
  return unknowns_ - rank;
}

template class SparseSystem<Complex>;
template class SparseSystem<double>;

int numerical_rank(const MatrixXc& m, double relative_tolerance) {
  if (m.size() == 0) return 0;
  const Eigen::VectorXd s = Eigen::BDCSVD<MatrixXc>(m).singularValues();
  const double threshold = relative_tolerance * s.maxCoeff();
  return static_cast<int>((s.array() > threshold).count());
}

}  // namespace fgerbe
