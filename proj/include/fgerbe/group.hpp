#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fgerbe {

/// Finite group stored as a dense multiplication table.
///
/// Elements are indices 0..order-1 and the identity is always index 0.
/// mul(a, b) is the product a*b.
class FiniteGroup {
 public:
  /// Validates the table and relabels so the identity sits at index 0.
  /// Throws ValidationError naming the first violated axiom.
  static FiniteGroup from_table(std::vector<std::vector<int>> rows,
                                std::vector<std::string> labels = {});

  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int g) const;

  std::vector<std::vector<int>> table() const;

  bool operator==(const FiniteGroup& other) const { return mul_ == other.mul_; }

 private:
  FiniteGroup() = default;
  int order_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

FiniteGroup cyclic_group(int n);
/// Dihedral group of order 2n; element r^k s^f has index k + n*f.
FiniteGroup dihedral_group(int n);
/// Symmetric group on n <= 5 letters; permutations in lexicographic order.
FiniteGroup symmetric_group(int n);
/// Direct product; (a, b) has index a*|B| + b.
FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b);

struct ConjugacyData {
  std::vector<std::vector<int>> classes;
  std::int64_t commuting_pair_count = 0;
};

ConjugacyData conjugacy_data(const FiniteGroup& g);

/// Smallest subgroup containing gens, sorted ascending.
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);

/// A greedy generating set (each element not in the span of the previous ones).
std::vector<int> generating_set(const FiniteGroup& g);

int element_order(const FiniteGroup& g, int x);

}  // namespace fgerbe
