#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "fgerbe/group.hpp"

namespace fgerbe {

/// A finite left G-set, act(g, i) = g.i.
class GSet {
 public:
  /// Validates the unit and compatibility axioms; throws ValidationError with a witness.
  GSet(GroupPtr group, int size, std::vector<std::vector<int>> act);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int size() const { return size_; }
  int act(int g, int i) const { return act_[static_cast<std::size_t>(g) * size_ + i]; }
  std::vector<std::vector<int>> table() const;

  bool operator==(const GSet& other) const {
    return *group_ == *other.group_ && act_ == other.act_;
  }

 private:
  GroupPtr group_;
  int size_ = 0;
  std::vector<int> act_;
};

using GSetPtr = std::shared_ptr<const GSet>;

GSet trivial_gset(GroupPtr g, int points);
GSet left_translation(GroupPtr g);
/// Left cosets gH of the subgroup generated by gens, ordered by smallest member.
GSet coset_gset(GroupPtr g, const std::vector<int>& gens);
/// Left cosets of an explicit subgroup; throws if the element list is not closed.
GSet coset_gset_of_subgroup(GroupPtr g, std::vector<int> subgroup);
GSet conjugation_gset(GroupPtr g);
/// Diagonal action on X x Y; the pair (x, y) has index x*|Y| + y.
GSet product_gset(const GSet& x, const GSet& y);

std::vector<int> fixed_points(const GSet& x, int g);

struct Loop {
  int point;
  int element;
  auto operator<=>(const Loop&) const = default;
};

/// Objects (i, x) with x.i = i, sorted by (i, x), and the conjugation action
/// g.(i, x) = (g.i, g x g^-1).
class LoopGroupoid {
 public:
  explicit LoopGroupoid(GSetPtr base);

  const GSet& base() const { return *base_; }
  const GSetPtr& base_ptr() const { return base_; }
  int size() const { return static_cast<int>(loops_.size()); }
  const Loop& loop(int k) const { return loops_[k]; }
  const std::vector<Loop>& loops() const { return loops_; }
  /// Index of the loop (i, x), or -1 when x does not fix i.
  int index(int i, int x) const { return index_[static_cast<std::size_t>(i) * group_order_ + x]; }
  int act(int g, int k) const { return act_[static_cast<std::size_t>(g) * loops_.size() + k]; }

 private:
  GSetPtr base_;
  int group_order_ = 0;
  std::vector<Loop> loops_;
  std::vector<int> index_;
  std::vector<int> act_;
};

struct OrbitData {
  /// orbit[k] lists the points of the k-th orbit ascending; orbits ordered by representative.
  std::vector<std::vector<int>> orbits;
  /// Stabilizer of orbits[k].front().
  std::vector<std::vector<int>> stabilizers;
  /// orbit_of[i] is the orbit index of point i.
  std::vector<int> orbit_of;
};

OrbitData orbits_and_stabilizers(const GSet& x);

/// Orbits of an arbitrary permutation action given as act(g, k) over n objects.
template <typename Act>
std::vector<int> orbit_labels(int group_order, int n, Act&& act) {
  std::vector<int> label(n, -1);
  int next = 0;
  for (int k = 0; k < n; ++k) {
    if (label[k] >= 0) continue;
    for (int g = 0; g < group_order; ++g) label[act(g, k)] = next;
    ++next;
  }
  return label;
}

}  // namespace fgerbe
