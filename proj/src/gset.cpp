#include "fgerbe/gset.hpp"

#include <algorithm>
#include <string>

#include "fgerbe/errors.hpp"

namespace fgerbe {

GSet::GSet(GroupPtr group, int size, std::vector<std::vector<int>> act)
    : group_(std::move(group)), size_(size) {
  if (!group_) throw StructuralError("G-set without a group");
  const int n = group_->order();
  if (size_ < 1) throw StructuralError("G-set size must be positive");
  if (static_cast<int>(act.size()) != n)
    throw StructuralError("action table must have one row per group element");
  act_.resize(static_cast<std::size_t>(n) * size_);
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(act[g].size()) != size_)
      throw StructuralError("action row " + std::to_string(g) + " has wrong length");
    for (int i = 0; i < size_; ++i) {
      if (act[g][i] < 0 || act[g][i] >= size_)
        throw StructuralError("action entry out of range at (" + std::to_string(g) + ", " +
                              std::to_string(i) + ")");
      act_[static_cast<std::size_t>(g) * size_ + i] = act[g][i];
    }
  }
  for (int i = 0; i < size_; ++i)
    if (this->act(0, i) != i)
      throw ValidationError("unit axiom failed: e." + std::to_string(i) + " != " + std::to_string(i));
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int i = 0; i < size_; ++i)
        if (this->act(g2, this->act(g1, i)) != this->act(group_->mul(g2, g1), i))
          throw ValidationError("compatibility axiom failed at (g1, g2, i) = (" + std::to_string(g1) +
                                ", " + std::to_string(g2) + ", " + std::to_string(i) + ")");
}

std::vector<std::vector<int>> GSet::table() const {
  std::vector<std::vector<int>> rows(group_->order(), std::vector<int>(size_));
  for (int g = 0; g < group_->order(); ++g)
    for (int i = 0; i < size_; ++i) rows[g][i] = act(g, i);
  return rows;
}

GSet trivial_gset(GroupPtr g, int points) {
  std::vector<std::vector<int>> act(g->order(), std::vector<int>(points));
  for (auto& row : act)
    for (int i = 0; i < points; ++i) row[i] = i;
  return GSet(std::move(g), points, std::move(act));
}

GSet left_translation(GroupPtr g) {
  const int n = g->order();
  std::vector<std::vector<int>> act(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) act[a][b] = g->mul(a, b);
  return GSet(std::move(g), n, std::move(act));
}

GSet coset_gset(GroupPtr g, const std::vector<int>& gens) {
  return coset_gset_of_subgroup(g, subgroup_closure(*g, gens));
}

GSet coset_gset_of_subgroup(GroupPtr g, std::vector<int> subgroup) {
  const int n = g->order();
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
  if (subgroup.empty() || subgroup.front() != 0)
    throw ValidationError("subgroup must contain the identity");
  for (int a : subgroup) {
    if (a < 0 || a >= n) throw StructuralError("subgroup element out of range");
    for (int b : subgroup)
      if (!std::binary_search(subgroup.begin(), subgroup.end(), g->mul(a, b)))
        throw ValidationError("subgroup not closed: " + std::to_string(a) + "*" + std::to_string(b));
  }
  // coset_of[x] = index of xH; cosets numbered by their smallest element.
  std::vector<int> coset_of(n, -1);
  int count = 0;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    for (int h : subgroup) coset_of[g->mul(x, h)] = count;
    ++count;
  }
  std::vector<int> rep(count);
  for (int x = n - 1; x >= 0; --x) rep[coset_of[x]] = x;
  std::vector<std::vector<int>> act(n, std::vector<int>(count));
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < count; ++c) act[a][c] = coset_of[g->mul(a, rep[c])];
  return GSet(std::move(g), count, std::move(act));
}

GSet conjugation_gset(GroupPtr g) {
  const int n = g->order();
  std::vector<std::vector<int>> act(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) act[a][x] = g->conj(a, x);
  return GSet(std::move(g), n, std::move(act));
}

GSet product_gset(const GSet& x, const GSet& y) {
  if (!(x.group() == y.group())) throw StructuralError("product of G-sets over different groups");
  const int n = x.group().order(), ny = y.size(), size = x.size() * ny;
  std::vector<std::vector<int>> act(n, std::vector<int>(size));
  for (int g = 0; g < n; ++g)
    for (int p = 0; p < size; ++p) act[g][p] = x.act(g, p / ny) * ny + y.act(g, p % ny);
  return GSet(x.group_ptr(), size, std::move(act));
}

std::vector<int> fixed_points(const GSet& x, int g) {
  std::vector<int> out;
  for (int i = 0; i < x.size(); ++i)
    if (x.act(g, i) == i) out.push_back(i);
  return out;
}

LoopGroupoid::LoopGroupoid(GSetPtr base) : base_(std::move(base)) {
  const FiniteGroup& g = base_->group();
  group_order_ = g.order();
  index_.assign(static_cast<std::size_t>(base_->size()) * group_order_, -1);
  for (int i = 0; i < base_->size(); ++i)
    for (int x = 0; x < group_order_; ++x)
      if (base_->act(x, i) == i) {
        index_[static_cast<std::size_t>(i) * group_order_ + x] = static_cast<int>(loops_.size());
        loops_.push_back({i, x});
      }
  act_.resize(static_cast<std::size_t>(group_order_) * loops_.size());
  for (int a = 0; a < group_order_; ++a)
    for (std::size_t k = 0; k < loops_.size(); ++k)
      act_[a * loops_.size() + k] = index(base_->act(a, loops_[k].point), g.conj(a, loops_[k].element));
}

OrbitData orbits_and_stabilizers(const GSet& x) {
  const FiniteGroup& g = x.group();
  OrbitData out;
  out.orbit_of = orbit_labels(g.order(), x.size(), [&](int a, int i) { return x.act(a, i); });
  int count = 0;
  for (int o : out.orbit_of) count = std::max(count, o + 1);
  out.orbits.resize(count);
  for (int i = 0; i < x.size(); ++i) out.orbits[out.orbit_of[i]].push_back(i);
  for (const auto& orbit : out.orbits) {
    std::vector<int> stab;
    for (int a = 0; a < g.order(); ++a)
      if (x.act(a, orbit.front()) == orbit.front()) stab.push_back(a);
    out.stabilizers.push_back(std::move(stab));
  }
  return out;
}

}  // namespace fgerbe
