#include "doctest.h"

#include "fgerbe/errors.hpp"
#include "fgerbe/group.hpp"
#include "fgerbe/gset.hpp"

using namespace fgerbe;

namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

void check_axioms(const GSet& x) {
  const FiniteGroup& g = x.group();
  for (int i = 0; i < x.size(); ++i) {
    CHECK(x.act(0, i) == i);
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) CHECK(x.act(a, x.act(b, i)) == x.act(g.mul(a, b), i));
  }
}

}  // namespace

TEST_CASE("builders give valid actions of the expected size") {
  const GroupPtr s3 = share(symmetric_group(3));
  const GSet pt = trivial_gset(s3, 1);
  CHECK(pt.size() == 1);
  for (int a = 0; a < 6; ++a) CHECK(pt.act(a, 0) == 0);
  const GSet coset = coset_gset(s3, {1});
  CHECK(coset.size() == 3);
  check_axioms(coset);
  check_axioms(left_translation(s3));
  check_axioms(conjugation_gset(s3));
  check_axioms(product_gset(coset, coset));
  CHECK(product_gset(coset, left_translation(s3)).size() == 18);
  CHECK(coset_gset(s3, {3}).size() == 2);
}

TEST_CASE("fixed points") {
  const GroupPtr z4 = share(cyclic_group(4));
  const GSet left = left_translation(z4);
  CHECK(fixed_points(left, 0) == std::vector<int>{0, 1, 2, 3});
  for (int x = 1; x < 4; ++x) CHECK(fixed_points(left, x).empty());

  const GroupPtr s3 = share(symmetric_group(3));
  const GSet coset = coset_gset(s3, {1});
  for (int x = 0; x < 6; ++x) {
    const int order = element_order(*s3, x);
    const std::size_t expected = order == 1 ? 3 : order == 2 ? 1 : 0;
    CHECK(fixed_points(coset, x).size() == expected);
  }
}

TEST_CASE("loop groupoid counts") {
  const GroupPtr s3 = share(symmetric_group(3));
  auto conj = std::make_shared<const GSet>(conjugation_gset(s3));
  CHECK(LoopGroupoid(conj).size() == conjugacy_data(*s3).commuting_pair_count);
  CHECK(LoopGroupoid(conj).size() == 18);
  auto pt = std::make_shared<const GSet>(trivial_gset(s3, 1));
  CHECK(LoopGroupoid(pt).size() == 6);
  auto left = std::make_shared<const GSet>(left_translation(s3));
  const LoopGroupoid l(left);
  CHECK(l.size() == 6);
  for (const auto& loop : l.loops()) CHECK(loop.element == 0);
}

TEST_CASE("loop action is a G-action on loops") {
  const GroupPtr d4 = share(dihedral_group(4));
  auto x = std::make_shared<const GSet>(coset_gset(d4, {4}));
  const LoopGroupoid l(x);
  for (int k = 0; k < l.size(); ++k) {
    const Loop& loop = l.loop(k);
    CHECK(x->act(loop.element, loop.point) == loop.point);
    CHECK(l.index(loop.point, loop.element) == k);
    CHECK(l.act(0, k) == k);
    for (int a = 0; a < 8; ++a) {
      const Loop& moved = l.loop(l.act(a, k));
      CHECK(moved.point == x->act(a, loop.point));
      CHECK(moved.element == d4->conj(a, loop.element));
      for (int b = 0; b < 8; ++b) CHECK(l.act(a, l.act(b, k)) == l.act(d4->mul(a, b), k));
    }
  }
}

TEST_CASE("orbits and stabilizers satisfy orbit-stabilizer") {
  const GroupPtr d4 = share(dihedral_group(4));
  const GSet conj = conjugation_gset(d4);
  const OrbitData o = orbits_and_stabilizers(conj);
  CHECK(o.orbits.size() == 5);
  for (std::size_t k = 0; k < o.orbits.size(); ++k)
    CHECK(o.orbits[k].size() * o.stabilizers[k].size() == 8);
}

TEST_CASE("invalid actions are rejected") {
  const GroupPtr z2 = share(cyclic_group(2));
  CHECK_THROWS_AS(GSet(z2, 2, {{1, 0}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(GSet(z2, 2, {{0, 1}, {0, 0}}), ValidationError);
  CHECK_THROWS_AS(GSet(z2, 2, {{0, 1}, {0, 5}}), std::runtime_error);
  const GroupPtr s3 = share(symmetric_group(3));
  CHECK_THROWS_AS(coset_gset_of_subgroup(s3, {0, 1, 3}), std::runtime_error);
}
