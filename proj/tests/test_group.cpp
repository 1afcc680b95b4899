#include <algorithm>
#include <set>

#include "doctest.h"

#include "fgerbe/errors.hpp"
#include "fgerbe/group.hpp"

using namespace fgerbe;

namespace {

// Classes by brute force: x ~ y iff some g has g x g^-1 = y.
int brute_classes(const FiniteGroup& g) {
  std::set<std::set<int>> classes;
  for (int x = 0; x < g.order(); ++x) {
    std::set<int> c;
    for (int a = 0; a < g.order(); ++a) c.insert(g.mul(g.mul(a, x), g.inv(a)));
    classes.insert(c);
  }
  return static_cast<int>(classes.size());
}

long brute_commuting(const FiniteGroup& g) {
  long n = 0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) n += g.mul(a, b) == g.mul(b, a);
  return n;
}

}  // namespace

TEST_CASE("constructors produce groups of the right order") {
  CHECK(cyclic_group(1).order() == 1);
  CHECK(cyclic_group(7).order() == 7);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(symmetric_group(3).order() == 6);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(product_group(cyclic_group(2), cyclic_group(3)).order() == 6);
  CHECK_THROWS_AS(symmetric_group(6), StructuralError);
}

TEST_CASE("Z2 x Z2 is elementary abelian") {
  const FiniteGroup g = product_group(cyclic_group(2), cyclic_group(2));
  for (int a = 0; a < 4; ++a) {
    CHECK(g.inv(a) == a);
    CHECK(g.mul(a, a) == 0);
  }
}

TEST_CASE("identity sits at index 0 and inverses are correct") {
  for (const FiniteGroup& g : {cyclic_group(5), dihedral_group(3), symmetric_group(4), dihedral_group(5)}) {
    for (int a = 0; a < g.order(); ++a) {
      CHECK(g.mul(0, a) == a);
      CHECK(g.mul(a, 0) == a);
      CHECK(g.mul(a, g.inv(a)) == 0);
    }
  }
}

TEST_CASE("dihedral encoding r^k s^f at k + n f") {
  const FiniteGroup d = dihedral_group(4);
  const int r = 1, s = 4;
  CHECK(d.mul(r, r) == 2);
  CHECK(element_order(d, r) == 4);
  CHECK(element_order(d, s) == 2);
  CHECK(d.mul(s, d.mul(r, s)) == d.inv(r));
}

TEST_CASE("conjugacy data matches brute force") {
  for (const FiniteGroup& g : {cyclic_group(4), symmetric_group(3), product_group(cyclic_group(2), cyclic_group(2)),
                               dihedral_group(4), symmetric_group(4), dihedral_group(5)}) {
    const ConjugacyData c = conjugacy_data(g);
    CHECK(static_cast<int>(c.classes.size()) == brute_classes(g));
    CHECK(c.commuting_pair_count == brute_commuting(g));
    CHECK(c.commuting_pair_count == static_cast<long>(g.order()) * static_cast<long>(c.classes.size()));
    std::vector<int> all;
    for (const auto& cl : c.classes) all.insert(all.end(), cl.begin(), cl.end());
    std::sort(all.begin(), all.end());
    CHECK(all.size() == static_cast<std::size_t>(g.order()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
  CHECK(conjugacy_data(cyclic_group(4)).commuting_pair_count == 16);
  CHECK(conjugacy_data(symmetric_group(3)).classes.size() == 3);
  CHECK(conjugacy_data(symmetric_group(3)).commuting_pair_count == 18);
  CHECK(conjugacy_data(dihedral_group(4)).classes.size() == 5);
}

TEST_CASE("from_table relabels the identity to index 0") {
  // Z3 with the identity written second.
  const FiniteGroup g = FiniteGroup::from_table({{2, 0, 1}, {0, 1, 2}, {1, 2, 0}}, {"a", "e", "b"});
  CHECK(g.order() == 3);
  CHECK(g.label(0) == "e");
  for (int a = 0; a < 3; ++a) CHECK(g.mul(0, a) == a);
}

TEST_CASE("table round trip is exact") {
  for (const FiniteGroup& g : {symmetric_group(3), dihedral_group(4), product_group(cyclic_group(2), cyclic_group(4))}) {
    const FiniteGroup h = FiniteGroup::from_table(g.table(), g.labels());
    CHECK(h == g);
    CHECK(h.table() == g.table());
  }
}

TEST_CASE("non-group tables are rejected with the violated axiom") {
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), doctest::Contains("associativ"),
                       ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}), std::runtime_error);
}

TEST_CASE("subgroup closure and generating sets") {
  const FiniteGroup s3 = symmetric_group(3);
  CHECK(subgroup_closure(s3, {}).size() == 1);
  CHECK(subgroup_closure(s3, {1}).size() == 2);
  CHECK(subgroup_closure(s3, {3}).size() == 3);
  CHECK(subgroup_closure(s3, generating_set(s3)).size() == 6);
  const FiniteGroup d4 = dihedral_group(4);
  CHECK(subgroup_closure(d4, generating_set(d4)).size() == 8);
}
