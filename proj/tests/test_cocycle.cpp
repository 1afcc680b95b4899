#include <random>

#include "doctest.h"

#include "fgerbe/cocycle.hpp"
#include "fgerbe/errors.hpp"
#include "fgerbe/instances.hpp"

using namespace fgerbe;

namespace {

GSetPtr point_of(FiniteGroup g) {
  return std::make_shared<const GSet>(trivial_gset(std::make_shared<const FiniteGroup>(std::move(g)), 1));
}

}  // namespace

TEST_CASE("roots of unity are exact on the axes") {
  CHECK(root_of_unity(0, 5) == std::complex<double>(1, 0));
  CHECK(root_of_unity(1, 2) == std::complex<double>(-1, 0));
  CHECK(root_of_unity(1, 4) == std::complex<double>(0, 1));
  CHECK(root_of_unity(3, 4) == std::complex<double>(0, -1));
  CHECK(std::abs(root_of_unity(1, 3) - std::polar(1.0, 2 * 3.14159265358979323846 / 3)) < 1e-15);
}

TEST_CASE("trivial cocycle and coboundaries validate") {
  const GroupPtr s3 = std::make_shared<const FiniteGroup>(symmetric_group(3));
  std::mt19937_64 rng(3);
  for (const GSet& x : {trivial_gset(s3, 1), left_translation(s3), coset_gset(s3, {1}), conjugation_gset(s3)}) {
    auto s = std::make_shared<const GSet>(x);
    CHECK_FALSE(validate_cocycle(trivial_cocycle(s)));
    for (int t = 0; t < 10; ++t) {
      const Cochain1 lambda = random_cochain(s, 5, rng);
      const Cocycle2 d = coboundary_of(lambda);
      CHECK_FALSE(validate_cocycle(d));
      const auto w = is_cohomologous(trivial_cocycle(s), d);
      REQUIRE(w);
      CHECK(verify_witness(trivial_cocycle(s), d, *w));
      // lambda itself is a witness.
      CHECK(verify_witness(trivial_cocycle(s), d, lambda));
    }
  }
}

TEST_CASE("coboundary of a homomorphism vanishes") {
  // lambda(g) = g on Z4 is additive, so delta lambda = 0.
  auto pt = point_of(cyclic_group(4));
  const Cochain1 lambda(pt, 4, {0, 1, 2, 3});
  CHECK(coboundary_of(lambda).is_zero());
}

TEST_CASE("cochains must be normalized") {
  auto pt = point_of(cyclic_group(3));
  CHECK_THROWS_AS(Cochain1(pt, 3, {1, 1, 1}), ValidationError);
}

TEST_CASE("Z2 x Z2 bilinear cocycle is not a coboundary") {
  auto pt = point_of(product_group(cyclic_group(2), cyclic_group(2)));
  const Cocycle2 phi = inflate_group_cocycle(pt, 2, bilinear_table(2));
  CHECK_FALSE(validate_cocycle(phi));
  CHECK_FALSE(is_cohomologous(trivial_cocycle(pt), phi));
  CHECK_FALSE(is_cohomologous(phi, trivial_cocycle(pt)));
  // Its transpose differs from it by a coboundary (the form a1 a2 + b1 b2 is symmetric).
  std::vector<std::vector<int>> transpose(4, std::vector<int>(4));
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) transpose[g][h] = bilinear_table(2)[h][g];
  const Cocycle2 psi = inflate_group_cocycle(pt, 2, transpose);
  const auto w = is_cohomologous(phi, psi);
  REQUIRE(w);
  CHECK(verify_witness(phi, psi, *w));
}

TEST_CASE("symmetric cocycle on Z2 bounds over a finer root of unity") {
  // phi(1, 1) = -1 on Z2 equals delta(lambda) with lambda(1) = i.
  auto pt = point_of(cyclic_group(2));
  const Cocycle2 phi(pt, 2, {0, 0, 0, 1});
  CHECK_FALSE(validate_cocycle(phi));
  const auto w = is_cohomologous(trivial_cocycle(pt), phi);
  REQUIRE(w);
  CHECK(w->order() % 4 == 0);
  CHECK(verify_witness(trivial_cocycle(pt), phi, *w));
}

TEST_CASE("validation reports the failing tuple") {
  auto pt = point_of(cyclic_group(2));
  const auto bad_norm = validate_cocycle(Cocycle2(pt, 2, {1, 0, 0, 0}));
  REQUIRE(bad_norm);
  CHECK(bad_norm->kind == CocycleViolation::Kind::normalization);

  auto z3 = point_of(cyclic_group(3));
  std::vector<int> e(9, 0);
  e[1 * 3 + 2] = 1;
  const auto bad = validate_cocycle(Cocycle2(z3, 3, e));
  REQUIRE(bad);
  CHECK(bad->kind == CocycleViolation::Kind::identity);
  CHECK_FALSE(bad->describe().empty());
}

TEST_CASE("mixed orders lift to the lcm") {
  auto pt = point_of(cyclic_group(6));
  std::mt19937_64 rng(5);
  const Cochain1 a = random_cochain(pt, 2, rng), b = random_cochain(pt, 3, rng);
  const Cochain1 s = add(a, b);
  CHECK(s.order() == 6);
  const Cocycle2 d = coboundary_of(s);
  CHECK(d == add(coboundary_of(a), coboundary_of(b)).lifted(d.order()));
  CHECK(subtract(d, d).is_zero());
  CHECK_THROWS_AS(common_order(999983, 1000003), ResourceError);
}

TEST_CASE("cohomology is an equivalence relation on samples") {
  const GroupPtr d4 = std::make_shared<const FiniteGroup>(dihedral_group(4));
  auto x = std::make_shared<const GSet>(coset_gset(d4, {4}));
  std::mt19937_64 rng(9);
  const Cocycle2 base = inflate_group_cocycle(x, 1, std::vector<std::vector<int>>(8, std::vector<int>(8, 0)));
  const Cocycle2 phi = add(base, coboundary_of(random_cochain(x, 4, rng)));
  const Cocycle2 psi = add(phi, coboundary_of(random_cochain(x, 6, rng)));
  const auto w1 = is_cohomologous(phi, psi);
  const auto w2 = is_cohomologous(psi, phi);
  REQUIRE(w1);
  REQUIRE(w2);
  CHECK(verify_witness(phi, psi, *w1));
  CHECK(verify_witness(psi, phi, *w2));
  CHECK(is_cohomologous(phi, phi));
}

TEST_CASE("pullback and tensor conjugate") {
  auto pt = point_of(product_group(cyclic_group(2), cyclic_group(2)));
  const Cocycle2 phi = inflate_group_cocycle(pt, 2, bilinear_table(2));
  CHECK(tensor_conjugate(phi, phi).is_zero());
  CHECK(pullback(phi, {0}, pt) == phi);
  const GroupPtr z2 = std::make_shared<const FiniteGroup>(cyclic_group(2));
  auto two = std::make_shared<const GSet>(left_translation(z2));
  CHECK_THROWS_AS(check_equivariant_bijection(*two, *two, {0, 0}), ValidationError);
  CHECK_NOTHROW(check_equivariant_bijection(*two, *two, {1, 0}));
}
