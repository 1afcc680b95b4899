#include <random>

#include "doctest.h"

#include "fgerbe/bundle.hpp"
#include "fgerbe/errors.hpp"
#include "fgerbe/instances.hpp"

using namespace fgerbe;

namespace {

GerbePtr trivial_gerbe(GSet x) {
  auto s = std::make_shared<const GSet>(std::move(x));
  return std::make_shared<const Gerbe>(trivial_cocycle(s));
}

GroupPtr s3() {
  static const GroupPtr g = std::make_shared<const FiniteGroup>(symmetric_group(3));
  return g;
}

}  // namespace

TEST_CASE("kron layout") {
  MatrixXc a(1, 2), b(2, 1);
  a << 1.0, 2.0;
  b << 3.0, 4.0;
  const MatrixXc k = kron(a, b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 2);
  CHECK(k(1, 0) == Complex(4.0));
  CHECK(k(0, 1) == Complex(6.0));
}

TEST_CASE("sparse nullity") {
  SparseSystem<double> sys(4);
  sys.add_row({{0, 1.0}, {1, -1.0}});
  sys.add_row({{2, 1.0}, {2, 1.0}});
  CHECK(sys.nullity() == 2);
  SparseSystem<Complex> empty(3);
  CHECK(empty.nullity() == 3);
}

TEST_CASE("Pauli and clock-shift matrices are projective representations") {
  const GerbePtr bil = z22_bilinear_point();
  const EquivBundle pauli = constant_bundle(bil, weyl_matrices(2));
  CHECK_FALSE(validate_bundle(pauli));
  CHECK(bundle_residual(pauli) < 1e-15);
  // Over the trivial gerbe the Pauli matrices fail functoriality.
  const GerbePtr triv = trivial_gerbe(trivial_gset(z2xz2(), 1));
  const auto bad = validate_bundle(constant_bundle(triv, weyl_matrices(2)));
  REQUIRE(bad);
  CHECK(bad->kind == BundleViolation::Kind::functoriality);

  const Gerbe heis = from_abelian_extension(heisenberg_extension(3));
  auto one = std::make_shared<const Gerbe>(restrict_gerbe(heis, {1}));
  CHECK_FALSE(validate_bundle(constant_bundle(one, weyl_matrices(3))));
}

TEST_CASE("shape errors") {
  const GerbePtr x = trivial_gerbe(trivial_gset(s3(), 1));
  CHECK_THROWS_AS(EquivBundle(x, {1}, std::vector<MatrixXc>(6, MatrixXc::Ones(2, 1))), StructuralError);
  CHECK_THROWS_AS(EquivBundle(x, {1}, std::vector<MatrixXc>(5, MatrixXc::Ones(1, 1))), StructuralError);
}

TEST_CASE("non-unitary maps are reported") {
  const GerbePtr x = trivial_gerbe(trivial_gset(std::make_shared<const FiniteGroup>(cyclic_group(2)), 1));
  const EquivBundle e(x, {1}, {MatrixXc::Ones(1, 1), MatrixXc::Constant(1, 1, 2.0)});
  const auto v = validate_bundle(e);
  REQUIRE(v);
  CHECK(v->kind == BundleViolation::Kind::unitarity);
}

TEST_CASE("regular bundles are valid on every suite gerbe") {
  for (const auto& s : core_suite(4)) {
    if (s.gerbe->gset().size() * s.gerbe->group().order() > 64) continue;
    CHECK_MESSAGE(!validate_bundle(regular_bundle(s.gerbe)), s.name);
  }
}

TEST_CASE("hom dimensions against representation theory") {
  const GerbePtr pt = trivial_gerbe(trivial_gset(s3(), 1));
  const EquivBundle reg = regular_bundle(pt);
  const EquivBundle triv = trivial_line_bundle(pt);
  // Regular representation of S3: 1 + 1 + 2*2, so End has dimension 1 + 1 + 4.
  CHECK(hom_dimension(reg, reg) == 6);
  CHECK(hom_dimension(triv, reg) == 1);
  CHECK(hom_dimension(reg, triv) == 1);
  CHECK(hom_dimension(triv, triv) == 1);
  CHECK(hom_dimension(direct_sum(triv, reg), direct_sum(triv, reg)) == 6 + 1 + 1 + 1);
  CHECK(hom_dimension(reg, zero_bundle(pt)) == 0);

  // Over left translation every bundle is determined by one fiber.
  const GerbePtr left = trivial_gerbe(left_translation(s3()));
  CHECK(hom_dimension(trivial_line_bundle(left), trivial_line_bundle(left)) == 1);
  CHECK(hom_dimension(regular_bundle(left), regular_bundle(left)) == 36);
}

TEST_CASE("line bundles of coboundaries") {
  std::mt19937_64 rng(8);
  auto x = std::make_shared<const GSet>(conjugation_gset(s3()));
  for (int t = 0; t < 5; ++t) {
    const Cochain1 lambda = random_cochain(x, 6, rng);
    auto g = std::make_shared<const Gerbe>(coboundary_of(lambda));
    CHECK_FALSE(validate_bundle(line_bundle(g, lambda)));
  }
}

TEST_CASE("center dimension") {
  // Class functions on S3, and on groups of order 8.
  CHECK(center_dimension(*trivial_gerbe(trivial_gset(s3(), 1))) == 3);
  CHECK(center_dimension(*trivial_gerbe(trivial_gset(std::make_shared<const FiniteGroup>(dihedral_group(4)), 1))) == 5);
  CHECK(center_dimension(*trivial_gerbe(left_translation(s3()))) == 1);
  // Stabilizer Z2 of the coset action: two classes.
  CHECK(center_dimension(*trivial_gerbe(coset_gset(s3(), {1}))) == 2);
  CHECK(center_dimension(*z22_bilinear_point()) == 1);
  // Q8: trivial character contributes 4, the sign character 1.
  CHECK(center_dimension(from_abelian_extension(q8_extension())) == 5);
  // Heisenberg group of order 27: 9 + 2 characters at the three points.
  CHECK(center_dimension(from_abelian_extension(heisenberg_extension(3))) == 11);
}

TEST_CASE("kernel composition") {
  const GerbePtr x = trivial_gerbe(coset_gset(s3(), {1}));
  const Kernel id = identity_kernel(x);
  const Kernel reg = regular_kernel(x, x);
  CHECK_FALSE(validate_bundle(id.bundle));
  const Kernel a = kernel_compose(id, reg);
  const Kernel b = kernel_compose(reg, id);
  CHECK(a.bundle.dims() == reg.bundle.dims());
  CHECK(b.bundle.dims() == reg.bundle.dims());
  CHECK_FALSE(validate_bundle(a.bundle));
  const Kernel rr = kernel_compose(reg, reg);
  CHECK_FALSE(validate_bundle(rr.bundle));
  CHECK(rr.bundle.total_dim() == 9 * 3 * 36);

  const GerbePtr bil = z22_bilinear_point();
  CHECK_FALSE(validate_bundle(kernel_compose(regular_kernel(bil, bil), regular_kernel(bil, bil)).bundle));
  CHECK_THROWS_AS(kernel_compose(identity_kernel(bil), reg), StructuralError);
}

TEST_CASE("center dimension guard") {
  const GerbePtr big = trivial_gerbe(left_translation(std::make_shared<const FiniteGroup>(symmetric_group(5))));
  CHECK_THROWS_AS(center_dimension(*big), ResourceError);
}
