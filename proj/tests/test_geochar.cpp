#include "doctest.h"

#include "fgerbe/errors.hpp"
#include "fgerbe/geochar.hpp"
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

TEST_CASE("push-forward fiber dimensions") {
  const GroupBundle reg = push_forward(*trivial_gerbe(left_translation(s3())));
  CHECK(reg.dims() == std::vector<int>{6, 0, 0, 0, 0, 0});
  const GroupBundle coset = push_forward(*trivial_gerbe(coset_gset(s3(), {1})));
  for (int x = 0; x < 6; ++x) {
    const int order = element_order(*s3(), x);
    CHECK(coset.dim(x) == (order == 1 ? 3 : order == 2 ? 1 : 0));
  }
  CHECK_FALSE(validate_bundle(coset));
}

TEST_CASE("push-forward of the bilinear gerbe") {
  const GroupBundle ch = push_forward(*z22_bilinear_point());
  CHECK(ch.dims() == std::vector<int>{1, 1, 1, 1});
  for (int h = 0; h < 4; ++h)
    for (int x = 0; x < 4; ++x) {
      const int sign = ((h % 2) * (x / 2) + (x % 2) * (h / 2)) % 2 ? -1 : 1;
      CHECK(ch.map(h, x)(0, 0) == Complex(sign));
    }
}

TEST_CASE("two-character action") {
  const GerbePtr coset = trivial_gerbe(coset_gset(s3(), {1}));
  for (int g = 0; g < 6; ++g)
    for (int x = 0; x < 6; ++x) {
      const MatrixXc m = two_character_action(*coset, g, x, 5);
      // Permutation matrix of g on Fix(x).
      for (Eigen::Index r = 0; r < m.rows(); ++r) CHECK(std::abs(m.row(r).sum() - Complex(1.0)) < 1e-12);
      if (g == 0) CHECK(max_abs_diff(m, MatrixXc::Identity(m.rows(), m.cols())) < 1e-12);
    }
  const MatrixXc m = two_character_action(*z22_bilinear_point(), 1, 2, 0);
  REQUIRE(m.rows() == 1);
  CHECK(std::abs(m(0, 0) - Complex(-1.0)) < 1e-12);
}

TEST_CASE("ch on morphisms") {
  const GerbePtr coset = trivial_gerbe(coset_gset(s3(), {1}));
  for (const auto& m : ch_on_morphism(identity_kernel(coset)))
    CHECK(max_abs_diff(m, MatrixXc::Identity(m.rows(), m.cols())) < 1e-12);

  // Pauli bundle as a kernel from the trivial point gerbe to the bilinear one.
  const GerbePtr bil = z22_bilinear_point();
  const GerbePtr pt = trivial_gerbe(trivial_gset(z2xz2(), 1));
  auto tensor = std::make_shared<const Gerbe>(tensor_gerbes(*bil, *pt));
  const Kernel k = make_kernel(bil, pt, constant_bundle(tensor, weyl_matrices(2)));
  const auto mats = ch_on_morphism(k);
  CHECK(mats[0](0, 0) == Complex(2.0));
  for (int x = 1; x < 4; ++x) CHECK(std::abs(mats[x](0, 0)) < 1e-15);
  CHECK(ch_equivariance_residual(push_forward(*bil), push_forward(*pt), mats) < 1e-12);

  const auto zero = ch_on_morphism(make_kernel(bil, pt, zero_bundle(tensor)));
  for (const auto& m : zero) CHECK(m.squaredNorm() == 0.0);
}

TEST_CASE("hat map") {
  const GerbePtr coset = trivial_gerbe(coset_gset(s3(), {1}));
  const Kernel id = identity_kernel(coset);
  const auto hat = hat_map(*coset, *coset, twisted_character(id.bundle));
  for (const auto& m : hat) CHECK(max_abs_diff(m, MatrixXc::Identity(m.rows(), m.cols())) < 1e-12);

  const Gerbe tensor = tensor_gerbes(*coset, *coset);
  const LoopGroupoid loops(tensor.gset_ptr());
  for (const auto& m : hat_map(*coset, *coset, FlatSection::Zero(loops.size()))) CHECK(m.squaredNorm() == 0.0);

  FlatSection bad = FlatSection::Zero(loops.size());
  bad[1] = 1.0;
  CHECK_THROWS_WITH_AS(hat_map(*coset, *coset, bad), doctest::Contains("not flat"), ValidationError);

  // Bilinear point: the flat section lives at x = e only.
  const GerbePtr bil = z22_bilinear_point();
  const TransgressedBundle t = transgress(tensor_gerbes(*bil, *bil));
  const FlatSections f = flat_sections(t);
  for (const auto& xi : f.basis) {
    const auto h = hat_map(*bil, *bil, xi);
    CHECK(std::abs(section_inner(t, xi, xi).real() - hat_norm_squared(h, 4)) < 1e-12);
  }
  const GerbePtr pt = trivial_gerbe(trivial_gset(z2xz2(), 1));
  const FlatSections g = flat_sections(transgress(tensor_gerbes(*bil, *pt)));
  REQUIRE(g.dimension == 1);
  const auto h = hat_map(*bil, *pt, g.basis[0]);
  CHECK(std::abs(h[0](0, 0)) > 0.5);
  for (int x = 1; x < 4; ++x) CHECK(std::abs(h[x](0, 0)) == 0.0);
}

TEST_CASE("End count formulas") {
  const EndCount coset = end_count_formula(*trivial_gerbe(coset_gset(s3(), {1})));
  CHECK(coset.plain_numerator == 3);
  CHECK(coset.plain_denominator == 1);
  CHECK(std::abs(coset.weighted - Complex(3.0)) < 1e-12);

  for (const FiniteGroup& g : {symmetric_group(3), dihedral_group(4), cyclic_group(5)}) {
    const auto gp = std::make_shared<const FiniteGroup>(g);
    const EndCount pt = end_count_formula(*trivial_gerbe(trivial_gset(gp, 1)));
    CHECK(pt.plain_numerator == static_cast<std::int64_t>(conjugacy_data(g).classes.size()));
    CHECK(pt.plain_denominator == 1);
  }

  // X (x) conj(X) carries the trivial cocycle, so both counts equal its center dimension, 4.
  const GerbePtr bil = z22_bilinear_point();
  const EndCount b = end_count_formula(*bil);
  CHECK(b.plain_numerator == 4);
  CHECK(std::abs(b.weighted - Complex(4.0)) < 1e-12);
  CHECK(center_dimension(tensor_gerbes(*bil, *bil)) == 4);

  // Hom from the trivial point gerbe to the bilinear one: 4 tuples, weighted sum 1.
  const GerbePtr pt = trivial_gerbe(trivial_gset(z2xz2(), 1));
  const EndCount h = hom_count_formula(*bil, *pt);
  CHECK(h.plain_numerator == 4);
  CHECK(std::abs(h.weighted - Complex(1.0)) < 1e-12);

  // Mixed two-point gerbe: the counts differ.
  for (const auto& s : core_suite(1))
    if (s.name == "Z2xZ2/two-point/mixed") {
      const EndCount m = end_count_formula(*s.gerbe);
      CHECK(m.plain_numerator == 16);
      CHECK(std::abs(m.weighted - Complex(10.0)) < 1e-12);
      CHECK(center_dimension(tensor_gerbes(*s.gerbe, *s.gerbe)) == 10);
    }
}

TEST_CASE("homG dimensions") {
  const GerbePtr coset = trivial_gerbe(coset_gset(s3(), {1}));
  const GroupBundle c = push_forward(*coset);
  CHECK(homG_dimension(c, c) == 3);
  const GroupBundle zero = zero_bundle(group_gerbe(s3()));
  CHECK(homG_dimension(zero, zero) == 0);
  const GroupBundle b = push_forward(*z22_bilinear_point());
  CHECK(homG_dimension(b, b) == 4);
  const GroupBundle p = push_forward(*trivial_gerbe(trivial_gset(z2xz2(), 1)));
  CHECK(homG_dimension(p, b) == 1);
}
