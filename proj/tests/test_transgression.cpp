#include <random>

#include "doctest.h"

#include "fgerbe/instances.hpp"
#include "fgerbe/transgression.hpp"

using namespace fgerbe;

namespace {

GerbePtr trivial_gerbe(GSet x) {
  auto s = std::make_shared<const GSet>(std::move(x));
  return std::make_shared<const Gerbe>(trivial_cocycle(s));
}

}  // namespace

TEST_CASE("trivial cocycle transgresses to the trivial bundle") {
  const GroupPtr s3 = std::make_shared<const FiniteGroup>(symmetric_group(3));
  const TransgressedBundle t = transgress(*trivial_gerbe(conjugation_gset(s3)));
  for (int g = 0; g < 6; ++g)
    for (int k = 0; k < t.loops().size(); ++k) CHECK(t.exponent(g, k) == 0);
}

TEST_CASE("Z2 x Z2 bilinear: tau(g; x) = (-1)^(g2 x1 + x2 g1)") {
  const GerbePtr x = z22_bilinear_point();
  const TransgressedBundle t = transgress(*x);
  REQUIRE(t.loops().size() == 4);
  for (int g = 0; g < 4; ++g)
    for (int k = 0; k < 4; ++k) {
      const int e = t.loops().loop(k).element;
      const int g1 = g / 2, g2 = g % 2, x1 = e / 2, x2 = e % 2;
      const int expected = (g2 * x1 + x2 * g1) % 2;
      CHECK(t.exponent(g, k) * 2 / t.order() == expected);
    }
}

TEST_CASE("closed form and complex recomputation agree with arrow composition") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (const auto& s : core_suite(6)) {
    const Gerbe& x = *s.gerbe;
    const TransgressedBundle t = transgress(x);
    CHECK_MESSAGE(transgression_is_functorial(t), s.name);
    std::vector<Complex> phases(static_cast<std::size_t>(x.group().order()) * x.gset().size());
    for (auto& p : phases) p = std::polar(1.0, angle(rng));
    const auto z = transgress_with_phases(x, phases);
    double worst = 0.0;
    for (int g = 0; g < x.group().order(); ++g)
      for (int k = 0; k < t.loops().size(); ++k) {
        const Loop& l = t.loops().loop(k);
        CHECK(transgression_closed_form(x, g, l.point, l.element) == t.exponent(g, k));
        worst = std::max(worst, std::abs(z[static_cast<std::size_t>(g) * t.loops().size() + k] - t.value(g, k)));
      }
    CHECK_MESSAGE(worst < 1e-12, s.name);
  }
}

TEST_CASE("flat section dimensions") {
  const GroupPtr s3 = std::make_shared<const FiniteGroup>(symmetric_group(3));
  CHECK(flat_sections(transgress(*trivial_gerbe(trivial_gset(s3, 1)))).dimension == 3);
  CHECK(flat_sections(transgress(*trivial_gerbe(left_translation(s3)))).dimension == 1);
  const FlatSections bil = flat_sections(transgress(*z22_bilinear_point()));
  REQUIRE(bil.dimension == 1);
  // Supported on the loop x = e.
  CHECK(std::abs(bil.basis[0][0]) > 0.5);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(bil.basis[0][k]) == 0.0);
}

TEST_CASE("flat bases are orthonormal and flat") {
  for (const auto& s : core_suite(7)) {
    const TransgressedBundle t = transgress(*s.gerbe);
    const FlatSections f = flat_sections(t);
    CHECK(max_abs_diff(f.gram, MatrixXc::Identity(f.dimension, f.dimension)) < 1e-12);
    for (const auto& psi : f.basis) CHECK(flatness_residual(t, psi) < 1e-12);
  }
}

TEST_CASE("re-sectioning preserves the flat dimension") {
  std::mt19937_64 rng(2);
  for (const auto& s : core_suite(8)) {
    const Gerbe moved = regauge(*s.gerbe, random_cochain(s.gerbe->gset_ptr(), 4, rng));
    CHECK_MESSAGE(flat_sections(transgress(moved)).dimension == flat_sections(transgress(*s.gerbe)).dimension,
                  s.name);
  }
}

TEST_CASE("twisted characters") {
  const GroupPtr s3 = std::make_shared<const FiniteGroup>(symmetric_group(3));
  const GerbePtr pt = trivial_gerbe(trivial_gset(s3, 1));
  const FlatSection one = twisted_character(trivial_line_bundle(pt));
  for (int k = 0; k < one.size(); ++k) CHECK(one[k] == Complex(1.0));

  const FlatSection reg = twisted_character(regular_bundle(pt));
  CHECK(reg[0] == Complex(6.0));
  for (int k = 1; k < reg.size(); ++k) CHECK(std::abs(reg[k]) < 1e-15);

  const GerbePtr bil = z22_bilinear_point();
  const EquivBundle pauli = constant_bundle(bil, weyl_matrices(2));
  const FlatSection chi = twisted_character(pauli);
  CHECK(chi[0] == Complex(2.0));
  for (int k = 1; k < 4; ++k) CHECK(std::abs(chi[k]) < 1e-15);
  CHECK(flatness_residual(transgress(*bil), chi) < 1e-12);
}

TEST_CASE("character inner products") {
  const GroupPtr s3 = std::make_shared<const FiniteGroup>(symmetric_group(3));
  const GerbePtr pt = trivial_gerbe(trivial_gset(s3, 1));
  const EquivBundle reg = regular_bundle(pt);
  CHECK(std::abs(character_inner(reg, reg) - Complex(6.0)) < 1e-12);
  CHECK(std::abs(character_inner(reg, zero_bundle(pt))) < 1e-12);
  const GerbePtr bil = z22_bilinear_point();
  const EquivBundle pauli = constant_bundle(bil, weyl_matrices(2));
  CHECK(std::abs(character_inner(pauli, pauli) - Complex(1.0)) < 1e-12);
  // Regular bundle of the bilinear gerbe is two copies of the Pauli bundle.
  CHECK(std::abs(character_inner(pauli, regular_bundle(bil)) - Complex(2.0)) < 1e-12);
  CHECK(hom_dimension(pauli, regular_bundle(bil)) == 2);
}
