#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fgerbe/bundle.hpp"

namespace fgerbe {

struct NamedGroup {
  std::string name;
  GroupPtr group;
};

/// Z2, Z4, Z2xZ2, S3, D4.
std::vector<NamedGroup> suite_groups();

struct NamedGSet {
  std::string name;
  GSetPtr gset;
};

/// point, left translation, cosets of the first element of order 2, conjugation.
std::vector<NamedGSet> suite_gsets(const NamedGroup& g);

enum class CocycleKind { trivial, coboundary, inflated, twisted };

struct SuiteGerbe {
  std::string name;
  GerbePtr gerbe;
  CocycleKind kind = CocycleKind::trivial;
  std::optional<Cochain1> potential;  // delta(potential) is the cocycle (coboundary entries)
  std::vector<MatrixXc> projective;   // U(g) with U(g2) U(g1) = phi(g2, g1) U(g2 g1), when available
};

/// Every suite group and gset with the trivial cocycle and a random coboundary, the Z2xZ2
/// bilinear cocycle on each Z2xZ2 gset, the Heisenberg and Q8 extension gerbes and a
/// two-point Z2xZ2 gerbe mixing the bilinear and trivial cocycles.
std::vector<SuiteGerbe> core_suite(std::uint64_t seed);

/// exp(g, h) = g_2 h_1 on Z/n x Z/n, element (a, b) at index a*n + b.
std::vector<std::vector<int>> bilinear_table(int n);

GroupPtr z2xz2();
/// Point gerbe over Z2xZ2 with the bilinear cocycle at N = 2.
GerbePtr z22_bilinear_point();

/// Z/2 -> Q8 -> Z2xZ2 with the section (a, b) -> i^a j^b.
AbelianExtension q8_extension();
/// Z/p -> Heis(Z/p) -> Z/p x Z/p with the section (a, b) -> (a, b, 0).
AbelianExtension heisenberg_extension(int p);

/// Random positive rationals constant on orbits.
std::vector<ScaleFactor> random_invariant_metric(const GSet& x, std::mt19937_64& rng);

}  // namespace fgerbe
