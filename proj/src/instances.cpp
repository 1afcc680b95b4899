#include "fgerbe/instances.hpp"

namespace fgerbe {

namespace {

GerbePtr make_gerbe(Cocycle2 c) { return std::make_shared<const Gerbe>(std::move(c)); }

}  // namespace

std::vector<NamedGroup> suite_groups() {
  auto z2 = std::make_shared<const FiniteGroup>(cyclic_group(2));
  return {{"Z2", z2},
          {"Z4", std::make_shared<const FiniteGroup>(cyclic_group(4))},
          {"Z2xZ2", z2xz2()},
          {"S3", std::make_shared<const FiniteGroup>(symmetric_group(3))},
          {"D4", std::make_shared<const FiniteGroup>(dihedral_group(4))}};
}

std::vector<NamedGSet> suite_gsets(const NamedGroup& g) {
  int involution = 1;
  while (element_order(*g.group, involution) != 2) ++involution;
  return {{"point", std::make_shared<const GSet>(trivial_gset(g.group, 1))},
          {"left", std::make_shared<const GSet>(left_translation(g.group))},
          {"coset", std::make_shared<const GSet>(coset_gset(g.group, {involution}))},
          {"conj", std::make_shared<const GSet>(conjugation_gset(g.group))}};
}

std::vector<std::vector<int>> bilinear_table(int n) {
  std::vector<std::vector<int>> t(n * n, std::vector<int>(n * n));
  for (int g = 0; g < n * n; ++g)
    for (int h = 0; h < n * n; ++h) t[g][h] = (g % n) * (h / n) % n;
  return t;
}

GroupPtr z2xz2() {
  static const GroupPtr g = std::make_shared<const FiniteGroup>(product_group(cyclic_group(2), cyclic_group(2)));
  return g;
}

GerbePtr z22_bilinear_point() {
  auto pt = std::make_shared<const GSet>(trivial_gset(z2xz2(), 1));
  return make_gerbe(inflate_group_cocycle(pt, 2, bilinear_table(2)));
}

AbelianExtension q8_extension() {
  AbelianExtension ext;
  ext.group = z2xz2();
  ext.cyclic_factors = {2};
  ext.action.assign(4, {{1}});
  ext.cocycle.assign(4, std::vector<std::vector<int>>(4));
  // i^a2 j^b2 i^a1 j^b1 = (-1)^(b2 a1) i^(a1+a2) j^(b1+b2), and i^2 = j^2 = -1.
  for (int g2 = 0; g2 < 4; ++g2)
    for (int g1 = 0; g1 < 4; ++g1) {
      const int a2 = g2 / 2, b2 = g2 % 2, a1 = g1 / 2, b1 = g1 % 2;
      ext.cocycle[g2][g1] = {(a1 * a2 + b1 * b2 + b2 * a1) % 2};
    }
  return ext;
}

AbelianExtension heisenberg_extension(int p) {
  AbelianExtension ext;
  ext.group = std::make_shared<const FiniteGroup>(product_group(cyclic_group(p), cyclic_group(p)));
  const int n = p * p;
  ext.cyclic_factors = {p};
  ext.action.assign(n, {{1}});
  ext.cocycle.assign(n, std::vector<std::vector<int>>(n));
  // (a2, b2, 0)(a1, b1, 0) = (a1 + a2, b1 + b2, a2 b1)
  for (int g2 = 0; g2 < n; ++g2)
    for (int g1 = 0; g1 < n; ++g1) ext.cocycle[g2][g1] = {(g2 / p) * (g1 % p) % p};
  return ext;
}

std::vector<ScaleFactor> random_invariant_metric(const GSet& x, std::mt19937_64& rng) {
  const OrbitData o = orbits_and_stabilizers(x);
  std::uniform_int_distribution<int> num(1, 9), den(1, 4);
  std::vector<ScaleFactor> per_orbit;
  for (std::size_t k = 0; k < o.orbits.size(); ++k) per_orbit.push_back(ScaleFactor::rational(num(rng), den(rng)));
  std::vector<ScaleFactor> metric;
  for (int i = 0; i < x.size(); ++i) metric.push_back(per_orbit[o.orbit_of[i]]);
  return metric;
}

std::vector<SuiteGerbe> core_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SuiteGerbe> out;
  for (const auto& g : suite_groups())
    for (const auto& s : suite_gsets(g)) {
      const std::string base = g.name + "/" + s.name;
      out.push_back({base + "/trivial", make_gerbe(trivial_cocycle(s.gset)), CocycleKind::trivial, {}, {}});
      Cochain1 lambda = random_cochain(s.gset, 4, rng);
      out.push_back(
          {base + "/coboundary", make_gerbe(coboundary_of(lambda)), CocycleKind::coboundary, lambda, {}});
      if (g.name == "Z2xZ2")
        out.push_back({base + "/bilinear", make_gerbe(inflate_group_cocycle(s.gset, 2, bilinear_table(2))),
                       CocycleKind::inflated, {}, weyl_matrices(2)});
    }

  const Gerbe heis = from_abelian_extension(heisenberg_extension(3));
  out.push_back({"Z3xZ3/heisenberg", std::make_shared<const Gerbe>(heis), CocycleKind::twisted, {}, {}});
  out.push_back({"Z3xZ3/heisenberg/char1", std::make_shared<const Gerbe>(restrict_gerbe(heis, {1})),
                 CocycleKind::twisted, {}, weyl_matrices(3)});
  out.push_back({"Z2xZ2/q8", std::make_shared<const Gerbe>(from_abelian_extension(q8_extension())),
                 CocycleKind::twisted, {}, {}});

  auto two = std::make_shared<const GSet>(trivial_gset(z2xz2(), 2));
  std::vector<int> exp(2 * 16, 0);
  const auto b = bilinear_table(2);
  for (int g2 = 0; g2 < 4; ++g2)
    for (int g1 = 0; g1 < 4; ++g1) exp[g2 * 4 + g1] = b[g2][g1];
  out.push_back({"Z2xZ2/two-point/mixed", make_gerbe(Cocycle2(two, 2, std::move(exp))), CocycleKind::twisted, {}, {}});
  return out;
}

}  // namespace fgerbe
