#include "fgerbe/transgression.hpp"

#include <cmath>

#include "fgerbe/errors.hpp"

namespace fgerbe {

TransgressedBundle::TransgressedBundle(LoopGroupoidPtr loops, int order, std::vector<int> exponents)
    : loops_(std::move(loops)), order_(order), exp_(std::move(exponents)) {
  if (exp_.size() != static_cast<std::size_t>(loops_->base().group().order()) * loops_->size())
    throw StructuralError("transgression table has wrong shape");
}

TransgressedBundle transgress(const Gerbe& x) {
  auto loops = std::make_shared<const LoopGroupoid>(x.gset_ptr());
  const FiniteGroup& g = x.group();
  const int order = x.cocycle().order();
  std::vector<int> exps(static_cast<std::size_t>(g.order()) * loops->size());
  for (int a = 0; a < g.order(); ++a)
    for (int k = 0; k < loops->size(); ++k) {
      const Loop& l = loops->loop(k);
      const GerbeArrow<RootPhase> u{l.point, l.element, {0, order}};
      const GerbeArrow<RootPhase> v{l.point, a, {0, order}};
      const auto w = compose_arrows(x, v, compose_arrows(x, u, invert_arrow(x, v)));
      // w = tau * s(a x a^-1 at a.i)
      const RootPhase p = w.phase;
      exps[static_cast<std::size_t>(a) * loops->size() + k] =
          static_cast<int>((p.exponent * (order / p.order)) % order);
    }
  return TransgressedBundle(std::move(loops), order, std::move(exps));
}

int transgression_closed_form(const Gerbe& x, int g, int i, int loop_element) {
  const FiniteGroup& grp = x.group();
  const Cocycle2& phi = x.cocycle();
  const int gi = x.gset().act(g, i), ginv = grp.inv(g);
  const long long e = static_cast<long long>(phi(gi, g, grp.mul(loop_element, ginv))) + phi(gi, loop_element, ginv) -
                      phi(i, ginv, g);
  const int n = phi.order();
  return static_cast<int>(((e % n) + n) % n);
}

std::vector<Complex> transgress_with_phases(const Gerbe& x, const std::vector<Complex>& arrow_phases) {
  const LoopGroupoid loops(x.gset_ptr());
  const FiniteGroup& g = x.group();
  const int m = x.gset().size();
  std::vector<Complex> out(static_cast<std::size_t>(g.order()) * loops.size());
  for (int a = 0; a < g.order(); ++a)
    for (int k = 0; k < loops.size(); ++k) {
      const Loop& l = loops.loop(k);
      const GerbeArrow<Complex> u{l.point, l.element, Complex(1.0, 0.0)};
      const GerbeArrow<Complex> v{l.point, a, arrow_phases[static_cast<std::size_t>(a) * m + l.point]};
      const auto w = compose_arrows(x, v, compose_arrows(x, u, invert_arrow(x, v)));
      out[static_cast<std::size_t>(a) * loops.size() + k] = w.phase;
    }
  return out;
}

bool transgression_is_functorial(const TransgressedBundle& t) {
  const LoopGroupoid& l = t.loops();
  const FiniteGroup& g = l.base().group();
  const int n = t.order();
  for (int k = 0; k < l.size(); ++k) {
    if (t.exponent(0, k) != 0) return false;
    for (int g1 = 0; g1 < g.order(); ++g1)
      for (int g2 = 0; g2 < g.order(); ++g2)
        if ((t.exponent(g2, l.act(g1, k)) + t.exponent(g1, k) - t.exponent(g.mul(g2, g1), k)) % n != 0)
          return false;
  }
  return true;
}

FlatSections flat_sections(const TransgressedBundle& t) {
  const LoopGroupoid& l = t.loops();
  const FiniteGroup& g = l.base().group();
  FlatSections out;
  out.loop_orbit = orbit_labels(g.order(), l.size(), [&](int a, int k) { return l.act(a, k); });
  std::vector<char> seen(l.size(), 0);
  for (int k = 0; k < l.size(); ++k) {
    const int orbit = out.loop_orbit[k];
    if (seen[orbit]) continue;
    seen[orbit] = 1;
    bool trivial = true;
    int orbit_size = 0;
    for (int a = 0; a < g.order(); ++a)
      if (l.act(a, k) == k && t.exponent(a, k) != 0) trivial = false;
    for (int j = 0; j < l.size(); ++j)
      if (out.loop_orbit[j] == orbit) ++orbit_size;
    if (!trivial) continue;
    FlatSection psi = FlatSection::Zero(l.size());
    const double c = std::sqrt(static_cast<double>(g.order()) / orbit_size);
    for (int a = 0; a < g.order(); ++a) psi[l.act(a, k)] = t.value(a, k) * c;
    out.basis.push_back(std::move(psi));
    out.flat_orbits.push_back(orbit);
  }
  out.dimension = static_cast<int>(out.basis.size());
  out.gram = MatrixXc(out.dimension, out.dimension);
  for (int a = 0; a < out.dimension; ++a)
    for (int b = 0; b < out.dimension; ++b) out.gram(a, b) = section_inner(t, out.basis[a], out.basis[b]);
  return out;
}

Complex section_inner(const TransgressedBundle& t, const FlatSection& a, const FlatSection& b) {
  // Every loop has exactly |G| outgoing arrows.
  return a.dot(b) / static_cast<double>(t.loops().base().group().order());
}

double flatness_residual(const TransgressedBundle& t, const FlatSection& psi) {
  const LoopGroupoid& l = t.loops();
  double worst = 0.0;
  for (int a = 0; a < l.base().group().order(); ++a)
    for (int k = 0; k < l.size(); ++k)
      worst = std::max(worst, std::abs(psi[l.act(a, k)] - t.value(a, k) * psi[k]));
  return worst;
}

FlatSection twisted_character(const EquivBundle& e, const LoopGroupoid& loops) {
  FlatSection chi(loops.size());
  for (int k = 0; k < loops.size(); ++k) {
    const Loop& l = loops.loop(k);
    chi[k] = std::conj(e.map(l.element, l.point).trace());
  }
  return chi;
}

FlatSection twisted_character(const EquivBundle& e) {
  const TransgressedBundle t = transgress(e.gerbe());
  FlatSection chi = twisted_character(e, t.loops());
  if (const double r = flatness_residual(t, chi); r > kBundleTolerance)
    throw ValidationError("twisted character is not flat (residual " + std::to_string(r) + "); is the bundle valid?");
  return chi;
}

Complex character_inner(const EquivBundle& e, const EquivBundle& f) {
  if (!(e.gerbe().gset() == f.gerbe().gset()) || !(e.gerbe().cocycle() == f.gerbe().cocycle()))
    throw StructuralError("character_inner needs bundles over the same gerbe");
  const LoopGroupoid loops(e.gerbe().gset_ptr());
  return twisted_character(e, loops).dot(twisted_character(f, loops)) /
         static_cast<double>(e.gerbe().group().order());
}

}  // namespace fgerbe
