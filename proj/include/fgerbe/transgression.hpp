#pragma once

#include <memory>
#include <vector>

#include "fgerbe/bundle.hpp"

namespace fgerbe {

using LoopGroupoidPtr = std::shared_ptr<const LoopGroupoid>;
using FlatSection = Eigen::VectorXcd;  // one value per loop, in LoopGroupoid order

/// The U(1)-bundle over the loop groupoid obtained by conjugating loop arrows:
/// for v in the torsor over g at i, v s(x at i) v^-1 = tau(g; (i, x)) s(g x g^-1 at g.i).
///
/// In section coordinates this reads
///   tau(g; i, x) = phi_{g.i}(g, x g^-1) + phi_{g.i}(x, g^-1) - phi_i(g^-1, g)   (additively),
/// which transgression_closed_form evaluates; transgress() itself composes arrows.
class TransgressedBundle {
 public:
  TransgressedBundle(LoopGroupoidPtr loops, int order, std::vector<int> exponents);

  const LoopGroupoid& loops() const { return *loops_; }
  const LoopGroupoidPtr& loops_ptr() const { return loops_; }
  int order() const { return order_; }
  /// Exponent of tau(g; loop k) over zeta_order.
  int exponent(int g, int k) const { return exp_[static_cast<std::size_t>(g) * loops_->size() + k]; }
  Complex value(int g, int k) const { return root_of_unity(exponent(g, k), order_); }

 private:
  LoopGroupoidPtr loops_;
  int order_;
  std::vector<int> exp_;
};

TransgressedBundle transgress(const Gerbe& x);

/// Exponent of tau(g; i, x) from the closed formula above.
int transgression_closed_form(const Gerbe& x, int g, int i, int loop_element);

/// The same phases computed with complex arithmetic, with v = arrow_phases[g*|X| + i] s(g at i)
/// as the conjugating arrow; entries [g][loop].
std::vector<Complex> transgress_with_phases(const Gerbe& x, const std::vector<Complex>& arrow_phases);

/// Whether tau(g2; g1.l) tau(g1; l) = tau(g2 g1; l) for all g1, g2, l (exact).
bool transgression_is_functorial(const TransgressedBundle& t);

struct FlatSections {
  int dimension = 0;
  std::vector<FlatSection> basis;  // orthonormal under section_inner
  MatrixXc gram;                   // Gram matrix of the basis
  std::vector<int> loop_orbit;     // orbit label per loop
  std::vector<int> flat_orbits;    // orbit labels with trivial holonomy, one basis vector each
};

/// Flat sections: one per loop orbit whose holonomy (tau over the stabilizer) is trivial.
FlatSections flat_sections(const TransgressedBundle& t);

/// <psi, psi'> = (1/|G|) sum over loops of conj(psi) psi'.
Complex section_inner(const TransgressedBundle& t, const FlatSection& a, const FlatSection& b);

/// max |psi(g.l) - tau(g; l) psi(l)|
double flatness_residual(const TransgressedBundle& t, const FlatSection& psi);

/// chi_E(i, x) = conj(Tr U(x; i)).
FlatSection twisted_character(const EquivBundle& e, const LoopGroupoid& loops);
/// Same, checked against transgress(e.gerbe()); throws ValidationError if not flat to 1e-9.
FlatSection twisted_character(const EquivBundle& e);

Complex character_inner(const EquivBundle& e, const EquivBundle& f);

}  // namespace fgerbe
