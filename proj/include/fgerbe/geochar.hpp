#pragma once

#include <cstdint>
#include <vector>

#include "fgerbe/transgression.hpp"

namespace fgerbe {

/// An equivariant bundle over the gerbe (conjugation(G), k = 1, trivial cocycle).
using GroupBundle = EquivBundle;

/// The gerbe underlying every GroupBundle over g.
GerbePtr group_gerbe(GroupPtr g);

/// ch(X): the fiber at x has the localized basis Fix(x) (ascending), and the action of g sends
/// the basis vector of i to tau(g; i, x) times that of g.i.
GroupBundle push_forward(const Gerbe& x);
GroupBundle push_forward(const Gerbe& x, const TransgressedBundle& t);

/// The 2-character map for (g, x) computed by conjugating loop arrows with complex phases
/// and a randomly phased conjugating arrow (seeded); rows Fix(g x g^-1), columns Fix(x).
MatrixXc two_character_action(const Gerbe& x, int g, int loop_element, std::uint64_t seed = 0);

/// Per-x matrices of ch(E) for a kernel E: source -> target, entry (mu, i) = conj Tr U_E(x; (mu, i))
/// with mu in Fix_target(x), i in Fix_source(x).
std::vector<MatrixXc> ch_on_morphism(const Kernel& e);

/// max over g, x of |ch(target)(g; x) M_x - M_{g x g^-1} ch(source)(g; x)|.
double ch_equivariance_residual(const GroupBundle& ch_target, const GroupBundle& ch_source,
                                const std::vector<MatrixXc>& mats);

/// Rearranges a flat section of tau(target (x) conj(source)) into per-x matrices, entry
/// (mu, i) = xi(mu, i, x). Throws ValidationError naming (g, loop) if xi is not flat.
std::vector<MatrixXc> hat_map(const Gerbe& target, const Gerbe& source, const FlatSection& xi,
                              double tolerance = kBundleTolerance);

/// (1/|G|) sum over x of the squared Frobenius norms.
double hat_norm_squared(const std::vector<MatrixXc>& mats, int group_order);

struct EndCount {
  std::int64_t plain_numerator = 0;  // plain count as a reduced fraction
  std::int64_t plain_denominator = 1;
  Complex weighted{0.0, 0.0};
  double plain() const { return static_cast<double>(plain_numerator) / static_cast<double>(plain_denominator); }
};

/// Counts over tuples (mu, i, g, h) with gh = hg and g, h fixing mu in the target and i in the
/// source; weighted adds the phase tau_{target (x) conj(source)}(h; (mu, i), g).
EndCount hom_count_formula(const Gerbe& target, const Gerbe& source);
EndCount end_count_formula(const Gerbe& x);

int homG_dimension(const GroupBundle& a, const GroupBundle& b);

}  // namespace fgerbe
