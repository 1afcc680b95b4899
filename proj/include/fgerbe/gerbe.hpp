#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgerbe/cocycle.hpp"

namespace fgerbe {

/// Positive scale factor k_i. Stored as an exact rational when given as one.
class ScaleFactor {
 public:
  ScaleFactor() = default;
  static ScaleFactor rational(std::int64_t num, std::int64_t den = 1);
  static ScaleFactor real(double value);

  bool is_rational() const { return rational_; }
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double value() const { return rational_ ? static_cast<double>(num_) / static_cast<double>(den_) : value_; }
  std::string to_string() const;

  friend ScaleFactor operator*(const ScaleFactor& a, const ScaleFactor& b);
  /// Exact comparison of the stored representations (rationals compare as reduced fractions).
  bool operator==(const ScaleFactor& o) const;

 private:
  bool rational_ = true;
  std::int64_t num_ = 1, den_ = 1;
  double value_ = 1.0;
};

/// Finite equivariant gerbe with metric, presented in section coordinates.
class Gerbe {
 public:
  /// Throws ValidationError if the metric is not G-invariant and positive or the cocycle is invalid.
  Gerbe(std::vector<ScaleFactor> metric, Cocycle2 cocycle);
  /// Unit metric.
  explicit Gerbe(Cocycle2 cocycle);

  const GSet& gset() const { return cocycle_.gset(); }
  const GSetPtr& gset_ptr() const { return cocycle_.gset_ptr(); }
  const FiniteGroup& group() const { return gset().group(); }
  const Cocycle2& cocycle() const { return cocycle_; }
  const std::vector<ScaleFactor>& metric() const { return metric_; }
  double scale(int i) const { return metric_[i].value(); }

 private:
  std::vector<ScaleFactor> metric_;
  Cocycle2 cocycle_;
};

/// Element of mu_order, zeta^exponent.
struct RootPhase {
  long long exponent = 0;
  long long order = 1;
  std::complex<double> value() const { return root_of_unity(exponent, order); }
  bool is_one() const { return exponent % order == 0; }
};

template <typename Phase>
struct PhaseTraits;

template <>
struct PhaseTraits<std::complex<double>> {
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> mul(std::complex<double> a, std::complex<double> b) { return a * b; }
  static std::complex<double> inv(std::complex<double> a) { return 1.0 / a; }
  static std::complex<double> cocycle(const Cocycle2& phi, int i, int g2, int g1) {
    return phi.phase(i, g2, g1);
  }
};

template <>
struct PhaseTraits<RootPhase> {
  static RootPhase one() { return {0, 1}; }
  static RootPhase mul(RootPhase a, RootPhase b);
  static RootPhase inv(RootPhase a) { return {(a.order - a.exponent % a.order) % a.order, a.order}; }
  static RootPhase cocycle(const Cocycle2& phi, int i, int g2, int g1) {
    return {phi(i, g2, g1), phi.order()};
  }
};

/// An arrow of the gerbe over g: i -> g.i, written as phase * s(g at i).
template <typename Phase>
struct GerbeArrow {
  int source = 0;
  int label = 0;
  Phase phase = PhaseTraits<Phase>::one();
};

template <typename Phase>
int target(const Gerbe& x, const GerbeArrow<Phase>& v) {
  return x.gset().act(v.label, v.source);
}

/// v2 after v1; requires v2.source == target(v1).
template <typename Phase>
GerbeArrow<Phase> compose_arrows(const Gerbe& x, const GerbeArrow<Phase>& v2, const GerbeArrow<Phase>& v1);

template <typename Phase>
GerbeArrow<Phase> invert_arrow(const Gerbe& x, const GerbeArrow<Phase>& v);

template <typename Phase>
GerbeArrow<Phase> identity_arrow(int i) {
  return {i, 0, PhaseTraits<Phase>::one()};
}

/// X' (x) conj(X) on product_gset(X', X) with the product metric.
Gerbe tensor_gerbes(const Gerbe& left, const Gerbe& right);

/// The same gerbe re-sectioned by lambda: cocycle phi + delta(lambda).
Gerbe regauge(const Gerbe& x, const Cochain1& lambda);

/// Same gerbe with metric replaced.
Gerbe with_metric(const Gerbe& x, std::vector<ScaleFactor> metric);

/// Restriction to a G-invariant subset of points (listed ascending in the result).
Gerbe restrict_gerbe(const Gerbe& x, const std::vector<int>& points);

/// Pullback of a cochain along an equivariant bijection f: source -> lambda.gset().
Cochain1 pullback(const Cochain1& lambda, const std::vector<int>& f, GSetPtr source);

struct EquivalenceWitness {
  std::vector<int> map;  // f: X -> X'
  Cochain1 cochain;      // delta(cochain) = f* phi' - phi
};

/// First (in canonical enumeration order) metric-preserving G-isomorphism f with
/// [phi] = f*[phi'], together with the coboundary witness.
/// Throws ResourceError after 10^6 candidate maps.
std::optional<EquivalenceWitness> equivalence_check(const Gerbe& x, const Gerbe& y,
                                                    std::int64_t max_candidates = 1000000);

/// Abelian kernel K = Z/n_1 x ... x Z/n_r with a G-action and a K-valued 2-cocycle,
/// as produced by an extension K -> E -> G with a normalized set-theoretic section.
struct AbelianExtension {
  GroupPtr group;
  std::vector<int> cyclic_factors;
  /// action[g][j] = image of the j-th generator of K under g, as an exponent tuple.
  std::vector<std::vector<std::vector<int>>> action;
  /// cocycle[g2][g1] = phi_K(g2, g1) as an exponent tuple.
  std::vector<std::vector<std::vector<int>>> cocycle;
};

/// Checks the action (automorphisms, homomorphism G -> Aut K) and the twisted cocycle
/// identity phi(g3,g2) + phi(g3 g2,g1) = g3.phi(g2,g1) + phi(g3,g2 g1). Throws ValidationError.
void validate_extension(const AbelianExtension& ext);

/// Gerbe over the character group of K with the dual action, unit metric and
/// phi_chi(g2, g1) = chi(phi_K(g1^-1, g2^-1)); characters enumerated lexicographically.
Gerbe from_abelian_extension(const AbelianExtension& ext);

/// Exponent tuples of the characters of K in enumeration order.
std::vector<std::vector<int>> character_tuples(const std::vector<int>& cyclic_factors);

/// K-valued coboundary (delta f)(g2, g1) = g2.f(g1) - f(g2 g1) + f(g2), f normalized.
std::vector<std::vector<std::vector<int>>> k_coboundary(const AbelianExtension& ext,
                                                        const std::vector<std::vector<int>>& f);

}  // namespace fgerbe
