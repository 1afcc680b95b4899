#pragma once

#include <complex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fgerbe/gset.hpp"

namespace fgerbe {

/// exp(2 pi i e / n)
std::complex<double> root_of_unity(long long e, long long n);

/// Normalized U(1)-valued 2-cocycle on an action groupoid, phi_i(g2, g1) = zeta_N^exp.
///
/// Entries are indexed [i][g2][g1] and kept reduced to [0, N). The constructor checks
/// shapes only; validate_cocycle checks normalization and the cocycle identity.
class Cocycle2 {
 public:
  Cocycle2(GSetPtr gset, int order, std::vector<int> exponents);

  const GSet& gset() const { return *gset_; }
  const GSetPtr& gset_ptr() const { return gset_; }
  int order() const { return order_; }
  int operator()(int i, int g2, int g1) const { return exp_[offset(i, g2, g1)]; }
  std::complex<double> phase(int i, int g2, int g1) const {
    return root_of_unity((*this)(i, g2, g1), order_);
  }
  const std::vector<int>& exponents() const { return exp_; }
  bool is_zero() const;

  /// Same class of phases written over zeta_{order'}; order' must be a multiple of order().
  Cocycle2 lifted(int new_order) const;

  bool operator==(const Cocycle2& o) const {
    return order_ == o.order_ && exp_ == o.exp_ && *gset_ == *o.gset_;
  }

 private:
  std::size_t offset(int i, int g2, int g1) const {
    return (static_cast<std::size_t>(i) * n_ + g2) * n_ + g1;
  }
  GSetPtr gset_;
  int order_ = 1;
  int n_ = 1;
  std::vector<int> exp_;
};

/// U(1)-valued 1-cochain lambda_i(g) = zeta_N^exp, indexed [i][g], normalized at g = e.
class Cochain1 {
 public:
  Cochain1(GSetPtr gset, int order, std::vector<int> exponents);

  const GSet& gset() const { return *gset_; }
  const GSetPtr& gset_ptr() const { return gset_; }
  int order() const { return order_; }
  int operator()(int i, int g) const { return exp_[static_cast<std::size_t>(i) * n_ + g]; }
  const std::vector<int>& exponents() const { return exp_; }
  Cochain1 lifted(int new_order) const;
  Cochain1 negated() const;

 private:
  GSetPtr gset_;
  int order_ = 1;
  int n_ = 1;
  std::vector<int> exp_;
};

Cocycle2 trivial_cocycle(GSetPtr gset);

/// phi_i(g2, g1) = table[g2][g1] for every point i (inflation from the one-point G-set).
Cocycle2 inflate_group_cocycle(GSetPtr gset, int order, const std::vector<std::vector<int>>& table);

struct CocycleViolation {
  enum class Kind { normalization, identity } kind;
  int i = 0, g1 = 0, g2 = 0, g3 = 0;
  std::string describe() const;
};

std::optional<CocycleViolation> validate_cocycle(const Cocycle2& phi);

/// (delta lambda)_i(g2, g1) = lambda_{g1.i}(g2) + lambda_i(g1) - lambda_i(g2 g1)
Cocycle2 coboundary_of(const Cochain1& lambda);

Cochain1 random_cochain(GSetPtr gset, int order, std::mt19937_64& rng);

/// Exponent-wise sum and difference after lifting to the lcm of the orders.
Cocycle2 add(const Cocycle2& a, const Cocycle2& b);
Cocycle2 subtract(const Cocycle2& a, const Cocycle2& b);
Cochain1 add(const Cochain1& a, const Cochain1& b);

/// Least common multiple of two root-of-unity orders; ResourceError above 10^6.
int common_order(int a, int b);

/// A cochain lambda with delta(lambda) = psi - phi, solved over Q/Z (the divisible
/// group of roots of unity). The witness may use a finer root of unity than phi or psi.
std::optional<Cochain1> is_cohomologous(const Cocycle2& phi, const Cocycle2& psi);

/// Whether delta(lambda) == psi - phi holds exactly in exponent arithmetic.
bool verify_witness(const Cocycle2& phi, const Cocycle2& psi, const Cochain1& lambda);

/// (f* phi')_i(g2, g1) = phi'_{f(i)}(g2, g1) for an equivariant bijection f: x -> phi'.gset().
Cocycle2 pullback(const Cocycle2& phi_target, const std::vector<int>& f, GSetPtr source);

/// Cocycle of X' (x) conj(X) on product_gset(X', X): exp'[mu] - exp[i].
Cocycle2 tensor_conjugate(const Cocycle2& phi_left, const Cocycle2& phi_right);

/// Checks f(g.i) = g.f(i) and bijectivity; throws ValidationError with the first witness.
void check_equivariant_bijection(const GSet& source, const GSet& target, const std::vector<int>& f);

}  // namespace fgerbe
