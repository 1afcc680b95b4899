#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fgerbe/gerbe.hpp"
#include "fgerbe/linalg.hpp"

namespace fgerbe {

using GerbePtr = std::shared_ptr<const Gerbe>;

/// Residual bound for unitarity, functoriality and naturality checks.
inline constexpr double kBundleTolerance = 1e-9;

/// phi-twisted unitary equivariant vector bundle over a gerbe.
///
/// Fiber i has dimension dims[i] with a fixed orthonormal basis; map(g, i) is the
/// dims[g.i] x dims[i] matrix of U(g; i) = E(s(g at i)).
class EquivBundle {
 public:
  /// Checks matrix shapes only (StructuralError); see validate_bundle for the axioms.
  EquivBundle(GerbePtr gerbe, std::vector<int> dims, std::vector<MatrixXc> maps);

  const Gerbe& gerbe() const { return *gerbe_; }
  const GerbePtr& gerbe_ptr() const { return gerbe_; }
  int points() const { return static_cast<int>(dims_.size()); }
  int dim(int i) const { return dims_[i]; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const;
  const MatrixXc& map(int g, int i) const { return maps_[static_cast<std::size_t>(g) * dims_.size() + i]; }
  const std::vector<MatrixXc>& maps() const { return maps_; }

 private:
  GerbePtr gerbe_;
  std::vector<int> dims_;
  std::vector<MatrixXc> maps_;
};

struct BundleViolation {
  enum class Kind { unit, unitarity, functoriality } kind;
  int i = 0, g1 = 0, g2 = 0;
  double deviation = 0.0;
  std::string describe() const;
};

std::optional<BundleViolation> validate_bundle(const EquivBundle& e, double tolerance = kBundleTolerance);

/// Largest residual of the three bundle axioms.
double bundle_residual(const EquivBundle& e);

/// Dimension of the space of natural transformations E -> F.
int hom_dimension(const EquivBundle& e, const EquivBundle& f);

EquivBundle zero_bundle(GerbePtr x);

/// Rank-one bundle U(g; i) = zeta^{lambda_i(g)}; valid when the cocycle equals delta(lambda).
EquivBundle line_bundle(GerbePtr x, const Cochain1& lambda);

/// Rank-one bundle with every U = [1]; valid when the cocycle table is identically zero.
EquivBundle trivial_line_bundle(GerbePtr x);

/// U(g; i) = mats[g] at every point (inflation of a projective representation of G).
EquivBundle constant_bundle(GerbePtr x, const std::vector<MatrixXc>& mats);

/// Clock and shift matrices X^a Z^b for Z/n x Z/n, element (a, b) at index a*n + b,
/// with Z X = omega X Z. They form a projective representation with
/// cocycle exponent g_2 h_1 (omega = zeta_n). For n = 2 these are the Pauli matrices.
std::vector<MatrixXc> weyl_matrices(int n);

/// Fibers spanned by the arrows into i: basis h stands for s(h at h^-1.i) and
/// U(g; i) sends h to phi_{h^-1.i}(g, h) (g h).
EquivBundle regular_bundle(GerbePtr x);

EquivBundle direct_sum(const EquivBundle& a, const EquivBundle& b);

/// A 1-morphism source -> target: an equivariant bundle over target (x) conj(source).
struct Kernel {
  GerbePtr target;
  GerbePtr source;
  EquivBundle bundle;
};

/// Wraps a bundle over tensor_gerbes(target, source) as a kernel.
Kernel make_kernel(GerbePtr target, GerbePtr source, EquivBundle bundle);

/// Diagonal rank-one kernel with unit phases.
Kernel identity_kernel(GerbePtr x);

Kernel regular_kernel(GerbePtr target, GerbePtr source);

/// (E' o E)_{kappa, i} = weighted direct sum over mu of E'_{kappa, mu} (x) E_{mu, i}.
/// Coordinates are orthonormal for the k_mu-weighted inner product.
Kernel kernel_compose(const Kernel& outer, const Kernel& inner);

/// Dimension of the center of the twisted groupoid algebra C_phi[X_G].
/// Throws ResourceError when |X| |G| > 4096.
int center_dimension(const Gerbe& x);

}  // namespace fgerbe
