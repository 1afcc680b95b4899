#include "fgerbe/bundle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <Eigen/Sparse>

#include "fgerbe/errors.hpp"

namespace fgerbe {

EquivBundle::EquivBundle(GerbePtr gerbe, std::vector<int> dims, std::vector<MatrixXc> maps)
    : gerbe_(std::move(gerbe)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!gerbe_) throw StructuralError("bundle without a gerbe");
  const GSet& x = gerbe_->gset();
  const int n = x.group().order();
  if (static_cast<int>(dims_.size()) != x.size()) throw StructuralError("bundle needs one dimension per point");
  for (int d : dims_)
    if (d < 0) throw StructuralError("fiber dimensions must be nonnegative");
  if (maps_.size() != static_cast<std::size_t>(n) * dims_.size())
    throw StructuralError("bundle needs one matrix per (g, i)");
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < x.size(); ++i) {
      const MatrixXc& m = map(g, i);
      if (m.rows() != dims_[x.act(g, i)] || m.cols() != dims_[i])
        throw StructuralError("matrix U(" + std::to_string(g) + "; " + std::to_string(i) + ") has shape " +
                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                              std::to_string(dims_[x.act(g, i)]) + "x" + std::to_string(dims_[i]));
    }
}

int EquivBundle::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

std::string BundleViolation::describe() const {
  const char* what = kind == Kind::unit ? "unit" : kind == Kind::unitarity ? "unitarity" : "twisted functoriality";
  return std::string(what) + " violated at (i, g1, g2) = (" + std::to_string(i) + ", " + std::to_string(g1) + ", " +
         std::to_string(g2) + "), deviation " + std::to_string(deviation);
}

namespace {

// Worst violation of each axiom, in the order unit, unitarity, functoriality.
std::optional<BundleViolation> scan_bundle(const EquivBundle& e, double tolerance, double* worst) {
  const GSet& x = e.gerbe().gset();
  const FiniteGroup& g = x.group();
  const Cocycle2& phi = e.gerbe().cocycle();
  const int n = g.order();
  double max_dev = 0.0;
  std::optional<BundleViolation> first;
  auto note = [&](BundleViolation v) {
    max_dev = std::max(max_dev, v.deviation);
    if (!first && v.deviation > tolerance) first = v;
  };
  for (int i = 0; i < x.size(); ++i) {
    const MatrixXc id = MatrixXc::Identity(e.dim(i), e.dim(i));
    note({BundleViolation::Kind::unit, i, 0, 0, max_abs_diff(e.map(0, i), id)});
  }
  const int max_dim = e.dims().empty() ? 0 : *std::max_element(e.dims().begin(), e.dims().end());
  if (max_dim >= 16) {
    // Large fibers come from kernel compositions, whose matrices are mostly zero.
    using Sparse = Eigen::SparseMatrix<Complex>;
    std::vector<Sparse> sp;
    sp.reserve(e.maps().size());
    for (const auto& m : e.maps()) sp.push_back(m.sparseView(Complex(0.0), 0.0));
    auto residual = [](const Sparse& d) { return d.nonZeros() == 0 ? 0.0 : d.coeffs().cwiseAbs().maxCoeff(); };
    auto at = [&](int a, int i) -> const Sparse& { return sp[static_cast<std::size_t>(a) * x.size() + i]; };
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < x.size(); ++i) {
        const Sparse& u = at(a, i);
        Sparse id_c(u.cols(), u.cols()), id_r(u.rows(), u.rows());
        id_c.setIdentity();
        id_r.setIdentity();
        const Sparse d1 = Sparse(u.adjoint()) * u - id_c;
        const Sparse d2 = u * Sparse(u.adjoint()) - id_r;
        note({BundleViolation::Kind::unitarity, i, a, 0, std::max(residual(d1), residual(d2))});
      }
    for (int i = 0; i < x.size(); ++i)
      for (int g1 = 0; g1 < n; ++g1)
        for (int g2 = 0; g2 < n; ++g2) {
          const Sparse d = at(g2, x.act(g1, i)) * at(g1, i) - phi.phase(i, g2, g1) * at(g.mul(g2, g1), i);
          note({BundleViolation::Kind::functoriality, i, g1, g2, residual(d)});
        }
    if (worst) *worst = max_dev;
    return first;
  }
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < x.size(); ++i) {
      const MatrixXc& u = e.map(a, i);
      const double d1 = max_abs_diff(u.adjoint() * u, MatrixXc::Identity(u.cols(), u.cols()));
      const double d2 = max_abs_diff(u * u.adjoint(), MatrixXc::Identity(u.rows(), u.rows()));
      note({BundleViolation::Kind::unitarity, i, a, 0, std::max(d1, d2)});
    }
  for (int i = 0; i < x.size(); ++i)
    for (int g1 = 0; g1 < n; ++g1)
      for (int g2 = 0; g2 < n; ++g2) {
        const MatrixXc lhs = e.map(g2, x.act(g1, i)) * e.map(g1, i);
        const MatrixXc rhs = phi.phase(i, g2, g1) * e.map(g.mul(g2, g1), i);
        note({BundleViolation::Kind::functoriality, i, g1, g2, max_abs_diff(lhs, rhs)});
      }
  if (worst) *worst = max_dev;
  return first;
}

}  // namespace

std::optional<BundleViolation> validate_bundle(const EquivBundle& e, double tolerance) {
  return scan_bundle(e, tolerance, nullptr);
}

double bundle_residual(const EquivBundle& e) {
  double worst = 0.0;
  scan_bundle(e, kBundleTolerance, &worst);
  return worst;
}

int hom_dimension(const EquivBundle& e, const EquivBundle& f) {
  const GSet& x = e.gerbe().gset();
  if (!(x == f.gerbe().gset()) || !(e.gerbe().cocycle() == f.gerbe().cocycle()))
    throw StructuralError("hom_dimension needs bundles over the same gerbe");
  // theta_i is dim_F(i) x dim_E(i), column-major after offset[i].
  std::vector<int> offset(x.size() + 1, 0);
  for (int i = 0; i < x.size(); ++i) offset[i + 1] = offset[i] + f.dim(i) * e.dim(i);
  auto idx = [&](int i, int r, int c) { return offset[i] + r + c * f.dim(i); };

  SparseSystem<Complex> sys(offset.back());
  for (int s : generating_set(x.group())) {
    for (int i = 0; i < x.size(); ++i) {
      const int si = x.act(s, i);
      const MatrixXc& ue = e.map(s, i);
      const MatrixXc& uf = f.map(s, i);
      // theta_{s.i} U_E(s; i) - U_F(s; i) theta_i = 0, entry (r, c).
      for (int r = 0; r < f.dim(si); ++r)
        for (int c = 0; c < e.dim(i); ++c) {
          std::vector<std::pair<int, Complex>> row;
          for (int k = 0; k < e.dim(si); ++k)
            if (ue(k, c) != Complex(0)) row.emplace_back(idx(si, r, k), ue(k, c));
          for (int k = 0; k < f.dim(i); ++k)
            if (uf(r, k) != Complex(0)) row.emplace_back(idx(i, k, c), -uf(r, k));
          sys.add_row(std::move(row));
        }
    }
  }
  return sys.nullity();
}

EquivBundle zero_bundle(GerbePtr x) {
  const int n = x->group().order(), m = x->gset().size();
  std::vector<MatrixXc> maps(static_cast<std::size_t>(n) * m, MatrixXc(0, 0));
  return EquivBundle(std::move(x), std::vector<int>(m, 0), std::move(maps));
}

EquivBundle line_bundle(GerbePtr x, const Cochain1& lambda) {
  const int n = x->group().order(), m = x->gset().size();
  std::vector<MatrixXc> maps;
  maps.reserve(static_cast<std::size_t>(n) * m);
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < m; ++i) maps.push_back(MatrixXc::Constant(1, 1, root_of_unity(lambda(i, g), lambda.order())));
  return EquivBundle(std::move(x), std::vector<int>(m, 1), std::move(maps));
}

EquivBundle trivial_line_bundle(GerbePtr x) {
  const int n = x->group().order(), m = x->gset().size();
  std::vector<MatrixXc> maps(static_cast<std::size_t>(n) * m, MatrixXc::Ones(1, 1));
  return EquivBundle(std::move(x), std::vector<int>(m, 1), std::move(maps));
}

EquivBundle constant_bundle(GerbePtr x, const std::vector<MatrixXc>& mats) {
  const int n = x->group().order(), m = x->gset().size();
  if (static_cast<int>(mats.size()) != n) throw StructuralError("constant_bundle needs one matrix per element");
  const int d = static_cast<int>(mats[0].rows());
  std::vector<MatrixXc> maps;
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < m; ++i) maps.push_back(mats[g]);
  return EquivBundle(std::move(x), std::vector<int>(m, d), std::move(maps));
}

std::vector<MatrixXc> weyl_matrices(int n) {
  MatrixXc shift = MatrixXc::Zero(n, n), clock = MatrixXc::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    shift((k + 1) % n, k) = 1.0;
    clock(k, k) = root_of_unity(k, n);
  }
  std::vector<MatrixXc> out;
  MatrixXc xa = MatrixXc::Identity(n, n);
  for (int a = 0; a < n; ++a) {
    MatrixXc m = xa;
    for (int b = 0; b < n; ++b) {
      out.push_back(m);
      m = m * clock;
    }
    xa = xa * shift;
  }
  return out;
}

EquivBundle regular_bundle(GerbePtr x) {
  const GSet& s = x->gset();
  const FiniteGroup& g = s.group();
  const Cocycle2& phi = x->cocycle();
  const int n = g.order(), m = s.size();
  std::vector<MatrixXc> maps;
  maps.reserve(static_cast<std::size_t>(n) * m);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i) {
      MatrixXc u = MatrixXc::Zero(n, n);
      for (int h = 0; h < n; ++h) u(g.mul(a, h), h) = phi.phase(s.act(g.inv(h), i), a, h);
      maps.push_back(std::move(u));
    }
  return EquivBundle(std::move(x), std::vector<int>(m, n), std::move(maps));
}

EquivBundle direct_sum(const EquivBundle& a, const EquivBundle& b) {
  if (!(a.gerbe().gset() == b.gerbe().gset()) || !(a.gerbe().cocycle() == b.gerbe().cocycle()))
    throw StructuralError("direct sum of bundles over different gerbes");
  const GSet& x = a.gerbe().gset();
  const int n = x.group().order();
  std::vector<int> dims(x.size());
  for (int i = 0; i < x.size(); ++i) dims[i] = a.dim(i) + b.dim(i);
  std::vector<MatrixXc> maps;
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < x.size(); ++i) {
      const int t = x.act(g, i);
      MatrixXc u = MatrixXc::Zero(dims[t], dims[i]);
      u.topLeftCorner(a.dim(t), a.dim(i)) = a.map(g, i);
      u.bottomRightCorner(b.dim(t), b.dim(i)) = b.map(g, i);
      maps.push_back(std::move(u));
    }
  return EquivBundle(a.gerbe_ptr(), std::move(dims), std::move(maps));
}

Kernel make_kernel(GerbePtr target, GerbePtr source, EquivBundle bundle) {
  const Gerbe expected = tensor_gerbes(*target, *source);
  if (!(expected.gset() == bundle.gerbe().gset()) || !(expected.cocycle() == bundle.gerbe().cocycle()))
    throw StructuralError("kernel bundle does not live over target (x) conj(source)");
  return Kernel{std::move(target), std::move(source), std::move(bundle)};
}

Kernel identity_kernel(GerbePtr x) {
  auto tensor = std::make_shared<const Gerbe>(tensor_gerbes(*x, *x));
  const int m = x->gset().size(), n = x->group().order();
  std::vector<int> dims(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) dims[static_cast<std::size_t>(i) * m + i] = 1;
  std::vector<MatrixXc> maps;
  for (int g = 0; g < n; ++g)
    for (int p = 0; p < m * m; ++p) {
      const int t = tensor->gset().act(g, p);
      maps.push_back(MatrixXc::Ones(dims[t], dims[p]));
    }
  return Kernel{x, x, EquivBundle(tensor, std::move(dims), std::move(maps))};
}

Kernel regular_kernel(GerbePtr target, GerbePtr source) {
  auto tensor = std::make_shared<const Gerbe>(tensor_gerbes(*target, *source));
  return Kernel{std::move(target), std::move(source), regular_bundle(tensor)};
}

namespace {

bool same_gerbe(const Gerbe& a, const Gerbe& b) {
  return a.gset() == b.gset() && a.cocycle() == b.cocycle() && a.metric() == b.metric();
}

}  // namespace

Kernel kernel_compose(const Kernel& outer, const Kernel& inner) {
  if (!same_gerbe(*outer.source, *inner.target))
    throw StructuralError("kernel_compose: middle gerbes do not match");
  const Gerbe& top = *outer.target;
  const Gerbe& mid = *inner.target;
  const Gerbe& bottom = *inner.source;
  auto tensor = std::make_shared<const Gerbe>(tensor_gerbes(top, bottom));
  const GSet& xk = top.gset();
  const GSet& xm = mid.gset();
  const GSet& xi = bottom.gset();
  const int nk = xk.size(), nm = xm.size(), ni = xi.size();
  const int n = top.group().order();
  const EquivBundle& eo = outer.bundle;
  const EquivBundle& ein = inner.bundle;

  // Block layout of fiber (kappa, i): mu ascending, each block dim E'_{kappa,mu} * dim E_{mu,i}.
  std::vector<std::vector<int>> block_offset(static_cast<std::size_t>(nk) * ni, std::vector<int>(nm + 1, 0));
  std::vector<int> dims(static_cast<std::size_t>(nk) * ni, 0);
  for (int kappa = 0; kappa < nk; ++kappa)
    for (int i = 0; i < ni; ++i) {
      auto& off = block_offset[static_cast<std::size_t>(kappa) * ni + i];
      for (int mu = 0; mu < nm; ++mu)
        off[mu + 1] = off[mu] + eo.dim(kappa * nm + mu) * ein.dim(mu * ni + i);
      dims[static_cast<std::size_t>(kappa) * ni + i] = off[nm];
    }

  std::vector<MatrixXc> maps;
  maps.reserve(static_cast<std::size_t>(n) * dims.size());
  for (int g = 0; g < n; ++g)
    for (int kappa = 0; kappa < nk; ++kappa)
      for (int i = 0; i < ni; ++i) {
        const int gk = xk.act(g, kappa), gi = xi.act(g, i);
        const auto& src_off = block_offset[static_cast<std::size_t>(kappa) * ni + i];
        const auto& dst_off = block_offset[static_cast<std::size_t>(gk) * ni + gi];
        MatrixXc u = MatrixXc::Zero(dims[static_cast<std::size_t>(gk) * ni + gi],
                                    dims[static_cast<std::size_t>(kappa) * ni + i]);
        for (int mu = 0; mu < nm; ++mu) {
          const int gmu = xm.act(g, mu);
          const MatrixXc& uo = eo.map(g, kappa * nm + mu);
          const MatrixXc& ui = ein.map(g, mu * ni + i);
          if (uo.size() == 0 || ui.size() == 0) continue;
          // Orthonormal basis vectors carry 1/sqrt(k_mu); the ratio is 1 for an invariant metric.
          const double weight = std::sqrt(mid.scale(mu) / mid.scale(gmu));
          u.block(dst_off[gmu], src_off[mu], uo.rows() * ui.rows(), uo.cols() * ui.cols()) = weight * kron(uo, ui);
        }
        maps.push_back(std::move(u));
      }
  return Kernel{outer.target, inner.source, EquivBundle(tensor, std::move(dims), std::move(maps))};
}

int center_dimension(const Gerbe& x) {
  const GSet& s = x.gset();
  const FiniteGroup& g = s.group();
  const Cocycle2& phi = x.cocycle();
  const int n = g.order(), m = s.size();
  if (static_cast<long long>(n) * m > 4096) throw ResourceError("center_dimension limited to |X||G| <= 4096");

  // Basis a_(h, i) = s(h at i); a_(h', k) a_(h, i) = phi_i(h', h) a_(h'h, i) when k = h.i.
  auto basis = [&](int h, int i) { return i * n + h; };
  std::vector<int> algebra_gens{0};
  for (int t : generating_set(g)) algebra_gens.push_back(t);

  SparseSystem<Complex> sys(n * m);
  for (int h : algebra_gens)
    for (int j = 0; j < m; ++j) {
      // Coefficients of z a - a z for a = a_(h, j), grouped by output basis element.
      std::map<int, std::vector<std::pair<int, Complex>>> out;
      const int hj = s.act(h, j);
      for (int a = 0; a < n; ++a) {
        // z a: z_(a, hj) a_(a, hj) a_(h, j) = phi_j(a, h) a_(ah, j)
        out[basis(g.mul(a, h), j)].emplace_back(basis(a, hj), phi.phase(j, a, h));
      }
      for (int i = 0; i < m; ++i)
        for (int a = 0; a < n; ++a) {
          if (s.act(a, i) != j) continue;
          // a z: a_(h, j) z_(a, i) a_(a, i) = phi_i(h, a) a_(ha, i)
          out[basis(g.mul(h, a), i)].emplace_back(basis(a, i), -phi.phase(i, h, a));
        }
      for (auto& [b, row] : out) sys.add_row(std::move(row));
    }
  return sys.nullity();
}

}  // namespace fgerbe
