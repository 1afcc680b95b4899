#include "fgerbe/cocycle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "fgerbe/errors.hpp"
#include "fgerbe/smith.hpp"

namespace fgerbe {

namespace {

constexpr long long kMaxRootOrder = 1000000;

int reduce(long long e, long long n) {
  long long r = e % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

std::complex<double> root_of_unity(long long e, long long n) {
  const long long r = reduce(e, n);
  // Exact values on the axes keep trivial phases bit-exact.
  if (r == 0) return {1.0, 0.0};
  if (2 * r == n) return {-1.0, 0.0};
  if (4 * r == n) return {0.0, 1.0};
  if (4 * r == 3 * n) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

int common_order(int a, int b) {
  const long long l = std::lcm(static_cast<long long>(a), static_cast<long long>(b));
  if (l > kMaxRootOrder) throw ResourceError("root-of-unity order lcm exceeds 10^6");
  return static_cast<int>(l);
}

Cocycle2::Cocycle2(GSetPtr gset, int order, std::vector<int> exponents)
    : gset_(std::move(gset)), order_(order), exp_(std::move(exponents)) {
  if (!gset_) throw StructuralError("cocycle without a G-set");
  if (order_ < 1 || order_ > kMaxRootOrder) throw StructuralError("cocycle order N must be in [1, 10^6]");
  n_ = gset_->group().order();
  if (exp_.size() != static_cast<std::size_t>(gset_->size()) * n_ * n_)
    throw StructuralError("cocycle table must have shape [points][|G|][|G|]");
  for (int& e : exp_) e = reduce(e, order_);
}

bool Cocycle2::is_zero() const {
  for (int e : exp_)
    if (e != 0) return false;
  return true;
}

Cocycle2 Cocycle2::lifted(int new_order) const {
  if (new_order % order_ != 0) throw StructuralError("lift order must be a multiple of N");
  std::vector<int> e(exp_);
  const int s = new_order / order_;
  for (int& x : e) x *= s;
  return Cocycle2(gset_, new_order, std::move(e));
}

Cochain1::Cochain1(GSetPtr gset, int order, std::vector<int> exponents)
    : gset_(std::move(gset)), order_(order), exp_(std::move(exponents)) {
  if (!gset_) throw StructuralError("cochain without a G-set");
  if (order_ < 1 || order_ > kMaxRootOrder) throw StructuralError("cochain order N must be in [1, 10^6]");
  n_ = gset_->group().order();
  if (exp_.size() != static_cast<std::size_t>(gset_->size()) * n_)
    throw StructuralError("cochain table must have shape [points][|G|]");
  for (int& e : exp_) e = reduce(e, order_);
  for (int i = 0; i < gset_->size(); ++i)
    if ((*this)(i, 0) != 0)
      throw ValidationError("cochain not normalized at point " + std::to_string(i));
}

Cochain1 Cochain1::lifted(int new_order) const {
  if (new_order % order_ != 0) throw StructuralError("lift order must be a multiple of N");
  std::vector<int> e(exp_);
  for (int& x : e) x *= new_order / order_;
  return Cochain1(gset_, new_order, std::move(e));
}

Cochain1 Cochain1::negated() const {
  std::vector<int> e(exp_);
  for (int& x : e) x = -x;
  return Cochain1(gset_, order_, std::move(e));
}

Cocycle2 trivial_cocycle(GSetPtr gset) {
  const std::size_t n = gset->group().order();
  const std::size_t size = gset->size() * n * n;
  return Cocycle2(std::move(gset), 1, std::vector<int>(size, 0));
}

Cocycle2 inflate_group_cocycle(GSetPtr gset, int order, const std::vector<std::vector<int>>& table) {
  const int n = gset->group().order();
  if (static_cast<int>(table.size()) != n) throw StructuralError("group cocycle table has wrong shape");
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(gset->size()) * n * n);
  for (int i = 0; i < gset->size(); ++i)
    for (int g2 = 0; g2 < n; ++g2) {
      if (static_cast<int>(table[g2].size()) != n) throw StructuralError("group cocycle table has wrong shape");
      for (int g1 = 0; g1 < n; ++g1) e.push_back(table[g2][g1]);
    }
  return Cocycle2(std::move(gset), order, std::move(e));
}

std::string CocycleViolation::describe() const {
  if (kind == Kind::normalization)
    return "normalization failed at point " + std::to_string(i) + ", element " + std::to_string(g1);
  return "cocycle identity failed at (i, g1, g2, g3) = (" + std::to_string(i) + ", " +
         std::to_string(g1) + ", " + std::to_string(g2) + ", " + std::to_string(g3) + ")";
}

std::optional<CocycleViolation> validate_cocycle(const Cocycle2& phi) {
  const GSet& x = phi.gset();
  const FiniteGroup& g = x.group();
  const int n = g.order(), N = phi.order();
  for (int i = 0; i < x.size(); ++i)
    for (int a = 0; a < n; ++a)
      if (phi(i, 0, a) != 0 || phi(i, a, 0) != 0)
        return CocycleViolation{CocycleViolation::Kind::normalization, i, a, 0, 0};
  for (int i = 0; i < x.size(); ++i)
    for (int g1 = 0; g1 < n; ++g1)
      for (int g2 = 0; g2 < n; ++g2) {
        const int g21 = g.mul(g2, g1);
        for (int g3 = 0; g3 < n; ++g3) {
          const long long lhs = phi(i, g2, g1) + phi(i, g3, g21);
          const long long rhs = phi(x.act(g1, i), g3, g2) + phi(i, g.mul(g3, g2), g1);
          if ((lhs - rhs) % N != 0)
            return CocycleViolation{CocycleViolation::Kind::identity, i, g1, g2, g3};
        }
      }
  return std::nullopt;
}

Cocycle2 coboundary_of(const Cochain1& lambda) {
  const GSet& x = lambda.gset();
  const FiniteGroup& g = x.group();
  const int n = g.order();
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(x.size()) * n * n);
  for (int i = 0; i < x.size(); ++i)
    for (int g2 = 0; g2 < n; ++g2)
      for (int g1 = 0; g1 < n; ++g1)
        e.push_back(lambda(x.act(g1, i), g2) + lambda(i, g1) - lambda(i, g.mul(g2, g1)));
  return Cocycle2(lambda.gset_ptr(), lambda.order(), std::move(e));
}

Cochain1 random_cochain(GSetPtr gset, int order, std::mt19937_64& rng) {
  const int n = gset->group().order();
  std::uniform_int_distribution<int> pick(0, order - 1);
  std::vector<int> e(static_cast<std::size_t>(gset->size()) * n);
  for (int i = 0; i < gset->size(); ++i)
    for (int a = 1; a < n; ++a) e[static_cast<std::size_t>(i) * n + a] = pick(rng);
  return Cochain1(std::move(gset), order, std::move(e));
}

namespace {

template <typename T>
T combine(const T& a, const T& b, int sign) {
  if (!(a.gset() == b.gset())) throw StructuralError("cochains live on different G-sets");
  const int l = common_order(a.order(), b.order());
  const T la = a.lifted(l), lb = b.lifted(l);
  std::vector<int> e(la.exponents());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += sign * lb.exponents()[k];
  return T(a.gset_ptr(), l, std::move(e));
}

}  // namespace

Cocycle2 add(const Cocycle2& a, const Cocycle2& b) { return combine(a, b, +1); }
Cocycle2 subtract(const Cocycle2& a, const Cocycle2& b) { return combine(a, b, -1); }
Cochain1 add(const Cochain1& a, const Cochain1& b) { return combine(a, b, +1); }

std::optional<Cochain1> is_cohomologous(const Cocycle2& phi, const Cocycle2& psi) {
  const Cocycle2 diff = subtract(psi, phi);
  const GSet& x = phi.gset();
  const FiniteGroup& g = x.group();
  const int n = g.order(), points = x.size();
  if (n == 1) return Cochain1(phi.gset_ptr(), 1, std::vector<int>(points, 0));

  // Unknowns lambda_i(a), a != e; equations (i, g2, g1) with g1, g2 != e.
  auto unknown = [&](int i, int a) { return static_cast<Eigen::Index>(i) * (n - 1) + (a - 1); };
  const Eigen::Index rows = static_cast<Eigen::Index>(points) * (n - 1) * (n - 1);
  IntMatrix a = IntMatrix::Zero(rows, static_cast<Eigen::Index>(points) * (n - 1));
  std::vector<std::int64_t> b(rows);
  Eigen::Index r = 0;
  for (int i = 0; i < points; ++i)
    for (int g2 = 1; g2 < n; ++g2)
      for (int g1 = 1; g1 < n; ++g1, ++r) {
        a(r, unknown(x.act(g1, i), g2)) += 1;
        a(r, unknown(i, g1)) += 1;
        const int g21 = g.mul(g2, g1);
        if (g21 != 0) a(r, unknown(i, g21)) -= 1;
        b[r] = diff(i, g2, g1);
      }

  const auto sol = solve_mod_one(a, b, diff.order());
  if (!sol) return std::nullopt;
  std::vector<int> e(static_cast<std::size_t>(points) * n, 0);
  for (int i = 0; i < points; ++i)
    for (int k = 1; k < n; ++k)
      e[static_cast<std::size_t>(i) * n + k] = static_cast<int>(sol->numerators[unknown(i, k)]);
  Cochain1 lambda(phi.gset_ptr(), static_cast<int>(sol->denominator), std::move(e));
  if (!verify_witness(phi, psi, lambda))
    throw std::logic_error("coboundary witness failed re-substitution");
  return lambda;
}

bool verify_witness(const Cocycle2& phi, const Cocycle2& psi, const Cochain1& lambda) {
  const Cocycle2 lhs = coboundary_of(lambda);
  const Cocycle2 rhs = subtract(psi, phi);
  const int l = common_order(lhs.order(), rhs.order());
  return lhs.lifted(l).exponents() == rhs.lifted(l).exponents();
}

void check_equivariant_bijection(const GSet& source, const GSet& target, const std::vector<int>& f) {
  if (!(source.group() == target.group())) throw StructuralError("G-sets over different groups");
  if (static_cast<int>(f.size()) != source.size() || source.size() != target.size())
    throw ValidationError("map is not a bijection: sizes differ");
  std::vector<char> hit(target.size(), 0);
  for (int i = 0; i < source.size(); ++i) {
    if (f[i] < 0 || f[i] >= target.size() || hit[f[i]])
      throw ValidationError("map is not a bijection at point " + std::to_string(i));
    hit[f[i]] = 1;
  }
  for (int a = 0; a < source.group().order(); ++a)
    for (int i = 0; i < source.size(); ++i)
      if (f[source.act(a, i)] != target.act(a, f[i]))
        throw ValidationError("map is not equivariant at (g, i) = (" + std::to_string(a) + ", " +
                              std::to_string(i) + ")");
}

Cocycle2 pullback(const Cocycle2& phi_target, const std::vector<int>& f, GSetPtr source) {
  check_equivariant_bijection(*source, phi_target.gset(), f);
  const int n = source->group().order();
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(source->size()) * n * n);
  for (int i = 0; i < source->size(); ++i)
    for (int g2 = 0; g2 < n; ++g2)
      for (int g1 = 0; g1 < n; ++g1) e.push_back(phi_target(f[i], g2, g1));
  return Cocycle2(std::move(source), phi_target.order(), std::move(e));
}

Cocycle2 tensor_conjugate(const Cocycle2& phi_left, const Cocycle2& phi_right) {
  auto prod = std::make_shared<const GSet>(product_gset(phi_left.gset(), phi_right.gset()));
  const int l = common_order(phi_left.order(), phi_right.order());
  const Cocycle2 a = phi_left.lifted(l), b = phi_right.lifted(l);
  const int n = prod->group().order(), nr = phi_right.gset().size();
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(prod->size()) * n * n);
  for (int p = 0; p < prod->size(); ++p)
    for (int g2 = 0; g2 < n; ++g2)
      for (int g1 = 0; g1 < n; ++g1) e.push_back(a(p / nr, g2, g1) - b(p % nr, g2, g1));
  return Cocycle2(std::move(prod), l, std::move(e));
}

}  // namespace fgerbe
