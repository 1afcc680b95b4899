#include "fgerbe/gerbe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fgerbe/errors.hpp"

namespace fgerbe {

ScaleFactor ScaleFactor::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw StructuralError("scale factor with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num <= 0) throw ValidationError("scale factors must be positive");
  const std::int64_t g = std::gcd(num, den);
  ScaleFactor s;
  s.rational_ = true;
  s.num_ = num / g;
  s.den_ = den / g;
  return s;
}

ScaleFactor ScaleFactor::real(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) throw ValidationError("scale factors must be positive and finite");
  ScaleFactor s;
  s.rational_ = false;
  s.value_ = value;
  return s;
}

std::string ScaleFactor::to_string() const {
  if (!rational_) {
    std::ostringstream os;
    os.precision(17);
    os << value_;
    return os.str();
  }
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

ScaleFactor operator*(const ScaleFactor& a, const ScaleFactor& b) {
  if (a.rational_ && b.rational_) {
    std::int64_t n = 0, d = 0;
    if (!__builtin_mul_overflow(a.num_, b.num_, &n) && !__builtin_mul_overflow(a.den_, b.den_, &d))
      return ScaleFactor::rational(n, d);
  }
  return ScaleFactor::real(a.value() * b.value());
}

bool ScaleFactor::operator==(const ScaleFactor& o) const {
  if (rational_ && o.rational_) return num_ == o.num_ && den_ == o.den_;
  return value() == o.value();
}

Gerbe::Gerbe(std::vector<ScaleFactor> metric, Cocycle2 cocycle)
    : metric_(std::move(metric)), cocycle_(std::move(cocycle)) {
  const GSet& x = cocycle_.gset();
  if (static_cast<int>(metric_.size()) != x.size())
    throw StructuralError("metric must have one scale factor per point");
  for (int a = 0; a < x.group().order(); ++a)
    for (int i = 0; i < x.size(); ++i)
      if (!(metric_[x.act(a, i)] == metric_[i]))
        throw ValidationError("metric not G-invariant at (g, i) = (" + std::to_string(a) + ", " +
                              std::to_string(i) + ")");
  if (auto bad = validate_cocycle(cocycle_)) throw ValidationError(bad->describe());
}

Gerbe::Gerbe(Cocycle2 cocycle) : cocycle_(std::move(cocycle)) {
  metric_.assign(cocycle_.gset().size(), ScaleFactor::rational(1));
  if (auto bad = validate_cocycle(cocycle_)) throw ValidationError(bad->describe());
}

RootPhase PhaseTraits<RootPhase>::mul(RootPhase a, RootPhase b) {
  const long long l = std::lcm(a.order, b.order);
  return {(a.exponent * (l / a.order) + b.exponent * (l / b.order)) % l, l};
}

template <typename Phase>
GerbeArrow<Phase> compose_arrows(const Gerbe& x, const GerbeArrow<Phase>& v2, const GerbeArrow<Phase>& v1) {
  using T = PhaseTraits<Phase>;
  if (v2.source != target(x, v1))
    throw StructuralError("arrows not composable: source " + std::to_string(v2.source) +
                          " != target " + std::to_string(target(x, v1)));
  const Phase c = T::cocycle(x.cocycle(), v1.source, v2.label, v1.label);
  return {v1.source, x.group().mul(v2.label, v1.label), T::mul(T::mul(v2.phase, v1.phase), c)};
}

template <typename Phase>
GerbeArrow<Phase> invert_arrow(const Gerbe& x, const GerbeArrow<Phase>& v) {
  using T = PhaseTraits<Phase>;
  const int ginv = x.group().inv(v.label);
  const Phase c = T::cocycle(x.cocycle(), v.source, ginv, v.label);
  return {target(x, v), ginv, T::inv(T::mul(v.phase, c))};
}

template GerbeArrow<std::complex<double>> compose_arrows(const Gerbe&, const GerbeArrow<std::complex<double>>&,
                                                         const GerbeArrow<std::complex<double>>&);
template GerbeArrow<RootPhase> compose_arrows(const Gerbe&, const GerbeArrow<RootPhase>&,
                                              const GerbeArrow<RootPhase>&);
template GerbeArrow<std::complex<double>> invert_arrow(const Gerbe&, const GerbeArrow<std::complex<double>>&);
template GerbeArrow<RootPhase> invert_arrow(const Gerbe&, const GerbeArrow<RootPhase>&);

Gerbe tensor_gerbes(const Gerbe& left, const Gerbe& right) {
  if (!(left.group() == right.group())) throw StructuralError("tensor product of gerbes over different groups");
  Cocycle2 c = tensor_conjugate(left.cocycle(), right.cocycle());
  const int nr = right.gset().size();
  std::vector<ScaleFactor> metric;
  metric.reserve(c.gset().size());
  for (int p = 0; p < c.gset().size(); ++p) metric.push_back(left.metric()[p / nr] * right.metric()[p % nr]);
  return Gerbe(std::move(metric), std::move(c));
}

Gerbe regauge(const Gerbe& x, const Cochain1& lambda) {
  return Gerbe(x.metric(), add(x.cocycle(), coboundary_of(lambda)));
}

Gerbe with_metric(const Gerbe& x, std::vector<ScaleFactor> metric) {
  return Gerbe(std::move(metric), x.cocycle());
}

Gerbe restrict_gerbe(const Gerbe& x, const std::vector<int>& points_in) {
  std::vector<int> points(points_in);
  std::sort(points.begin(), points.end());
  const GSet& s = x.gset();
  const FiniteGroup& g = s.group();
  std::vector<int> local(s.size(), -1);
  for (std::size_t k = 0; k < points.size(); ++k) local[points[k]] = static_cast<int>(k);
  const int m = static_cast<int>(points.size());
  std::vector<std::vector<int>> act(g.order(), std::vector<int>(m));
  for (int a = 0; a < g.order(); ++a)
    for (int k = 0; k < m; ++k) {
      const int j = local[s.act(a, points[k])];
      if (j < 0) throw StructuralError("restriction to a subset that is not G-invariant");
      act[a][k] = j;
    }
  auto sub = std::make_shared<const GSet>(s.group_ptr(), m, std::move(act));
  const int n = g.order();
  std::vector<int> e;
  std::vector<ScaleFactor> metric;
  for (int p : points) {
    metric.push_back(x.metric()[p]);
    for (int g2 = 0; g2 < n; ++g2)
      for (int g1 = 0; g1 < n; ++g1) e.push_back(x.cocycle()(p, g2, g1));
  }
  return Gerbe(std::move(metric), Cocycle2(sub, x.cocycle().order(), std::move(e)));
}

Cochain1 pullback(const Cochain1& lambda, const std::vector<int>& f, GSetPtr source) {
  check_equivariant_bijection(*source, lambda.gset(), f);
  const int n = source->group().order();
  std::vector<int> e;
  for (int i = 0; i < source->size(); ++i)
    for (int a = 0; a < n; ++a) e.push_back(lambda(f[i], a));
  return Cochain1(std::move(source), lambda.order(), std::move(e));
}

std::optional<EquivalenceWitness> equivalence_check(const Gerbe& x, const Gerbe& y,
                                                    std::int64_t max_candidates) {
  if (!(x.group() == y.group())) throw StructuralError("equivalence check across different groups");
  const GSet& sx = x.gset();
  const GSet& sy = y.gset();
  if (sx.size() != sy.size()) return std::nullopt;
  const FiniteGroup& g = sx.group();
  const OrbitData ox = orbits_and_stabilizers(sx);
  const OrbitData oy = orbits_and_stabilizers(sy);
  if (ox.orbits.size() != oy.orbits.size()) return std::nullopt;

  auto stabilizer = [&](const GSet& s, int i) {
    std::vector<int> st;
    for (int a = 0; a < g.order(); ++a)
      if (s.act(a, i) == i) st.push_back(a);
    return st;
  };
  struct Signature {
    std::size_t size, stab;
    ScaleFactor k;
    bool operator==(const Signature& o) const { return size == o.size && stab == o.stab && k == o.k; }
  };
  auto signature = [&](const OrbitData& od, const Gerbe& ge, std::size_t k) {
    return Signature{od.orbits[k].size(), od.stabilizers[k].size(), ge.metric()[od.orbits[k].front()]};
  };

  const std::size_t norb = ox.orbits.size();
  std::vector<char> used(norb, 0);
  std::vector<int> f(sx.size(), -1);
  std::int64_t candidates = 0;
  std::optional<EquivalenceWitness> found;

  // Depth-first over orbits of X in order; targets in ascending order.
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (found) return;
    if (k == norb) {
      if (++candidates > max_candidates)
        throw ResourceError("equivalence search exceeded 10^6 candidate maps; decompose by orbits");
      Cocycle2 pulled = pullback(y.cocycle(), f, x.gset_ptr());
      if (auto lambda = is_cohomologous(x.cocycle(), pulled)) found = EquivalenceWitness{f, *lambda};
      return;
    }
    const int rep = ox.orbits[k].front();
    const std::vector<int>& stab = ox.stabilizers[k];
    const Signature sig = signature(ox, x, k);
    for (std::size_t t = 0; t < norb && !found; ++t) {
      if (used[t] || !(signature(oy, y, t) == sig)) continue;
      for (int j : oy.orbits[t]) {
        if (found) break;
        if (stabilizer(sy, j) != stab) continue;
        for (int a = 0; a < g.order(); ++a) f[sx.act(a, rep)] = sy.act(a, j);
        used[t] = 1;
        self(self, k + 1);
        used[t] = 0;
      }
    }
    for (int i : ox.orbits[k]) f[i] = -1;
  };
  recurse(recurse, 0);
  return found;
}

namespace {

struct KGroup {
  std::vector<int> factors;
  int exponent = 1;
  int order = 1;

  explicit KGroup(std::vector<int> f) : factors(std::move(f)) {
    if (factors.empty()) throw StructuralError("K needs at least one cyclic factor");
    for (int n : factors) {
      if (n < 1) throw StructuralError("cyclic factor orders must be positive");
      exponent = std::lcm(exponent, n);
      order *= n;
      if (order > 4096) throw ResourceError("kernel group too large");
    }
  }
  std::vector<int> normalize(std::vector<int> k) const {
    if (k.size() != factors.size()) throw StructuralError("K element tuple has wrong length");
    for (std::size_t j = 0; j < k.size(); ++j) k[j] = ((k[j] % factors[j]) + factors[j]) % factors[j];
    return k;
  }
  std::vector<int> element(int index) const {
    std::vector<int> k(factors.size());
    for (int j = static_cast<int>(factors.size()) - 1; j >= 0; --j) {
      k[j] = index % factors[j];
      index /= factors[j];
    }
    return k;
  }
  int index(const std::vector<int>& k) const {
    int idx = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) idx = idx * factors[j] + k[j];
    return idx;
  }
  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b, int sign = 1) const {
    std::vector<int> c(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) c[j] = a[j] + sign * b[j];
    return normalize(c);
  }
};

std::vector<int> apply_action(const KGroup& k, const std::vector<std::vector<int>>& images,
                              const std::vector<int>& elem) {
  std::vector<int> out(k.factors.size(), 0);
  for (std::size_t j = 0; j < elem.size(); ++j)
    for (std::size_t l = 0; l < out.size(); ++l) out[l] += elem[j] * images[j][l];
  return k.normalize(out);
}

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t j = 0; j < t.size(); ++j) s += std::to_string(t[j]) + (j + 1 < t.size() ? "," : "");
  return s + ")";
}

}  // namespace

std::vector<std::vector<int>> character_tuples(const std::vector<int>& cyclic_factors) {
  const KGroup k(cyclic_factors);
  std::vector<std::vector<int>> out;
  for (int idx = 0; idx < k.order; ++idx) out.push_back(k.element(idx));
  return out;
}

void validate_extension(const AbelianExtension& ext) {
  if (!ext.group) throw StructuralError("extension without a group");
  const FiniteGroup& g = *ext.group;
  const KGroup k(ext.cyclic_factors);
  const int n = g.order();
  const std::size_t r = k.factors.size();
  if (static_cast<int>(ext.action.size()) != n) throw StructuralError("action needs one entry per element of G");
  for (int a = 0; a < n; ++a) {
    if (ext.action[a].size() != r) throw StructuralError("action entry must list images of all generators");
    for (std::size_t j = 0; j < r; ++j) {
      if (ext.action[a][j].size() != r) throw StructuralError("generator image has wrong length");
      // n_j * image_j must vanish for the map to be well defined.
      for (std::size_t l = 0; l < r; ++l)
        if ((static_cast<long long>(k.factors[j]) * ext.action[a][j][l]) % k.factors[l] != 0)
          throw ValidationError("action of element " + std::to_string(a) + " is not a homomorphism of K");
    }
    std::vector<char> hit(k.order, 0);
    for (int idx = 0; idx < k.order; ++idx) {
      const int img = k.index(apply_action(k, ext.action[a], k.element(idx)));
      if (hit[img]) throw ValidationError("action of element " + std::to_string(a) + " is not an automorphism of K");
      hit[img] = 1;
    }
  }
  for (int idx = 0; idx < k.order; ++idx) {
    const auto elem = k.element(idx);
    if (apply_action(k, ext.action[0], elem) != elem)
      throw ValidationError("identity of G does not act trivially on K");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (apply_action(k, ext.action[a], apply_action(k, ext.action[b], elem)) !=
            apply_action(k, ext.action[g.mul(a, b)], elem))
          throw ValidationError("action is not a homomorphism G -> Aut(K) at (" + std::to_string(a) + ", " +
                                std::to_string(b) + ")");
  }

  if (static_cast<int>(ext.cocycle.size()) != n) throw StructuralError("phiK needs shape [|G|][|G|]");
  std::vector<std::vector<std::vector<int>>> phi(n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(ext.cocycle[a].size()) != n) throw StructuralError("phiK needs shape [|G|][|G|]");
    for (int b = 0; b < n; ++b) phi[a].push_back(k.normalize(ext.cocycle[a][b]));
  }
  const std::vector<int> zero(r, 0);
  for (int a = 0; a < n; ++a)
    if (phi[0][a] != zero || phi[a][0] != zero)
      throw ValidationError("phiK not normalized at element " + std::to_string(a));
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int g3 = 0; g3 < n; ++g3) {
        const auto lhs = k.add(phi[g3][g2], phi[g.mul(g3, g2)][g1]);
        const auto rhs = k.add(apply_action(k, ext.action[g3], phi[g2][g1]), phi[g3][g.mul(g2, g1)]);
        if (lhs != rhs)
          throw ValidationError("phiK cocycle identity failed at (g1, g2, g3) = (" + std::to_string(g1) + ", " +
                                std::to_string(g2) + ", " + std::to_string(g3) + "): " + tuple_str(lhs) +
                                " != " + tuple_str(rhs));
      }
}

Gerbe from_abelian_extension(const AbelianExtension& ext) {
  validate_extension(ext);
  const FiniteGroup& g = *ext.group;
  const KGroup k(ext.cyclic_factors);
  const int n = g.order();
  const int big_n = k.exponent;
  const auto chars = character_tuples(ext.cyclic_factors);

  // chi_c(k) = sum_j c_j k_j (N / n_j) as an exponent of zeta_N.
  auto evaluate = [&](const std::vector<int>& c, const std::vector<int>& elem) {
    long long e = 0;
    for (std::size_t j = 0; j < c.size(); ++j) e += static_cast<long long>(c[j]) * elem[j] * (big_n / k.factors[j]);
    return static_cast<int>(e % big_n);
  };

  // (g.chi)(k) = chi(g^-1 . k)
  std::vector<std::vector<int>> act(n, std::vector<int>(chars.size()));
  for (int a = 0; a < n; ++a) {
    const auto& images = ext.action[g.inv(a)];
    for (std::size_t c = 0; c < chars.size(); ++c) {
      std::vector<int> image(k.factors.size());
      for (std::size_t j = 0; j < k.factors.size(); ++j) {
        std::vector<int> gen(k.factors.size(), 0);
        gen[j] = 1;
        image[j] = evaluate(chars[c], apply_action(k, images, gen)) / (big_n / k.factors[j]);
      }
      act[a][c] = k.index(image);
    }
  }
  auto x = std::make_shared<const GSet>(ext.group, static_cast<int>(chars.size()), std::move(act));

  std::vector<int> e;
  for (std::size_t c = 0; c < chars.size(); ++c)
    for (int g2 = 0; g2 < n; ++g2)
      for (int g1 = 0; g1 < n; ++g1)
        e.push_back(evaluate(chars[c], k.normalize(ext.cocycle[g.inv(g1)][g.inv(g2)])));
  return Gerbe(Cocycle2(std::move(x), big_n, std::move(e)));
}

std::vector<std::vector<std::vector<int>>> k_coboundary(const AbelianExtension& ext,
                                                        const std::vector<std::vector<int>>& f) {
  const FiniteGroup& g = *ext.group;
  const KGroup k(ext.cyclic_factors);
  const int n = g.order();
  if (static_cast<int>(f.size()) != n) throw StructuralError("K-valued cochain needs one entry per element");
  std::vector<std::vector<int>> fn;
  for (const auto& v : f) fn.push_back(k.normalize(v));
  if (fn[0] != std::vector<int>(k.factors.size(), 0)) throw ValidationError("K-valued cochain not normalized");
  std::vector<std::vector<std::vector<int>>> out(n, std::vector<std::vector<int>>(n));
  for (int g2 = 0; g2 < n; ++g2)
    for (int g1 = 0; g1 < n; ++g1)
      out[g2][g1] = k.add(k.add(apply_action(k, ext.action[g2], fn[g1]), fn[g.mul(g2, g1)], -1), fn[g2]);
  return out;
}

}  // namespace fgerbe
