#include "fgerbe/geochar.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "fgerbe/errors.hpp"

namespace fgerbe {

namespace {

// Position of each point inside Fix(x), or -1.
std::vector<int> fixed_positions(const GSet& s, int x) {
  std::vector<int> pos(s.size(), -1);
  int next = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s.act(x, i) == i) pos[i] = next++;
  return pos;
}

}  // namespace

GerbePtr group_gerbe(GroupPtr g) {
  auto c = std::make_shared<const GSet>(conjugation_gset(std::move(g)));
  return std::make_shared<const Gerbe>(trivial_cocycle(c));
}

GroupBundle push_forward(const Gerbe& x) { return push_forward(x, transgress(x)); }

GroupBundle push_forward(const Gerbe& x, const TransgressedBundle& t) {
  const GSet& s = x.gset();
  const FiniteGroup& grp = x.group();
  const int n = grp.order();
  const LoopGroupoid& loops = t.loops();
  std::vector<std::vector<int>> pos(n);
  std::vector<int> dims(n);
  for (int e = 0; e < n; ++e) {
    pos[e] = fixed_positions(s, e);
    dims[e] = static_cast<int>(fixed_points(s, e).size());
  }
  std::vector<MatrixXc> maps(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int e = 0; e < n; ++e) {
      const int ge = grp.conj(g, e);
      MatrixXc m = MatrixXc::Zero(dims[ge], dims[e]);
      for (int i = 0; i < s.size(); ++i)
        if (pos[e][i] >= 0) m(pos[ge][s.act(g, i)], pos[e][i]) = t.value(g, loops.index(i, e));
      maps[static_cast<std::size_t>(g) * n + e] = std::move(m);
    }
  return GroupBundle(group_gerbe(x.gset().group_ptr()), std::move(dims), std::move(maps));
}

MatrixXc two_character_action(const Gerbe& x, int g, int loop_element, std::uint64_t seed) {
  const GSet& s = x.gset();
  const FiniteGroup& grp = x.group();
  const int target_element = grp.conj(g, loop_element);
  const auto src = fixed_positions(s, loop_element), dst = fixed_positions(s, target_element);
  const int rows = static_cast<int>(std::count_if(dst.begin(), dst.end(), [](int p) { return p >= 0; }));
  const int cols = static_cast<int>(std::count_if(src.begin(), src.end(), [](int p) { return p >= 0; }));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  MatrixXc m = MatrixXc::Zero(rows, cols);
  for (int i = 0; i < s.size(); ++i) {
    if (src[i] < 0) continue;
    const GerbeArrow<Complex> theta{i, loop_element, Complex(1.0, 0.0)};
    const GerbeArrow<Complex> v{i, g, std::polar(1.0, angle(rng))};
    const auto w = compose_arrows(x, v, compose_arrows(x, theta, invert_arrow(x, v)));
    if (w.label != target_element || w.source != s.act(g, i))
      throw StructuralError("conjugated loop arrow landed on the wrong loop");
    m(dst[w.source], src[i]) = w.phase;
  }
  return m;
}

std::vector<MatrixXc> ch_on_morphism(const Kernel& e) {
  const GSet& tx = e.target->gset();
  const GSet& sx = e.source->gset();
  const int n = tx.group().order(), ns = sx.size();
  std::vector<MatrixXc> out(n);
  for (int x = 0; x < n; ++x) {
    const auto mu = fixed_points(tx, x), is = fixed_points(sx, x);
    MatrixXc m(mu.size(), is.size());
    for (std::size_t a = 0; a < mu.size(); ++a)
      for (std::size_t b = 0; b < is.size(); ++b)
        m(a, b) = std::conj(e.bundle.map(x, mu[a] * ns + is[b]).trace());
    out[x] = std::move(m);
  }
  return out;
}

double ch_equivariance_residual(const GroupBundle& ch_target, const GroupBundle& ch_source,
                                const std::vector<MatrixXc>& mats) {
  const FiniteGroup& grp = ch_target.gerbe().group();
  double worst = 0.0;
  for (int g = 0; g < grp.order(); ++g)
    for (int x = 0; x < grp.order(); ++x) {
      const MatrixXc lhs = ch_target.map(g, x) * mats[x];
      const MatrixXc rhs = mats[grp.conj(g, x)] * ch_source.map(g, x);
      worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
  return worst;
}

std::vector<MatrixXc> hat_map(const Gerbe& target, const Gerbe& source, const FlatSection& xi, double tolerance) {
  const Gerbe tensor = tensor_gerbes(target, source);
  const TransgressedBundle t = transgress(tensor);
  const LoopGroupoid& loops = t.loops();
  if (xi.size() != loops.size()) throw StructuralError("section length does not match the loop count");
  const FiniteGroup& grp = tensor.group();
  for (int g = 0; g < grp.order(); ++g)
    for (int k = 0; k < loops.size(); ++k) {
      const double dev = std::abs(xi[loops.act(g, k)] - t.value(g, k) * xi[k]);
      if (dev > tolerance) {
        const Loop& l = loops.loop(k);
        std::ostringstream msg;
        msg << "section is not flat: g=" << g << " loop=(" << l.point << "," << l.element << ") deviation " << dev;
        throw ValidationError(msg.str());
      }
    }
  const GSet& tx = target.gset();
  const GSet& sx = source.gset();
  const int ns = sx.size();
  std::vector<MatrixXc> out(grp.order());
  for (int x = 0; x < grp.order(); ++x) {
    const auto mu = fixed_points(tx, x), is = fixed_points(sx, x);
    MatrixXc m(mu.size(), is.size());
    for (std::size_t a = 0; a < mu.size(); ++a)
      for (std::size_t b = 0; b < is.size(); ++b) m(a, b) = xi[loops.index(mu[a] * ns + is[b], x)];
    out[x] = std::move(m);
  }
  return out;
}

double hat_norm_squared(const std::vector<MatrixXc>& mats, int group_order) {
  double s = 0.0;
  for (const auto& m : mats) s += m.squaredNorm();
  return s / group_order;
}

EndCount hom_count_formula(const Gerbe& target, const Gerbe& source) {
  const Gerbe tensor = tensor_gerbes(target, source);
  const TransgressedBundle t = transgress(tensor);
  const LoopGroupoid& loops = t.loops();
  const GSet& p = tensor.gset();
  const FiniteGroup& grp = tensor.group();
  std::int64_t count = 0;
  Complex sum{0.0, 0.0};
  // (mu, i) is a single point of the product, fixed by g and h iff both coordinates are.
  for (int q = 0; q < p.size(); ++q)
    for (int g = 0; g < grp.order(); ++g) {
      if (p.act(g, q) != q) continue;
      const int k = loops.index(q, g);
      for (int h = 0; h < grp.order(); ++h) {
        if (p.act(h, q) != q || grp.mul(g, h) != grp.mul(h, g)) continue;
        ++count;
        sum += t.value(h, k);
      }
    }
  EndCount out;
  const std::int64_t d = std::gcd(count, static_cast<std::int64_t>(grp.order()));
  out.plain_numerator = count / d;
  out.plain_denominator = grp.order() / d;
  out.weighted = sum / static_cast<double>(grp.order());
  return out;
}

EndCount end_count_formula(const Gerbe& x) { return hom_count_formula(x, x); }

int homG_dimension(const GroupBundle& a, const GroupBundle& b) { return hom_dimension(a, b); }

}  // namespace fgerbe
