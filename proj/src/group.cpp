#include "fgerbe/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "fgerbe/errors.hpp"

namespace fgerbe {

namespace {

constexpr int kExhaustiveAssociativityOrder = 64;
constexpr int kSampledAssociativityTriples = 10000;

std::string witness(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : xs) {
    if (!first) os << ", ";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> rows,
                                    std::vector<std::string> labels) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw StructuralError("group table is empty");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      throw StructuralError("group table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b)
      if (rows[a][b] < 0 || rows[a][b] >= n)
        throw StructuralError("group table entry " + witness({a, b}) + " out of range");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw StructuralError("group labels must have one entry per element");

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = rows[c][g] == g && rows[g][c] == g;
    if (ok) e = c;
  }
  if (e < 0) throw ValidationError("identity axiom failed: no two-sided identity element");

  // Move the identity to index 0.
  if (e != 0) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[e]);
    std::vector<std::vector<int>> relabeled(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) relabeled[perm[a]][perm[b]] = perm[rows[a][b]];
    rows = std::move(relabeled);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }

  FiniteGroup g;
  g.order_ = n;
  g.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul_[static_cast<std::size_t>(a) * n + b] = rows[a][b];

  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0)
      throw ValidationError("inverse axiom failed: element " + std::to_string(a) +
                            " has no two-sided inverse");
  }

  auto check = [&](int a, int b, int c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw ValidationError("associativity failed at " + witness({a, b, c}));
  };
  if (n <= kExhaustiveAssociativityOrder) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < kSampledAssociativityTriples; ++t) check(pick(rng), pick(rng), pick(rng));
  }
  g.labels_ = std::move(labels);
  return g;
}

std::string FiniteGroup::label(int g) const {
  return labels_.empty() ? std::to_string(g) : labels_[g];
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) rows[a][b] = mul(a, b);
  return rows;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw StructuralError("cyclic(n) needs n >= 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table(std::move(rows), std::move(labels));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw StructuralError("dihedral(n) needs n >= 1");
  const int order = 2 * n;
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int a = 0; a < order; ++a) {
    const int ka = a % n, fa = a / n;
    labels[a] = "r" + std::to_string(ka) + (fa ? "s" : "");
    for (int b = 0; b < order; ++b) {
      const int kb = b % n, fb = b / n;
      // r^ka s^fa r^kb s^fb = r^(ka + (-1)^fa kb) s^(fa+fb)
      const int k = ((ka + (fa ? -kb : kb)) % n + n) % n;
      rows[a][b] = k + n * ((fa + fb) % 2);
    }
  }
  return FiniteGroup::from_table(std::move(rows), std::move(labels));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) throw StructuralError("symmetric(n) supports 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  const int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  std::vector<int> q(n);
  for (int a = 0; a < order; ++a) {
    std::string s = "[";
    for (int k = 0; k < n; ++k) s += std::to_string(perms[a][k]) + (k + 1 < n ? " " : "]");
    labels[a] = s;
    for (int b = 0; b < order; ++b) {
      // (a*b)(k) = a(b(k))
      for (int k = 0; k < n; ++k) q[k] = perms[a][perms[b][k]];
      rows[a][b] = index_of(q);
    }
  }
  return FiniteGroup::from_table(std::move(rows), std::move(labels));
}

FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
    for (int y = 0; y < n; ++y)
      rows[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return FiniteGroup::from_table(std::move(rows), std::move(labels));
}

ConjugacyData conjugacy_data(const FiniteGroup& g) {
  ConjugacyData out;
  const int n = g.order();
  std::vector<int> cls(n, -1);
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<int> members;
    for (int h = 0; h < n; ++h) {
      const int y = g.conj(h, x);
      if (cls[y] < 0) {
        cls[y] = static_cast<int>(out.classes.size());
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == g.mul(b, a)) ++out.commuting_pair_count;
  return out;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (int s : gens)
    if (s < 0 || s >= g.order()) throw StructuralError("generator " + std::to_string(s) + " out of range");
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (int s : gens) {
      const int y = g.mul(members[k], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> span{0};
  for (int x = 1; x < g.order() && static_cast<int>(span.size()) < g.order(); ++x) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = subgroup_closure(g, gens);
  }
  return gens;
}

int element_order(const FiniteGroup& g, int x) {
  int k = 1;
  for (int y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

}  // namespace fgerbe
