#include "fgerbe/smith.hpp"

#include <cstdlib>
#include <numeric>

#include "fgerbe/errors.hpp"

namespace fgerbe {

namespace {

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod = 0, out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
    throw ResourceError("integer overflow during Smith reduction");
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

SmithReduction smith_diagonalize(IntMatrix a, IntMatrix* rhs, std::int64_t rhs_modulus) {
  const Eigen::Index m = a.rows(), n = a.cols();
  SmithReduction out;
  out.column_transform = IntMatrix::Identity(n, n);
  IntMatrix& v = out.column_transform;

  auto row_op = [&](Eigen::Index dst, Eigen::Index src, std::int64_t q) {
    for (Eigen::Index c = 0; c < n; ++c)
      if (a(src, c) != 0) a(dst, c) = checked_sub_mul(a(dst, c), q, a(src, c));
    if (rhs) {
      for (Eigen::Index c = 0; c < rhs->cols(); ++c) {
        std::int64_t x = checked_sub_mul((*rhs)(dst, c), q, (*rhs)(src, c));
        (*rhs)(dst, c) = rhs_modulus > 0 ? mod(x, rhs_modulus) : x;
      }
    }
  };
  auto col_op = [&](Eigen::Index dst, Eigen::Index src, std::int64_t q) {
    for (Eigen::Index r = 0; r < m; ++r)
      if (a(r, src) != 0) a(r, dst) = checked_sub_mul(a(r, dst), q, a(r, src));
    for (Eigen::Index r = 0; r < n; ++r)
      if (v(r, src) != 0) v(r, dst) = checked_sub_mul(v(r, dst), q, v(r, src));
  };
  auto swap_rows = [&](Eigen::Index r1, Eigen::Index r2) {
    if (r1 == r2) return;
    a.row(r1).swap(a.row(r2));
    if (rhs) rhs->row(r1).swap(rhs->row(r2));
  };
  auto swap_cols = [&](Eigen::Index c1, Eigen::Index c2) {
    if (c1 == c2) return;
    a.col(c1).swap(a.col(c2));
    v.col(c1).swap(v.col(c2));
  };

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::int64_t best = 0;
    Eigen::Index br = -1, bc = -1;
    for (Eigen::Index c = t; c < n; ++c)
      for (Eigen::Index r = t; r < m; ++r) {
        const std::int64_t x = std::llabs(a(r, c));
        if (x != 0 && (best == 0 || x < best)) {
          best = x;
          br = r;
          bc = c;
          if (best == 1) break;
        }
      }
    if (best == 0) break;
    swap_rows(t, br);
    swap_cols(t, bc);

    for (;;) {
      bool clean = true;
      for (Eigen::Index r = t + 1; r < m; ++r)
        if (a(r, t) != 0) row_op(r, t, floor_div(a(r, t), a(t, t)));
      for (Eigen::Index c = t + 1; c < n; ++c)
        if (a(t, c) != 0) col_op(c, t, floor_div(a(t, c), a(t, t)));
      // Remainders smaller than the pivot take its place.
      std::int64_t small = std::llabs(a(t, t));
      Eigen::Index sr = -1, sc = -1;
      for (Eigen::Index r = t + 1; r < m; ++r)
        if (a(r, t) != 0 && std::llabs(a(r, t)) < small) {
          small = std::llabs(a(r, t));
          sr = r;
          sc = -1;
        }
      for (Eigen::Index c = t + 1; c < n; ++c)
        if (a(t, c) != 0 && std::llabs(a(t, c)) < small) {
          small = std::llabs(a(t, c));
          sc = c;
          sr = -1;
        }
      if (sr >= 0) {
        swap_rows(t, sr);
        clean = false;
      } else if (sc >= 0) {
        swap_cols(t, sc);
        clean = false;
      }
      if (clean) break;
    }
    out.diagonal.push_back(a(t, t));
  }
  return out;
}

std::optional<QZVector> solve_mod_one(const IntMatrix& a, const std::vector<std::int64_t>& b,
                                      std::int64_t n, std::int64_t max_denominator) {
  if (static_cast<Eigen::Index>(b.size()) != a.rows())
    throw StructuralError("right-hand side length does not match the system");
  IntMatrix rhs(a.rows(), 1);
  for (Eigen::Index r = 0; r < a.rows(); ++r) rhs(r, 0) = mod(b[r], n);
  SmithReduction red = smith_diagonalize(a, &rhs, n);
  const std::size_t rank = red.diagonal.size();

  for (Eigen::Index r = static_cast<Eigen::Index>(rank); r < a.rows(); ++r)
    if (rhs(r, 0) != 0) return std::nullopt;

  // y_k = c_k / (n d_k) in Q/Z; common denominator n * lcm(d_k).
  std::int64_t l = 1;
  for (std::int64_t d : red.diagonal) {
    l = std::lcm(l, std::llabs(d));
    if (l > max_denominator) throw ResourceError("root-of-unity order exceeds 10^6");
  }
  std::int64_t den = 0;
  if (__builtin_mul_overflow(n, l, &den) || den > max_denominator)
    throw ResourceError("root-of-unity order exceeds 10^6");

  std::vector<std::int64_t> y(a.cols(), 0);
  for (std::size_t k = 0; k < rank; ++k) {
    const std::int64_t d = red.diagonal[k];
    const std::int64_t scale = l / std::llabs(d);
    std::int64_t num = mod(rhs(static_cast<Eigen::Index>(k), 0) * scale, den);
    if (d < 0) num = mod(-num, den);
    y[k] = num;
  }
  QZVector out;
  out.denominator = den;
  out.numerators.assign(a.cols(), 0);
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    __int128 acc = 0;
    for (std::size_t k = 0; k < rank; ++k)
      acc += static_cast<__int128>(red.column_transform(j, static_cast<Eigen::Index>(k)) % den) * y[k];
    std::int64_t r = static_cast<std::int64_t>(acc % den);
    out.numerators[j] = r < 0 ? r + den : r;
  }
  // Shrink the denominator while it stays a multiple of n.
  std::int64_t g = den / n;
  for (std::int64_t x : out.numerators) g = std::gcd(g, x);
  if (g > 1) {
    out.denominator /= g;
    for (auto& x : out.numerators) x /= g;
  }
  return out;
}

}  // namespace fgerbe
