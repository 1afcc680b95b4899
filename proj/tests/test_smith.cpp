#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "doctest.h"

#include "fgerbe/errors.hpp"
#include "fgerbe/smith.hpp"

using namespace fgerbe;

TEST_CASE("diagonal of a small matrix") {
  IntMatrix a(2, 2);
  a << 2, 4, 6, 8;
  const SmithReduction r = smith_diagonalize(a);
  REQUIRE(r.diagonal.size() == 2);
  CHECK(std::abs(r.diagonal[0] * r.diagonal[1]) == 8);
  CHECK(std::abs(r.column_transform.cast<double>().determinant()) == doctest::Approx(1.0));
}

TEST_CASE("rank of a rank-deficient matrix") {
  IntMatrix a(3, 3);
  a << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  CHECK(smith_diagonalize(a).diagonal.size() == 2);
}

TEST_CASE("solve over Q/Z needs a finer denominator") {
  // 2 x = 1/2 has solution x = 1/4.
  IntMatrix a(1, 1);
  a << 2;
  const auto x = solve_mod_one(a, {1}, 2);
  REQUIRE(x);
  // 2 x - 1/2 is an integer.
  CHECK((4 * x->numerators[0] - x->denominator) % (2 * x->denominator) == 0);
  CHECK(x->denominator % 4 == 0);
}

TEST_CASE("inconsistent systems have no solution") {
  // x = 1/2 and x = 0.
  IntMatrix a(2, 1);
  a << 1, 1;
  CHECK_FALSE(solve_mod_one(a, {1, 0}, 2));
}

TEST_CASE("random systems: solutions re-substitute exactly") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int t = 0; t < 50; ++t) {
    const int rows = 2 + t % 4, cols = 1 + t % 3, n = 6;
    IntMatrix a(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) a(r, c) = entry(rng);
    // b = A y for a random y over 1/n, so a solution exists.
    std::vector<std::int64_t> y(cols), b(rows, 0);
    for (auto& v : y) v = rng() % n;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) b[r] += a(r, c) * y[c];
      b[r] = ((b[r] % n) + n) % n;
    }
    const auto x = solve_mod_one(a, b, n);
    REQUIRE(x);
    const std::int64_t d = x->denominator;
    CHECK(d % n == 0);
    for (int r = 0; r < rows; ++r) {
      std::int64_t lhs = 0;
      for (int c = 0; c < cols; ++c) lhs += a(r, c) * x->numerators[c];
      CHECK(((lhs - b[r] * (d / n)) % d + d) % d == 0);
    }
  }
}

TEST_CASE("denominator guard") {
  IntMatrix a(1, 1);
  a << 1000;
  CHECK_THROWS_AS(solve_mod_one(a, {1}, 2000, 1000), ResourceError);
}
