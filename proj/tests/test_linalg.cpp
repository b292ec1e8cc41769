#include <doctest.h>

#include <random>

#include "qdiv/linalg.hpp"

using namespace qdiv;
using namespace qdiv::linalg;

TEST_CASE("det on small matrices") {
  Mat m = {{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  CHECK(det(m) == -2);
  Mat id = identity(4);
  CHECK(det(id) == 1);
  Mat sing = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(det(sing) == 0);
  Mat three = {{Rational(0), Rational(1), Rational(2)},
               {Rational(1), Rational(0), Rational(3)},
               {Rational(4), Rational(-3), Rational(8)}};
  CHECK(det(three) == -2);  // needs a row swap
}

TEST_CASE("rref rank") {
  Mat m = {{Rational(1), Rational(2), Rational(3)},
           {Rational(2), Rational(4), Rational(6)},
           {Rational(1), Rational(1), Rational(1)}};
  CHECK(rref(m) == 2);
}

TEST_CASE("nullspace basis annihilates the matrix") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t rows = 2 + rng() % 5, cols = 2 + rng() % 4;
    Mat m = zeros(rows, cols);
    for (auto& row : m)
      for (auto& e : row)
        e = Rational(Int(static_cast<std::int64_t>(rng() % 7) - 3));
    Mat copy = m;
    auto rank = rref(copy);
    auto basis = nullspace(m);
    CHECK(basis.size() == cols - rank);
    for (const auto& v : basis)
      for (const auto& r : qdiv::linalg::apply(m, v)) CHECK(r == 0);
  }
}

TEST_CASE("nullspace of a known system") {
  // x + y = 0 stacked twice: kernel is spanned by (1, -1) ... with leading
  // coordinate normalized by the free column.
  Mat m = {{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == -1);
  CHECK(basis[0][1] == 1);
}

TEST_CASE("mul and apply shapes") {
  Mat a = {{Rational(1), Rational(2)}};
  Mat b = {{Rational(3)}, {Rational(4)}};
  CHECK(mul(a, b)[0][0] == 11);
  CHECK_THROWS_AS(mul(a, a), std::invalid_argument);
  CHECK_THROWS_AS(det(a), std::invalid_argument);
}
