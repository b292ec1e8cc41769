#include <doctest.h>

#include <random>

#include "qdiv/quadfield.hpp"

using namespace qdiv;

namespace {

QuadField gauss() { return QuadField(Int(-1)); }
QuadField root2() { return QuadField(Int(2)); }

QuadElem rand_elem(const QuadField& f, std::mt19937_64& rng) {
  auto r = [&] {
    Int n = static_cast<std::int64_t>(rng() % 19) - 9;
    Int d = static_cast<std::int64_t>(rng() % 6) + 1;
    return Rational(n, d);
  };
  return QuadElem(f, r(), r());
}

}  // namespace

TEST_CASE("field arithmetic examples") {
  QuadField qi = gauss();
  CHECK(QuadElem(qi, 1, 1) * QuadElem(qi, 1, -1) == QuadElem(qi, 2, 0));
  CHECK(QuadElem(qi, 1, 0).inv() == QuadElem(qi, 1, 0));
  QuadField q2 = root2();
  CHECK(QuadElem::sqrt_z(q2) * QuadElem::sqrt_z(q2) == QuadElem(q2, 2, 0));
}

TEST_CASE("mixed fields and zero inversion are rejected") {
  CHECK_THROWS_AS(QuadElem::one(gauss()) + QuadElem::one(root2()),
                  std::invalid_argument);
  CHECK_THROWS_AS(QuadElem::one(gauss()) * QuadElem::sqrt_z(root2()),
                  std::invalid_argument);
  CHECK_THROWS_AS(QuadElem::zero(gauss()).inv(), std::domain_error);
}

TEST_CASE("conjugation") {
  QuadField qi = gauss();
  CHECK(QuadElem(qi, 3, 5).conjugate() == QuadElem(qi, 3, -5));
  CHECK(QuadElem(qi, 7, 0).conjugate() == QuadElem(qi, 7, 0));
  QuadElem x(qi, 2, -9);
  CHECK(x.conjugate().conjugate() == x);
}

TEST_CASE("norm values") {
  CHECK(QuadElem(gauss(), 3, 4).norm() == 25);
  CHECK(QuadElem(root2(), 3, 1).norm() == 7);
  CHECK(QuadElem::zero(gauss()).norm() == 0);
}

TEST_CASE("norm multiplicative, zero only at zero; conjugation is a ring map") {
  std::mt19937_64 rng(23);
  for (const Int& z : {Int(-1), Int(2), Int(-6), Int(15)}) {
    QuadField f(z);
    for (int i = 0; i < 60; ++i) {
      QuadElem x = rand_elem(f, rng), y = rand_elem(f, rng);
      CHECK((x * y).norm() == x.norm() * y.norm());
      CHECK((x.norm() == 0) == x.is_zero());
      CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
      CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
      if (!x.is_zero()) CHECK(x * x.inv() == QuadElem::one(f));
      if (!y.is_zero()) CHECK((x / y) * y == x);
    }
  }
}

TEST_CASE("square_class_in_ell") {
  CHECK(square_class_in_ell(Rational(1, 2), root2()) == SquareClass::ZClass);
  CHECK(square_class_in_ell(Rational(9), gauss()) ==
        SquareClass::TrivialClass);
  CHECK(square_class_in_ell(Rational(2, 3), gauss()) ==
        SquareClass::NonSquare);
  CHECK(square_class_in_ell(Rational(-4), gauss()) == SquareClass::ZClass);
  CHECK_THROWS_AS(square_class_in_ell(Rational(0), gauss()),
                  std::invalid_argument);
}

TEST_CASE("sqrt_in_ell") {
  auto a = sqrt_in_ell(Rational(1, 2), root2());
  REQUIRE(a.has_value());
  CHECK(*a == QuadElem(root2(), 0, Rational(1, 2)));

  auto b = sqrt_in_ell(Rational(9), gauss());
  REQUIRE(b.has_value());
  CHECK(*b == QuadElem(gauss(), 3, 0));

  CHECK_FALSE(sqrt_in_ell(Rational(3), gauss()).has_value());

  std::mt19937_64 rng(29);
  for (const Int& z : {Int(-1), Int(2), Int(-5), Int(30)}) {
    QuadField f(z);
    for (int i = 0; i < 60; ++i) {
      Int n = static_cast<std::int64_t>(rng() % 40) - 20;
      Int d = static_cast<std::int64_t>(rng() % 9) + 1;
      if (n == 0) continue;
      Rational q(n, d);
      if (auto x = sqrt_in_ell(q, f)) CHECK(*x * *x == QuadElem(f, q, 0));
    }
  }
}

TEST_CASE("rendering a+b*sqrt(z)") {
  CHECK(QuadElem(gauss(), Rational(1, 2), Rational(-3, 4)).to_string() ==
        "1/2-3/4√-1");
  CHECK(QuadElem(root2(), 0, 1).to_string() == "√2");
  CHECK(QuadElem(root2(), 5, 0).to_string() == "5");
  CHECK(QuadElem(root2(), 0, -1).to_string() == "-√2");
  CHECK(QuadElem(root2(), 2, 3).to_string() == "2+3√2");
  CHECK(QuadElem::zero(root2()).to_string() == "0");
}
