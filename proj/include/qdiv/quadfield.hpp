#pragma once

// Exact arithmetic in the quadratic field l = Q(sqrt(z)) for square-free
// z != 0, 1. Elements are pairs (a, b) standing for a + b*sqrt(z); they
// carry their field so that values from different fields can never be mixed
// silently.

#include <optional>
#include <string>

#include "qdiv/arith.hpp"

namespace qdiv {

struct QuadField {
  SquareFreeInt z;

  explicit QuadField(SquareFreeInt zz) : z(std::move(zz)) {}
  explicit QuadField(const Int& zz) : z(zz) {}

  friend bool operator==(const QuadField& a, const QuadField& b) {
    return a.z == b.z;
  }
  friend bool operator!=(const QuadField& a, const QuadField& b) {
    return !(a == b);
  }
};

class QuadElem {
 public:
  QuadElem(QuadField f, Rational a, Rational b)
      : f_(std::move(f)), a_(std::move(a)), b_(std::move(b)) {}

  static QuadElem zero(const QuadField& f) { return {f, 0, 0}; }
  static QuadElem one(const QuadField& f) { return {f, 1, 0}; }
  static QuadElem sqrt_z(const QuadField& f) { return {f, 0, 1}; }
  static QuadElem from_rational(const QuadField& f, const Rational& q) {
    return {f, q, 0};
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const QuadField& field() const { return f_; }
  const Int& z() const { return f_.z.value(); }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  // True when the square of the element is rational, i.e. it lies in
  // Q union Q*sqrt(z).
  bool has_rational_square() const { return a_ == 0 || b_ == 0; }

  QuadElem conjugate() const { return {f_, a_, -b_}; }
  Rational norm() const { return a_ * a_ - Rational(z()) * b_ * b_; }
  QuadElem inv() const;

  friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator/(const QuadElem& x, const QuadElem& y);
  QuadElem operator-() const { return {f_, -a_, -b_}; }

  friend QuadElem operator*(const Rational& c, const QuadElem& x) {
    return {x.f_, c * x.a_, c * x.b_};
  }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.f_ == y.f_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadElem& x, const QuadElem& y) {
    return !(x == y);
  }

  // Renders "a+b√z" with exact rationals, e.g. "1/2-3√-6".
  std::string to_string() const;

 private:
  static void check_fields(const QuadElem& x, const QuadElem& y);
  QuadField f_;
  Rational a_, b_;
};

enum class SquareClass { TrivialClass, ZClass, NonSquare };

// Position of a nonzero rational q in Q* modulo the rational squares of l:
// TrivialClass when q is a rational square, ZClass when q/z is, NonSquare
// otherwise. These three cases are exclusive because z is square-free != 1.
SquareClass square_class_in_ell(const Rational& q, const QuadField& l);

// A square root of q inside l when one exists: rational for TrivialClass,
// a rational multiple of sqrt(z) for ZClass.
std::optional<QuadElem> sqrt_in_ell(const Rational& q, const QuadField& l);

}  // namespace qdiv
