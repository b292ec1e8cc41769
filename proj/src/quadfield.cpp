#include "qdiv/quadfield.hpp"

namespace qdiv {

void QuadElem::check_fields(const QuadElem& x, const QuadElem& y) {
  if (x.f_ != y.f_)
    throw std::invalid_argument("QuadElem: mixed fields Q(sqrt(" +
                                x.z().str() + ")) and Q(sqrt(" +
                                y.z().str() + "))");
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  QuadElem::check_fields(x, y);
  return {x.f_, x.a_ + y.a_, x.b_ + y.b_};
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
  QuadElem::check_fields(x, y);
  return {x.f_, x.a_ - y.a_, x.b_ - y.b_};
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  QuadElem::check_fields(x, y);
  Rational z(x.z());
  return {x.f_, x.a_ * y.a_ + z * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
}

QuadElem QuadElem::inv() const {
  if (is_zero()) throw std::domain_error("QuadElem: inversion of zero");
  Rational n = norm();  // nonzero: z is not a rational square
  return {f_, a_ / n, -b_ / n};
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) {
  return x * y.inv();
}

std::string QuadElem::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (a_ != 0) s += qdiv::to_string(a_);
  if (b_ != 0) {
    std::string root = "√" + z().str();
    if (b_ == 1) {
      s += s.empty() ? root : "+" + root;
    } else if (b_ == -1) {
      s += "-" + root;
    } else {
      std::string coeff = qdiv::to_string(b_);
      if (!s.empty() && b_ > 0) s += "+";
      s += coeff + root;
    }
  }
  return s;
}

SquareClass square_class_in_ell(const Rational& q, const QuadField& l) {
  if (q == 0) throw std::invalid_argument("square_class_in_ell: q = 0");
  Int s = squarefree_class(q);
  if (s == 1) return SquareClass::TrivialClass;
  if (s == l.z.value()) return SquareClass::ZClass;
  return SquareClass::NonSquare;
}

std::optional<QuadElem> sqrt_in_ell(const Rational& q, const QuadField& l) {
  if (q == 0) return QuadElem::zero(l);
  switch (square_class_in_ell(q, l)) {
    case SquareClass::TrivialClass:
      return QuadElem(l, *rational_sqrt(q), 0);
    case SquareClass::ZClass:
      // q = z t^2, so (t sqrt(z))^2 = q.
      return QuadElem(l, 0, *rational_sqrt(q / Rational(l.z.value())));
    case SquareClass::NonSquare:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace qdiv
