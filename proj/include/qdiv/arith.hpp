#pragma once

// Exact integer and rational arithmetic plus the elementary number theory
// used by the classification criteria: factorization, p-adic valuations,
// square-free decompositions, quadratic residues, sums of two squares and
// Legendre's solvability criterion for ternary diagonal forms.
//
// All functions are pure and exact; nothing here ever touches floating point.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace qdiv {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

std::string to_string(const Int& n);
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; the result is canonical (lowest terms, q > 0).
Rational parse_rational(const std::string& s);
Int parse_int(const std::string& s);

// Deterministic Miller-Rabin for |n| < 3.3e24, which covers everything at
// the scales this library is meant for.
bool is_prime(const Int& n);

/// Exact prime factorization of a nonzero integer.
struct Factorization {
  int sign = 1;                          // +1 or -1
  std::map<Int, unsigned> prime_powers;  // prime -> exponent, ascending

  Int value() const;
};

// Trial division up to 10^6 with a Pollard-Brent fallback. Throws on n = 0.
Factorization factor(Int n);

// p-adic valuation m_p(n), with m_p(0) = infinity as a distinguished state.
class Valuation {
 public:
  static Valuation finite(std::uint64_t k) { return Valuation(k); }
  static Valuation infinity() { return Valuation(); }

  bool is_infinity() const { return !finite_; }
  std::uint64_t value() const {
    if (!finite_) throw std::logic_error("valuation: infinite");
    return k_;
  }
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.k_ == b.k_);
  }

 private:
  Valuation() : finite_(false), k_(0) {}
  explicit Valuation(std::uint64_t k) : finite_(true), k_(k) {}
  bool finite_;
  std::uint64_t k_;
};

// Throws unless p is prime.
Valuation valuation(const Int& p, const Int& n);

bool is_squarefree(const Int& n);  // n must be nonzero

// A square-free integer different from 0 and 1; these name the quadratic
// fields Q(sqrt(z)) and index every classification routine.
class SquareFreeInt {
 public:
  explicit SquareFreeInt(Int v);
  static std::optional<SquareFreeInt> try_make(const Int& v);

  const Int& value() const { return v_; }
  friend bool operator==(const SquareFreeInt& a, const SquareFreeInt& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const SquareFreeInt& a, const SquareFreeInt& b) {
    return a.v_ != b.v_;
  }

 private:
  Int v_;
};

// n = s * r^2 with s square-free (s may be +-1) and r > 0.
std::pair<Int, Int> squarefree_part(const Int& n);

// The unique square-free integer s with q/s a rational square; s = 1 exactly
// when q is itself a square. Throws on q = 0.
Int squarefree_class(const Rational& q);

bool is_rational_square(const Rational& q);  // 0 counts as a square
std::optional<Rational> rational_sqrt(const Rational& q);

// Standard Legendre symbol via Euler's criterion. Throws unless p is an odd
// prime.
int legendre_symbol(const Int& a, const Int& p);

// Solvability of x^2 = a (mod |n|) for square-free n. Equivalent, via CRT,
// to legendre_symbol(a, p) != -1 for every odd prime p | n; the prime 2
// imposes no condition. Throws if n is not square-free.
bool is_square_mod(const Int& a, const Int& n);

// Fermat: n >= 1 is a sum of two integer squares iff every prime p = 3
// (mod 4) divides n to an even power.
bool is_sum_two_squares_nat(const Int& n);

// q is a sum of two rational squares iff q > 0 and num(q)*den(q) is a sum of
// two integer squares. Throws on q = 0.
bool in_Q2(const Rational& q);

// Legendre's criterion for a*x^2 + b*y^2 + c*z^2 = 0 to have a nontrivial
// integer solution. Arbitrary nonzero coefficients are reduced to the
// square-free pairwise-coprime case first; a zero coefficient makes the form
// trivially isotropic.
bool ternary_form_solvable(Int a, Int b, Int c);

}  // namespace qdiv
