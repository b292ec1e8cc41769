#pragma once

// Generators for the classification data attached to l = Q(sqrt(z)): the
// transversal S(l) of the punctured square-class group of l, the exhaustive
// candidate list Z \ n(l*) for the punctured norm-class group together with
// a greedy reduction pass, the exact transversal T(Q(i)), and the admissible
// families Ptilde(l), P1(Q(i)), P2(Q(i)) and their union F(Q(i)).
//
// All streams enumerate square-free integers in the canonical order
// -1, 2, -2, 3, -3, 5, -5, ... (absolute value ascending, positive first).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdiv/algebra.hpp"

namespace qdiv {

// Lazy ordered stream over the square-free integers != 1 satisfying a
// membership predicate. Single consumer.
class SquareFreeStream {
 public:
  using Pred = std::function<bool(const Int&)>;

  SquareFreeStream(std::string rule, Pred pred)
      : rule_(std::move(rule)), pred_(std::move(pred)) {}

  Int next();
  std::vector<Int> take(std::size_t n);
  // Every member with |value| <= cap, in order. Unlike take(), this cannot
  // run away when the tail of the stream is sparse.
  std::vector<Int> take_abs_le(const Int& cap);

  const std::string& rule() const { return rule_; }

 private:
  Int advance_base();  // next square-free candidate in canonical order
  std::string rule_;
  Pred pred_;
  Int abs_ = 1;
  bool at_negative_ = false;
};

// Prop-style transversal of (Q*/(Q* ∩ l_sq))°: for z = -1 the negative
// square-free integers except -1; otherwise the square-free w with
// gcd(z, w)^2 < |z|.
SquareFreeStream gen_S(const SquareFreeInt& z);

// Norm-group membership: w is a norm of Q(sqrt(z)) iff z, w are not both
// negative, z is a square mod w/d, w is a square mod z/d and -zw/d^2 is a
// square mod d, where d = gcd(z, w) > 0.
bool in_norm_group(const SquareFreeInt& z, const SquareFreeInt& w);

// Independent oracle for the same membership via a bounded search for
// (a, b, s) with w s^2 = a^2 - z b^2; returns (a/s, b/s) on success.
std::optional<std::pair<Rational, Rational>> norm_representation_search(
    const SquareFreeInt& z, const SquareFreeInt& w, std::int64_t bound);

// Third route: Legendre solvability of d a^2 - (w/d) b^2 - (z/d) c^2 = 0,
// decided by the generic ternary-form criterion. Agrees with in_norm_group.
bool in_norm_group_via_ternary(const SquareFreeInt& z, const SquareFreeInt& w);

// Square-free w outside the norm group; exhausts the punctured norm-class
// group but may repeat classes.
SquareFreeStream gen_skew_candidates(const SquareFreeInt& z);

// One greedy pass: keep a candidate iff its class differs from every kept
// predecessor, testing w w'/gcd(w, w')^2 for norm-group membership. Earlier
// elements win. Requires every input to lie outside the norm group.
std::vector<Int> reduce_redundant(const SquareFreeInt& z,
                                  const std::vector<Int>& candidates);

// Exact transversal for l = Q(i): square-free integers all of whose prime
// divisors are congruent to 3 mod 4 (so -1 qualifies vacuously).
SquareFreeStream gen_T_gaussian();

struct FamilyPoint {
  Triple c;
  std::string family;  // "Ptilde" | "P1" | "P2"
  std::vector<std::pair<std::string, Rational>> params;
};

// Ptilde(l): (r, s, 1/2) with r < 1/2 for z > 0, (r, s, s-1) with r > 1/2
// for z < 0, s running over the negative members of S(l). Every emitted
// point passes certify_sign_definite. An r sample violating its inequality
// throws.
std::vector<FamilyPoint> gen_Ptilde(const SquareFreeInt& z,
                                    const std::vector<Rational>& r_samples,
                                    std::size_t limit);

std::vector<Rational> default_r_samples(const SquareFreeInt& z);

// P1(Q(i)) point ((1-q)/2, 0, -1); validates q > 0 and q not a sum of two
// rational squares.
FamilyPoint p1_point(const Rational& q);

// P2(Q(i)) point (1, n, 0); validates n negative square-free with a prime
// divisor congruent to 3 mod 4.
FamilyPoint p2_point(const Int& n);

// Default q samples for P1: square-free integers with a prime divisor
// congruent to 3 mod 4, seeded with a couple of small non-integral values;
// each is validated before use.
std::vector<Rational> default_q_samples(std::size_t n);
std::vector<Int> default_p2_samples(std::size_t n);

// F(Q(i)) = Ptilde(Q(i)) ∪ P1(Q(i)) ∪ P2(Q(i)) with default parameter
// samples, limit_per_family points from each part, tagged by family.
std::vector<FamilyPoint> gen_F_gaussian(std::size_t limit_per_family);

}  // namespace qdiv
