#pragma once

// Deciding whether c = (c1, c2, c3) is admissible for z, i.e. whether
// A(Q(sqrt(z)), c) is a division algebra. This holds exactly when the system
//
//     x1^2 + z(1-2c1) x2^2 - (c2+c3) y1^2 + z(c3-c2) y2^2 = 0
//     (1-c1) x1 x2 = c2 y1 y2
//
// has only the trivial rational solution; by homogeneity a nontrivial
// rational solution exists iff a primitive integral one does. Admissibility
// is certified by closed-form sufficient conditions and refuted by a bounded
// search for primitive integer solutions; when neither applies the verdict
// is an honest Unknown.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "qdiv/algebra.hpp"

namespace qdiv {

struct DivisionSystem {
  SquareFreeInt z;
  // Quadratic equation A x1^2 + B x2^2 + C y1^2 + D y2^2 = 0 and bilinear
  // equation E x1 x2 = F y1 y2.
  Rational A, B, C, D, E, F;
};

DivisionSystem system_of(const SquareFreeInt& z, const Triple& c);

// Exact values of (quadratic LHS, bilinear LHS - RHS) at an integer point.
std::pair<Rational, Rational> eval_system(const DivisionSystem& sys,
                                          const std::array<Int, 4>& q);

// Scans primitive integer quadruples (x1, x2, y1, y2) with max |coordinate|
// <= bound, in shells of increasing max-norm; within a shell, quadruples are
// ordered by the canonical per-coordinate key 0, 1, -1, 2, -2, ... read from
// y2 down to x1. Sign duplicates are canonicalized by requiring the first
// nonzero coordinate positive. Returns the first solution in that order.
std::optional<std::array<Int, 4>> search_nontrivial_solution(
    const DivisionSystem& sys, std::int64_t bound);

// All-coefficients-positive test: z > 0 needs c1 < 1/2, c2 < 0,
// c2 < c3 < -c2; z < 0 needs c1 > 1/2, c3 < 0, c3 < c2 < -c3. True implies
// the quadratic form above is definite, so c is admissible.
bool certify_sign_definite(const SquareFreeInt& z, const Triple& c);

// For integer c and a prime p = 3 (mod 4) dividing z: the congruences
// 1 - 2c1 = 1, c2 = -1, c3 = 0 (mod p) force a p-adic descent on any
// primitive solution, so c is admissible. Throws if p is not such a prime,
// p does not divide z, or c is not integral.
bool certify_mod_p(const SquareFreeInt& z, const Triple& c, const Int& p);

// Q(i) only: c = ((1-q)/2, 0, -1) with q > 0 not a sum of two rational
// squares.
bool certify_qi_p1(const Triple& c);

// Q(i) only: c = (1, n, 0) with n a negative square-free integer divisible
// by some prime p = 3 (mod 4).
bool certify_qi_p2(const Triple& c);

struct AdmissibilityVerdict {
  enum class Status { ProvenAdmissible, NotAdmissible, Unknown };

  Status status;
  std::string certificate;                  // set when proven
  std::optional<std::array<Int, 4>> witness;  // set when refuted; primitive
  std::int64_t bound = 0;                   // search bound that was used

  bool admissible_proven() const { return status == Status::ProvenAdmissible; }
  nlohmann::ordered_json to_json() const;
};

// Runs the certifiers applicable to (z, c) in a fixed order (sign_definite,
// then mod_p for each eligible prime ascending, then the two Q(i) families),
// falling back to the bounded search.
AdmissibilityVerdict decide_admissible(const SquareFreeInt& z, const Triple& c,
                                       std::int64_t bound);

}  // namespace qdiv
