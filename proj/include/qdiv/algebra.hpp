#pragma once

// The four-dimensional algebras A(l, c): for c = (c1, c2, c3) in Q^3 the
// underlying space is l^2 and the product of column vectors u, v is
//
//     u v = M_c(u) v,   M_c(x, y) = | x   c2*y + c3*conj(y)        |
//                                   | y   (1-c1)*x + c1*conj(x)    |
//
// with the matrix product taken over l. The fixed Q-basis used everywhere is
// e1 = (1,0), e2 = (sqrt(z),0), e3 = (0,1), e4 = (0,sqrt(z)); e1 is always a
// two-sided unit because M_c(1, 0) is the identity matrix.

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdiv/linalg.hpp"
#include "qdiv/quadfield.hpp"

namespace qdiv {

struct Triple {
  Rational c1, c2, c3;

  friend bool operator==(const Triple& a, const Triple& b) {
    return a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3;
  }
  friend bool operator!=(const Triple& a, const Triple& b) {
    return !(a == b);
  }
  std::string to_string() const;
};

// "c1,c2,c3" with exact rational components.
Triple parse_triple(const std::string& s);

struct AlgebraSpec {
  QuadField field;
  Triple c;

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.field == b.field && a.c == b.c;
  }
  friend bool operator!=(const AlgebraSpec& a, const AlgebraSpec& b) {
    return !(a == b);
  }
};

struct AlgebraElement {
  QuadElem x, y;  // the column (x, y) in l^2
  AlgebraSpec spec;

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  friend bool operator==(const AlgebraElement& u, const AlgebraElement& v) {
    return u.spec == v.spec && u.x == v.x && u.y == v.y;
  }
  std::string to_string() const {
    return "(" + x.to_string() + ", " + y.to_string() + ")";
  }
};

AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v);

AlgebraElement basis_element(const AlgebraSpec& spec, int k);  // k in 0..3
std::array<Rational, 4> coords(const AlgebraElement& u);
AlgebraElement from_coords(const AlgebraSpec& spec,
                           const std::array<Rational, 4>& v);

struct StructureConstants {
  // t[i][j][k] = coefficient of e_{k+1} in e_{i+1} e_{j+1}.
  std::array<std::array<std::array<Rational, 4>, 4>, 4> t;

  const Rational& at(int i, int j, int k) const { return t[i][j][k]; }
};

StructureConstants structure_constants(const AlgebraSpec& spec);

// 4x4x4 array of exact rational strings "p/q".
nlohmann::ordered_json structure_constants_json(const AlgebraSpec& spec);

// Matrix of v -> u v (resp. v -> v u) in the fixed basis.
linalg::Mat left_mult_matrix(const AlgebraSpec& spec, const AlgebraElement& u);
linalg::Mat right_mult_matrix(const AlgebraSpec& spec,
                              const AlgebraElement& u);

Rational left_mult_det(const AlgebraSpec& spec, const AlgebraElement& u);

// Basis of {n : (ab)n = a(bn) for all a, b}, solved exactly over Q from the
// 16 basis-pair constraints (a 64x4 homogeneous system). Always contains the
// copy {(x, 0)} of l, so the dimension is at least 2.
std::vector<AlgebraElement> right_nucleus_basis(const AlgebraSpec& spec);

// Basis of the commutant {x : xa = ax for all a}.
std::vector<AlgebraElement> center_basis(const AlgebraSpec& spec);

bool is_associative(const AlgebraSpec& spec);
bool is_commutative(const AlgebraSpec& spec);

enum class TripleClass { FieldK, SkewS, NonAssocN };

// Syntactic test: FieldK iff c1 = c3 = 0, SkewS iff (c1, c2) = (1, 0),
// NonAssocN otherwise. Meaningful only for admissible triples; for
// inadmissible c the answer carries no structural information.
TripleClass classify_triple(const AlgebraSpec& spec);

std::string to_string(TripleClass cls);

// phi is a 4x4 rational matrix in the fixed basis; true iff it is
// invertible, fixes e1 and satisfies phi(a)phi(b) = phi(ab) on basis pairs.
bool is_algebra_automorphism(const AlgebraSpec& spec, const linalg::Mat& phi);

// The four maps (x,y) -> (±-conjugated variants): identity, (x,-y),
// (conj x, conj y), (conj x, -conj y), as matrices. They form a Klein four
// group under composition whenever all four are automorphisms.
std::array<linalg::Mat, 4> klein_candidate_maps();

}  // namespace qdiv
