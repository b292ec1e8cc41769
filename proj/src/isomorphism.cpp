#include "qdiv/isomorphism.hpp"

namespace qdiv {

nlohmann::ordered_json IsoVerdict::to_json() const {
  nlohmann::ordered_json j;
  j["isomorphic"] = isomorphic;
  j["witness"] = witness ? nlohmann::ordered_json(witness->to_string())
                         : nlohmann::ordered_json(nullptr);
  return j;
}

Triple apply_witness(const Triple& d, const QuadElem& x) {
  if (x.is_zero()) throw std::invalid_argument("apply_witness: x = 0");
  Rational c2;
  if (d.c2 == 0) {
    c2 = 0;
  } else {
    if (!x.has_rational_square())
      throw std::invalid_argument(
          "apply_witness: x^2 is irrational and d2 != 0");
    // x = a or x = b*sqrt(z), so x^2 = a^2 + z b^2 with one term vanishing.
    Rational xsq =
        x.a() * x.a() + Rational(x.z()) * x.b() * x.b();
    c2 = xsq * d.c2;
  }
  return Triple{d.c1, c2, x.norm() * d.c3};
}

IsoVerdict are_isomorphic(const QuadField& l, const Triple& c,
                          const Triple& d) {
  IsoVerdict v;
  if (c.c1 != d.c1) return v;

  const bool d2z = d.c2 == 0, d3z = d.c3 == 0;
  if (!d2z && !d3z) {
    if (c.c2 == 0 || c.c3 == 0) return v;
    Rational r2 = c.c2 / d.c2, r3 = c.c3 / d.c3;
    if (r2 == r3 && is_rational_square(r2)) {
      v.isomorphic = true;
      v.witness = QuadElem(l, *rational_sqrt(r2), 0);
    } else if (r2 == -r3 &&
               square_class_in_ell(r2, l) == SquareClass::ZClass) {
      // x = b sqrt(z): x^2 = r2 and n(x) = -r2 = r3.
      v.isomorphic = true;
      v.witness = sqrt_in_ell(r2, l);
    }
    return v;
  }
  if (!d2z && d3z) {
    if (c.c3 != 0 || c.c2 == 0) return v;
    Rational r2 = c.c2 / d.c2;
    if (square_class_in_ell(r2, l) == SquareClass::NonSquare) return v;
    v.isomorphic = true;
    v.witness = sqrt_in_ell(r2, l);
    return v;
  }
  if (d2z && !d3z) {
    if (c.c2 != 0 || c.c3 == 0) return v;
    Rational q = c.c3 / d.c3;
    Int s = squarefree_class(q);
    if (s == 1) {
      v.isomorphic = true;
      v.witness = QuadElem(l, *rational_sqrt(q), 0);
      return v;
    }
    if (!in_norm_group(l.z, SquareFreeInt(s))) return v;
    v.isomorphic = true;
    // q = s t^2; any representation s = a^2 - z b^2 gives n(t(a + b√z)) = q.
    Rational t = *rational_sqrt(q / Rational(s));
    for (std::int64_t bound : {16, 64, 256, 1024, 4096}) {
      if (auto rep = norm_representation_search(l.z, SquareFreeInt(s), bound)) {
        v.witness = QuadElem(l, t * rep->first, t * rep->second);
        break;
      }
    }
    return v;
  }
  // d2 = d3 = 0: the orbit of d is just {d}.
  if (c.c2 == 0 && c.c3 == 0) {
    v.isomorphic = true;
    v.witness = QuadElem::one(l);
  }
  return v;
}

}  // namespace qdiv
