#pragma once

// Deciding A(l, c) ≅ A(l, d): the two algebras are isomorphic iff there is
// x in l* with c = (d1, x^2 d2, n(x) d3). Since x^2 must be rational
// whenever d2 != 0, either x is rational (n(x) = x^2) or x is a rational
// multiple of sqrt(z) (n(x) = -x^2); when d2 = 0 only n(x) is constrained
// and the full norm group comes into play. This yields an exact case split
// on (d2, d3) with no search in the decision path.

#include <optional>

#include <json.hpp>

#include "qdiv/classification.hpp"

namespace qdiv {

struct IsoVerdict {
  bool isomorphic = false;
  // When present, satisfies c = (d1, x^2 d2, n(x) d3) exactly. The norm-case
  // witness comes from a bounded representation search and may be absent
  // even for a positive verdict.
  std::optional<QuadElem> witness;

  nlohmann::ordered_json to_json() const;
};

IsoVerdict are_isomorphic(const QuadField& l, const Triple& c,
                          const Triple& d);

// (d1, x^2 d2, n(x) d3). Throws for x = 0, and for x with irrational square
// when d2 != 0 (the image would leave Q^3).
Triple apply_witness(const Triple& d, const QuadElem& x);

}  // namespace qdiv
