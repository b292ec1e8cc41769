#include "qdiv/classification.hpp"

#include <cmath>

namespace qdiv {

namespace mp = boost::multiprecision;

Int SquareFreeStream::advance_base() {
  // Canonical order: -1, 2, -2, 3, -3, 5, -5, ... (+1 is not in Z).
  while (true) {
    if (abs_ == 1) {
      abs_ = 2;
      at_negative_ = false;
      return Int(-1);
    }
    if (!at_negative_) {
      if (!is_squarefree(abs_)) {
        ++abs_;
        continue;
      }
      at_negative_ = true;
      return abs_;
    }
    at_negative_ = false;
    Int v = -abs_;
    ++abs_;
    return v;
  }
}

Int SquareFreeStream::next() {
  while (true) {
    Int v = advance_base();
    if (pred_(v)) return v;
  }
}

std::vector<Int> SquareFreeStream::take(std::size_t n) {
  std::vector<Int> out;
  out.reserve(n);
  while (out.size() < n) out.push_back(next());
  return out;
}

std::vector<Int> SquareFreeStream::take_abs_le(const Int& cap) {
  std::vector<Int> out;
  while (true) {
    Int v = advance_base();
    if (mp::abs(v) > cap) break;
    if (pred_(v)) out.push_back(v);
  }
  return out;
}

SquareFreeStream gen_S(const SquareFreeInt& z) {
  Int zv = z.value();
  if (zv == -1) {
    return SquareFreeStream(
        "S", [](const Int& w) { return w < 0 && w != -1; });
  }
  Int az = mp::abs(zv);
  return SquareFreeStream("S", [zv, az](const Int& w) {
    Int d = mp::gcd(zv, w);
    return d * d < az;
  });
}

bool in_norm_group(const SquareFreeInt& z, const SquareFreeInt& w) {
  const Int& zv = z.value();
  const Int& wv = w.value();
  if (zv < 0 && wv < 0) return false;
  Int d = mp::gcd(zv, wv);  // positive
  return is_square_mod(zv, wv / d) && is_square_mod(wv, zv / d) &&
         is_square_mod(-(zv / d) * (wv / d), d);
}

std::optional<std::pair<Rational, Rational>> norm_representation_search(
    const SquareFreeInt& z, const SquareFreeInt& w, std::int64_t bound) {
  if (bound < 1)
    throw std::invalid_argument("norm_representation_search: bound < 1");
  const Int& zv = z.value();
  const Int& wv = w.value();
  // w s^2 = a^2 - z b^2 with 1 <= s <= bound, 0 <= a, b <= bound; signs of
  // a and b are irrelevant since only squares appear.
  for (std::int64_t s = 1; s <= bound; ++s) {
    Int ws2 = wv * s * s;
    for (std::int64_t b = 0; b <= bound; ++b) {
      Int t = ws2 + zv * b * b;
      if (t < 0) continue;
      Int a = mp::sqrt(t);
      if (a * a != t || a > bound) continue;
      return std::make_pair(Rational(a, Int(s)), Rational(Int(b), Int(s)));
    }
  }
  return std::nullopt;
}

bool in_norm_group_via_ternary(const SquareFreeInt& z, const SquareFreeInt& w) {
  const Int& zv = z.value();
  const Int& wv = w.value();
  Int d = mp::gcd(zv, wv);
  return ternary_form_solvable(d, -(wv / d), -(zv / d));
}

SquareFreeStream gen_skew_candidates(const SquareFreeInt& z) {
  return SquareFreeStream("skew_candidates", [z](const Int& w) {
    return !in_norm_group(z, SquareFreeInt(w));
  });
}

std::vector<Int> reduce_redundant(const SquareFreeInt& z,
                                  const std::vector<Int>& candidates) {
  for (const Int& w : candidates)
    if (in_norm_group(z, SquareFreeInt(w)))
      throw std::invalid_argument("reduce_redundant: " + w.str() +
                                  " lies in the norm group");
  std::vector<Int> kept;
  for (const Int& w : candidates) {
    bool fresh = true;
    for (const Int& prev : kept) {
      Int d = mp::gcd(w, prev);
      Int cls = (w * prev) / (d * d);  // square-free
      if (cls == 1 || in_norm_group(z, SquareFreeInt(cls))) {
        fresh = false;
        break;
      }
    }
    if (fresh) kept.push_back(w);
  }
  return kept;
}

SquareFreeStream gen_T_gaussian() {
  return SquareFreeStream("T", [](const Int& t) {
    auto f = factor(t);
    for (const auto& [p, e] : f.prime_powers)
      if (p % 4 != 3) return false;
    return true;
  });
}

static bool has_p3_divisor(const Int& n) {
  auto f = factor(n);
  for (const auto& [p, e] : f.prime_powers)
    if (p % 4 == 3) return true;
  return false;
}

std::vector<FamilyPoint> gen_Ptilde(const SquareFreeInt& z,
                                    const std::vector<Rational>& r_samples,
                                    std::size_t limit) {
  const bool zpos = z.value() > 0;
  Rational half(1, 2);
  for (const Rational& r : r_samples) {
    if (zpos && !(r < half))
      throw std::invalid_argument("gen_Ptilde: r = " + to_string(r) +
                                  " needs r < 1/2 for z > 0");
    if (!zpos && !(r > half))
      throw std::invalid_argument("gen_Ptilde: r = " + to_string(r) +
                                  " needs r > 1/2 for z < 0");
  }
  std::vector<FamilyPoint> out;
  auto s_stream = gen_S(z);
  while (out.size() < limit) {
    Int s = s_stream.next();
    if (s >= 0) continue;
    for (const Rational& r : r_samples) {
      Triple c = zpos ? Triple{r, Rational(s), half}
                      : Triple{r, Rational(s), Rational(s) - 1};
      out.push_back({c, "Ptilde", {{"r", r}, {"s", Rational(s)}}});
      if (out.size() == limit) break;
    }
  }
  return out;
}

std::vector<Rational> default_r_samples(const SquareFreeInt& z) {
  if (z.value() > 0)
    return {Rational(0), Rational(-1), Rational(1, 4), Rational(-2),
            Rational(2, 5)};
  return {Rational(1), Rational(3, 2), Rational(2), Rational(5, 2),
          Rational(3)};
}

FamilyPoint p1_point(const Rational& q) {
  if (q <= 0 || in_Q2(q))
    throw std::invalid_argument("p1_point: q = " + to_string(q) +
                                " is not in Q_{>0} \\ Q2");
  Triple c{(Rational(1) - q) / 2, Rational(0), Rational(-1)};
  return {c, "P1", {{"q", q}}};
}

FamilyPoint p2_point(const Int& n) {
  if (n >= 0 || !is_squarefree(n) || !has_p3_divisor(n))
    throw std::invalid_argument(
        "p2_point: n = " + n.str() +
        " is not a negative square-free integer with a prime divisor = 3 mod 4");
  Triple c{Rational(1), Rational(n), Rational(0)};
  return {c, "P2", {{"n", Rational(n)}}};
}

std::vector<Rational> default_q_samples(std::size_t n) {
  // A couple of small non-integral representatives first, then the positive
  // square-free integers with a prime divisor = 3 mod 4.
  std::vector<Rational> out;
  for (const Rational& q : {Rational(3), Rational(6), Rational(7),
                            Rational(2, 3)}) {
    if (out.size() == n) return out;
    if (!in_Q2(q)) out.push_back(q);
  }
  SquareFreeStream qs("P1_q", [](const Int& v) {
    return v > 10 && has_p3_divisor(v);
  });
  while (out.size() < n) {
    Rational q(qs.next());
    if (!in_Q2(q)) out.push_back(q);
  }
  return out;
}

std::vector<Int> default_p2_samples(std::size_t n) {
  SquareFreeStream ns("P2_n",
                      [](const Int& v) { return v < 0 && has_p3_divisor(v); });
  return ns.take(n);
}

std::vector<FamilyPoint> gen_F_gaussian(std::size_t limit_per_family) {
  SquareFreeInt qi(Int(-1));
  std::vector<FamilyPoint> out =
      gen_Ptilde(qi, default_r_samples(qi), limit_per_family);
  for (const Rational& q : default_q_samples(limit_per_family))
    out.push_back(p1_point(q));
  for (const Int& m : default_p2_samples(limit_per_family))
    out.push_back(p2_point(m));
  return out;
}

}  // namespace qdiv
