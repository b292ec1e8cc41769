#include "qdiv/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

namespace qdiv {

namespace mp = boost::multiprecision;

DivisionSystem system_of(const SquareFreeInt& z, const Triple& c) {
  Rational zq(z.value());
  return DivisionSystem{
      z,
      Rational(1),
      zq * (Rational(1) - 2 * c.c1),
      -(c.c2 + c.c3),
      zq * (c.c3 - c.c2),
      Rational(1) - c.c1,
      c.c2,
  };
}

std::pair<Rational, Rational> eval_system(const DivisionSystem& sys,
                                          const std::array<Int, 4>& q) {
  Rational x1(q[0]), x2(q[1]), y1(q[2]), y2(q[3]);
  Rational quad = sys.A * x1 * x1 + sys.B * x2 * x2 + sys.C * y1 * y1 +
                  sys.D * y2 * y2;
  Rational bil = sys.E * x1 * x2 - sys.F * y1 * y2;
  return {quad, bil};
}

namespace {

using std::int64_t;

// Canonical coordinate key: 0, 1, -1, 2, -2, ... ascending.
inline int64_t coord_key(int64_t v) { return v > 0 ? 2 * v - 1 : -2 * v; }

struct Candidate {
  std::array<int64_t, 4> q;  // (x1, x2, y1, y2)
  std::array<int64_t, 4> key() const {
    return {coord_key(q[3]), coord_key(q[2]), coord_key(q[1]),
            coord_key(q[0])};
  }
};

inline bool candidate_less(const Candidate& a, const Candidate& b) {
  return a.key() < b.key();
}

inline int64_t gcd4(int64_t a, int64_t b, int64_t c, int64_t d) {
  return std::gcd(std::gcd(std::llabs(a), std::llabs(b)),
                  std::gcd(std::llabs(c), std::llabs(d)));
}

inline bool first_nonzero_positive(const std::array<int64_t, 4>& q) {
  for (int64_t v : q)
    if (v != 0) return v > 0;
  return false;
}

inline std::optional<unsigned __int128> exact_isqrt(__int128 v) {
  if (v < 0) return std::nullopt;
  auto u = static_cast<unsigned __int128>(v);
  unsigned __int128 s;
  if (u <= static_cast<unsigned __int128>(UINT64_MAX)) {
    // Double estimate plus exact fixup in 128 bits (the squares can exceed
    // 64 bits near the top of the range).
    unsigned __int128 r = static_cast<std::uint64_t>(
        std::sqrt(static_cast<double>(static_cast<std::uint64_t>(u))));
    while (r > 0 && r * r > u) --r;
    while ((r + 1) * (r + 1) <= u) ++r;
    s = r;
  } else {
    // Newton descent from an upper seed built out of the top 64 bits:
    // sqrt(u) <= (sqrt(hi) + 2) * 2^32 when hi = u >> 64.
    auto hi = static_cast<std::uint64_t>(u >> 64);
    unsigned __int128 r =
        (static_cast<unsigned __int128>(
             std::sqrt(static_cast<double>(hi)) + 2))
        << 32;
    while (true) {
      unsigned __int128 nr = (r + u / r) >> 1;
      if (nr >= r) break;
      r = nr;
    }
    s = r;
  }
  if (s * s != u) return std::nullopt;
  return s;
}

inline std::optional<Int> exact_isqrt(const Int& v) {
  if (v < 0) return std::nullopt;
  Int s = mp::sqrt(v);
  if (s * s != v) return std::nullopt;
  return s;
}

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<__int128> {
  static __int128 from_int(const Int& v) { return v.convert_to<int64_t>(); }
  static bool fits(const Int& v) {
    return mp::abs(v) <= Int(int64_t(1) << 40);
  }
};

template <>
struct ScalarOps<Int> {
  static Int from_int(const Int& v) { return v; }
  static bool fits(const Int&) { return true; }
};

// Shell-by-shell scan. For each prefix (x2, y1, y2) the quadratic determines
// x1 up to sign, so prefixes are visited exactly once (at shell
// max(|x2|,|y1|,|y2|)); solutions whose |x1| exceeds the prefix shell are
// parked until their own shell is reached. Candidates inside one shell are
// sorted by the canonical key before the first is returned.
template <class S>
std::optional<std::array<Int, 4>> search_engine(const Int& Ai, const Int& Bi,
                                                const Int& Ci, const Int& Di,
                                                const Int& Ei, const Int& Fi,
                                                int64_t bound) {
  const S A = ScalarOps<S>::from_int(Ai), B = ScalarOps<S>::from_int(Bi),
          C = ScalarOps<S>::from_int(Ci), D = ScalarOps<S>::from_int(Di),
          E = ScalarOps<S>::from_int(Ei), F = ScalarOps<S>::from_int(Fi);

  std::map<int64_t, std::vector<Candidate>> pending;
  std::vector<Candidate> shell;

  auto consider_prefix = [&](int64_t x2, int64_t y1, int64_t y2, int64_t m) {
    S rhs = -(B * S(x2) * S(x2) + C * S(y1) * S(y1) + D * S(y2) * S(y2));
    if (rhs < 0) return;
    if (rhs % A != 0) return;
    auto root = exact_isqrt(rhs / A);
    if (!root) return;
    S s = S(*root);
    const S cands[2] = {s, -s};
    for (int t = 0; t < (s == 0 ? 1 : 2); ++t) {
      S x1w = cands[t];
      if (x1w > S(bound) || -x1w > S(bound)) continue;
      auto x1 = static_cast<int64_t>(x1w);
      if (E * S(x1) * S(x2) != F * S(y1) * S(y2)) continue;
      std::array<int64_t, 4> q{x1, x2, y1, y2};
      if (x1 == 0 && x2 == 0 && y1 == 0 && y2 == 0) continue;
      if (gcd4(x1, x2, y1, y2) != 1) continue;
      if (!first_nonzero_positive(q)) continue;
      int64_t mq = std::max<int64_t>(std::llabs(x1), m);
      if (mq == m)
        shell.push_back({q});
      else
        pending[mq].push_back({q});
    }
  };

  for (int64_t m = 1; m <= bound; ++m) {
    shell.clear();
    if (auto it = pending.find(m); it != pending.end()) {
      shell = std::move(it->second);
      pending.erase(it);
    }
    // Prefixes with max(|x2|, |y1|, |y2|) == m, as three boundary faces.
    for (int64_t y2 : {m, -m})
      for (int64_t y1 = -m; y1 <= m; ++y1)
        for (int64_t x2 = -m; x2 <= m; ++x2) consider_prefix(x2, y1, y2, m);
    for (int64_t y2 = -(m - 1); y2 <= m - 1; ++y2)
      for (int64_t y1 : {m, -m})
        for (int64_t x2 = -m; x2 <= m; ++x2) consider_prefix(x2, y1, y2, m);
    for (int64_t y2 = -(m - 1); y2 <= m - 1; ++y2)
      for (int64_t y1 = -(m - 1); y1 <= m - 1; ++y1)
        for (int64_t x2 : {m, -m}) consider_prefix(x2, y1, y2, m);

    if (!shell.empty()) {
      auto best =
          *std::min_element(shell.begin(), shell.end(), candidate_less);
      return std::array<Int, 4>{Int(best.q[0]), Int(best.q[1]),
                                Int(best.q[2]), Int(best.q[3])};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::array<Int, 4>> search_nontrivial_solution(
    const DivisionSystem& sys, int64_t bound) {
  if (bound < 1)
    throw std::invalid_argument("search_nontrivial_solution: bound < 1");
  if (bound > 1000000)
    throw std::invalid_argument("search_nontrivial_solution: bound too large");
  // Clear denominators per equation; homogeneity makes this lossless.
  Int l1 = mp::lcm(mp::lcm(den(sys.B), den(sys.C)),
                   mp::lcm(den(sys.D), den(sys.A)));
  Int Ai = num(sys.A * Rational(l1)), Bi = num(sys.B * Rational(l1)),
      Ci = num(sys.C * Rational(l1)), Di = num(sys.D * Rational(l1));
  Int l2 = mp::lcm(den(sys.E), den(sys.F));
  Int Ei = num(sys.E * Rational(l2)), Fi = num(sys.F * Rational(l2));

  bool fast = ScalarOps<__int128>::fits(Ai) && ScalarOps<__int128>::fits(Bi) &&
              ScalarOps<__int128>::fits(Ci) && ScalarOps<__int128>::fits(Di) &&
              ScalarOps<__int128>::fits(Ei) && ScalarOps<__int128>::fits(Fi);
  if (fast) return search_engine<__int128>(Ai, Bi, Ci, Di, Ei, Fi, bound);
  return search_engine<Int>(Ai, Bi, Ci, Di, Ei, Fi, bound);
}

bool certify_sign_definite(const SquareFreeInt& z, const Triple& c) {
  Rational half(1, 2);
  if (z.value() > 0)
    return c.c1 < half && c.c2 < 0 && c.c2 < c.c3 && c.c3 < -c.c2;
  return c.c1 > half && c.c3 < 0 && c.c3 < c.c2 && c.c2 < -c.c3;
}

namespace {

Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += mp::abs(m);
  return r;
}

bool triple_integral(const Triple& c) {
  return den(c.c1) == 1 && den(c.c2) == 1 && den(c.c3) == 1;
}

}  // namespace

bool certify_mod_p(const SquareFreeInt& z, const Triple& c, const Int& p) {
  if (!is_prime(p) || p % 4 != 3)
    throw std::invalid_argument("certify_mod_p: p = " + p.str() +
                                " is not a prime congruent to 3 mod 4");
  if (z.value() % p != 0)
    throw std::invalid_argument("certify_mod_p: p does not divide z");
  if (!triple_integral(c))
    throw std::invalid_argument("certify_mod_p: triple is not integral");
  Int c1 = num(c.c1), c2 = num(c.c2), c3 = num(c.c3);
  return mod_pos(1 - 2 * c1, p) == 1 && mod_pos(c2 + 1, p) == 0 &&
         mod_pos(c3, p) == 0;
}

bool certify_qi_p1(const Triple& c) {
  if (c.c2 != 0 || c.c3 != -1) return false;
  Rational q = Rational(1) - 2 * c.c1;
  if (q <= 0) return false;
  return !in_Q2(q);
}

bool certify_qi_p2(const Triple& c) {
  if (c.c1 != 1 || c.c3 != 0) return false;
  if (den(c.c2) != 1) return false;
  Int n = num(c.c2);
  if (n >= 0) return false;
  if (!is_squarefree(n)) return false;
  auto f = factor(n);
  for (const auto& [p, e] : f.prime_powers)
    if (p % 4 == 3) return true;
  return false;
}

nlohmann::ordered_json AdmissibilityVerdict::to_json() const {
  nlohmann::ordered_json j;
  switch (status) {
    case Status::ProvenAdmissible: j["status"] = "proven_admissible"; break;
    case Status::NotAdmissible: j["status"] = "not_admissible"; break;
    case Status::Unknown: j["status"] = "unknown"; break;
  }
  j["certificate"] =
      certificate.empty() ? nlohmann::ordered_json(nullptr)
                          : nlohmann::ordered_json(certificate);
  if (witness) {
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (const auto& v : *witness) w.push_back(v.convert_to<std::int64_t>());
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["bound"] = bound;
  return j;
}

AdmissibilityVerdict decide_admissible(const SquareFreeInt& z, const Triple& c,
                                       std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("decide_admissible: bound < 1");
  AdmissibilityVerdict v;
  v.bound = bound;

  if (certify_sign_definite(z, c)) {
    v.status = AdmissibilityVerdict::Status::ProvenAdmissible;
    v.certificate = "sign_definite";
    return v;
  }
  if (triple_integral(c)) {
    auto f = factor(z.value());
    for (const auto& [p, e] : f.prime_powers) {
      if (p % 4 != 3) continue;
      if (certify_mod_p(z, c, p)) {
        v.status = AdmissibilityVerdict::Status::ProvenAdmissible;
        v.certificate = "mod_p(" + p.str() + ")";
        return v;
      }
    }
  }
  if (z.value() == -1) {
    if (certify_qi_p1(c)) {
      v.status = AdmissibilityVerdict::Status::ProvenAdmissible;
      v.certificate = "qi_p1";
      return v;
    }
    if (certify_qi_p2(c)) {
      v.status = AdmissibilityVerdict::Status::ProvenAdmissible;
      v.certificate = "qi_p2";
      return v;
    }
  }

  auto sys = system_of(z, c);
  if (auto w = search_nontrivial_solution(sys, bound)) {
    v.status = AdmissibilityVerdict::Status::NotAdmissible;
    v.witness = *w;
    return v;
  }
  v.status = AdmissibilityVerdict::Status::Unknown;
  return v;
}

}  // namespace qdiv
