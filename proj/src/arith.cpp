#include "qdiv/arith.hpp"

#include <random>
#include <sstream>

namespace qdiv {

namespace mp = boost::multiprecision;

std::string to_string(const Int& n) { return n.str(); }

std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_int: empty string");
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_int: bad integer '" + s + "'");
  }
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  Int n = parse_int(s.substr(0, slash));
  Int d = parse_int(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

namespace {

Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += mp::abs(m);
  return r;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int r) {
  Int x = mp::powm(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness
}

}  // namespace

bool is_prime(const Int& n_in) {
  Int n = mp::abs(n_in);
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  // Deterministic for n < 3.317e24 with this base set.
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, Int(a), d, r)) return false;
  }
  return true;
}

Int Factorization::value() const {
  Int v = sign;
  for (const auto& [p, e] : prime_powers)
    for (unsigned i = 0; i < e; ++i) v *= p;
  return v;
}

namespace {

Int pollard_brent(const Int& n) {
  // n odd, composite, no factor <= 10^6.
  std::mt19937_64 rng(0x2545F4914F6CDD1DULL ^
                      n.convert_to<std::uint64_t>());
  while (true) {
    Int y = Int(rng() % 1000000) + 2;
    Int c = Int(rng() % 1000000) + 1;
    Int m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
      Int k = 0;
      while (k < r && g == 1) {
        ys = y;
        Int lim = m < r - k ? m : r - k;
        for (Int i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = (q * mp::abs(x - y)) % n;
        }
        g = mp::gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = mp::gcd(mp::abs(x - ys), n);
      }
    }
    if (g != n) return g;
  }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Factorization factor(Int n) {
  if (n == 0) throw std::invalid_argument("factor: n = 0");
  Factorization f;
  if (n < 0) {
    f.sign = -1;
    n = -n;
  }
  while (n % 2 == 0) {
    ++f.prime_powers[2];
    n /= 2;
  }
  for (Int p = 3; p <= 1000000 && p * p <= n; p += 2) {
    while (n % p == 0) {
      ++f.prime_powers[p];
      n /= p;
    }
  }
  if (n > 1) {
    // Any remainder below 10^12 has no divisor <= 10^6, hence is prime.
    if (n < Int("1000000000000") || is_prime(n)) {
      ++f.prime_powers[n];
    } else {
      factor_into(n, f.prime_powers);
    }
  }
  return f;
}

Valuation valuation(const Int& p, const Int& n) {
  if (!is_prime(p) || p < 2)
    throw std::invalid_argument("valuation: p = " + p.str() + " is not prime");
  if (n == 0) return Valuation::infinity();
  Int m = mp::abs(n);
  std::uint64_t k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return Valuation::finite(k);
}

bool is_squarefree(const Int& n) {
  if (n == 0) throw std::invalid_argument("is_squarefree: n = 0");
  auto f = factor(n);
  for (const auto& [p, e] : f.prime_powers)
    if (e > 1) return false;
  return true;
}

SquareFreeInt::SquareFreeInt(Int v) : v_(std::move(v)) {
  if (v_ == 0 || v_ == 1)
    throw std::invalid_argument("SquareFreeInt: value in {0, 1}");
  if (!is_squarefree(v_))
    throw std::invalid_argument("SquareFreeInt: " + v_.str() +
                                " is not square-free");
}

std::optional<SquareFreeInt> SquareFreeInt::try_make(const Int& v) {
  if (v == 0 || v == 1 || !is_squarefree(v)) return std::nullopt;
  return SquareFreeInt(v);
}

std::pair<Int, Int> squarefree_part(const Int& n) {
  if (n == 0) throw std::invalid_argument("squarefree_part: n = 0");
  auto f = factor(n);
  Int s = f.sign, r = 1;
  for (const auto& [p, e] : f.prime_powers) {
    if (e % 2 == 1) s *= p;
    for (unsigned i = 0; i < e / 2; ++i) r *= p;
  }
  return {s, r};
}

Int squarefree_class(const Rational& q) {
  if (q == 0) throw std::invalid_argument("squarefree_class: q = 0");
  // q = n/d = (n*d)/d^2, so q and n*d lie in the same square class.
  return squarefree_part(num(q) * den(q)).first;
}

bool is_rational_square(const Rational& q) {
  if (q == 0) return true;
  if (q < 0) return false;
  Int sn = mp::sqrt(num(q)), sd = mp::sqrt(den(q));
  return sn * sn == num(q) && sd * sd == den(q);
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q == 0) return Rational(0);
  if (q < 0) return std::nullopt;
  Int sn = mp::sqrt(num(q)), sd = mp::sqrt(den(q));
  if (sn * sn != num(q) || sd * sd != den(q)) return std::nullopt;
  return Rational(sn, sd);
}

int legendre_symbol(const Int& a, const Int& p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("legendre_symbol: " + p.str() +
                                " is not an odd prime");
  Int r = mod_pos(a, p);
  if (r == 0) return 0;
  Int e = mp::powm(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

bool is_square_mod(const Int& a, const Int& n) {
  Int m = mp::abs(n);
  if (m == 0) throw std::invalid_argument("is_square_mod: n = 0");
  auto f = factor(m);
  for (const auto& [p, e] : f.prime_powers) {
    if (e > 1)
      throw std::invalid_argument("is_square_mod: modulus " + n.str() +
                                  " is not square-free");
    if (p == 2) continue;
    if (legendre_symbol(a, p) == -1) return false;
  }
  return true;
}

bool is_sum_two_squares_nat(const Int& n) {
  if (n < 1) throw std::invalid_argument("is_sum_two_squares_nat: n < 1");
  auto f = factor(n);
  for (const auto& [p, e] : f.prime_powers)
    if (p % 4 == 3 && e % 2 == 1) return false;
  return true;
}

bool in_Q2(const Rational& q) {
  if (q == 0) throw std::invalid_argument("in_Q2: q = 0");
  if (q < 0) return false;
  return is_sum_two_squares_nat(num(q) * den(q));
}

bool ternary_form_solvable(Int a, Int b, Int c) {
  if (a == 0 || b == 0 || c == 0) return true;
  // Absorb square parts into the variables and strip the overall gcd.
  a = squarefree_part(a).first;
  b = squarefree_part(b).first;
  c = squarefree_part(c).first;
  Int g = mp::gcd(a, mp::gcd(b, c));
  a /= g;
  b /= g;
  c /= g;
  // Force pairwise coprimality: if g | a,b then g | z^2 in any solution, so
  // substituting z -> g z' turns (a, b, c) into (a/g, b/g, c*g). |abc|
  // strictly drops, so this terminates.
  while (true) {
    Int gab = mp::gcd(a, b);
    if (gab > 1) {
      a /= gab;
      b /= gab;
      c = squarefree_part(c * gab).first;
      continue;
    }
    Int gac = mp::gcd(a, c);
    if (gac > 1) {
      a /= gac;
      c /= gac;
      b = squarefree_part(b * gac).first;
      continue;
    }
    Int gbc = mp::gcd(b, c);
    if (gbc > 1) {
      b /= gbc;
      c /= gbc;
      a = squarefree_part(a * gbc).first;
      continue;
    }
    break;
  }
  bool ap = a > 0, bp = b > 0, cp = c > 0;
  if (ap == bp && bp == cp) return false;  // definite form
  return is_square_mod(-b * c, a) && is_square_mod(-a * c, b) &&
         is_square_mod(-a * b, c);
}

}  // namespace qdiv
