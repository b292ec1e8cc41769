#include <doctest.h>

#include <random>

#include "qdiv/admissibility.hpp"
#include "qdiv/classification.hpp"

using namespace qdiv;

namespace {

SquareFreeInt sf(std::int64_t v) { return SquareFreeInt(Int(v)); }

std::array<Int, 4> quad(std::int64_t a, std::int64_t b, std::int64_t c,
                        std::int64_t d) {
  return {Int(a), Int(b), Int(c), Int(d)};
}

}  // namespace

TEST_CASE("system_of pinned coefficients") {
  auto s1 = system_of(sf(-1), parse_triple("0,1,0"));
  CHECK(s1.A == 1);
  CHECK(s1.B == -1);
  CHECK(s1.C == -1);
  CHECK(s1.D == 1);
  CHECK(s1.E == 1);
  CHECK(s1.F == 1);

  auto s2 = system_of(sf(-1), parse_triple("1,0,5"));
  CHECK(s2.B == 1);
  CHECK(s2.C == -5);
  CHECK(s2.D == -5);
  CHECK(s2.E == 0);
  CHECK(s2.F == 0);

  auto s3 = system_of(sf(3), parse_triple("0,0,0"));
  CHECK(s3.B == 3);
  CHECK(s3.C == 0);
  CHECK(s3.D == 0);
  CHECK(s3.E == 1);
  CHECK(s3.F == 0);
}

TEST_CASE("search finds the minimal witness for c = (0,1,0)") {
  auto w1 = search_nontrivial_solution(system_of(sf(-1), parse_triple("0,1,0")), 1);
  REQUIRE(w1.has_value());
  CHECK(*w1 == quad(1, 0, 1, 0));

  auto w2 = search_nontrivial_solution(system_of(sf(2), parse_triple("0,1,0")), 1);
  REQUIRE(w2.has_value());
  CHECK(*w2 == quad(1, 0, 1, 0));
}

TEST_CASE("search is empty on the field case") {
  auto w = search_nontrivial_solution(system_of(sf(-1), parse_triple("0,-2,0")), 50);
  CHECK_FALSE(w.has_value());
}

TEST_CASE("witnesses satisfy both equations exactly and scale") {
  std::vector<std::pair<std::int64_t, std::string>> cases = {
      {-1, "0,1,0"}, {2, "0,1,0"}, {-1, "0,3,2"}, {5, "1,1,1"},
      {-1, "1/2,1,1/2"},
  };
  for (const auto& [z, cs] : cases) {
    auto sys = system_of(sf(z), parse_triple(cs));
    auto w = search_nontrivial_solution(sys, 20);
    if (!w) continue;
    auto [quad_val, bil_val] = eval_system(sys, *w);
    CHECK(quad_val == 0);
    CHECK(bil_val == 0);
    // primitivity
    Int g = 0;
    for (const auto& v : *w) g = boost::multiprecision::gcd(g, v);
    CHECK(g == 1);
    // homogeneity: 3*w is still a solution
    std::array<Int, 4> scaled;
    for (int i = 0; i < 4; ++i) scaled[i] = (*w)[i] * 3;
    auto [q3, b3] = eval_system(sys, scaled);
    CHECK(q3 == 0);
    CHECK(b3 == 0);
  }
}

TEST_CASE("search rejects bad bounds") {
  auto sys = system_of(sf(-1), parse_triple("0,1,0"));
  CHECK_THROWS_AS(search_nontrivial_solution(sys, 0), std::invalid_argument);
  CHECK_THROWS_AS(search_nontrivial_solution(sys, 2000000),
                  std::invalid_argument);
}

TEST_CASE("search handles huge rational coefficients via the exact path") {
  // Coefficients beyond the int64 window force the big-integer engine.
  Triple c{Rational(Int("3000000000000001"), 2), Rational(1), Rational(0)};
  auto sys = system_of(sf(-1), c);
  auto w = search_nontrivial_solution(sys, 3);
  if (w) {
    auto [q, b] = eval_system(sys, *w);
    CHECK(q == 0);
    CHECK(b == 0);
  }
}

TEST_CASE("certify_sign_definite") {
  CHECK(certify_sign_definite(sf(2), parse_triple("0,-1,0")));
  CHECK(certify_sign_definite(sf(-1), parse_triple("1,-2,-3")));
  CHECK_FALSE(certify_sign_definite(sf(2), parse_triple("1,-1,0")));
  CHECK_FALSE(certify_sign_definite(sf(2), parse_triple("0,1,0")));
  CHECK_FALSE(certify_sign_definite(sf(-1), parse_triple("0,-2,0")));
  // boundary: c3 = -c2 fails the strict inequality
  CHECK_FALSE(certify_sign_definite(sf(2), parse_triple("0,-1,1")));
}

TEST_CASE("certify_mod_p") {
  CHECK(certify_mod_p(sf(3), parse_triple("0,-1,0"), Int(3)));
  CHECK_FALSE(certify_mod_p(sf(3), parse_triple("0,1,0"), Int(3)));
  CHECK(certify_mod_p(sf(21), parse_triple("7,-1,7"), Int(7)));
  // rejections
  CHECK_THROWS_AS(certify_mod_p(sf(5), parse_triple("0,-1,0"), Int(5)),
                  std::invalid_argument);  // 5 = 1 mod 4
  CHECK_THROWS_AS(certify_mod_p(sf(3), parse_triple("0,-1,0"), Int(7)),
                  std::invalid_argument);  // 7 does not divide 3
  CHECK_THROWS_AS(certify_mod_p(sf(3), parse_triple("1/2,-1,0"), Int(3)),
                  std::invalid_argument);  // non-integer triple
}

TEST_CASE("certify_qi_p1") {
  CHECK(certify_qi_p1(parse_triple("-1,0,-1")));   // q = 3
  CHECK_FALSE(certify_qi_p1(parse_triple("0,0,-1")));   // q = 1 is a square
  CHECK_FALSE(certify_qi_p1(parse_triple("-1,0,1")));   // c3 != -1
  CHECK_FALSE(certify_qi_p1(parse_triple("-1,1,-1")));  // c2 != 0
  CHECK_FALSE(certify_qi_p1(parse_triple("1,0,-1")));   // q = -1 < 0
  CHECK(certify_qi_p1(parse_triple("1/6,0,-1")));  // q = 2/3, 6 not in N2
}

TEST_CASE("certify_qi_p2") {
  CHECK(certify_qi_p2(parse_triple("1,-3,0")));
  CHECK_FALSE(certify_qi_p2(parse_triple("1,-5,0")));  // 5 = 1 mod 4
  CHECK(certify_qi_p2(parse_triple("1,-6,0")));        // 3 | 6
  CHECK_FALSE(certify_qi_p2(parse_triple("1,-4,0")));  // not square-free
  CHECK_FALSE(certify_qi_p2(parse_triple("1,3,0")));   // positive
  CHECK_FALSE(certify_qi_p2(parse_triple("0,-3,0")));  // c1 != 1
  CHECK_FALSE(certify_qi_p2(parse_triple("1,-3,1")));  // c3 != 0
}

TEST_CASE("decide_admissible: the three verdicts") {
  auto proven = decide_admissible(sf(-1), parse_triple("1,-2,-3"), 50);
  CHECK(proven.status == AdmissibilityVerdict::Status::ProvenAdmissible);
  CHECK(proven.certificate == "sign_definite");

  auto refuted = decide_admissible(sf(-1), parse_triple("0,1,0"), 50);
  REQUIRE(refuted.status == AdmissibilityVerdict::Status::NotAdmissible);
  REQUIRE(refuted.witness.has_value());
  CHECK(*refuted.witness == quad(1, 0, 1, 0));

  auto unknown = decide_admissible(sf(5), parse_triple("0,1/3,1/7"), 10);
  CHECK(unknown.status == AdmissibilityVerdict::Status::Unknown);
  CHECK(unknown.bound == 10);
}

TEST_CASE("decide_admissible picks the family certificates") {
  auto modp = decide_admissible(sf(3), parse_triple("0,-1,3"), 10);
  CHECK(modp.status == AdmissibilityVerdict::Status::ProvenAdmissible);
  CHECK(modp.certificate == "mod_p(3)");

  auto p1 = decide_admissible(sf(-1), parse_triple("-1,0,-1"), 10);
  CHECK(p1.status == AdmissibilityVerdict::Status::ProvenAdmissible);
  CHECK(p1.certificate == "qi_p1");

  auto p2 = decide_admissible(sf(-1), parse_triple("1,-3,0"), 10);
  CHECK(p2.status == AdmissibilityVerdict::Status::ProvenAdmissible);
  CHECK(p2.certificate == "qi_p2");
}

TEST_CASE("certified triples survive the search at bounds up to 100") {
  std::vector<std::pair<std::int64_t, std::string>> certified = {
      {2, "0,-1,0"},  {-1, "1,-2,-3"}, {3, "0,-1,3"},
      {-1, "-1,0,-1"}, {-1, "1,-3,0"},
  };
  for (const auto& [z, cs] : certified) {
    auto sys = system_of(sf(z), parse_triple(cs));
    CHECK_FALSE(search_nontrivial_solution(sys, 100).has_value());
  }
}

TEST_CASE("refutation is consistent with zero divisors in the algebra") {
  for (const auto& [z, cs] : std::vector<std::pair<std::int64_t, std::string>>{
           {-1, "0,1,0"}, {2, "0,1,0"}, {-1, "0,3,2"}}) {
    auto c = parse_triple(cs);
    auto verdict = decide_admissible(sf(z), c, 50);
    REQUIRE(verdict.status == AdmissibilityVerdict::Status::NotAdmissible);
    const auto& w = *verdict.witness;
    AlgebraSpec spec{QuadField(Int(z)), c};
    auto u = from_coords(spec, {Rational(w[0]), Rational(w[1]), Rational(w[2]),
                                Rational(w[3])});
    CHECK_FALSE(u.is_zero());
    CHECK(left_mult_det(spec, u) == 0);
  }
}

TEST_CASE("verdict JSON shape") {
  auto j = decide_admissible(sf(-1), parse_triple("0,1,0"), 50).to_json();
  CHECK(j["status"] == "not_admissible");
  CHECK(j["certificate"].is_null());
  CHECK(j["witness"].is_array());
  CHECK(j["witness"].size() == 4);
  CHECK(j["bound"] == 50);

  auto p = decide_admissible(sf(-1), parse_triple("1,-2,-3"), 50).to_json();
  CHECK(p["status"] == "proven_admissible");
  CHECK(p["certificate"] == "sign_definite");
  CHECK(p["witness"].is_null());
}
