#include <stdexcept>

#include "doctest.h"

#include "invol/families.hpp"

using namespace invol;

namespace {

SparsePoly poly_of(const Field& f, std::vector<std::pair<std::uint64_t, std::uint64_t>> terms) {
  SparsePoly out;
  for (auto [e, c] : terms) out.terms.push_back({e, f.elem(c)});
  return out;
}

}  // namespace

TEST_CASE("family metadata") {
  CHECK(family_name(Family::S2) == "S2");
  CHECK(family_from_name("T3") == Family::T3);
  CHECK_FALSE(family_from_name("T4").has_value());
  CHECK(is_trinomial(Family::T1));
  CHECK_FALSE(is_trinomial(Family::S1));
  CHECK(fixed_coset(Family::T1) == 0);
  CHECK(fixed_coset(Family::S2) == 1);
  CHECK(fixed_coset(Family::T3) == 2);
  CHECK(family_exponents(Family::T1, 2) == std::vector<std::uint64_t>{5, 3, 1});
  CHECK(family_exponents(Family::S1, 4) == std::vector<std::uint64_t>{11, 9, 7, 5, 3, 1});
}

TEST_CASE("worked example: T1 over F_7, k = 0") {
  const Field f(7);
  const Generator g(f, f.elem(3));
  const CoeffSet cs = trinomial_coeffs(Family::T1, g, 0);
  REQUIRE(cs.slots.size() == 3);
  CHECK(cs.slots[0] == f.elem(2));
  CHECK(cs.slots[1] == f.elem(3));
  CHECK(cs.slots[2] == f.elem(3));
  CHECK(build_poly(Family::T1, g, 0) == poly_of(f, {{5, 2}, {3, 3}, {1, 3}}));
}

TEST_CASE("degenerate instance: T1 over F_7, k = 1 loses two terms") {
  const Field f(7);
  const Generator g(f, f.elem(3));
  const CoeffSet cs = trinomial_coeffs(Family::T1, g, 1);
  CHECK(cs.slots[0] == f.one());
  CHECK(cs.slots[1] == f.zero());  // gamma^4 + gamma^6 + gamma^8 = 4 + 1 + 2 = 0
  CHECK(cs.slots[2] == f.zero());
  CHECK(build_poly(Family::T1, g, 1) == poly_of(f, {{5, 1}}));
}

TEST_CASE("T1 coefficient identity a + b + c = 1") {
  for (std::uint64_t q : {7ull, 13ull, 25ull}) {
    const auto [p, n] = *factor_prime_power(q);
    const Field f(p, n);
    for (Elem gamma : f.generators()) {
      const Generator g(f, gamma);
      for (std::uint64_t k = 0; k < g.m(); ++k) {
        const CoeffSet cs = trinomial_coeffs(Family::T1, g, static_cast<std::int64_t>(k));
        CHECK(f.add(f.add(cs.slots[0], cs.slots[1]), cs.slots[2]) == f.one());
      }
    }
  }
}

TEST_CASE("six-term coefficients over F_13") {
  const Field f(13);
  const Generator g(f, f.elem(2));
  const CoeffSet cs = sixterm_coeffs(Family::S1, g, 0);
  REQUIRE(cs.slots.size() == 6);
  // 3^-1 = 9 in F_13: a = 2*9 = 5, b = 9, c = -9 = 4, expanded (a,b,c,b,c,b)
  CHECK(cs.slots == std::vector<Elem>{{5}, {9}, {4}, {9}, {4}, {9}});
  CHECK(build_poly(Family::S1, g, 0) ==
        poly_of(f, {{11, 5}, {9, 9}, {7, 4}, {5, 9}, {3, 4}, {1, 9}}));
}

TEST_CASE("six-term exponent collisions at q = 7 merge and cancel") {
  const Field f(7);
  const Generator g(f, f.elem(3));
  // 3^-1 = 5 in F_7: a = 6*5 = 2... slots before merging are (3,5,2,5,2,5)
  const CoeffSet cs = sixterm_coeffs(Family::S1, g, 0);
  CHECK(cs.slots == std::vector<Elem>{{3}, {5}, {2}, {5}, {2}, {5}});
  // exponents (5,5,3,3,1,1): x^5 keeps 3+5=1, x^3 and x drop (2+5=0)
  CHECK(build_poly(Family::S1, g, 0) == poly_of(f, {{5, 1}}));
}

TEST_CASE("S1 satisfies a = -2c") {
  for (std::uint64_t q : {7ull, 13ull, 19ull}) {
    const Field f(q);
    const Generator g(f);
    for (std::uint64_t k = 0; k < g.m(); ++k) {
      const CoeffSet cs = sixterm_coeffs(Family::S1, g, static_cast<std::int64_t>(k));
      CHECK(cs.slots[0] == f.neg(f.add(cs.slots[2], cs.slots[2])));
    }
  }
}

TEST_CASE("k is m-periodic and accepts negatives") {
  for (std::uint64_t q : {7ull, 13ull, 25ull}) {
    const auto [p, n] = *factor_prime_power(q);
    const Field f(p, n);
    const Generator g(f);
    const std::int64_t m = static_cast<std::int64_t>(g.m());
    for (Family fam : kAllFamilies) {
      for (std::int64_t k = 0; k < m; ++k) {
        CHECK(build_poly(fam, g, k) == build_poly(fam, g, k + m));
        CHECK(build_poly(fam, g, k) == build_poly(fam, g, k - m));
      }
    }
  }
}

TEST_CASE("expected map for the worked example") {
  const Field f(7);
  const Generator g(f, f.elem(3));
  const PermMap map = expected_map(Family::T1, g, 0);
  // gamma^1 = 3 <-> gamma^2 = 2; gamma^4 = 4 <-> gamma^5 = 5; H = {1, 6} fixed
  CHECK(map.images == std::vector<Elem>{{0}, {1}, {3}, {2}, {5}, {4}, {6}});
}

TEST_CASE("expected map claim (ii) for S1 over F_13") {
  const Field f(13);
  const Generator g(f, f.elem(2));
  const PermMap map = expected_map(Family::S1, g, 0);
  CHECK(map(f.elem(2)) == f.elem(7));  // gamma -> gamma^-1
  CHECK(map(f.elem(7)) == f.elem(2));
}

TEST_CASE("expected map fixes its coset pointwise") {
  const Field f(13);
  const Generator g(f);
  for (Family fam : kAllFamilies) {
    const PermMap map = expected_map(fam, g, 1);
    for (std::uint64_t i = 0; i < g.m(); ++i) {
      const Elem x = g.gamma_pow(static_cast<std::int64_t>(3 * i + fixed_coset(fam)));
      CHECK(map(x) == x);
    }
    CHECK(map(f.zero()) == f.zero());
  }
}

TEST_CASE("record enumeration") {
  const Field f7(7);
  CHECK(all_records(Generator(f7)).size() == 12);
  CHECK(all_records(Generator(Field(13))).size() == 24);
  CHECK(all_records(Generator(Field(5, 2))).size() == 48);

  const auto records = all_records(Generator(f7));
  CHECK(records[0].family == Family::T1);
  CHECK(records[0].k == 0);
  CHECK(records[1].k == 1);
  CHECK(records[2].family == Family::T2);
  CHECK(records[6].family == Family::S1);

  for (const Record& rec : records) {
    CHECK(rec.term_count() <= (is_trinomial(rec.family) ? 3u : 6u));
  }
}

TEST_CASE("family construction rejects unsuitable fields") {
  CHECK_THROWS_AS(all_records(Generator(Field(5))), std::domain_error);   // 5 = 2 (mod 3)
  CHECK_THROWS_AS(all_records(Generator(Field(2, 2))), std::domain_error);  // even q
  CHECK_THROWS_AS(trinomial_coeffs(Family::T1, Generator(Field(11)), 0), std::domain_error);
  CHECK_THROWS_AS(trinomial_coeffs(Family::S1, Generator(Field(7)), 0), std::invalid_argument);
  CHECK_THROWS_AS(sixterm_coeffs(Family::T1, Generator(Field(7)), 0), std::invalid_argument);
}
