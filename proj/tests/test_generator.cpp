#include <random>
#include <stdexcept>

#include "doctest.h"

#include "invol/generator.hpp"

using namespace invol;

TEST_CASE("generator context over F_7") {
  const Field f(7);
  const Generator g(f, f.elem(3));
  CHECK(g.gamma() == f.elem(3));
  CHECK(g.m() == 2);
  CHECK(g.omega() == f.elem(2));  // 3^2 = 2

  // omega^2 + omega + 1 = 0
  const Elem w = g.omega();
  CHECK(f.add(f.add(f.mul(w, w), w), f.one()) == f.zero());
  CHECK(w != f.one());

  CHECK_THROWS_AS(Generator(f, f.elem(2)), std::domain_error);  // order 3
  CHECK_THROWS_AS(Generator(f, f.zero()), std::domain_error);
}

TEST_CASE("canonical generator constructor") {
  CHECK(Generator(Field(7)).gamma() == Elem{3});
  CHECK(Generator(Field(13)).gamma() == Elem{2});
}

TEST_CASE("discrete log examples") {
  const Field f(7);
  const Generator g(f, f.elem(3));
  CHECK(g.dlog(f.elem(6)) == 3);  // 3^3 = 27 = 6
  CHECK(g.dlog(g.gamma()) == 1);
  CHECK(g.dlog(f.one()) == 0);
  CHECK_THROWS_AS(g.dlog(f.zero()), std::domain_error);
}

TEST_CASE("coset classification over F_7") {
  const Field f(7);
  const Generator g(f, f.elem(3));
  CHECK(g.coset_index(f.one()) == 0);
  CHECK(g.coset_index(f.elem(3)) == 1);
  CHECK(g.coset_index(f.elem(2)) == 2);  // 2 = 3^2
  CHECK_THROWS_AS(g.coset_index(f.zero()), std::domain_error);
}

TEST_CASE("dlog and cosets round-trip on several fields") {
  std::mt19937_64 rng(7031);
  for (std::uint64_t q : {7ull, 13ull, 25ull, 121ull}) {
    const auto [p, n] = *factor_prime_power(q);
    const Field f(p, n);
    const Generator g(f);

    std::uniform_int_distribution<std::uint64_t> dist(0, q - 2);
    for (int trial = 0; trial < 100; ++trial) {
      const std::uint64_t e = dist(rng);
      CHECK(g.dlog(g.gamma_pow(static_cast<std::int64_t>(e))) == e);
    }

    std::array<std::uint64_t, 3> coset_sizes{};
    for (std::uint64_t v = 1; v < q; ++v) {
      const unsigned idx = g.coset_index(f.elem(v));
      CHECK(idx == g.dlog(f.elem(v)) % 3);
      ++coset_sizes[idx];
    }
    // the three cosets partition F_q^* into classes of m elements
    for (auto size : coset_sizes) CHECK(size == g.m());

    // H is exactly the set of elements with x^m = 1
    for (std::uint64_t v = 1; v < q; ++v) {
      const bool in_h = f.pow(f.elem(v), static_cast<std::int64_t>(g.m())) == f.one();
      CHECK(in_h == (g.coset_index(f.elem(v)) == 0));
    }
  }
}

TEST_CASE("omega identity for every generator of F_13") {
  const Field f(13);
  for (Elem gamma : f.generators()) {
    const Generator g(f, gamma);
    const Elem w = g.omega();
    CHECK(f.add(f.add(f.mul(w, w), w), f.one()) == f.zero());
  }
}

TEST_CASE("fields without cube structure") {
  const Field f(5);  // 5 = 2 (mod 3): no m, no omega, dlog still works
  const Generator g(f);
  CHECK_THROWS_AS(g.m(), std::domain_error);
  CHECK_THROWS_AS(g.omega(), std::domain_error);
  CHECK_THROWS_AS(g.coset_index(f.one()), std::domain_error);
  CHECK(g.dlog(g.gamma_pow(3)) == 3);
}
