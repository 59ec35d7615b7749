#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace invol {

/// Element of a finite field F_{p^n}, identified by its canonical index:
/// the coefficient vector (c0, ..., c_{n-1}) read as the base-p integer
/// c0 + c1*p + ... + c_{n-1}*p^{n-1}. Index order is the canonical element
/// order used for generator search and all reports.
struct Elem {
  std::uint64_t v = 0;

  friend constexpr bool operator==(Elem a, Elem b) = default;
  friend constexpr auto operator<=>(Elem a, Elem b) = default;
};

bool is_prime(std::uint64_t x);

/// Irreducibility over F_p of a monic polynomial (low-degree-first
/// coefficients). Root scan for degree <= 3, Frobenius gcd test above.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint64_t p);

/// Smallest monic irreducible of degree n over F_p, candidates ordered by
/// their coefficient vector read as a base-p integer.
std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, unsigned n);

/// Writes q as p^n with p prime, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> factor_prime_power(std::uint64_t q);

/// Exact arithmetic in F_{p^n}. Immutable after construction and all
/// operations are pure, so a Field can be shared across threads freely.
class Field {
 public:
  static constexpr unsigned kMaxDegree = 16;

  /// Prime field (n = 1) or extension field with the canonical smallest
  /// irreducible modulus.
  explicit Field(std::uint64_t p, unsigned n = 1);

  /// Extension field with an explicit monic irreducible modulus,
  /// low-degree-first, length n+1.
  Field(std::uint64_t p, unsigned n, std::vector<std::uint32_t> modulus);

  std::uint64_t p() const { return p_; }
  unsigned n() const { return n_; }
  std::uint64_t q() const { return q_; }

  /// (q-1)/3 when q == 1 (mod 3), absent otherwise.
  std::optional<std::uint64_t> m() const { return m_; }

  /// Monic modulus, low-degree-first, length n+1. Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return {}; }
  Elem one() const { return {1}; }

  /// Element with the given canonical index; throws for value >= q.
  Elem elem(std::uint64_t value) const;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem x) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem x) const;

  /// x^e. The exponent is reduced mod q-1 for nonzero x; 0^e is 0 for
  /// e > 0, 1 for e == 0, and a domain error for e < 0.
  Elem pow(Elem x, std::int64_t e) const;

  /// Exact multiplicative order of x != 0, a divisor of q-1.
  std::uint64_t order(Elem x) const;

  bool is_generator(Elem x) const;

  /// Smallest generator in canonical element order; deterministic.
  Elem find_generator() const;

  /// All phi(q-1) generators, ascending canonical order.
  std::vector<Elem> generators() const;

  const std::vector<std::uint64_t>& unit_order_prime_factors() const { return qm1_factors_; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.modulus_ == b.modulus_;
  }

 private:
  using Digits = std::array<std::uint32_t, kMaxDegree>;

  void decompose(std::uint64_t v, Digits& d) const;
  std::uint64_t compose(const Digits& d) const;
  void validate_and_finish();

  std::uint64_t p_ = 0;
  unsigned n_ = 1;
  std::uint64_t q_ = 0;
  std::optional<std::uint64_t> m_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> qm1_factors_;
};

}  // namespace invol
