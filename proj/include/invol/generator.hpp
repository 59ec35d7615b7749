#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "invol/field.hpp"

namespace invol {

/// A chosen generator gamma of F_q* together with the structure that hangs
/// off it: omega = gamma^m (a primitive cube root of unity when q == 1 mod 3),
/// the index-3 coset classification, and a baby-step/giant-step table for
/// discrete logs. Immutable after construction.
class Generator {
 public:
  /// Canonical generator: the smallest one in canonical element order.
  explicit Generator(Field field);

  /// Explicit generator; throws std::domain_error unless order(gamma) = q-1.
  Generator(Field field, Elem gamma);

  const Field& field() const { return field_; }
  Elem gamma() const { return gamma_; }

  /// (q-1)/3; throws std::domain_error when q != 1 (mod 3).
  std::uint64_t m() const;

  /// gamma^m; primitive cube root of unity. Requires q == 1 (mod 3).
  Elem omega() const;

  /// gamma^e for any signed exponent.
  Elem gamma_pow(std::int64_t e) const { return field_.pow(gamma_, e); }

  /// The unique e in [0, q-2] with gamma^e = x, via baby-step/giant-step.
  std::uint64_t dlog(Elem x) const;

  /// j in {0,1,2} with x in gamma^j * H, H the subgroup of nonzero cubes.
  /// Computed from x^m; agrees with dlog(x) mod 3.
  unsigned coset_index(Elem x) const;

 private:
  Field field_;
  Elem gamma_;
  std::optional<Elem> omega_;
  std::optional<Elem> omega_sq_;
  std::uint64_t baby_count_ = 0;
  Elem giant_step_;
  std::unordered_map<std::uint64_t, std::uint64_t> baby_table_;
};

}  // namespace invol
