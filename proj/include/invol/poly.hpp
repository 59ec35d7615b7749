#pragma once

#include <cstdint>
#include <vector>

#include "invol/field.hpp"

namespace invol {

struct Term {
  std::uint64_t exponent = 0;
  Elem coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in normal form: strictly decreasing exponents, no zero
/// coefficients.
struct SparsePoly {
  std::vector<Term> terms;

  std::size_t term_count() const { return terms.size(); }
  bool zero() const { return terms.empty(); }
  std::uint64_t degree() const { return terms.empty() ? 0 : terms.front().exponent; }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;
};

/// Sorts descending, merges equal exponents, drops zero coefficients.
SparsePoly normalize_terms(const Field& f, std::vector<Term> terms);

/// Structural equality of normalized term lists. Syntactic: x^5 and x^11
/// over F_7 compare unequal even though they agree on F_7*.
bool canonical_equal(const SparsePoly& a, const SparsePoly& b);

}  // namespace invol
