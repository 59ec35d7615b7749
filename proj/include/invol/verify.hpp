#pragma once

#include <optional>
#include <string>

#include "invol/families.hpp"
#include "invol/permutation.hpp"

namespace invol {

/// Outcome of checking one record against everything the construction
/// promises. Failures are data, not exceptions; the first failing check is
/// named and carries a witness element where one exists.
struct Verdict {
  bool is_permutation = false;
  bool matches_expected = false;
  bool is_involution = false;
  bool fixed_points_ok = false;
  bool cycle_type_ok = false;
  bool term_count_ok = false;

  std::uint64_t fixed_point_count = 0;
  CycleType cycle_type;
  std::size_t term_count = 0;

  std::optional<Elem> witness;
  std::string failed_check;  // empty when all checks pass

  bool passed() const {
    return is_permutation && matches_expected && is_involution && fixed_points_ok &&
           cycle_type_ok && term_count_ok;
  }
};

/// Runs, in order: the evaluation table is a permutation; it matches the
/// claimed per-coset map pointwise; it is an involution; its fixed points
/// are exactly {0} union the fixed coset; its cycle type is
/// 1^((q+2)/3) 2^((q-1)/3); the term count is within the family bound.
Verdict verify_record(const Record& rec, const Generator& g);

}  // namespace invol
