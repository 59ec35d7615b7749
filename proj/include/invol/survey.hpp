#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "invol/interpolate.hpp"
#include "invol/verify.hpp"

namespace invol {

/// A coefficient slot whose closed-form value came out zero. The theorems
/// place all coefficients in F_q*, but small fields produce exceptions
/// (q = 7, T1, k = 1 has b = c = 0); these are recorded, not suppressed.
struct ZeroCoeffIncident {
  Family family = Family::T1;
  std::uint64_t k = 0;
  unsigned slot = 0;

  friend bool operator==(const ZeroCoeffIncident&, const ZeroCoeffIncident&) = default;
};

struct RecordOutcome {
  Record record;
  Verdict verdict;
  /// Set when the Lagrange cross-check ran: interpolating the expected map
  /// reproduced the constructed polynomial exactly.
  std::optional<bool> interp_match;
};

/// Aggregated verification of all 2(q-1) constructions for one (field,
/// generator) pair.
struct FieldReport {
  Field field;
  Elem gamma;
  std::vector<RecordOutcome> outcomes;
  std::uint64_t distinct_permutations = 0;
  std::map<std::size_t, std::uint64_t> sparsity_histogram;  // term_count -> frequency
  std::vector<ZeroCoeffIncident> zero_coeff_incidents;
  /// Groups of records inducing the same permutation (only groups of
  /// size > 1), ordered by first occurrence.
  std::vector<std::vector<std::pair<Family, std::uint64_t>>> permutation_collisions;
  bool interp_checked = false;
  bool all_passed = false;
};

/// Distinct-polynomial counts per generator plus union and pairwise
/// overlaps; published as data, with no claim either way about
/// disjointness.
struct DisjointnessReport {
  Field field;
  std::vector<Elem> generators;
  std::vector<std::uint64_t> per_generator_counts;
  std::uint64_t union_count = 0;
  std::vector<std::vector<std::uint64_t>> overlap_matrix;
  bool all_passed = false;  // every record of every generator verified
};

enum class InterpMode { off, on, auto_small };

/// auto_small runs the O(q^2)-per-record interpolation cross-check only for
/// q <= kInterpAutoMaxQ; the direct verification always runs.
inline constexpr std::uint64_t kInterpAutoMaxQ = 49;

struct SurveyOptions {
  InterpMode interp = InterpMode::auto_small;
};

FieldReport survey_field(const Generator& g, SurveyOptions opts = {});
DisjointnessReport survey_generators(const Field& f, SurveyOptions opts = {});

/// Odd prime powers q == 1 (mod 3) in [q_min, q_max], ascending.
std::vector<std::uint64_t> admissible_orders(std::uint64_t q_min, std::uint64_t q_max);

/// One report per admissible order, canonical generator each.
std::vector<FieldReport> survey_range(std::uint64_t q_min, std::uint64_t q_max,
                                      SurveyOptions opts = {});

}  // namespace invol
