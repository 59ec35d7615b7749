#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "invol/generator.hpp"
#include "invol/permutation.hpp"
#include "invol/poly.hpp"

namespace invol {

/// The six coefficient families. T1/T2/T3 are trinomials, S1/S2/S3 six-term
/// polynomials. T1 and S1 fix the cube coset H pointwise, T2/S2 fix gamma*H,
/// T3/S3 fix gamma^2*H; the other two cosets are swapped, T-families by a
/// shifted index (i -> i+k) and S-families by a reflected one (i -> k-i).
enum class Family { T1, T2, T3, S1, S2, S3 };

inline constexpr std::array<Family, 6> kAllFamilies = {Family::T1, Family::T2, Family::T3,
                                                       Family::S1, Family::S2, Family::S3};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
bool is_trinomial(Family f);
unsigned fixed_coset(Family f);

/// Slot values aligned with family_exponents: 3 slots (a, b, c) for
/// trinomial families, 6 slots (a..f) for six-term families.
struct CoeffSet {
  std::vector<Elem> slots;
};

/// Per-slot display name: "a".."f".
std::string_view slot_name(unsigned slot);

/// Exponents the family places coefficients at, descending:
/// {2m+1, m+1, 1} for T-families, {3m-1, 2m+1, 2m-1, m+1, m-1, 1} for
/// S-families.
std::vector<std::uint64_t> family_exponents(Family f, std::uint64_t m);

/// One constructed instance: which family, which generator, which k, the
/// closed-form coefficients, and the normalized polynomial.
struct Record {
  Family family = Family::T1;
  Elem gamma;
  std::uint64_t k = 0;
  CoeffSet coeffs;
  SparsePoly poly;

  std::size_t term_count() const { return poly.term_count(); }
};

CoeffSet trinomial_coeffs(Family f, const Generator& g, std::int64_t k);
CoeffSet sixterm_coeffs(Family f, const Generator& g, std::int64_t k);
CoeffSet family_coeffs(Family f, const Generator& g, std::int64_t k);

/// Coefficients placed at the family exponents, then normalized: collided
/// exponents merged (q = 7 makes the six-term exponents collide pairwise)
/// and zero coefficients dropped.
SparsePoly build_poly(Family f, const Generator& g, std::int64_t k);

/// The permutation the family is required to induce, built directly from
/// the per-coset mapping rules rather than from any polynomial: 0 and the
/// fixed coset stay put, the two swapped cosets are paired by exponent
/// arithmetic mod q-1.
PermMap expected_map(Family f, const Generator& g, std::int64_t k);

Record make_record(Family f, const Generator& g, std::int64_t k);

/// All 6m = 2(q-1) records: families in enum order, k ascending.
std::vector<Record> all_records(const Generator& g);

}  // namespace invol
