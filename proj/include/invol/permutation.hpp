#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "invol/field.hpp"
#include "invol/poly.hpp"

namespace invol {

/// Total mapping on all q field elements; images indexed by canonical
/// element order.
struct PermMap {
  std::vector<Elem> images;

  std::size_t size() const { return images.size(); }
  Elem operator()(Elem x) const { return images[x.v]; }

  friend bool operator==(const PermMap&, const PermMap&) = default;
};

/// Multiset of cycle lengths: length -> multiplicity.
struct CycleType {
  std::map<std::uint64_t, std::uint64_t> counts;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

Elem eval_poly(const Field& f, const SparsePoly& g, Elem x);
PermMap eval_all(const Field& f, const SparsePoly& g);

bool is_permutation(const PermMap& map);

/// First element (canonical order) whose image repeats an earlier one;
/// nullopt when the map is a permutation.
std::optional<Elem> first_collision(const PermMap& map);

/// Whether map composed with itself is the identity. Throws
/// std::invalid_argument when map is not a permutation.
bool is_involution(const PermMap& map);

std::vector<Elem> fixed_points(const PermMap& map);

/// Cycle lengths by orbit traversal. Throws std::invalid_argument when map
/// is not a permutation.
CycleType cycle_type(const PermMap& map);

}  // namespace invol
