#pragma once

#include "invol/permutation.hpp"
#include "invol/poly.hpp"

namespace invol {

/// Dense polynomial of degree < q; coeffs[i] multiplies x^i, length exactly q.
struct DensePoly {
  std::vector<Elem> coeffs;
};

/// The unique polynomial of degree < q agreeing with the map at every point.
/// Uses the delta form sum_a map(a) * (1 - (x - a)^(q-1)) with the expansion
/// (x - a)^(q-1) = sum_i a^(q-1-i) x^i; O(q^2) field multiplications.
/// Works for any total map, permutation or not.
DensePoly lagrange(const Field& f, const PermMap& map);

/// Nonzero coefficients with descending exponents.
SparsePoly to_sparse(const DensePoly& dense);

}  // namespace invol
