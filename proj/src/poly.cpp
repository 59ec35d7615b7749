#include "invol/poly.hpp"

#include <algorithm>

namespace invol {

SparsePoly normalize_terms(const Field& f, std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  SparsePoly out;
  out.terms.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.terms.empty() && out.terms.back().exponent == t.exponent) {
      out.terms.back().coeff = f.add(out.terms.back().coeff, t.coeff);
    } else {
      out.terms.push_back(t);
    }
  }
  std::erase_if(out.terms, [](const Term& t) { return t.coeff.v == 0; });
  return out;
}

bool canonical_equal(const SparsePoly& a, const SparsePoly& b) { return a.terms == b.terms; }

}  // namespace invol
