#include "invol/interpolate.hpp"

#include <stdexcept>

namespace invol {

DensePoly lagrange(const Field& f, const PermMap& map) {
  const std::uint64_t q = f.q();
  if (map.images.size() != q) throw std::invalid_argument("lagrange: map size must equal q");

  DensePoly out;
  out.coeffs.assign(q, f.zero());
  for (std::uint64_t a = 0; a < q; ++a) {
    const Elem value = map.images[a];
    if (value.v == 0) continue;
    // value * (1 - (x - a)^(q-1))
    out.coeffs[0] = f.add(out.coeffs[0], value);
    if (a == 0) {
      out.coeffs[q - 1] = f.sub(out.coeffs[q - 1], value);
    } else {
      Elem pw = f.one();  // a^(q-1-i), built downward from i = q-1
      const Elem point{a};
      for (std::uint64_t i = q; i-- > 0;) {
        out.coeffs[i] = f.sub(out.coeffs[i], f.mul(value, pw));
        pw = f.mul(pw, point);
      }
    }
  }
  return out;
}

SparsePoly to_sparse(const DensePoly& dense) {
  SparsePoly out;
  for (std::size_t i = dense.coeffs.size(); i-- > 0;) {
    if (dense.coeffs[i].v != 0) out.terms.push_back({i, dense.coeffs[i]});
  }
  return out;
}

}  // namespace invol
