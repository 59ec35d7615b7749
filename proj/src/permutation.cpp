#include "invol/permutation.hpp"

#include <stdexcept>

namespace invol {

Elem eval_poly(const Field& f, const SparsePoly& g, Elem x) {
  Elem acc = f.zero();
  for (const Term& t : g.terms) {
    acc = f.add(acc, f.mul(t.coeff, f.pow(x, static_cast<std::int64_t>(t.exponent))));
  }
  return acc;
}

PermMap eval_all(const Field& f, const SparsePoly& g) {
  PermMap map;
  map.images.resize(f.q());
  for (std::uint64_t v = 0; v < f.q(); ++v) map.images[v] = eval_poly(f, g, Elem{v});
  return map;
}

std::optional<Elem> first_collision(const PermMap& map) {
  std::vector<bool> seen(map.images.size(), false);
  for (std::uint64_t v = 0; v < map.images.size(); ++v) {
    const std::uint64_t img = map.images[v].v;
    if (img >= map.images.size() || seen[img]) return Elem{v};
    seen[img] = true;
  }
  return std::nullopt;
}

bool is_permutation(const PermMap& map) { return !first_collision(map).has_value(); }

bool is_involution(const PermMap& map) {
  if (!is_permutation(map)) throw std::invalid_argument("is_involution: not a permutation");
  for (std::uint64_t v = 0; v < map.images.size(); ++v) {
    if (map.images[map.images[v].v].v != v) return false;
  }
  return true;
}

std::vector<Elem> fixed_points(const PermMap& map) {
  std::vector<Elem> out;
  for (std::uint64_t v = 0; v < map.images.size(); ++v) {
    if (map.images[v].v == v) out.push_back(Elem{v});
  }
  return out;
}

CycleType cycle_type(const PermMap& map) {
  if (!is_permutation(map)) throw std::invalid_argument("cycle_type: not a permutation");
  CycleType ct;
  std::vector<bool> visited(map.images.size(), false);
  for (std::uint64_t v = 0; v < map.images.size(); ++v) {
    if (visited[v]) continue;
    std::uint64_t len = 0;
    std::uint64_t cur = v;
    while (!visited[cur]) {
      visited[cur] = true;
      cur = map.images[cur].v;
      ++len;
    }
    ++ct.counts[len];
  }
  return ct;
}

}  // namespace invol
