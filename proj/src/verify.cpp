#include "invol/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace invol {

namespace {

void fail(Verdict& v, const char* check, std::optional<Elem> witness) {
  if (v.failed_check.empty()) {
    v.failed_check = check;
    v.witness = witness;
  }
}

}  // namespace

Verdict verify_record(const Record& rec, const Generator& g) {
  if (rec.gamma != g.gamma())
    throw std::invalid_argument("verify_record: record was built from a different generator");

  const Field& F = g.field();
  const std::uint64_t q = F.q();
  const std::uint64_t m = g.m();

  Verdict v;
  v.term_count = rec.term_count();

  const PermMap actual = eval_all(F, rec.poly);

  const std::optional<Elem> collision = first_collision(actual);
  v.is_permutation = !collision.has_value();
  if (collision) fail(v, "permutation", collision);

  const PermMap expect = expected_map(rec.family, g, static_cast<std::int64_t>(rec.k));
  v.matches_expected = true;
  for (std::uint64_t x = 0; x < q; ++x) {
    if (actual.images[x] != expect.images[x]) {
      v.matches_expected = false;
      fail(v, "expected_map", Elem{x});
      break;
    }
  }

  if (v.is_permutation) {
    v.is_involution = true;
    for (std::uint64_t x = 0; x < q; ++x) {
      if (actual.images[actual.images[x].v].v != x) {
        v.is_involution = false;
        fail(v, "involution", Elem{x});
        break;
      }
    }
  }

  // Expected fixed set: zero plus the whole fixed coset.
  std::vector<Elem> expected_fixed;
  expected_fixed.reserve(m + 1);
  expected_fixed.push_back(F.zero());
  const std::int64_t fc = fixed_coset(rec.family);
  for (std::uint64_t i = 0; i < m; ++i) {
    expected_fixed.push_back(g.gamma_pow(static_cast<std::int64_t>(3 * i) + fc));
  }
  std::sort(expected_fixed.begin(), expected_fixed.end());

  const std::vector<Elem> actual_fixed = fixed_points(actual);
  v.fixed_point_count = actual_fixed.size();
  v.fixed_points_ok = actual_fixed == expected_fixed;
  if (!v.fixed_points_ok) {
    std::optional<Elem> witness;
    for (std::size_t i = 0; i < std::max(actual_fixed.size(), expected_fixed.size()); ++i) {
      if (i >= actual_fixed.size() || i >= expected_fixed.size() ||
          actual_fixed[i] != expected_fixed[i]) {
        witness = i < actual_fixed.size() ? actual_fixed[i] : expected_fixed[i];
        break;
      }
    }
    fail(v, "fixed_points", witness);
  }

  if (v.is_permutation) {
    v.cycle_type = cycle_type(actual);
    CycleType expected_ct;
    expected_ct.counts[1] = m + 1;  // (q+2)/3
    if (m > 0) expected_ct.counts[2] = m;
    v.cycle_type_ok = v.cycle_type == expected_ct;
    if (!v.cycle_type_ok) {
      // Smallest element on a cycle of length other than 1 or 2, if any.
      std::optional<Elem> witness;
      for (std::uint64_t x = 0; x < q; ++x) {
        const std::uint64_t y = actual.images[x].v;
        if (y != x && actual.images[y].v != x) {
          witness = Elem{x};
          break;
        }
      }
      fail(v, "cycle_type", witness);
    }
  }

  const std::size_t bound = is_trinomial(rec.family) ? 3 : 6;
  v.term_count_ok = v.term_count <= bound;
  if (!v.term_count_ok) fail(v, "term_count", std::nullopt);

  return v;
}

}  // namespace invol
