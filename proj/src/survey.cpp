#include "invol/survey.hpp"

#include <algorithm>
#include <set>

namespace invol {

namespace {

bool interp_enabled(InterpMode mode, std::uint64_t q) {
  switch (mode) {
    case InterpMode::off: return false;
    case InterpMode::on: return true;
    case InterpMode::auto_small: return q <= kInterpAutoMaxQ;
  }
  return false;
}

// Canonical serialized form of a polynomial, used for set comparisons.
std::vector<std::pair<std::uint64_t, std::uint64_t>> poly_key(const SparsePoly& poly) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> key;
  key.reserve(poly.terms.size());
  for (const Term& t : poly.terms) key.emplace_back(t.exponent, t.coeff.v);
  return key;
}

}  // namespace

FieldReport survey_field(const Generator& g, SurveyOptions opts) {
  const Field& F = g.field();
  FieldReport report{.field = F, .gamma = g.gamma()};
  const bool with_interp = interp_enabled(opts.interp, F.q());
  report.interp_checked = with_interp;

  std::vector<Record> records = all_records(g);
  report.outcomes.reserve(records.size());
  report.all_passed = true;

  std::map<std::vector<Elem>, std::vector<std::size_t>> by_images;

  for (std::size_t idx = 0; idx < records.size(); ++idx) {
    RecordOutcome outcome{.record = std::move(records[idx])};
    const Record& rec = outcome.record;

    outcome.verdict = verify_record(rec, g);
    report.all_passed = report.all_passed && outcome.verdict.passed();

    if (with_interp) {
      const PermMap expect = expected_map(rec.family, g, static_cast<std::int64_t>(rec.k));
      const SparsePoly recovered = to_sparse(lagrange(F, expect));
      outcome.interp_match = canonical_equal(recovered, rec.poly);
      report.all_passed = report.all_passed && *outcome.interp_match;
    }

    ++report.sparsity_histogram[rec.term_count()];

    for (unsigned slot = 0; slot < rec.coeffs.slots.size(); ++slot) {
      if (rec.coeffs.slots[slot].v == 0) {
        report.zero_coeff_incidents.push_back({rec.family, rec.k, slot});
      }
    }

    by_images[eval_all(F, rec.poly).images].push_back(idx);
    report.outcomes.push_back(std::move(outcome));
  }

  report.distinct_permutations = by_images.size();
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& [images, indices] : by_images) {
    if (indices.size() > 1) groups.push_back(indices);
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (const auto& group : groups) {
    std::vector<std::pair<Family, std::uint64_t>> ids;
    ids.reserve(group.size());
    for (std::size_t idx : group) {
      const Record& rec = report.outcomes[idx].record;
      ids.emplace_back(rec.family, rec.k);
    }
    report.permutation_collisions.push_back(std::move(ids));
  }
  return report;
}

DisjointnessReport survey_generators(const Field& f, SurveyOptions opts) {
  DisjointnessReport report{.field = f};
  report.generators = f.generators();
  report.all_passed = true;

  using PolySet = std::set<std::vector<std::pair<std::uint64_t, std::uint64_t>>>;
  std::vector<PolySet> sets;
  sets.reserve(report.generators.size());
  PolySet all;

  const bool with_interp = interp_enabled(opts.interp, f.q());
  for (Elem gamma : report.generators) {
    const Generator g(f, gamma);
    PolySet current;
    for (const Record& rec : all_records(g)) {
      report.all_passed = report.all_passed && verify_record(rec, g).passed();
      if (with_interp) {
        const PermMap expect = expected_map(rec.family, g, static_cast<std::int64_t>(rec.k));
        const bool match = canonical_equal(to_sparse(lagrange(f, expect)), rec.poly);
        report.all_passed = report.all_passed && match;
      }
      current.insert(poly_key(rec.poly));
    }
    all.insert(current.begin(), current.end());
    report.per_generator_counts.push_back(current.size());
    sets.push_back(std::move(current));
  }

  report.union_count = all.size();
  report.overlap_matrix.assign(sets.size(), std::vector<std::uint64_t>(sets.size(), 0));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (j < i) {
        report.overlap_matrix[i][j] = report.overlap_matrix[j][i];
        continue;
      }
      std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> common;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(common));
      report.overlap_matrix[i][j] = common.size();
    }
  }
  return report;
}

std::vector<std::uint64_t> admissible_orders(std::uint64_t q_min, std::uint64_t q_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = std::max<std::uint64_t>(q_min, 7); q <= q_max; ++q) {
    if (q % 2 == 0 || q % 3 != 1) continue;
    if (factor_prime_power(q)) out.push_back(q);
  }
  return out;
}

std::vector<FieldReport> survey_range(std::uint64_t q_min, std::uint64_t q_max,
                                      SurveyOptions opts) {
  std::vector<FieldReport> out;
  for (std::uint64_t q : admissible_orders(q_min, q_max)) {
    const auto [p, n] = *factor_prime_power(q);
    const Field field(p, n);
    out.push_back(survey_field(Generator(field), opts));
  }
  return out;
}

}  // namespace invol
