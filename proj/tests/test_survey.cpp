#include "doctest.h"

#include "invol/serialize.hpp"
#include "invol/survey.hpp"

using namespace invol;

TEST_CASE("survey of F_7 with the canonical generator") {
  const Field f(7);
  const FieldReport report = survey_field(Generator(f));

  CHECK(report.outcomes.size() == 12);
  CHECK(report.all_passed);
  for (const RecordOutcome& outcome : report.outcomes) {
    CHECK(outcome.verdict.passed());
    REQUIRE(outcome.interp_match.has_value());  // q = 7 <= auto threshold
    CHECK(*outcome.interp_match);
  }

  // shift and reflection pairings coincide at m = 2
  CHECK(report.distinct_permutations == 6);

  CHECK(report.sparsity_histogram ==
        std::map<std::size_t, std::uint64_t>{{1, 6}, {3, 6}});

  const std::vector<ZeroCoeffIncident> expected_incidents = {
      {Family::T1, 1, 1}, {Family::T1, 1, 2}, {Family::T2, 0, 1},
      {Family::T2, 0, 2}, {Family::T3, 1, 1}, {Family::T3, 1, 2},
  };
  CHECK(report.zero_coeff_incidents == expected_incidents);

  using Ids = std::vector<std::pair<Family, std::uint64_t>>;
  const std::vector<Ids> expected_collisions = {
      {{Family::T1, 0}, {Family::S1, 1}}, {{Family::T1, 1}, {Family::S1, 0}},
      {{Family::T2, 0}, {Family::S2, 0}}, {{Family::T2, 1}, {Family::S2, 1}},
      {{Family::T3, 0}, {Family::S3, 0}}, {{Family::T3, 1}, {Family::S3, 1}},
  };
  CHECK(report.permutation_collisions == expected_collisions);
}

TEST_CASE("survey of F_13: all distinct, no collisions") {
  const FieldReport report = survey_field(Generator(Field(13)));
  CHECK(report.outcomes.size() == 24);
  CHECK(report.all_passed);
  CHECK(report.distinct_permutations == 24);
  CHECK(report.permutation_collisions.empty());

  std::uint64_t total = 0;
  for (const auto& [terms, freq] : report.sparsity_histogram) total += freq;
  CHECK(total == 24);
}

TEST_CASE("interpolation mode control") {
  const Field f(13);
  const FieldReport off = survey_field(Generator(f), {.interp = InterpMode::off});
  CHECK_FALSE(off.interp_checked);
  CHECK_FALSE(off.outcomes.front().interp_match.has_value());
  CHECK(off.all_passed);

  const FieldReport on = survey_field(Generator(f), {.interp = InterpMode::on});
  CHECK(on.interp_checked);
  CHECK(on.outcomes.front().interp_match.value());
}

TEST_CASE("generator survey over F_7") {
  const Field f(7);
  const DisjointnessReport report = survey_generators(f);

  CHECK(report.generators == std::vector<Elem>{{3}, {5}});
  REQUIRE(report.per_generator_counts.size() == 2);
  CHECK(report.per_generator_counts[0] == 6);
  CHECK(report.per_generator_counts[1] == 6);
  CHECK(report.all_passed);

  CHECK(report.union_count >= 6);
  CHECK(report.union_count <= 12);
  REQUIRE(report.overlap_matrix.size() == 2);
  CHECK(report.overlap_matrix[0][0] == 6);
  CHECK(report.overlap_matrix[1][1] == 6);
  CHECK(report.overlap_matrix[0][1] == report.overlap_matrix[1][0]);
  // inclusion-exclusion ties the three counts together
  CHECK(report.union_count == 12 - report.overlap_matrix[0][1]);
}

TEST_CASE("generator survey over F_13 covers phi(12) = 4 generators") {
  const DisjointnessReport report = survey_generators(Field(13));
  CHECK(report.generators.size() == 4);
  for (std::uint64_t count : report.per_generator_counts) CHECK(count == 24);
  CHECK(report.all_passed);
}

TEST_CASE("generator survey is reproducible bit for bit") {
  const Field f(13);
  const std::string first = invol::io::disjointness_to_json(survey_generators(f)).dump(2);
  const std::string second = invol::io::disjointness_to_json(survey_generators(f)).dump(2);
  CHECK(first == second);
}

TEST_CASE("admissible orders") {
  CHECK(admissible_orders(7, 30) == std::vector<std::uint64_t>{7, 13, 19, 25});
  CHECK(admissible_orders(26, 50) == std::vector<std::uint64_t>{31, 37, 43, 49});
  CHECK(admissible_orders(8, 12).empty());
  CHECK(admissible_orders(12, 8).empty());
}

TEST_CASE("range survey") {
  const std::vector<FieldReport> reports = survey_range(7, 30);
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].field.q() == 7);
  CHECK(reports[1].field.q() == 13);
  CHECK(reports[2].field.q() == 19);
  CHECK(reports[3].field.q() == 25);
  for (const FieldReport& report : reports) {
    CHECK(report.all_passed);
    CHECK(report.outcomes.size() == 2 * (report.field.q() - 1));
    CHECK(report.distinct_permutations <= report.outcomes.size());
  }
}
