#include "invol/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "invol/serialize.hpp"

namespace invol::cli {

namespace {

using io::json;

struct Options {
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> p;
  unsigned n = 1;
  std::string modulus;
  std::string gamma;
  std::string family;
  std::int64_t k = 0;
  bool all = false;
  std::optional<std::uint64_t> q_min;
  std::optional<std::uint64_t> q_max;
  std::string interp = "auto";
  std::string format;
  std::string output;
};

void add_field_options(CLI::App* sub, Options& opts) {
  sub->add_option("--q", opts.q, "Field order (prime power, auto-factored)");
  sub->add_option("--p", opts.p, "Field characteristic");
  sub->add_option("--n", opts.n, "Extension degree (default 1)");
  sub->add_option("--modulus", opts.modulus,
                  "Monic irreducible modulus, low-degree-first, e.g. \"2,0,1\"");
  sub->add_option("--gamma", opts.gamma, "Generator override (element serialization)");
}

void add_output_options(CLI::App* sub, Options& opts) {
  sub->add_option("--format", opts.format, "Output format: json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  sub->add_option("--output,-o", opts.output, "Write the report to a file instead of stdout");
}

std::string resolve_format(const Options& opts) {
  if (!opts.format.empty()) return opts.format;
  if (const char* env = std::getenv("INVOL_FORMAT")) {
    const std::string value = env;
    if (value == "json" || value == "csv" || value == "pretty") return value;
  }
  return "json";
}

Field resolve_field(const Options& opts) {
  std::uint64_t p = 0;
  unsigned n = 1;
  if (opts.q) {
    const auto pp = factor_prime_power(*opts.q);
    if (!pp) throw std::domain_error("--q must be a prime power");
    p = pp->first;
    n = pp->second;
    if (opts.p && *opts.p != p) throw std::domain_error("--p conflicts with --q");
    if (opts.n != 1 && opts.n != n) throw std::domain_error("--n conflicts with --q");
  } else if (opts.p) {
    p = *opts.p;
    n = opts.n;
  } else {
    throw std::domain_error("a field is required: pass --q or --p (with optional --n)");
  }
  if (!opts.modulus.empty()) {
    if (n == 1) throw std::domain_error("--modulus applies to extension fields only");
    return Field(p, n, io::parse_modulus(opts.modulus));
  }
  return Field(p, n);
}

Generator resolve_generator(const Field& field, const Options& opts) {
  if (opts.gamma.empty()) return Generator(field);
  return Generator(field, io::parse_elem(field, opts.gamma));
}

Family resolve_family(const Options& opts) {
  const auto fam = family_from_name(opts.family);
  if (!fam) throw std::domain_error("--family must be one of T1, T2, T3, S1, S2, S3");
  return *fam;
}

SurveyOptions resolve_survey_options(const Options& opts) {
  SurveyOptions so;
  if (opts.interp == "on") so.interp = InterpMode::on;
  else if (opts.interp == "off") so.interp = InterpMode::off;
  else if (opts.interp == "auto") so.interp = InterpMode::auto_small;
  else throw std::domain_error("--interp must be auto, on or off");
  return so;
}

void emit(const Options& opts, std::ostream& out, const std::string& text) {
  if (opts.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + opts.output);
  file << text;
}

std::string pretty_verdict_line(const Field& f, const RecordOutcome& outcome) {
  std::ostringstream line;
  const Record& rec = outcome.record;
  line << family_name(rec.family) << " k=" << rec.k << ": "
       << (outcome.verdict.passed() && outcome.interp_match.value_or(true) ? "PASS" : "FAIL");
  line << " (" << rec.term_count() << " terms, " << outcome.verdict.fixed_point_count
       << " fixed points)";
  if (!outcome.verdict.failed_check.empty()) {
    line << " failed=" << outcome.verdict.failed_check;
    if (outcome.verdict.witness)
      line << " witness=" << io::elem_to_string(f, *outcome.verdict.witness);
  }
  if (outcome.interp_match && !*outcome.interp_match) line << " interp=MISMATCH";
  line << "\n";
  return line.str();
}

std::string pretty_field_report(const FieldReport& report) {
  std::ostringstream text;
  const Field& f = report.field;
  text << "q=" << f.q() << " (p=" << f.p() << ", n=" << f.n() << ")"
       << " gamma=" << io::elem_to_string(f, report.gamma) << " records="
       << report.outcomes.size() << " distinct_permutations=" << report.distinct_permutations
       << " all_passed=" << (report.all_passed ? "yes" : "no") << "\n";
  for (const RecordOutcome& outcome : report.outcomes)
    text << "  " << pretty_verdict_line(f, outcome);
  if (!report.zero_coeff_incidents.empty()) {
    text << "  zero-coefficient incidents:";
    for (const auto& inc : report.zero_coeff_incidents)
      text << " (" << family_name(inc.family) << ", k=" << inc.k << ", " << slot_name(inc.slot)
           << ")";
    text << "\n";
  }
  if (!report.permutation_collisions.empty()) {
    text << "  permutation collisions:";
    for (const auto& group : report.permutation_collisions) {
      text << " {";
      for (std::size_t i = 0; i < group.size(); ++i) {
        if (i) text << ", ";
        text << family_name(group[i].first) << " k=" << group[i].second;
      }
      text << "}";
    }
    text << "\n";
  }
  return text.str();
}

int run_construct(const Options& opts, std::ostream& out) {
  const Field field = resolve_field(opts);
  const Generator gen = resolve_generator(field, opts);
  const Record rec = make_record(resolve_family(opts), gen, opts.k);
  const std::string format = resolve_format(opts);
  if (format == "json") {
    emit(opts, out, io::record_to_json(field, rec).dump(2) + "\n");
  } else if (format == "csv") {
    std::string text = "q,family,k,term_count,terms\n";
    text += std::to_string(field.q());
    text += ",";
    text += family_name(rec.family);
    text += "," + std::to_string(rec.k) + "," + std::to_string(rec.term_count()) + ",\"" +
            io::terms_to_json(field, rec.poly).dump() + "\"\n";
    emit(opts, out, text);
  } else {
    std::ostringstream text;
    text << "q=" << field.q() << " gamma=" << io::elem_to_string(field, rec.gamma)
         << " family=" << family_name(rec.family) << " k=" << rec.k << "\n"
         << "g(x) = " << io::poly_to_string(field, rec.poly) << "\n";
    emit(opts, out, text.str());
  }
  return 0;
}

std::vector<RecordOutcome> verify_outcomes(const Generator& gen, const Options& opts) {
  std::vector<RecordOutcome> outcomes;
  if (opts.all || opts.family.empty()) {
    for (Record& rec : all_records(gen)) {
      RecordOutcome outcome{.record = std::move(rec)};
      outcome.verdict = verify_record(outcome.record, gen);
      outcomes.push_back(std::move(outcome));
    }
  } else {
    RecordOutcome outcome{.record = make_record(resolve_family(opts), gen, opts.k)};
    outcome.verdict = verify_record(outcome.record, gen);
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

int run_verify(const Options& opts, std::ostream& out) {
  const Field field = resolve_field(opts);
  const Generator gen = resolve_generator(field, opts);
  const std::vector<RecordOutcome> outcomes = verify_outcomes(gen, opts);
  const bool all_passed = std::all_of(outcomes.begin(), outcomes.end(),
                                      [](const RecordOutcome& o) { return o.verdict.passed(); });
  const std::string format = resolve_format(opts);
  if (format == "json") {
    if (outcomes.size() == 1 && !opts.all) {
      emit(opts, out, io::outcome_to_json(field, outcomes.front()).dump(2) + "\n");
    } else {
      json j;
      j["q"] = field.q();
      j["gamma"] = io::elem_to_json(field, gen.gamma());
      j["all_passed"] = all_passed;
      json verdicts = json::array();
      for (const RecordOutcome& outcome : outcomes)
        verdicts.push_back(io::outcome_to_json(field, outcome));
      j["verdicts"] = verdicts;
      emit(opts, out, j.dump(2) + "\n");
    }
  } else if (format == "csv") {
    emit(opts, out, io::outcomes_csv(field, outcomes));
  } else {
    std::ostringstream text;
    for (const RecordOutcome& outcome : outcomes) text << pretty_verdict_line(field, outcome);
    text << (all_passed ? "all passed" : "FAILURES PRESENT") << " (" << outcomes.size()
         << " records)\n";
    emit(opts, out, text.str());
  }
  return all_passed ? 0 : 1;
}

int run_interp(const Options& opts, std::ostream& out) {
  const Field field = resolve_field(opts);
  const Generator gen = resolve_generator(field, opts);

  std::vector<Record> records;
  if (opts.all || opts.family.empty()) {
    records = all_records(gen);
  } else {
    records.push_back(make_record(resolve_family(opts), gen, opts.k));
  }

  bool all_match = true;
  json results = json::array();
  std::string csv = "q,family,k,match\n";
  std::ostringstream pretty;
  for (const Record& rec : records) {
    const PermMap expect = expected_map(rec.family, gen, static_cast<std::int64_t>(rec.k));
    const SparsePoly recovered = to_sparse(lagrange(field, expect));
    const bool match = canonical_equal(recovered, rec.poly);
    all_match = all_match && match;
    results.push_back({{"family", family_name(rec.family)},
                       {"k", rec.k},
                       {"constructed_terms", io::terms_to_json(field, rec.poly)},
                       {"interpolated_terms", io::terms_to_json(field, recovered)},
                       {"match", match}});
    csv += std::to_string(field.q());
    csv += ",";
    csv += family_name(rec.family);
    csv += "," + std::to_string(rec.k) + "," + (match ? std::string("true") : std::string("false")) +
           "\n";
    pretty << family_name(rec.family) << " k=" << rec.k << ": "
           << (match ? "interpolation matches" : "INTERPOLATION MISMATCH") << " (g(x) = "
           << io::poly_to_string(field, rec.poly) << ")\n";
  }

  const std::string format = resolve_format(opts);
  if (format == "json") {
    json j;
    j["q"] = field.q();
    j["gamma"] = io::elem_to_json(field, gen.gamma());
    j["all_match"] = all_match;
    j["results"] = results;
    emit(opts, out, j.dump(2) + "\n");
  } else if (format == "csv") {
    emit(opts, out, csv);
  } else {
    emit(opts, out, pretty.str());
  }
  return all_match ? 0 : 1;
}

int run_survey(const Options& opts, std::ostream& out) {
  const SurveyOptions so = resolve_survey_options(opts);
  std::vector<FieldReport> reports;
  if (opts.q_min || opts.q_max) {
    if (!opts.q_min || !opts.q_max)
      throw std::domain_error("range surveys need both --q-min and --q-max");
    reports = survey_range(*opts.q_min, *opts.q_max, so);
  } else {
    const Field field = resolve_field(opts);
    reports.push_back(survey_field(resolve_generator(field, opts), so));
  }

  const bool all_passed = std::all_of(reports.begin(), reports.end(),
                                      [](const FieldReport& r) { return r.all_passed; });
  const std::string format = resolve_format(opts);
  if (format == "json") {
    if (reports.size() == 1 && !opts.q_min) {
      emit(opts, out, io::field_report_to_json(reports.front()).dump(2) + "\n");
    } else {
      json j = json::array();
      for (const FieldReport& report : reports) j.push_back(io::field_report_to_json(report));
      emit(opts, out, j.dump(2) + "\n");
    }
  } else if (format == "csv") {
    emit(opts, out, io::report_csv(reports));
  } else {
    std::string text;
    for (const FieldReport& report : reports) text += pretty_field_report(report);
    emit(opts, out, text);
  }
  return all_passed ? 0 : 1;
}

int run_survey_generators(const Options& opts, std::ostream& out) {
  const Field field = resolve_field(opts);
  const DisjointnessReport report = survey_generators(field, resolve_survey_options(opts));
  const std::string format = resolve_format(opts);
  if (format == "json") {
    emit(opts, out, io::disjointness_to_json(report).dump(2) + "\n");
  } else if (format == "csv") {
    emit(opts, out, io::disjointness_csv(report));
  } else {
    std::ostringstream text;
    text << "q=" << field.q() << " generators=" << report.generators.size()
         << " union_count=" << report.union_count
         << " all_passed=" << (report.all_passed ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < report.generators.size(); ++i) {
      text << "  gamma=" << io::elem_to_string(field, report.generators[i])
           << " distinct_polynomials=" << report.per_generator_counts[i] << "\n";
    }
    emit(opts, out, text.str());
  }
  return report.all_passed ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Involutory permutation polynomials over F_q (q odd, q = 1 mod 3):\n"
               "construction, exhaustive verification, interpolation cross-checks and surveys."};
  app.require_subcommand(1);

  Options opts;

  CLI::App* construct = app.add_subcommand("construct", "Build one polynomial record");
  add_field_options(construct, opts);
  add_output_options(construct, opts);
  construct->add_option("--family", opts.family, "Family: T1, T2, T3, S1, S2, S3")->required();
  construct->add_option("--k", opts.k, "Shift parameter (normalized mod m)");

  CLI::App* verify = app.add_subcommand("verify", "Verify constructed polynomials");
  add_field_options(verify, opts);
  add_output_options(verify, opts);
  verify->add_option("--family", opts.family, "Verify a single family");
  verify->add_option("--k", opts.k, "Shift parameter (normalized mod m)");
  verify->add_flag("--all", opts.all, "Verify all 2(q-1) records (default without --family)");

  CLI::App* interp = app.add_subcommand("interp",
                                        "Lagrange-interpolate the claimed map and compare");
  add_field_options(interp, opts);
  add_output_options(interp, opts);
  interp->add_option("--family", opts.family, "Interpolate a single family");
  interp->add_option("--k", opts.k, "Shift parameter (normalized mod m)");
  interp->add_flag("--all", opts.all, "Cross-check all records (default without --family)");

  CLI::App* survey = app.add_subcommand("survey", "Aggregate verification report");
  add_field_options(survey, opts);
  add_output_options(survey, opts);
  survey->add_option("--q-min", opts.q_min, "Range survey: smallest order");
  survey->add_option("--q-max", opts.q_max, "Range survey: largest order");
  survey->add_option("--interp", opts.interp, "Interpolation cross-check: auto, on, off")
      ->check(CLI::IsMember({"auto", "on", "off"}));

  CLI::App* survey_gens =
      app.add_subcommand("survey-generators", "Distinct-polynomial survey across all generators");
  add_field_options(survey_gens, opts);
  add_output_options(survey_gens, opts);
  survey_gens->add_option("--interp", opts.interp, "Interpolation cross-check: auto, on, off")
      ->check(CLI::IsMember({"auto", "on", "off"}));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return run_construct(opts, out);
    if (verify->parsed()) return run_verify(opts, out);
    if (interp->parsed()) return run_interp(opts, out);
    if (survey->parsed()) return run_survey(opts, out);
    if (survey_gens->parsed()) return run_survey_generators(opts, out);
    err << "no subcommand given\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace invol::cli
