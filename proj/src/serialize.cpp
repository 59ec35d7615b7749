#include "invol/serialize.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace invol::io {

namespace {

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw std::invalid_argument("expected an unsigned integer, got '" + std::string(text) + "'");
  return value;
}

std::vector<std::uint64_t> parse_number_list(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == ' ') continue;
    cleaned.push_back(ch);
  }
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    const std::size_t comma = cleaned.find(',', start);
    const std::string_view piece = std::string_view(cleaned).substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_u64(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

json elem_to_json(const Field& f, Elem x) {
  if (f.n() == 1) return x.v;
  return json(f.coeffs(x));
}

Elem parse_elem(const Field& f, std::string_view text) {
  if (text.find(',') != std::string_view::npos || text.find('[') != std::string_view::npos) {
    const std::vector<std::uint64_t> digits = parse_number_list(text);
    std::vector<std::uint32_t> coeffs;
    coeffs.reserve(digits.size());
    for (std::uint64_t d : digits) {
      if (d >= f.p()) throw std::invalid_argument("element digit out of range");
      coeffs.push_back(static_cast<std::uint32_t>(d));
    }
    return f.from_coeffs(coeffs);
  }
  return f.elem(parse_u64(text));
}

std::vector<std::uint32_t> parse_modulus(std::string_view text) {
  const std::vector<std::uint64_t> digits = parse_number_list(text);
  std::vector<std::uint32_t> out;
  out.reserve(digits.size());
  for (std::uint64_t d : digits) out.push_back(static_cast<std::uint32_t>(d));
  return out;
}

json terms_to_json(const Field& f, const SparsePoly& poly) {
  json terms = json::array();
  for (const Term& t : poly.terms) terms.push_back({t.exponent, elem_to_json(f, t.coeff)});
  return terms;
}

json record_to_json(const Field& f, const Record& rec) {
  json j;
  j["q"] = f.q();
  j["p"] = f.p();
  j["n"] = f.n();
  j["modulus"] = f.modulus().empty() ? json(nullptr) : json(f.modulus());
  j["family"] = family_name(rec.family);
  j["gamma"] = elem_to_json(f, rec.gamma);
  j["k"] = rec.k;
  j["terms"] = terms_to_json(f, rec.poly);
  j["term_count"] = rec.term_count();
  return j;
}

json verdict_to_json(const Field& f, const Record& rec, const Verdict& v) {
  json j;
  j["record"] = record_to_json(f, rec);
  j["is_permutation"] = v.is_permutation;
  j["matches_expected"] = v.matches_expected;
  j["is_involution"] = v.is_involution;
  j["fixed_point_count"] = v.fixed_point_count;
  json ct = json::object();
  for (const auto& [len, mult] : v.cycle_type.counts) ct[std::to_string(len)] = mult;
  j["cycle_type"] = ct;
  j["term_count"] = v.term_count;
  j["witness"] = v.witness ? elem_to_json(f, *v.witness) : json(nullptr);
  j["passed"] = v.passed();
  j["failed_check"] = v.failed_check.empty() ? json(nullptr) : json(v.failed_check);
  return j;
}

json outcome_to_json(const Field& f, const RecordOutcome& outcome) {
  json j = verdict_to_json(f, outcome.record, outcome.verdict);
  if (outcome.interp_match) j["interp_match"] = *outcome.interp_match;
  return j;
}

json field_report_to_json(const FieldReport& report) {
  const Field& f = report.field;
  json j;
  j["q"] = f.q();
  j["p"] = f.p();
  j["n"] = f.n();
  j["modulus"] = f.modulus().empty() ? json(nullptr) : json(f.modulus());
  j["gamma"] = elem_to_json(f, report.gamma);
  j["all_passed"] = report.all_passed;
  j["record_count"] = report.outcomes.size();
  j["distinct_permutations"] = report.distinct_permutations;
  json histogram = json::object();
  for (const auto& [terms, freq] : report.sparsity_histogram)
    histogram[std::to_string(terms)] = freq;
  j["sparsity_histogram"] = histogram;
  json incidents = json::array();
  for (const ZeroCoeffIncident& inc : report.zero_coeff_incidents) {
    incidents.push_back({{"family", family_name(inc.family)},
                         {"k", inc.k},
                         {"slot", slot_name(inc.slot)}});
  }
  j["zero_coeff_incidents"] = incidents;
  json collisions = json::array();
  for (const auto& group : report.permutation_collisions) {
    json ids = json::array();
    for (const auto& [family, k] : group)
      ids.push_back({{"family", family_name(family)}, {"k", k}});
    collisions.push_back(ids);
  }
  j["permutation_collisions"] = collisions;
  j["interp_checked"] = report.interp_checked;
  json verdicts = json::array();
  for (const RecordOutcome& outcome : report.outcomes)
    verdicts.push_back(outcome_to_json(f, outcome));
  j["verdicts"] = verdicts;
  return j;
}

json disjointness_to_json(const DisjointnessReport& report) {
  const Field& f = report.field;
  json j;
  j["q"] = f.q();
  j["p"] = f.p();
  j["n"] = f.n();
  j["modulus"] = f.modulus().empty() ? json(nullptr) : json(f.modulus());
  json counts = json::array();
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    counts.push_back({{"gamma", elem_to_json(f, report.generators[i])},
                      {"count", report.per_generator_counts[i]}});
  }
  j["per_generator_counts"] = counts;
  j["union_count"] = report.union_count;
  j["overlap_matrix"] = report.overlap_matrix;
  j["all_passed"] = report.all_passed;
  return j;
}

std::string elem_to_string(const Field& f, Elem x) {
  if (f.n() == 1) return std::to_string(x.v);
  std::string out = "[";
  const auto digits = f.coeffs(x);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(digits[i]);
  }
  out += "]";
  return out;
}

std::string poly_to_string(const Field& f, const SparsePoly& poly) {
  if (poly.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < poly.terms.size(); ++i) {
    const Term& t = poly.terms[i];
    if (i) out += " + ";
    const bool unit_coeff = f.n() == 1 && t.coeff.v == 1;
    if (!unit_coeff || t.exponent == 0) out += elem_to_string(f, t.coeff);
    if (t.exponent >= 1) {
      out += "x";
      if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
    }
  }
  return out;
}

namespace {

void append_csv_cell(std::string& out, const std::string& cell) {
  if (cell.find(',') != std::string::npos || cell.find('"') != std::string::npos) {
    out += '"';
    for (char ch : cell) {
      if (ch == '"') out += '"';
      out += ch;
    }
    out += '"';
  } else {
    out += cell;
  }
}

}  // namespace

std::string outcomes_csv(const Field& f, const std::vector<RecordOutcome>& outcomes) {
  std::string out = "q,family,k,term_count,passed\n";
  for (const RecordOutcome& outcome : outcomes) {
    out += std::to_string(f.q());
    out += ",";
    out += family_name(outcome.record.family);
    out += ",";
    out += std::to_string(outcome.record.k);
    out += ",";
    out += std::to_string(outcome.record.term_count());
    out += ",";
    const bool ok =
        outcome.verdict.passed() && outcome.interp_match.value_or(true);
    out += ok ? "true" : "false";
    out += "\n";
  }
  return out;
}

std::string report_csv(const std::vector<FieldReport>& reports) {
  std::string out = "q,family,k,term_count,passed\n";
  for (const FieldReport& report : reports) {
    std::string body = outcomes_csv(report.field, report.outcomes);
    out += body.substr(body.find('\n') + 1);
  }
  return out;
}

std::string disjointness_csv(const DisjointnessReport& report) {
  std::string out = "q,gamma,distinct_polynomials\n";
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    out += std::to_string(report.field.q());
    out += ",";
    append_csv_cell(out, elem_to_string(report.field, report.generators[i]));
    out += ",";
    out += std::to_string(report.per_generator_counts[i]);
    out += "\n";
  }
  return out;
}

}  // namespace invol::io
