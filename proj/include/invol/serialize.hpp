#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "invol/interpolate.hpp"
#include "invol/survey.hpp"

namespace invol::io {

using json = nlohmann::ordered_json;

/// Prime-field elements serialize as a decimal integer, extension-field
/// elements as the digit list [c0, ..., c_{n-1}].
json elem_to_json(const Field& f, Elem x);

/// Accepts a decimal canonical index or a bracketed/comma digit list.
Elem parse_elem(const Field& f, std::string_view text);

/// Full monic coefficient list "c0,c1,...,1" (brackets optional).
std::vector<std::uint32_t> parse_modulus(std::string_view text);

json terms_to_json(const Field& f, const SparsePoly& poly);
json record_to_json(const Field& f, const Record& rec);
json verdict_to_json(const Field& f, const Record& rec, const Verdict& v);
json outcome_to_json(const Field& f, const RecordOutcome& outcome);
json field_report_to_json(const FieldReport& report);
json disjointness_to_json(const DisjointnessReport& report);

std::string elem_to_string(const Field& f, Elem x);
std::string poly_to_string(const Field& f, const SparsePoly& poly);

/// CSV summary: one row per record, "q,family,k,term_count,passed".
std::string report_csv(const std::vector<FieldReport>& reports);
std::string outcomes_csv(const Field& f, const std::vector<RecordOutcome>& outcomes);
std::string disjointness_csv(const DisjointnessReport& report);

}  // namespace invol::io
