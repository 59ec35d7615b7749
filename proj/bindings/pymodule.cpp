#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

#include "invol/serialize.hpp"
#include "invol/survey.hpp"

namespace py = pybind11;
using namespace invol;

namespace {

Family family_arg(const std::string& name) {
  const auto fam = family_from_name(name);
  if (!fam) throw std::invalid_argument("unknown family: " + name);
  return *fam;
}

InterpMode interp_arg(const std::string& mode) {
  if (mode == "on") return InterpMode::on;
  if (mode == "off") return InterpMode::off;
  if (mode == "auto") return InterpMode::auto_small;
  throw std::invalid_argument("interp must be 'auto', 'on' or 'off'");
}

// Records and verdicts cross into Python bundled with their field so they
// can serialize themselves.
struct PyRecord {
  Field field;
  Record rec;
};

struct PyVerdict {
  Field field;
  Record rec;
  Verdict verdict;
};

std::vector<std::pair<std::uint64_t, std::uint64_t>> term_pairs(const SparsePoly& poly) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(poly.terms.size());
  for (const Term& t : poly.terms) out.emplace_back(t.exponent, t.coeff.v);
  return out;
}

std::vector<std::uint64_t> map_values(const PermMap& map) {
  std::vector<std::uint64_t> out;
  out.reserve(map.images.size());
  for (Elem e : map.images) out.push_back(e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Involutory permutation polynomials over F_q: construction, verification, surveys";

  py::class_<Field>(mod, "Field")
      .def(py::init([](std::uint64_t p, unsigned n,
                       std::optional<std::vector<std::uint32_t>> modulus) {
             if (modulus) return Field(p, n, std::move(*modulus));
             return Field(p, n);
           }),
           py::arg("p"), py::arg("n") = 1, py::arg("modulus") = py::none())
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("n", &Field::n)
      .def_property_readonly("q", &Field::q)
      .def_property_readonly("m",
                             [](const Field& f) -> std::optional<std::uint64_t> { return f.m(); })
      .def_property_readonly("modulus",
                             [](const Field& f) -> std::optional<std::vector<std::uint32_t>> {
                               if (f.modulus().empty()) return std::nullopt;
                               return f.modulus();
                             })
      .def("add", [](const Field& f, std::uint64_t a, std::uint64_t b) {
        return f.add(f.elem(a), f.elem(b)).v;
      })
      .def("sub", [](const Field& f, std::uint64_t a, std::uint64_t b) {
        return f.sub(f.elem(a), f.elem(b)).v;
      })
      .def("neg", [](const Field& f, std::uint64_t a) { return f.neg(f.elem(a)).v; })
      .def("mul", [](const Field& f, std::uint64_t a, std::uint64_t b) {
        return f.mul(f.elem(a), f.elem(b)).v;
      })
      .def("inv", [](const Field& f, std::uint64_t a) { return f.inv(f.elem(a)).v; })
      .def("pow", [](const Field& f, std::uint64_t x, std::int64_t e) {
        return f.pow(f.elem(x), e).v;
      })
      .def("order", [](const Field& f, std::uint64_t x) { return f.order(f.elem(x)); })
      .def("coeffs", [](const Field& f, std::uint64_t x) { return f.coeffs(f.elem(x)); })
      .def("from_coeffs",
           [](const Field& f, const std::vector<std::uint32_t>& c) { return f.from_coeffs(c).v; })
      .def("find_generator", [](const Field& f) { return f.find_generator().v; })
      .def("generators",
           [](const Field& f) {
             std::vector<std::uint64_t> out;
             for (Elem g : f.generators()) out.push_back(g.v);
             return out;
           })
      .def("is_generator", [](const Field& f, std::uint64_t x) { return f.is_generator(f.elem(x)); })
      .def("__repr__", [](const Field& f) {
        return "Field(p=" + std::to_string(f.p()) + ", n=" + std::to_string(f.n()) +
               ", q=" + std::to_string(f.q()) + ")";
      });

  py::class_<Generator>(mod, "Generator")
      .def(py::init([](const Field& f, std::optional<std::uint64_t> gamma) {
             if (gamma) return Generator(f, f.elem(*gamma));
             return Generator(f);
           }),
           py::arg("field"), py::arg("gamma") = py::none())
      .def_property_readonly("field", &Generator::field)
      .def_property_readonly("gamma", [](const Generator& g) { return g.gamma().v; })
      .def_property_readonly("omega", [](const Generator& g) { return g.omega().v; })
      .def_property_readonly("m", &Generator::m)
      .def("gamma_pow", [](const Generator& g, std::int64_t e) { return g.gamma_pow(e).v; })
      .def("dlog", [](const Generator& g, std::uint64_t x) { return g.dlog(g.field().elem(x)); })
      .def("coset_index",
           [](const Generator& g, std::uint64_t x) { return g.coset_index(g.field().elem(x)); })
      .def("__repr__", [](const Generator& g) {
        return "Generator(q=" + std::to_string(g.field().q()) +
               ", gamma=" + std::to_string(g.gamma().v) + ")";
      });

  py::class_<PyRecord>(mod, "Record")
      .def_property_readonly("family",
                             [](const PyRecord& r) { return std::string(family_name(r.rec.family)); })
      .def_property_readonly("k", [](const PyRecord& r) { return r.rec.k; })
      .def_property_readonly("gamma", [](const PyRecord& r) { return r.rec.gamma.v; })
      .def_property_readonly("terms", [](const PyRecord& r) { return term_pairs(r.rec.poly); })
      .def_property_readonly("term_count", [](const PyRecord& r) { return r.rec.term_count(); })
      .def_property_readonly("coeff_slots",
                             [](const PyRecord& r) {
                               std::vector<std::uint64_t> out;
                               for (Elem e : r.rec.coeffs.slots) out.push_back(e.v);
                               return out;
                             })
      .def("eval",
           [](const PyRecord& r, std::uint64_t x) {
             return eval_poly(r.field, r.rec.poly, r.field.elem(x)).v;
           })
      .def("images",
           [](const PyRecord& r) { return map_values(eval_all(r.field, r.rec.poly)); })
      .def("json", [](const PyRecord& r) { return io::record_to_json(r.field, r.rec).dump(); })
      .def("__repr__", [](const PyRecord& r) {
        return "Record(" + std::string(family_name(r.rec.family)) + ", k=" +
               std::to_string(r.rec.k) + ", " + io::poly_to_string(r.field, r.rec.poly) + ")";
      });

  py::class_<PyVerdict>(mod, "Verdict")
      .def_property_readonly("passed", [](const PyVerdict& v) { return v.verdict.passed(); })
      .def_property_readonly("is_permutation",
                             [](const PyVerdict& v) { return v.verdict.is_permutation; })
      .def_property_readonly("matches_expected",
                             [](const PyVerdict& v) { return v.verdict.matches_expected; })
      .def_property_readonly("is_involution",
                             [](const PyVerdict& v) { return v.verdict.is_involution; })
      .def_property_readonly("fixed_point_count",
                             [](const PyVerdict& v) { return v.verdict.fixed_point_count; })
      .def_property_readonly("term_count", [](const PyVerdict& v) { return v.verdict.term_count; })
      .def_property_readonly("cycle_type",
                             [](const PyVerdict& v) { return v.verdict.cycle_type.counts; })
      .def_property_readonly("witness",
                             [](const PyVerdict& v) -> std::optional<std::uint64_t> {
                               if (!v.verdict.witness) return std::nullopt;
                               return v.verdict.witness->v;
                             })
      .def_property_readonly("failed_check",
                             [](const PyVerdict& v) -> std::optional<std::string> {
                               if (v.verdict.failed_check.empty()) return std::nullopt;
                               return v.verdict.failed_check;
                             })
      .def("json",
           [](const PyVerdict& v) { return io::verdict_to_json(v.field, v.rec, v.verdict).dump(); })
      .def("__repr__", [](const PyVerdict& v) {
        return std::string("Verdict(passed=") + (v.verdict.passed() ? "True" : "False") + ")";
      });

  py::class_<FieldReport>(mod, "FieldReport")
      .def_property_readonly("q", [](const FieldReport& r) { return r.field.q(); })
      .def_property_readonly("gamma", [](const FieldReport& r) { return r.gamma.v; })
      .def_property_readonly("all_passed", [](const FieldReport& r) { return r.all_passed; })
      .def_property_readonly("record_count", [](const FieldReport& r) { return r.outcomes.size(); })
      .def_property_readonly("distinct_permutations",
                             [](const FieldReport& r) { return r.distinct_permutations; })
      .def_property_readonly("sparsity_histogram",
                             [](const FieldReport& r) { return r.sparsity_histogram; })
      .def("json", [](const FieldReport& r) { return io::field_report_to_json(r).dump(); })
      .def("__repr__", [](const FieldReport& r) {
        return "FieldReport(q=" + std::to_string(r.field.q()) +
               ", all_passed=" + (r.all_passed ? "True" : "False") + ")";
      });

  py::class_<DisjointnessReport>(mod, "DisjointnessReport")
      .def_property_readonly("q", [](const DisjointnessReport& r) { return r.field.q(); })
      .def_property_readonly("generators",
                             [](const DisjointnessReport& r) {
                               std::vector<std::uint64_t> out;
                               for (Elem g : r.generators) out.push_back(g.v);
                               return out;
                             })
      .def_property_readonly("per_generator_counts",
                             [](const DisjointnessReport& r) { return r.per_generator_counts; })
      .def_property_readonly("union_count",
                             [](const DisjointnessReport& r) { return r.union_count; })
      .def_property_readonly("overlap_matrix",
                             [](const DisjointnessReport& r) { return r.overlap_matrix; })
      .def_property_readonly("all_passed",
                             [](const DisjointnessReport& r) { return r.all_passed; })
      .def("json", [](const DisjointnessReport& r) { return io::disjointness_to_json(r).dump(); })
      .def("__repr__", [](const DisjointnessReport& r) {
        return "DisjointnessReport(q=" + std::to_string(r.field.q()) + ")";
      });

  mod.def(
      "construct",
      [](const Generator& g, const std::string& family, std::int64_t k) {
        return PyRecord{g.field(), make_record(family_arg(family), g, k)};
      },
      py::arg("generator"), py::arg("family"), py::arg("k"));

  mod.def(
      "all_records",
      [](const Generator& g) {
        std::vector<PyRecord> out;
        for (Record& rec : all_records(g)) out.push_back({g.field(), std::move(rec)});
        return out;
      },
      py::arg("generator"));

  mod.def(
      "expected_map",
      [](const Generator& g, const std::string& family, std::int64_t k) {
        return map_values(expected_map(family_arg(family), g, k));
      },
      py::arg("generator"), py::arg("family"), py::arg("k"));

  mod.def(
      "verify",
      [](const Generator& g, const PyRecord& rec) {
        return PyVerdict{g.field(), rec.rec, verify_record(rec.rec, g)};
      },
      py::arg("generator"), py::arg("record"));

  mod.def(
      "lagrange",
      [](const Field& f, const std::vector<std::uint64_t>& images) {
        PermMap map;
        map.images.reserve(images.size());
        for (std::uint64_t v : images) map.images.push_back(f.elem(v));
        std::vector<std::uint64_t> out;
        for (Elem e : lagrange(f, map).coeffs) out.push_back(e.v);
        return out;
      },
      py::arg("field"), py::arg("images"),
      "Dense coefficient list (degree < q) of the unique interpolating polynomial");

  mod.def(
      "survey_field",
      [](const Generator& g, const std::string& interp) {
        return survey_field(g, {.interp = interp_arg(interp)});
      },
      py::arg("generator"), py::arg("interp") = "auto");

  mod.def(
      "survey_generators",
      [](const Field& f, const std::string& interp) {
        return survey_generators(f, {.interp = interp_arg(interp)});
      },
      py::arg("field"), py::arg("interp") = "auto");

  mod.def(
      "survey_range",
      [](std::uint64_t q_min, std::uint64_t q_max, const std::string& interp) {
        return survey_range(q_min, q_max, {.interp = interp_arg(interp)});
      },
      py::arg("q_min"), py::arg("q_max"), py::arg("interp") = "auto");

  mod.def("admissible_orders", &admissible_orders, py::arg("q_min"), py::arg("q_max"),
          "Odd prime powers q = 1 (mod 3) in the range");

  mod.attr("FAMILIES") = std::vector<std::string>{"T1", "T2", "T3", "S1", "S2", "S3"};
}
