#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "belfl/comparative.hpp"
#include "belfl/entail.hpp"
#include "belfl/error.hpp"
#include "belfl/formats.hpp"
#include "belfl/mel.hpp"
#include "belfl/session.hpp"

namespace py = pybind11;
using namespace belfl;

// Rationals cross the boundary as fractions.Fraction; ints, strings such as
// "3/5" or "0.25", and floats (read through their repr) are accepted.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || src.is_none()) return false;
    try {
      value = parse_rational(std::string(py::str(src)));
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::int_(py::str(r.get_num().get_str()));
    py::object den = py::int_(py::str(r.get_den().get_str()));
    return fraction(num, den).release();
  }
};
}  // namespace pybind11::detail

namespace {

py::object to_py(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

Vocabulary vocab_for(const std::optional<std::vector<std::string>>& vars,
                     const std::vector<std::string>& texts) {
  if (vars) return Vocabulary(*vars);
  std::vector<std::string> names;
  for (const auto& t : texts) {
    for (auto& v : scan_variables(t)) {
      if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
    }
  }
  return Vocabulary(names);
}

Session make_session(const std::vector<std::string>& theory, const std::string& query,
                     const std::optional<std::vector<std::string>>& vars,
                     const std::string& model_class) {
  std::string text;
  if (vars) {
    text += "vars";
    for (const auto& n : *vars) text += " " + n;
    text += ";\n";
  }
  text += "class " + model_class + ";\n";
  for (const auto& a : theory) text += "assert " + a + ";\n";
  text += "query " + query + ";\n";
  return parse_session(text);
}

class Mass {
 public:
  explicit Mass(FramedMass fm) : fm_(std::move(fm)) {}

  static Mass parse(const std::string& text) { return Mass(parse_mass_document(text)); }

  std::vector<std::string> vars() const { return fm_.vocab.names(); }
  Rational bel(const std::string& f) const {
    return belfl::bel(fm_.mass, parse_prop(f, fm_.vocab), fm_.vocab);
  }
  Rational pl(const std::string& f) const {
    return belfl::pl(fm_.mass, parse_prop(f, fm_.vocab), fm_.vocab);
  }
  Rational eval(const std::string& f) const {
    return p_eval(fm_.mass, parse_p(f, fm_.vocab), fm_.vocab);
  }
  std::vector<Rational> belief_table() const { return belfl::belief_table(fm_.mass).values(); }
  bool mobius_round_trip() const { return mobius(belfl::belief_table(fm_.mass)) == fm_.mass; }
  std::vector<std::pair<std::vector<std::size_t>, Rational>> focal() const {
    std::vector<std::pair<std::vector<std::size_t>, Rational>> out;
    for (const auto& [set, value] : fm_.mass.masses()) out.emplace_back(set.worlds(), value);
    return out;
  }
  py::object to_json() const { return to_py(mass_to_json(fm_.mass, fm_.vocab)); }
  std::string to_text() const { return to_mass_text(fm_.mass, fm_.vocab); }

 private:
  FramedMass fm_;
};

}  // namespace

PYBIND11_MODULE(_belfl, m) {
  m.doc() = "Exact belief-function reasoning over a fuzzy modal logic";

  py::register_exception<Error>(m, "BelflError", PyExc_ValueError);

  py::class_<Mass>(m, "Mass")
      .def_static("parse", &Mass::parse, py::arg("text"),
                  "Parse a mass file (text format or JSON).")
      .def_property_readonly("vars", &Mass::vars)
      .def("bel", &Mass::bel, py::arg("formula"))
      .def("pl", &Mass::pl, py::arg("formula"))
      .def("eval", &Mass::eval, py::arg("formula"), "Value of a P-formula.")
      .def("belief_table", &Mass::belief_table, "Bel of every world set, by bitmask.")
      .def("mobius_round_trip", &Mass::mobius_round_trip)
      .def("focal", &Mass::focal, "(worlds, mass) pairs of the focal sets.")
      .def("to_json", &Mass::to_json)
      .def("to_text", &Mass::to_text);

  m.def(
      "run",
      [](const std::string& text, const std::optional<std::string>& model_class) {
        SessionOptions options;
        if (model_class) options.class_override = parse_model_class(*model_class);
        const Session session = parse_session(text, options);
        return to_py(run_session(session).to_json(session));
      },
      py::arg("text"), py::arg("model_class") = py::none(),
      "Run a theory file's queries; returns the JSON report as a dict.");

  m.def(
      "entails",
      [](const std::vector<std::string>& theory, const std::string& query,
         const std::optional<std::vector<std::string>>& vars, const std::string& model_class) {
        const Session s = make_session(theory, "entails " + query, vars, model_class);
        return to_py(verdict_to_json(entails(s.theory, *s.queries.back().formula, s.vocab),
                                     s.vocab));
      },
      py::arg("theory"), py::arg("query"), py::arg("vars") = py::none(),
      py::arg("model_class") = "general");

  m.def(
      "truth_degree",
      [](const std::vector<std::string>& theory, const std::string& query,
         const std::optional<std::vector<std::string>>& vars, const std::string& model_class) {
        const Session s = make_session(theory, "degree " + query, vars, model_class);
        const TruthDegree d = truth_degree(s.theory, *s.queries.back().formula, s.vocab);
        return py::make_tuple(py::cast(d.value),
                              to_py(mass_to_json(d.witness, s.vocab)));
      },
      py::arg("theory"), py::arg("query"), py::arg("vars") = py::none(),
      py::arg("model_class") = "general",
      "(degree, witness) where witness is a mass JSON dict.");

  m.def(
      "mel_valid",
      [](const std::string& formula, const std::optional<std::vector<std::string>>& vars) {
        const Vocabulary v = vocab_for(vars, {formula});
        return mel_valid(parse_mel(formula, v), v);
      },
      py::arg("formula"), py::arg("vars") = py::none());

  m.def(
      "represent",
      [](const std::string& text) {
        const NamedRelation named = parse_relation_text(text);
        py::dict out;
        py::list violations;
        for (const auto& v : check_bw(named.relation).violations) {
          violations.append(py::make_tuple(v.postulate, v.detail));
        }
        out["violations"] = violations;
        const auto witness = representable(named.relation);
        if (witness) {
          py::dict masses;
          for (const auto& [set, value] : witness->masses()) {
            masses[py::str(describe_subset(set, named.elements))] = py::cast(value);
          }
          out["witness"] = masses;
        } else {
          out["witness"] = py::none();
        }
        return out;
      },
      py::arg("text"), "Witness mass (or None) and BW violations of a ranked relation.");

  m.def("count_total_preorders", [](std::size_t n) { return enumerate_total_preorders(n).size(); });
}
