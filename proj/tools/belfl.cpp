#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "belfl/comparative.hpp"
#include "belfl/entail.hpp"
#include "belfl/error.hpp"
#include "belfl/formats.hpp"
#include "belfl/mel.hpp"
#include "belfl/sampling.hpp"
#include "belfl/session.hpp"

using namespace belfl;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMismatch = 2;

struct Flags {
  bool json = false;
  std::string model_class;
  std::size_t max_vars = Vocabulary::kDefaultMaxVars;
  std::size_t node_budget = lp::SolverOptions{}.node_budget;
  std::size_t max_binaries = lp::SolverOptions{}.max_binaries;
  std::uint64_t seed = 1;
  std::string vars;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

EntailOptions entail_options(const Flags& f) {
  EntailOptions o;
  o.solver.node_budget = f.node_budget;
  o.solver.max_binaries = f.max_binaries;
  return o;
}

SessionOptions session_options(const Flags& f) {
  SessionOptions o;
  o.max_vars = f.max_vars;
  if (!f.model_class.empty()) o.class_override = parse_model_class(f.model_class);
  return o;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text + " ") {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

Vocabulary vocab_from(const Flags& f, const std::vector<std::string>& texts) {
  if (!f.vars.empty()) return Vocabulary(split_names(f.vars), f.max_vars);
  std::vector<std::string> names;
  for (const auto& t : texts) {
    for (auto& v : scan_variables(t)) {
      if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
    }
  }
  return Vocabulary(names, f.max_vars);
}

void print(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string world_set_text(WorldSet set, const Vocabulary& vocab) {
  std::string out;
  for (std::size_t w : set.worlds()) {
    if (!out.empty()) out += " ";
    out += "{" + vocab.describe_world(w) + "}";
  }
  return out.empty() ? "{}" : out;
}

json world_set_json(WorldSet set, const Vocabulary& vocab) {
  json worlds = json::array();
  for (std::size_t w : set.worlds()) {
    json world = json::object();
    for (std::size_t i = 0; i < vocab.size(); ++i) world[vocab.name(i)] = (w >> i) & 1U;
    worlds.push_back(world);
  }
  return worlds;
}

int cmd_run(const Flags& f, const std::string& path) {
  const Session session = parse_session(read_file(path), session_options(f));
  const SessionReport report = run_session(session, entail_options(f));
  if (f.json) {
    print(report.to_json(session));
  } else {
    std::cout << report.to_text(session);
  }
  return report.all_expectations_met() ? kExitOk : kExitMismatch;
}

int cmd_eval(const Flags& f, const std::string& mass_path, const std::string& formula) {
  const FramedMass fm = parse_mass_document(read_file(mass_path));
  const PFormula p = parse_p(formula, fm.vocab);
  const Rational v = p_eval(fm.mass, p, fm.vocab);
  if (f.json) {
    print({{"formula", to_string(p, fm.vocab)}, {"value", to_string(v)}});
  } else {
    std::cout << to_string(p, fm.vocab) << " = " << to_string(v) << "\n";
  }
  return kExitOk;
}

int cmd_bel_pl(const Flags& f, const std::string& mass_path, const std::string& formula,
               bool plausibility) {
  const FramedMass fm = parse_mass_document(read_file(mass_path));
  const PropFormula phi = parse_prop(formula, fm.vocab);
  const Rational v = plausibility ? pl(fm.mass, phi, fm.vocab) : bel(fm.mass, phi, fm.vocab);
  const char* name = plausibility ? "pl" : "bel";
  if (f.json) {
    print({{"function", name}, {"formula", to_string(phi, fm.vocab)}, {"value", to_string(v)}});
  } else {
    std::cout << name << "(" << to_string(phi, fm.vocab) << ") = " << to_string(v) << "\n";
  }
  return kExitOk;
}

int cmd_mobius(const Flags& f, const std::string& mass_path) {
  const FramedMass fm = parse_mass_document(read_file(mass_path));
  const BeliefTable table = belief_table(fm.mass);
  const MassFunction back = mobius(table);
  const bool exact = back == fm.mass;
  if (f.json) {
    json rows = json::array();
    for (std::uint64_t a = 0; a < table.values().size(); ++a) {
      rows.push_back({{"worlds", world_set_json(WorldSet(a), fm.vocab)},
                      {"bel", to_string(table[WorldSet(a)])}});
    }
    print({{"vars", fm.vocab.names()},
           {"belief_table", rows},
           {"recovered", focal_list_to_json(back, fm.vocab)},
           {"round_trip", exact}});
  } else {
    std::cout << "belief table:\n";
    for (std::uint64_t a = 0; a < table.values().size(); ++a) {
      std::cout << "  " << world_set_text(WorldSet(a), fm.vocab) << " : "
                << to_string(table[WorldSet(a)]) << "\n";
    }
    std::cout << "recovered mass:\n" << describe_mass(back, fm.vocab);
    std::cout << "round trip: " << (exact ? "exact" : "MISMATCH") << "\n";
  }
  return exact ? kExitOk : kExitMismatch;
}

int cmd_melvalid(const Flags& f, const std::string& formula) {
  const Vocabulary vocab = vocab_from(f, {formula});
  const MelFormula phi = parse_mel(formula, vocab);
  const MelConsequence c = mel_consequence({}, phi, vocab);
  if (f.json) {
    json doc{{"formula", to_string(phi, vocab)}, {"valid", c.holds}};
    doc["countermodel"] = c.countermodel ? world_set_json(*c.countermodel, vocab) : json(nullptr);
    print(doc);
  } else {
    std::cout << (c.holds ? "VALID" : "NOT VALID") << "\n";
    if (c.countermodel) {
      std::cout << "countermodel E = " << world_set_text(*c.countermodel, vocab) << "\n";
    }
  }
  return kExitOk;
}

int cmd_melcons(const Flags& f, const std::vector<std::string>& premises,
                const std::string& conclusion) {
  std::vector<std::string> texts = premises;
  texts.push_back(conclusion);
  const Vocabulary vocab = vocab_from(f, texts);
  std::vector<MelFormula> ps;
  for (const auto& p : premises) ps.push_back(parse_mel(p, vocab));
  const MelFormula c = parse_mel(conclusion, vocab);
  const MelConsequence r = mel_consequence(ps, c, vocab);
  if (f.json) {
    json doc{{"conclusion", to_string(c, vocab)}, {"follows", r.holds}};
    doc["countermodel"] = r.countermodel ? world_set_json(*r.countermodel, vocab) : json(nullptr);
    print(doc);
  } else {
    std::cout << (r.holds ? "FOLLOWS" : "DOES NOT FOLLOW") << "\n";
    if (r.countermodel) {
      std::cout << "countermodel E = " << world_set_text(*r.countermodel, vocab) << "\n";
    }
  }
  return kExitOk;
}

// Builds a theory-file text from a file and/or command-line assertions and
// appends one query, so the command-line path shares the file grammar.
struct InlineQuery {
  std::string theory_file;
  std::vector<std::string> assertions;
};

Session inline_session(const Flags& f, const InlineQuery& iq, const std::string& query) {
  std::string text;
  if (!f.vars.empty()) {
    text += "vars";
    for (const auto& n : split_names(f.vars)) text += " " + n;
    text += ";\n";
  }
  if (!iq.theory_file.empty()) {
    text += read_file(iq.theory_file) + "\n";
  }
  for (const auto& a : iq.assertions) text += "assert " + a + ";\n";
  text += "query " + query + ";\n";
  return parse_session(text, session_options(f));
}

int cmd_entail(const Flags& f, const InlineQuery& iq, const std::string& query, bool degree) {
  Session session = inline_session(f, iq, (degree ? "degree " : "entails ") + query);
  const PFormula q = *session.queries.back().formula;
  if (degree) {
    const TruthDegree d = truth_degree(session.theory, q, session.vocab, entail_options(f));
    if (f.json) {
      print({{"query", to_string(q, session.vocab)},
             {"degree", to_string(d.value)},
             {"witness", focal_list_to_json(d.witness, session.vocab)}});
    } else {
      std::cout << "degree = " << to_string(d.value) << "\n"
                << "witness:\n" << describe_mass(d.witness, session.vocab);
    }
    return kExitOk;
  }
  const EntailmentVerdict v = entails(session.theory, q, session.vocab, entail_options(f));
  if (f.json) {
    print(verdict_to_json(v, session.vocab));
  } else if (v.inconsistent) {
    std::cout << "VALID (theory is inconsistent)\n";
  } else if (v.valid) {
    std::cout << "VALID\n";
  } else {
    std::cout << "NOT VALID, degree = " << to_string(v.truth_degree) << "\n"
              << "countermodel:\n" << describe_mass(*v.countermodel, session.vocab);
  }
  return kExitOk;
}

int cmd_compare(const Flags& f, const InlineQuery& iq, const std::string& phi,
                const std::string& psi, bool twice) {
  Session session =
      inline_session(f, iq, std::string(twice ? "twice " : "compare ") + phi + " >= " + psi);
  const Query& q = session.queries.back();
  const EntailmentVerdict v =
      compare_query(session.theory, *q.lhs, *q.rhs, session.vocab, twice, entail_options(f));
  if (f.json) {
    print(verdict_to_json(v, session.vocab));
    return kExitOk;
  }
  const std::string claim = to_string(*q.lhs, session.vocab) +
                            (twice ? " at least twice as believed as " : " at least as believed as ") +
                            to_string(*q.rhs, session.vocab);
  if (v.inconsistent) {
    std::cout << "HOLDS (theory is inconsistent): " << claim << "\n";
  } else if (v.valid) {
    std::cout << "HOLDS: " << claim << "\n";
  } else {
    std::cout << "DOES NOT HOLD: " << claim << "\ncountermodel:\n"
              << describe_mass(*v.countermodel, session.vocab);
  }
  return kExitOk;
}

int cmd_represent(const Flags& f, const std::string& path) {
  const NamedRelation named = parse_relation_text(read_file(path));
  const BwReport bw = check_bw(named.relation);
  const auto witness = representable(named.relation);
  if (f.json) {
    json violations = json::array();
    for (const auto& v : bw.violations) {
      json sets = json::array();
      for (WorldSet s : v.witness) sets.push_back(describe_subset(s, named.elements));
      violations.push_back({{"postulate", v.postulate}, {"detail", v.detail}, {"sets", sets}});
    }
    json doc{{"elements", named.elements},
             {"representable", witness.has_value()},
             {"violations", violations}};
    json masses = json::array();
    if (witness) {
      for (const auto& [set, value] : witness->masses()) {
        masses.push_back({{"set", describe_subset(set, named.elements)}, {"mass", to_string(value)}});
      }
    }
    doc["witness"] = witness ? masses : json(nullptr);
    print(doc);
    return kExitOk;
  }
  if (witness) {
    std::cout << "REPRESENTABLE\nwitness mass:\n";
    for (const auto& [set, value] : witness->masses()) {
      std::cout << "  " << describe_subset(set, named.elements) << " : " << to_string(value) << "\n";
    }
  } else {
    std::cout << "NOT-REPRESENTABLE\n";
    for (const auto& v : bw.violations) {
      std::cout << "  " << v.postulate << ": " << v.detail;
      for (WorldSet s : v.witness) std::cout << " " << describe_subset(s, named.elements);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_axioms(const Flags& f, std::size_t samples) {
  const Vocabulary vocab =
      f.vars.empty() ? Vocabulary({"p", "q"}) : Vocabulary(split_names(f.vars), f.max_vars);
  require_enumerable(vocab);
  sampling::Rng rng(f.seed);
  std::size_t checked = 0;
  std::vector<AxiomCheck> failures;
  for (std::size_t i = 0; i < samples; ++i) {
    const MassFunction m = sampling::random_mass(vocab.world_count(), 8, 60, rng);
    std::vector<PropFormula> props;
    for (std::size_t v = 0; v < vocab.size(); ++v) props.push_back(PropFormula::var(v));
    props.push_back(sampling::random_prop(vocab, 2, rng));
    std::vector<MelFormula> mels;
    for (int k = 0; k < 4; ++k) mels.push_back(sampling::random_mel(vocab, 2, rng));
    const AxiomReport report = axiom_suite(m, vocab, mels, props);
    checked += report.checks.size();
    for (const auto& c : report.failures()) failures.push_back(c);
  }
  if (f.json) {
    json list = json::array();
    for (const auto& c : failures) {
      list.push_back({{"scheme", c.scheme}, {"instance", c.instance}, {"value", to_string(c.value)}});
    }
    print({{"samples", samples}, {"seed", f.seed}, {"instances", checked}, {"failures", list}});
  } else {
    std::cout << checked << " axiom instances over " << samples << " masses (seed " << f.seed
              << "): " << (failures.empty() ? "all = 1" : std::to_string(failures.size()) + " below 1")
              << "\n";
    for (const auto& c : failures) {
      std::cout << "  " << c.scheme << ": " << c.instance << " = " << to_string(c.value) << "\n";
    }
  }
  return failures.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief functions over a fuzzy modal logic: exact entailment and degrees"};
  app.fallthrough();
  app.require_subcommand(1);
  Flags f;
  app.add_flag("--json", f.json, "Machine-readable output");
  app.add_option("--class", f.model_class, "Model class override")
      ->check(CLI::IsMember({"general", "probability", "necessity"}));
  app.add_option("--max-vars", f.max_vars, "Vocabulary size cap")
      ->check(CLI::Range(std::size_t{1}, Vocabulary::kAbsoluteMaxVars));
  app.add_option("--node-budget", f.node_budget, "Branch-and-bound node budget");
  app.add_option("--max-binaries", f.max_binaries, "Cap on binary variables");
  app.add_option("--seed", f.seed, "Seed for sampled suites");
  app.add_option("--vars", f.vars, "Explicit vocabulary, e.g. \"p q\"");

  std::string path, mass_path, formula, phi, psi;
  std::vector<std::string> premises;
  std::size_t samples = 100;
  bool twice = false;
  InlineQuery iq;
  int status = kExitOk;

  auto* run = app.add_subcommand("run", "Run a theory file");
  run->add_option("file", path)->required();
  run->callback([&] { status = cmd_run(f, path); });

  auto* eval = app.add_subcommand("eval", "Value of a P-formula under a mass file");
  eval->add_option("mass", mass_path)->required();
  eval->add_option("formula", formula)->required();
  eval->callback([&] { status = cmd_eval(f, mass_path, formula); });

  for (bool plaus : {false, true}) {
    auto* sub = app.add_subcommand(plaus ? "pl" : "bel",
                                   plaus ? "Plausibility of a formula" : "Belief in a formula");
    sub->add_option("mass", mass_path)->required();
    sub->add_option("formula", formula)->required();
    sub->callback([&, plaus] { status = cmd_bel_pl(f, mass_path, formula, plaus); });
  }

  auto* mob = app.add_subcommand("mobius", "Belief table and Moebius round trip");
  mob->add_option("mass", mass_path)->required();
  mob->callback([&] { status = cmd_mobius(f, mass_path); });

  auto* melvalid = app.add_subcommand("melvalid", "Validity of a modal formula");
  melvalid->add_option("formula", formula)->required();
  melvalid->callback([&] { status = cmd_melvalid(f, formula); });

  auto* melcons = app.add_subcommand("melcons", "Modal consequence: premises... conclusion");
  melcons->add_option("formulas", premises, "Premises followed by the conclusion")
      ->required()
      ->expected(1, -1);
  melcons->callback([&] {
    const std::string conclusion = premises.back();
    premises.pop_back();
    status = cmd_melcons(f, premises, conclusion);
  });

  auto add_theory_options = [&](CLI::App* sub) {
    sub->add_option("-t,--theory", iq.theory_file, "Theory file supplying vars/class/asserts");
    sub->add_option("-a,--assert", iq.assertions, "Asserted P-formula (repeatable)");
  };
  for (bool degree : {false, true}) {
    auto* sub = app.add_subcommand(degree ? "degree" : "entail",
                                   degree ? "Truth degree of a query" : "Entailment of a query");
    add_theory_options(sub);
    sub->add_option("query", formula)->required();
    sub->callback([&, degree] { status = cmd_entail(f, iq, formula, degree); });
  }

  auto* compare = app.add_subcommand("compare", "Is phi at least as believed as psi?");
  add_theory_options(compare);
  compare->add_option("phi", phi)->required();
  compare->add_option("psi", psi)->required();
  compare->add_flag("--twice", twice, "At least twice as believed");
  compare->callback([&] { status = cmd_compare(f, iq, phi, psi, twice); });

  auto* represent = app.add_subcommand("represent", "Belief representation of a relation");
  represent->add_option("relation", path)->required();
  represent->callback([&] { status = cmd_represent(f, path); });

  auto* axioms = app.add_subcommand("axioms", "Axiom instances under sampled masses");
  axioms->add_option("--samples", samples, "Number of sampled masses");
  axioms->callback([&] { status = cmd_axioms(f, samples); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  } catch (const SessionError& e) {
    std::cerr << "error: " << (path.empty() ? "<command line>" : path) << ":" << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return status;
}
