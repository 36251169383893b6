#include "belfl/session.hpp"

#include <algorithm>
#include <regex>

#include "belfl/comparative.hpp"
#include "belfl/formats.hpp"

namespace belfl {

namespace {

struct Statement {
  std::string text;
  std::size_t offset;  // of text[0] in the source
};

struct Locator {
  std::string_view source;
  std::pair<std::size_t, std::size_t> at(std::size_t offset) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < source.size(); ++i) {
      if (source[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    return {line, column};
  }
  [[noreturn]] void fail(std::size_t offset, const std::string& what) const {
    const auto [line, column] = at(offset);
    throw SessionError(what, line, column);
  }
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::vector<Statement> split_statements(std::string_view source) {
  std::string blanked(source);
  bool in_comment = false;
  for (char& c : blanked) {
    if (c == '\n') in_comment = false;
    else if (c == '#') in_comment = true;
    if (in_comment) c = ' ';
  }
  std::vector<Statement> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= blanked.size(); ++i) {
    if (i < blanked.size() && blanked[i] != ';') continue;
    std::size_t a = start, b = i;
    while (a < b && is_space(blanked[a])) ++a;
    while (b > a && is_space(blanked[b - 1])) --b;
    if (a < b) out.push_back({blanked.substr(a, b - a), a});
    start = i + 1;
  }
  return out;
}

// Splits off the leading keyword; returns the remainder and its offset.
std::pair<std::string, Statement> head(const Statement& s) {
  std::size_t i = 0;
  while (i < s.text.size() && !is_space(s.text[i])) ++i;
  std::size_t j = i;
  while (j < s.text.size() && is_space(s.text[j])) ++j;
  return {s.text.substr(0, i), {s.text.substr(j), s.offset + j}};
}

// Separates a trailing "expect VALUE" clause.
std::pair<Statement, std::optional<std::string>> split_expect(const Statement& s) {
  static const std::regex expect_re(R"(^(.*?)\s*\bexpect\s+(\S+)$)");
  std::smatch match;
  if (std::regex_match(s.text, match, expect_re)) {
    return {{match[1].str(), s.offset}, match[2].str()};
  }
  return {s, std::nullopt};
}

template <typename F>
auto parse_located(const Locator& loc, const Statement& s, F&& parse) {
  try {
    return parse(s.text);
  } catch (const ParseError& e) {
    loc.fail(s.offset + std::min(e.position(), s.text.size()), e.what());
  } catch (const Error& e) {
    loc.fail(s.offset, e.what());
  }
}

}  // namespace

Session parse_session(std::string_view text, const SessionOptions& options) {
  const Locator loc{text};
  const auto statements = split_statements(text);

  std::optional<std::vector<std::string>> declared;
  std::optional<ModelClass> model_class;
  std::size_t first_formula_offset = text.size();
  for (const auto& s : statements) {
    auto [keyword, rest] = head(s);
    if (keyword == "vars") {
      if (declared) loc.fail(s.offset, "duplicate 'vars' declaration");
      if (first_formula_offset < s.offset) loc.fail(s.offset, "'vars' must precede formulas");
      std::vector<std::string> names;
      std::size_t i = 0;
      while (i < rest.text.size()) {
        while (i < rest.text.size() && is_space(rest.text[i])) ++i;
        std::size_t j = i;
        while (j < rest.text.size() && !is_space(rest.text[j])) ++j;
        if (j > i) names.push_back(rest.text.substr(i, j - i));
        i = j;
      }
      declared = names;
    } else if (keyword == "class") {
      if (model_class) loc.fail(s.offset, "duplicate 'class' declaration");
      model_class = parse_located(loc, rest, [](const std::string& t) {
        return parse_model_class(t);
      });
    } else if (keyword == "assert" || keyword == "query") {
      first_formula_offset = std::min(first_formula_offset, s.offset);
    } else {
      loc.fail(s.offset, "unknown statement '" + keyword +
                             "' (expected vars, class, assert or query)");
    }
  }

  std::vector<std::string> names;
  if (declared) {
    names = *declared;
  } else {
    for (const auto& s : statements) {
      auto [keyword, rest] = head(s);
      if (keyword != "assert" && keyword != "query") continue;
      for (auto& v : scan_variables(split_expect(rest).first.text)) {
        if (v == "degree" || v == "entails" || v == "compare" || v == "twice" ||
            v == "consistent") {
          continue;
        }
        if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
      }
    }
  }

  Session session;
  try {
    session.vocab = Vocabulary(names, options.max_vars);
  } catch (const Error& e) {
    loc.fail(0, e.what());
  }
  session.theory.model_class = options.class_override.value_or(
      model_class.value_or(ModelClass::GeneralBelief));
  const Vocabulary& vocab = session.vocab;

  for (const auto& s : statements) {
    auto [keyword, rest] = head(s);
    if (keyword == "assert") {
      session.theory.formulas.push_back(
          parse_located(loc, rest, [&](const std::string& t) { return parse_p(t, vocab); }));
      continue;
    }
    if (keyword != "query") continue;

    Query q;
    q.line = loc.at(s.offset).first;
    auto [kind_word, body_with_expect] = head(rest);
    auto [body, expect] = split_expect(body_with_expect);
    q.text = body.text;
    q.expect = expect;
    if (kind_word == "degree" || kind_word == "entails") {
      q.kind = kind_word == "degree" ? QueryKind::Degree : QueryKind::Entails;
      q.formula = parse_located(loc, body, [&](const std::string& t) { return parse_p(t, vocab); });
      if (expect && q.kind == QueryKind::Degree && *expect != "inconsistent") {
        parse_located(loc, body_with_expect, [&](const std::string&) {
          return parse_rational(*expect);
        });
      }
    } else if (kind_word == "compare" || kind_word == "twice") {
      q.kind = kind_word == "compare" ? QueryKind::Compare : QueryKind::CompareTwice;
      const auto ge = body.text.find(">=");
      if (ge == std::string::npos) loc.fail(body.offset, "expected 'phi >= psi'");
      const Statement lhs{body.text.substr(0, ge), body.offset};
      const Statement rhs{body.text.substr(ge + 2), body.offset + ge + 2};
      q.lhs = parse_located(loc, lhs, [&](const std::string& t) { return parse_prop(t, vocab); });
      q.rhs = parse_located(loc, rhs, [&](const std::string& t) { return parse_prop(t, vocab); });
    } else if (kind_word == "consistent") {
      q.kind = QueryKind::Consistent;
      if (!body.text.empty()) loc.fail(body.offset, "'consistent' takes no argument");
    } else {
      loc.fail(rest.offset, "unknown query kind '" + kind_word +
                                "' (expected degree, entails, compare, twice or consistent)");
    }
    if (expect) {
      static const std::vector<std::string> verdicts{"valid", "invalid", "inconsistent"};
      const bool ok =
          q.kind == QueryKind::Degree ||
          (q.kind == QueryKind::Consistent ? (*expect == "sat" || *expect == "unsat")
                                           : std::count(verdicts.begin(), verdicts.end(), *expect));
      if (!ok) loc.fail(s.offset, "unexpected expectation '" + *expect + "'");
    }
    session.queries.push_back(std::move(q));
  }
  return session;
}

bool SessionReport::all_expectations_met() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const QueryOutcome& o) { return o.expect_ok.value_or(true); });
}

SessionReport run_session(const Session& session, const EntailOptions& options) {
  SessionReport report;
  for (const auto& q : session.queries) {
    QueryOutcome out;
    out.query = &q;
    switch (q.kind) {
      case QueryKind::Degree:
        try {
          TruthDegree d = truth_degree(session.theory, *q.formula, session.vocab, options);
          out.degree = d.value;
          out.result = to_string(d.value);
          out.model = std::move(d.witness);
        } catch (const InconsistentTheoryError&) {
          out.result = "inconsistent";
        }
        if (q.expect) {
          out.expect_ok = *q.expect == "inconsistent"
                              ? out.result == "inconsistent"
                              : out.degree && *out.degree == parse_rational(*q.expect);
        }
        break;
      case QueryKind::Entails:
      case QueryKind::Compare:
      case QueryKind::CompareTwice: {
        EntailmentVerdict v =
            q.kind == QueryKind::Entails
                ? entails(session.theory, *q.formula, session.vocab, options)
                : compare_query(session.theory, *q.lhs, *q.rhs, session.vocab,
                                q.kind == QueryKind::CompareTwice, options);
        out.result = v.inconsistent ? "inconsistent" : v.valid ? "valid" : "invalid";
        out.degree = v.truth_degree;
        out.model = std::move(v.countermodel);
        if (q.expect) {
          out.expect_ok = *q.expect == out.result || (*q.expect == "valid" && v.valid);
        }
        break;
      }
      case QueryKind::Consistent:
        out.model = find_model(session.theory, session.vocab, options);
        out.result = out.model ? "sat" : "unsat";
        if (q.expect) out.expect_ok = *q.expect == out.result;
        break;
    }
    report.outcomes.push_back(std::move(out));
  }
  return report;
}

namespace {

const char* kind_name(QueryKind kind) {
  switch (kind) {
    case QueryKind::Degree: return "degree";
    case QueryKind::Entails: return "entails";
    case QueryKind::Compare: return "compare";
    case QueryKind::CompareTwice: return "twice";
    case QueryKind::Consistent: return "consistent";
  }
  return "?";
}

std::string render_query(const Query& q, const Vocabulary& vocab) {
  switch (q.kind) {
    case QueryKind::Degree:
    case QueryKind::Entails: return to_string(*q.formula, vocab);
    case QueryKind::Compare:
    case QueryKind::CompareTwice:
      return to_string(*q.lhs, vocab) + " >= " + to_string(*q.rhs, vocab);
    case QueryKind::Consistent: return "";
  }
  return "";
}

}  // namespace

std::string SessionReport::to_text(const Session& session) const {
  std::string out = "vars:";
  for (const auto& n : session.vocab.names()) out += " " + n;
  out += "\nclass: " + to_string(session.theory.model_class) + "\n";
  out += "assertions: " + std::to_string(session.theory.formulas.size()) + "\n";
  for (const auto& o : outcomes) {
    const Query& q = *o.query;
    std::string line = "line " + std::to_string(q.line) + ": ";
    const std::string rendered = render_query(q, session.vocab);
    if (q.kind == QueryKind::Degree) {
      line += rendered + " => " + (o.degree ? "degree = " + o.result : o.result);
    } else {
      line += kind_name(q.kind);
      if (!rendered.empty()) line += " " + rendered;
      line += " => " + o.result;
    }
    if ((q.kind == QueryKind::Entails || q.kind == QueryKind::Compare ||
         q.kind == QueryKind::CompareTwice) &&
        o.result == "invalid" && o.degree) {
      line += " (degree " + to_string(*o.degree) + ")";
    }
    if (o.expect_ok) line += *o.expect_ok ? "  [expected " + *q.expect + ": ok]"
                                          : "  [expected " + *q.expect + ": MISMATCH]";
    out += line + "\n";
    if (o.model) {
      out += q.kind == QueryKind::Degree || q.kind == QueryKind::Consistent ? "  witness:\n"
                                                                             : "  countermodel:\n";
      const std::string listing = describe_mass(*o.model, session.vocab);
      for (std::size_t pos = 0; pos < listing.size();) {
        const auto nl = listing.find('\n', pos);
        out += "  " + listing.substr(pos, nl - pos + 1);
        pos = nl == std::string::npos ? listing.size() : nl + 1;
      }
    }
  }
  return out;
}

nlohmann::json SessionReport::to_json(const Session& session) const {
  nlohmann::json queries = nlohmann::json::array();
  for (const auto& o : outcomes) {
    const Query& q = *o.query;
    nlohmann::json entry{{"line", q.line},
                         {"kind", kind_name(q.kind)},
                         {"query", render_query(q, session.vocab)},
                         {"result", o.result}};
    entry["degree"] = o.degree ? nlohmann::json(to_string(*o.degree)) : nlohmann::json(nullptr);
    entry["model"] = o.model ? focal_list_to_json(*o.model, session.vocab) : nlohmann::json(nullptr);
    if (q.expect) {
      entry["expect"] = *q.expect;
      entry["expect_ok"] = *o.expect_ok;
    }
    queries.push_back(std::move(entry));
  }
  return {{"vars", session.vocab.names()},
          {"class", to_string(session.theory.model_class)},
          {"assertions", session.theory.formulas.size()},
          {"queries", queries},
          {"all_expectations_met", all_expectations_met()}};
}

nlohmann::json verdict_to_json(const EntailmentVerdict& verdict, const Vocabulary& vocab) {
  return {{"verdict", verdict.inconsistent ? "inconsistent" : verdict.valid ? "valid" : "invalid"},
          {"degree", to_string(verdict.truth_degree)},
          {"countermodel", verdict.countermodel ? focal_list_to_json(*verdict.countermodel, vocab)
                                                : nlohmann::json(nullptr)}};
}

}  // namespace belfl
