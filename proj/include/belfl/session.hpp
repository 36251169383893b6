#pragma once

// Theory files: a vocabulary, a model class, asserted P-formulas and a list
// of queries, optionally annotated with expected results.
//
//   vars p q;
//   class general;
//   assert 0.8 -> B(p);
//   assert 0.7 -> B(p -> q);
//   query degree B(q) expect 1/2;
//   query entails 0.5 -> B(q) expect valid;
//   query compare p >= p & q;
//   query twice p >= q;
//   query consistent expect sat;

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "belfl/error.hpp"
#include "belfl/entail.hpp"

namespace belfl {

/// Parse or semantic error located by 1-based line and column.
class SessionError : public Error {
 public:
  SessionError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class QueryKind { Degree, Entails, Compare, CompareTwice, Consistent };

struct Query {
  QueryKind kind = QueryKind::Degree;
  std::string text;
  std::optional<PFormula> formula;       // Degree, Entails
  std::optional<PropFormula> lhs, rhs;   // Compare, CompareTwice
  std::optional<std::string> expect;
  std::size_t line = 0;
};

struct SessionOptions {
  std::size_t max_vars = Vocabulary::kDefaultMaxVars;
  std::optional<ModelClass> class_override;
};

struct Session {
  Vocabulary vocab;
  Theory theory;
  std::vector<Query> queries;
};

Session parse_session(std::string_view text, const SessionOptions& options = {});

struct QueryOutcome {
  const Query* query = nullptr;
  /// "valid", "invalid", "inconsistent", "sat", "unsat", or the degree.
  std::string result;
  std::optional<Rational> degree;
  std::optional<MassFunction> model;  // witness or countermodel
  std::optional<bool> expect_ok;
};

struct SessionReport {
  std::vector<QueryOutcome> outcomes;
  bool all_expectations_met() const;
  std::string to_text(const Session& session) const;
  nlohmann::json to_json(const Session& session) const;
};

SessionReport run_session(const Session& session, const EntailOptions& options = {});

/// JSON object for a single verdict: {verdict, degree, countermodel}.
nlohmann::json verdict_to_json(const EntailmentVerdict& verdict, const Vocabulary& vocab);

}  // namespace belfl
