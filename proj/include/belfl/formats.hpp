#pragma once

// Text and JSON formats for mass functions and comparative relations.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "belfl/belief.hpp"
#include "belfl/comparative.hpp"
#include "belfl/propcore.hpp"

namespace belfl {

struct FramedMass {
  Vocabulary vocab;
  MassFunction mass;
};

/// Text format, one focal set per line:
///
///   vars p q;
///   mass {w: "p=1,q=0", value: "3/10"}
///   mass {w: "p=1,q=1; p=0,q=1", value: "7/10"}
///
/// Worlds of one focal set are separated by ';'. Without a `vars` line the
/// variables are taken from the first world in order of appearance.
FramedMass parse_mass_text(std::string_view text);
std::string to_mass_text(const MassFunction& mass, const Vocabulary& vocab);

/// {"vars": [...], "masses": [{"worlds": [{"p":1,"q":0}], "mass": "3/10"}]}
nlohmann::json mass_to_json(const MassFunction& mass, const Vocabulary& vocab);
/// Just the "masses" array.
nlohmann::json focal_list_to_json(const MassFunction& mass, const Vocabulary& vocab);
FramedMass mass_from_json(const nlohmann::json& doc);

/// Dispatches on the first non-blank character ('{' means JSON).
FramedMass parse_mass_document(std::string_view text);

/// Human-readable focal-set listing, one "  {p=1,q=0} : 3/10" per line.
std::string describe_mass(const MassFunction& mass, const Vocabulary& vocab);

struct NamedRelation {
  std::vector<std::string> elements;
  ComparativeRelation relation;
};

/// Ranked-list relation format:
///
///   elements p q;            (optional; otherwise order of first appearance)
///   rank 1: {p,q}; rank 2: {p} {q}; rank 3: {}
///
/// Statements end at ";" or a newline. Equal rank means equivalent, a smaller
/// rank means strictly greater.
NamedRelation parse_relation_text(std::string_view text);
std::string to_relation_text(const NamedRelation& relation);

}  // namespace belfl
