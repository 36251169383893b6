#include "belfl/formats.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

#include "belfl/error.hpp"

namespace belfl {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string strip_comment(std::string_view line) {
  return std::string(line.substr(0, line.find('#')));
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw Error("line " + std::to_string(line) + ": " + what);
}

using Assignment = std::vector<std::pair<std::string, bool>>;

Assignment parse_world(const std::string& text, std::size_t line) {
  Assignment out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail_at(line, "expected var=0|1 in world '" + text + "'");
    const std::string name = trim(std::string_view(item).substr(0, eq));
    const std::string value = trim(std::string_view(item).substr(eq + 1));
    if (name.empty() || (value != "0" && value != "1")) {
      fail_at(line, "bad assignment '" + item + "'");
    }
    out.emplace_back(name, value == "1");
  }
  return out;
}

std::size_t world_index(const Assignment& world, const Vocabulary& vocab, std::size_t line) {
  std::size_t index = 0;
  std::vector<bool> seen(vocab.size(), false);
  for (const auto& [name, value] : world) {
    const auto i = vocab.index_of(name);
    if (!i) fail_at(line, "unknown variable '" + name + "'");
    if (seen[*i]) fail_at(line, "variable '" + name + "' assigned twice");
    seen[*i] = true;
    if (value) index |= std::size_t{1} << *i;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    fail_at(line, "world does not assign every variable");
  }
  return index;
}

}  // namespace

FramedMass parse_mass_text(std::string_view text) {
  static const std::regex vars_re(R"(^\s*vars\s+([^;]*);?\s*$)");
  static const std::regex mass_re(
      R"re(^\s*mass\s*\{\s*w\s*:\s*"([^"]*)"\s*,\s*value\s*:\s*"([^"]*)"\s*\}\s*;?\s*$)re");
  std::optional<Vocabulary> vocab;
  std::vector<std::pair<std::vector<Assignment>, std::pair<Rational, std::size_t>>> entries;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (trim(line).empty()) continue;
    std::smatch match;
    if (std::regex_match(line, match, vars_re)) {
      if (vocab || !entries.empty()) fail_at(line_no, "vars must come first and only once");
      std::istringstream names(match[1].str());
      std::vector<std::string> list;
      for (std::string name; names >> name;) list.push_back(name);
      vocab = Vocabulary(list, Vocabulary::kAbsoluteMaxVars);
    } else if (std::regex_match(line, match, mass_re)) {
      std::vector<Assignment> worlds;
      for (const auto& w : split(match[1].str(), ';')) worlds.push_back(parse_world(w, line_no));
      Rational value;
      try {
        value = parse_rational(match[2].str());
      } catch (const ParseError& e) {
        fail_at(line_no, e.what());
      }
      entries.push_back({std::move(worlds), {value, line_no}});
    } else {
      fail_at(line_no, "expected 'vars ...;' or 'mass {w: \"...\", value: \"...\"}'");
    }
  }
  if (entries.empty()) throw Error("no mass entries");
  if (!vocab) {
    std::vector<std::string> names;
    for (const auto& [name, value] : entries.front().first.front()) names.push_back(name);
    vocab = Vocabulary(names, Vocabulary::kAbsoluteMaxVars);
  }
  std::map<WorldSet, Rational> masses;
  for (const auto& [worlds, info] : entries) {
    WorldSet set;
    for (const auto& w : worlds) set = set | WorldSet::singleton(world_index(w, *vocab, info.second));
    if (masses.count(set)) fail_at(info.second, "focal set listed twice");
    masses.emplace(set, info.first);
  }
  return {*vocab, MassFunction(vocab->world_count(), std::move(masses))};
}

std::string to_mass_text(const MassFunction& mass, const Vocabulary& vocab) {
  std::string out = "vars";
  for (const auto& name : vocab.names()) out += " " + name;
  out += ";\n";
  for (const auto& [set, value] : mass.masses()) {
    std::string worlds;
    for (std::size_t w : set.worlds()) {
      if (!worlds.empty()) worlds += "; ";
      worlds += vocab.describe_world(w);
    }
    out += "mass {w: \"" + worlds + "\", value: \"" + to_string(value) + "\"}\n";
  }
  return out;
}

nlohmann::json focal_list_to_json(const MassFunction& mass, const Vocabulary& vocab) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [set, value] : mass.masses()) {
    nlohmann::json worlds = nlohmann::json::array();
    for (std::size_t w : set.worlds()) {
      nlohmann::json world = nlohmann::json::object();
      for (std::size_t i = 0; i < vocab.size(); ++i) world[vocab.name(i)] = (w >> i) & 1U;
      worlds.push_back(world);
    }
    list.push_back({{"worlds", worlds}, {"mass", to_string(value)}});
  }
  return list;
}

nlohmann::json mass_to_json(const MassFunction& mass, const Vocabulary& vocab) {
  return {{"vars", vocab.names()}, {"masses", focal_list_to_json(mass, vocab)}};
}

FramedMass mass_from_json(const nlohmann::json& doc) {
  try {
    Vocabulary vocab(doc.at("vars").get<std::vector<std::string>>(),
                     Vocabulary::kAbsoluteMaxVars);
    std::map<WorldSet, Rational> masses;
    for (const auto& entry : doc.at("masses")) {
      WorldSet set;
      for (const auto& world : entry.at("worlds")) {
        Assignment a;
        for (const auto& [name, bit] : world.items()) {
          const int v = bit.get<int>();
          if (v != 0 && v != 1) throw Error("world values must be 0 or 1");
          a.emplace_back(name, v == 1);
        }
        set = set | WorldSet::singleton(world_index(a, vocab, 0));
      }
      const auto& m = entry.at("mass");
      const Rational value = m.is_string() ? parse_rational(m.get<std::string>())
                                           : parse_rational(m.dump());
      if (masses.count(set)) throw Error("focal set listed twice");
      masses.emplace(set, value);
    }
    return {vocab, MassFunction(vocab.world_count(), std::move(masses))};
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed mass JSON: ") + e.what());
  }
}

FramedMass parse_mass_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(std::string("malformed mass JSON: ") + e.what());
    }
    return mass_from_json(doc);
  }
  return parse_mass_text(text);
}

std::string describe_mass(const MassFunction& mass, const Vocabulary& vocab) {
  std::string out;
  for (const auto& [set, value] : mass.masses()) {
    std::string worlds;
    for (std::size_t w : set.worlds()) {
      if (!worlds.empty()) worlds += " ";
      worlds += "{" + vocab.describe_world(w) + "}";
    }
    out += "  " + worlds + " : " + to_string(value) + "\n";
  }
  return out;
}

NamedRelation parse_relation_text(std::string_view text) {
  std::string joined;
  for (const auto& line : split(text, '\n')) joined += strip_comment(line) + ";";

  std::vector<std::string> elements;
  bool declared = false;
  std::vector<std::pair<long, std::vector<std::vector<std::string>>>> ranks;
  static const std::regex rank_re(R"(^rank\s+(\d+)\s*:(.*)$)");
  static const std::regex set_re(R"(\{([^}]*)\})");
  for (const auto& stmt : split(joined, ';')) {
    if (stmt.empty()) continue;
    std::smatch match;
    if (stmt.rfind("elements", 0) == 0) {
      if (declared || !ranks.empty()) throw Error("'elements' must come first and only once");
      std::istringstream names(stmt.substr(8));
      for (std::string name; names >> name;) {
        if (std::find(elements.begin(), elements.end(), name) != elements.end()) {
          throw Error("element '" + name + "' declared twice");
        }
        elements.push_back(name);
      }
      declared = true;
    } else if (std::regex_match(stmt, match, rank_re)) {
      std::vector<std::vector<std::string>> sets;
      const std::string body = match[2].str();
      std::string rest = std::regex_replace(body, set_re, "");
      if (!trim(rest).empty()) throw Error("unexpected text in rank: '" + trim(rest) + "'");
      for (auto it = std::sregex_iterator(body.begin(), body.end(), set_re);
           it != std::sregex_iterator(); ++it) {
        std::vector<std::string> members;
        for (const auto& name : split((*it)[1].str(), ',')) {
          if (!name.empty()) members.push_back(name);
        }
        sets.push_back(std::move(members));
      }
      if (sets.empty()) throw Error("rank " + match[1].str() + " lists no subsets");
      ranks.emplace_back(std::stol(match[1].str()), std::move(sets));
    } else {
      throw Error("expected 'elements ...' or 'rank N: {...}', got '" + stmt + "'");
    }
  }
  if (ranks.empty()) throw Error("no ranks given");
  std::stable_sort(ranks.begin(), ranks.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  if (!declared) {
    for (const auto& [k, sets] : ranks) {
      for (const auto& set : sets) {
        for (const auto& name : set) {
          if (std::find(elements.begin(), elements.end(), name) == elements.end()) {
            elements.push_back(name);
          }
        }
      }
    }
  }
  if (elements.empty() || elements.size() > kMaxRelationWorlds) {
    throw CapExceededError("relations need between 1 and " +
                           std::to_string(kMaxRelationWorlds) + " elements");
  }
  std::vector<std::vector<WorldSet>> levels;
  long last = -1;
  for (const auto& [k, sets] : ranks) {
    if (levels.empty() || k != last) levels.emplace_back();
    last = k;
    for (const auto& set : sets) {
      WorldSet s;
      for (const auto& name : set) {
        const auto it = std::find(elements.begin(), elements.end(), name);
        if (it == elements.end()) throw Error("unknown element '" + name + "'");
        s = s | WorldSet::singleton(static_cast<std::size_t>(it - elements.begin()));
      }
      levels.back().push_back(s);
    }
  }
  return {elements, ComparativeRelation::from_ranks(elements.size(), levels)};
}

std::string to_relation_text(const NamedRelation& named) {
  std::string out = "elements";
  for (const auto& e : named.elements) out += " " + e;
  out += ";\n";
  const auto levels = named.relation.ranks();
  for (std::size_t r = 0; r < levels.size(); ++r) {
    out += "rank " + std::to_string(r + 1) + ":";
    for (WorldSet s : levels[r]) out += " " + describe_subset(s, named.elements);
    out += ";\n";
  }
  return out;
}

}  // namespace belfl
