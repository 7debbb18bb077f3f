#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "media/generators.hpp"
#include "media/medium.hpp"
#include "media/orientation.hpp"
#include "media/set_family.hpp"

namespace media::io {

/// The file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// The file was read but its contents are malformed.
class FormatError : public Error {
 public:
  using Error::Error;
};

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buffer.str();
}

inline void writeFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("cannot write '" + path + "'");
}

// ---------------------------------------------------------------------------
// Medium interchange format
//
// {"tokens":[{"id":0,"reverse":1,"label":"i_a"},...],
//  "states":[{"id":0,"label":"{a}","transitions":[{"token":0,"to":3},...]},...]}
//
// The writer emits the canonical form: ids dense from 0 in order, transitions
// sorted by token, one token or state object per line.

inline std::string writeMedium(const Medium& m) {
  using nlohmann::ordered_json;
  std::string out = "{\"tokens\":[";
  for (Token t = 0; t < m.tokenCount(); ++t) {
    ordered_json token;
    token["id"] = t;
    token["reverse"] = m.tokens().reverse(t);
    if (m.tokens().hasLabel(t)) token["label"] = m.tokens().label(t);
    out += (t == 0 ? "\n" : ",\n") + token.dump();
  }
  out += "\n],\n\"states\":[";
  for (State s = 0; s < m.stateCount(); ++s) {
    ordered_json state;
    state["id"] = s;
    if (!m.stateLabel(s).empty()) state["label"] = m.stateLabel(s);
    auto transitions = ordered_json::array();
    for (const auto& tr : m.transitions(s)) {
      ordered_json entry;
      entry["token"] = tr.token;
      entry["to"] = tr.to;
      transitions.push_back(std::move(entry));
    }
    state["transitions"] = std::move(transitions);
    out += (s == 0 ? "\n" : ",\n") + state.dump();
  }
  out += "\n]}\n";
  return out;
}

namespace detail {

inline std::size_t index(const nlohmann::json& value, std::string_view what) {
  if (!value.is_number_integer() || value.get<long long>() < 0)
    throw FormatError(std::string(what) + " must be a nonnegative integer");
  return value.get<std::size_t>();
}

inline const nlohmann::json& field(const nlohmann::json& object, const char* key, std::string_view where) {
  if (!object.is_object()) throw FormatError(std::string(where) + " must be an object");
  auto it = object.find(key);
  if (it == object.end()) throw FormatError(std::string(where) + " lacks \"" + key + "\"");
  return *it;
}

/// Positions of a list of objects keyed by dense "id" fields.
inline std::vector<const nlohmann::json*> byId(const nlohmann::json& list, std::string_view what) {
  if (!list.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<const nlohmann::json*> slots(list.size(), nullptr);
  for (const auto& item : list) {
    const auto id = index(field(item, "id", what), std::string(what) + " id");
    if (id >= slots.size()) throw FormatError(std::string(what) + " id " + std::to_string(id) + " out of range");
    if (slots[id]) throw FormatError(std::string(what) + " id " + std::to_string(id) + " repeated");
    slots[id] = &item;
  }
  return slots;
}

inline std::string optionalLabel(const nlohmann::json& object) {
  auto it = object.find("label");
  if (it == object.end()) return {};
  if (!it->is_string()) throw FormatError("label must be a string");
  return it->get<std::string>();
}

}  // namespace detail

inline Medium parseMedium(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("medium: invalid JSON: ") + e.what());
  }
  const auto tokens = detail::byId(detail::field(doc, "tokens", "medium"), "token");
  const auto states = detail::byId(detail::field(doc, "states", "medium"), "state");
  const auto tau = tokens.size();
  const auto n = states.size();

  std::vector<Token> reverse(tau);
  std::vector<std::string> tokenLabels(tau);
  for (Token t = 0; t < tau; ++t) {
    const auto r = detail::index(detail::field(*tokens[t], "reverse", "token"), "token reverse");
    if (r >= tau) throw FormatError("token " + std::to_string(t) + " reverse out of range");
    reverse[t] = static_cast<Token>(r);
    tokenLabels[t] = detail::optionalLabel(*tokens[t]);
  }

  std::vector<std::vector<Transition>> adjacency(n);
  std::vector<std::string> stateLabels(n);
  for (State s = 0; s < n; ++s) {
    stateLabels[s] = detail::optionalLabel(*states[s]);
    const auto& list = detail::field(*states[s], "transitions", "state");
    if (!list.is_array()) throw FormatError("state transitions must be an array");
    for (const auto& entry : list) {
      const auto t = detail::index(detail::field(entry, "token", "transition"), "transition token");
      const auto to = detail::index(detail::field(entry, "to", "transition"), "transition target");
      if (t >= tau) throw FormatError("state " + std::to_string(s) + " uses out-of-range token " + std::to_string(t));
      if (to >= n) throw FormatError("state " + std::to_string(s) + " targets out-of-range state " + std::to_string(to));
      adjacency[s].push_back({static_cast<Token>(t), static_cast<State>(to)});
    }
  }

  try {
    return Medium(TokenTable(std::move(reverse), std::move(tokenLabels)), std::move(adjacency),
                  std::move(stateLabels));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

inline Medium readMedium(const std::string& path) { return parseMedium(readFile(path)); }

// ---------------------------------------------------------------------------
// Length functions: {"<token id>": number, ...}; absent tokens have length 1.

inline LengthFunction parseLengths(std::string_view text, const TokenTable& tokens) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("lengths: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("lengths: top level must be an object");
  std::vector<double> values(tokens.size(), 1.0);
  for (const auto& [key, value] : doc.items()) {
    std::size_t t = 0;
    try {
      std::size_t used = 0;
      t = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw FormatError("lengths: key '" + key + "' is not a token id");
    }
    if (t >= tokens.size()) throw FormatError("lengths: token id " + key + " out of range");
    if (!value.is_number()) throw FormatError("lengths: value for token " + key + " is not a number");
    values[t] = value.get<double>();
  }
  try {
    return LengthFunction(tokens, std::move(values));
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Orientations: {"<token id>": "+" | "-", ...}. A pair may list only one token;
// the other then takes the opposite sign.

inline Orientation parseOrientation(std::string_view text, const TokenTable& tokens) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("orientation: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("orientation: top level must be an object");
  std::vector<int> sign(tokens.size(), 0);
  for (const auto& [key, value] : doc.items()) {
    std::size_t t = 0;
    try {
      std::size_t used = 0;
      t = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw FormatError("orientation: key '" + key + "' is not a token id");
    }
    if (t >= tokens.size()) throw FormatError("orientation: token id " + key + " out of range");
    const auto s = value.is_string() ? value.get<std::string>() : std::string{};
    if (s == "+") sign[t] = 1;
    else if (s == "-" || s == "−") sign[t] = -1;
    else throw FormatError("orientation: sign for token " + key + " must be \"+\" or \"-\"");
  }
  std::vector<bool> positive(tokens.size(), false);
  for (Token t = 0; t < tokens.size(); ++t) {
    const Token r = tokens.reverse(t);
    int mine = sign[t], theirs = sign[r];
    if (mine == 0 && theirs == 0) throw FormatError("orientation: no sign given for token " + tokens.name(t) + " or its reverse");
    if (mine == 0) mine = -theirs;
    if (theirs == 0) theirs = -mine;
    if (mine == theirs) throw FormatError("orientation: token " + tokens.name(t) + " and its reverse have the same sign");
    positive[t] = mine > 0;
  }
  return Orientation(tokens, std::move(positive));
}

inline std::string writeOrientation(const Orientation& o) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (Token t = 0; t < o.size(); ++t) doc[std::to_string(t)] = o.isPositive(t) ? "+" : "-";
  return doc.dump() + "\n";
}

// ---------------------------------------------------------------------------
// Line-oriented text inputs. Blank lines and text after '#' are ignored.
//   graph:  "vertex a", "edge a b"
//   DAG:    "vertex a", "arc a b"
//   family: "set 1 3 4" (a bare "set" is the empty set)

namespace detail {

inline std::vector<std::vector<std::string>> lines(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> parts;
    for (std::string w; words >> w;) parts.push_back(w);
    if (!parts.empty()) out.push_back(std::move(parts));
  }
  return out;
}

}  // namespace detail

/// keyword is "edge" for undirected graphs, "arc" for DAGs. Vertices are numbered
/// in order of first appearance.
inline Graph parseGraph(std::string_view text, std::string_view keyword) {
  Graph g;
  std::unordered_map<std::string, std::size_t> id;
  auto vertex = [&](const std::string& name) {
    auto [it, fresh] = id.emplace(name, g.vertices.size());
    if (fresh) g.vertices.push_back(name);
    return it->second;
  };
  std::size_t lineNo = 0;
  for (const auto& parts : detail::lines(text)) {
    ++lineNo;
    if (parts[0] == "vertex") {
      for (std::size_t i = 1; i < parts.size(); ++i) vertex(parts[i]);
    } else if (parts[0] == keyword) {
      if (parts.size() != 3) throw FormatError(std::string(keyword) + " lines need exactly two vertices");
      const auto x = vertex(parts[1]);
      const auto y = vertex(parts[2]);
      g.edges.emplace_back(x, y);
    } else {
      throw FormatError("unexpected directive '" + parts[0] + "' (expected vertex or " + std::string(keyword) + ")");
    }
  }
  try {
    g.validate(keyword == "arc");
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  return g;
}

/// Elements are ordered numerically when every name is an integer, otherwise
/// lexicographically. Members keep file order.
inline SetFamily parseFamily(std::string_view text) {
  std::vector<std::vector<std::string>> sets;
  std::vector<std::string> names;
  for (const auto& parts : detail::lines(text)) {
    if (parts[0] != "set") throw FormatError("unexpected directive '" + parts[0] + "' (expected set)");
    sets.emplace_back(parts.begin() + 1, parts.end());
    names.insert(names.end(), parts.begin() + 1, parts.end());
  }
  if (sets.empty()) throw FormatError("family: no sets given");
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  const bool numeric = std::all_of(names.begin(), names.end(), [](const std::string& s) {
    return !s.empty() && s.size() < 18 && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  });
  if (numeric)
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) { return std::stoll(a) < std::stoll(b); });

  std::map<std::string, std::size_t> id;
  for (std::size_t i = 0; i < names.size(); ++i) id.emplace(names[i], i);
  std::vector<ElementSet> members;
  for (const auto& s : sets) {
    ElementSet member(names.size());
    for (const auto& x : s) member.set(id.at(x));
    members.push_back(std::move(member));
  }
  const std::size_t universe = names.size();
  try {
    return SetFamily(universe, std::move(members), std::move(names));
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

}  // namespace media::io
