#include "cli.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "media/media.hpp"

namespace media::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input parsed but is not a medium, or an oracle disagreed.
class Invalid : public Error {
 public:
  using Error::Error;
};

constexpr std::size_t kMaxCliPermutation = 8;
constexpr std::size_t kMaxOracleUniverse = 24;

struct Options {
  bool json = false;
  bool oracle = false;
  bool trust = false;

  std::string kind;
  std::vector<std::string> args;
  std::string file;
  std::string output;
  std::string lengths;
  std::string orientation;
  std::string to;
  std::string from;
  std::size_t leaves = 0;
  bool reset = false;
};

std::string number(double d) {
  if (std::isfinite(d) && d == std::floor(d) && std::fabs(d) < 1e15) return std::to_string(static_cast<long long>(d));
  std::ostringstream os;
  os << std::setprecision(12) << d;
  return os.str();
}

Json jsonNumber(double d) {
  if (std::isfinite(d) && d == std::floor(d) && std::fabs(d) < 1e15) return static_cast<long long>(d);
  return d;
}

std::size_t count(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const auto value = std::stoull(text, &used);
    if (used == text.size()) return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
}

std::string words(const Medium& m, const Message& w) {
  std::string out;
  for (Token t : w) {
    if (!out.empty()) out += ' ';
    out += m.tokens().name(t);
  }
  return out;
}

Json tokenNames(const Medium& m, const Message& w) {
  auto list = Json::array();
  for (Token t : w) list.push_back(m.tokens().name(t));
  return list;
}

/// State by label, or by index when no label matches.
State resolveState(const Medium& m, const std::string& text) {
  for (State s = 0; s < m.stateCount(); ++s)
    if (m.stateLabel(s) == text) return s;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(text, &used);
    if (used == text.size() && value < m.stateCount()) return static_cast<State>(value);
  } catch (const std::exception&) {
  }
  throw UsageError("no state '" + text + "'");
}

Medium load(const Options& o) {
  auto m = io::readMedium(o.file);
  if (!o.trust) {
    auto report = verifyMedium(m);
    if (!report.passed()) {
      const auto& v = report.violations.front();
      throw Invalid("input is not a medium: " + std::string(checkName(v.check)) + ": " + v.message +
                    " (run 'check' for the full report)");
    }
  }
  return m;
}

LengthFunction lengthsFor(const Options& o, const Medium& m) {
  if (o.lengths.empty()) return LengthFunction::unit(m.tokens());
  return io::parseLengths(io::readFile(o.lengths), m.tokens());
}

void oracleNote(std::ostream& out, const Options& o, const std::string& text) {
  if (!o.json) out << "oracle: " << text << '\n';
}

// ---------------------------------------------------------------------------

Medium generate(const Options& o) {
  if (o.args.size() != 1) throw UsageError("gen " + o.kind + " takes exactly one argument");
  const auto& arg = o.args.front();
  if (o.kind == "perm") {
    const auto k = count(arg, "perm size");
    if (k < 1 || k > kMaxCliPermutation)
      throw UsageError("perm size must be between 1 and " + std::to_string(kMaxCliPermutation));
    return permutationMedium(k);
  }
  if (o.kind == "toporder") return topologicalOrderingMedium(io::parseGraph(io::readFile(arg), "arc"));
  if (o.kind == "acyclic") return acyclicOrientationMedium(io::parseGraph(io::readFile(arg), "edge"));
  if (o.kind == "indep") return independentSetMedium(io::parseGraph(io::readFile(arg), "edge"));
  if (o.kind == "family") return fromWellGradedFamily(io::parseFamily(io::readFile(arg)));
  if (o.kind == "downclosed") return downwardClosedMedium(io::parseFamily(io::readFile(arg)));
  if (o.kind == "btree") {
    const auto h = count(arg, "tree height");
    if (o.leaves > 0) return binaryTreeMedium(o.leaves, h);
    return binaryTreeHeightMedium(h);
  }
  throw UsageError("unknown generator '" + o.kind + "'");
}

int cmdGen(const Options& o, std::ostream& out) {
  const auto m = generate(o);
  if (o.oracle) {
    auto report = verifyMedium(m);
    if (!report.passed()) throw Invalid("generated medium failed verification: " + report.violations.front().message);
    if (m.stateCount() <= oracles::kMaxAxiomStates && !oracles::bruteAxiomCheck(m).passed())
      throw Invalid("generated medium failed the brute-force axiom check");
  }
  const auto text = io::writeMedium(m);
  if (o.output.empty()) {
    out << text;
    return kExitOk;
  }
  io::writeFile(o.output, text);
  const auto s = mediumStats(m);
  if (o.json) {
    out << Json{{"output", o.output}, {"states", s.states}, {"tokens", s.tokens}, {"transitions", s.transitions}}.dump()
        << '\n';
  } else {
    out << "wrote " << o.output << ": " << s.states << " states, " << s.tokens << " tokens, " << s.transitions
        << " transitions\n";
  }
  return kExitOk;
}

int cmdCheck(const Options& o, std::ostream& out) {
  const auto m = io::readMedium(o.file);
  const auto report = verifyMedium(m);
  std::optional<bool> brute;
  if (o.oracle && m.stateCount() <= oracles::kMaxAxiomStates) brute = oracles::bruteAxiomCheck(m).passed();

  if (o.json) {
    Json doc;
    doc["passed"] = report.passed();
    auto list = Json::array();
    for (const auto& v : report.violations) {
      Json item;
      item["check"] = std::string(checkName(v.check));
      item["message"] = v.message;
      if (v.state != kNoState) item["state"] = v.state;
      if (v.token != kNoToken) item["token"] = v.token;
      if (v.other != kNoState) item["other"] = v.other;
      list.push_back(std::move(item));
    }
    doc["violations"] = std::move(list);
    if (brute) doc["oracle_passed"] = *brute;
    out << doc.dump() << '\n';
  } else {
    const auto s = mediumStats(m);
    if (report.passed()) {
      out << "ok: " << s.states << " states, " << s.tokens << " tokens, " << s.transitions << " transitions\n";
    } else {
      out << "not a medium (" << report.violations.size() << " violation"
          << (report.violations.size() == 1 ? "" : "s") << " shown)\n";
      for (const auto& v : report.violations) out << "  " << checkName(v.check) << ": " << v.message << '\n';
    }
    if (o.oracle) {
      if (brute) oracleNote(out, o, *brute ? "axioms hold" : "axioms fail");
      else oracleNote(out, o, "skipped (more than " + std::to_string(oracles::kMaxAxiomStates) + " states)");
    }
  }
  if (brute && *brute != report.passed()) throw Invalid("verifier and brute-force axiom check disagree");
  return report.passed() ? kExitOk : kExitInvalid;
}

int cmdStats(const Options& o, std::ostream& out) {
  const auto m = io::readMedium(o.file);
  const auto s = mediumStats(m);
  const double limit = s.states <= 1 ? 0.0 : static_cast<double>(s.states) * std::log2(static_cast<double>(s.states));
  const std::size_t half = s.tokens / 2;
  const bool density = satisfiesDensityBound(s);
  const bool size = satisfiesSizeBound(s);
  const std::string power = half < 64 ? std::to_string(std::uint64_t{1} << half) : "2^" + std::to_string(half);
  if (o.json) {
    Json doc;
    doc["states"] = s.states;
    doc["tokens"] = s.tokens;
    doc["transitions"] = s.transitions;
    doc["density_bound"] = {{"limit", limit}, {"holds", density}};
    doc["size_bound"] = {{"limit", power}, {"holds", size}};
    out << doc.dump() << '\n';
  } else {
    std::ostringstream lim;
    lim << std::fixed << std::setprecision(2) << limit;
    out << "n=" << s.states << " tau=" << s.tokens << " m=" << s.transitions << '\n';
    out << "m <= n log2 n: " << s.transitions << " <= " << lim.str() << (density ? " holds" : " FAILS") << '\n';
    out << "n <= 2^(tau/2): " << s.states << " <= " << power << (size ? " holds" : " FAILS") << '\n';
  }
  return kExitOk;
}

int cmdReset(const Options& o, std::ostream& out) {
  const auto m = load(o);
  const auto r = resetSequence(m);
  std::optional<std::size_t> shortest;
  if (o.oracle) {
    for (State s = 0; s < m.stateCount(); ++s)
      if (applyMessage(m, s, r.word) != r.sink) throw Invalid("reset word does not synchronize state " + m.stateName(s));
    if (m.stateCount() <= oracles::kMaxResetStates) {
      auto best = oracles::bruteShortestReset(m);
      if (!best || best->size() > r.word.size()) throw Invalid("brute-force reset search disagrees");
      shortest = best->size();
    }
  }
  if (o.json) {
    Json doc;
    doc["word"] = tokenNames(m, r.word);
    doc["tokens"] = r.word;
    doc["length"] = r.word.size();
    doc["sink"] = m.stateName(r.sink);
    if (shortest) doc["shortest"] = *shortest;
    out << doc.dump() << '\n';
  } else {
    out << "word: " << words(m, r.word) << '\n';
    out << "length: " << r.word.size() << '\n';
    out << "sink: " << m.stateName(r.sink) << '\n';
    if (o.oracle) {
      if (shortest) oracleNote(out, o, "synchronizes; shortest reset word has length " + std::to_string(*shortest));
      else oracleNote(out, o, "synchronizes; shortest-reset search skipped (more than 8 states)");
    }
  }
  return kExitOk;
}

void compareDistances(const std::vector<double>& got, const std::vector<double>& expected) {
  if (got != expected) throw Invalid("distances disagree with Bellman-Ford");
}

int cmdSssp(const Options& o, std::ostream& out) {
  if (o.to.empty() == o.from.empty()) throw UsageError("sssp needs exactly one of --to and --from");
  const auto m = load(o);
  const auto lengths = lengthsFor(o, m);
  const bool toward = !o.to.empty();
  const State anchor = resolveState(m, toward ? o.to : o.from);
  const auto dist = toward ? distancesToState(m, lengths, anchor) : singleSourceDistances(m, lengths, anchor);
  if (o.oracle) {
    const auto brute = oracles::bruteDistances(m, lengths);
    std::vector<double> expected(m.stateCount());
    for (State s = 0; s < m.stateCount(); ++s) expected[s] = toward ? brute[s][anchor] : brute[anchor][s];
    compareDistances(dist, expected);
  }
  if (o.json) {
    Json doc;
    doc[toward ? "to" : "from"] = m.stateName(anchor);
    auto list = Json::array();
    for (State s = 0; s < m.stateCount(); ++s) list.push_back({{"state", m.stateName(s)}, {"distance", jsonNumber(dist[s])}});
    doc["distances"] = std::move(list);
    out << doc.dump() << '\n';
  } else {
    for (State s = 0; s < m.stateCount(); ++s) out << m.stateName(s) << '\t' << number(dist[s]) << '\n';
    if (o.oracle) oracleNote(out, o, "agrees with Bellman-Ford");
  }
  return kExitOk;
}

int cmdApsp(const Options& o, std::ostream& out) {
  const auto m = load(o);
  const auto lengths = lengthsFor(o, m);
  const auto table = allPairsShortestPaths(m, lengths);
  const auto n = m.stateCount();
  if (o.oracle) {
    const auto brute = oracles::bruteDistances(m, lengths);
    for (State s = 0; s < n; ++s) {
      std::vector<double> row(n);
      for (State q = 0; q < n; ++q) row[q] = table.distance(s, q);
      compareDistances(row, brute[s]);
    }
  }
  Json doc;
  auto states = Json::array();
  for (State s = 0; s < n; ++s) states.push_back(m.stateName(s));
  doc["states"] = std::move(states);
  auto dist = Json::array(), first = Json::array();
  for (State s = 0; s < n; ++s) {
    auto drow = Json::array(), frow = Json::array();
    for (State q = 0; q < n; ++q) {
      drow.push_back(jsonNumber(table.distance(s, q)));
      const Token t = table.firstToken(s, q);
      frow.push_back(t == kNoToken ? Json(nullptr) : Json(m.tokens().name(t)));
    }
    dist.push_back(std::move(drow));
    first.push_back(std::move(frow));
  }
  doc["distance"] = std::move(dist);
  doc["first_token"] = std::move(first);
  doc["scan_work"] = table.scanWork();

  if (!o.output.empty()) {
    io::writeFile(o.output, doc.dump() + "\n");
    if (o.json) out << Json{{"output", o.output}, {"states", n}}.dump() << '\n';
    else out << "wrote " << n << "x" << n << " tables to " << o.output << '\n';
  } else if (o.json) {
    out << doc.dump() << '\n';
  } else {
    out << "distance";
    for (State q = 0; q < n; ++q) out << '\t' << m.stateName(q);
    out << '\n';
    for (State s = 0; s < n; ++s) {
      out << m.stateName(s);
      for (State q = 0; q < n; ++q) out << '\t' << number(table.distance(s, q));
      out << '\n';
    }
    out << "first token";
    for (State q = 0; q < n; ++q) out << '\t' << m.stateName(q);
    out << '\n';
    for (State s = 0; s < n; ++s) {
      out << m.stateName(s);
      for (State q = 0; q < n; ++q) {
        const Token t = table.firstToken(s, q);
        out << '\t' << (t == kNoToken ? "-" : m.tokens().name(t));
      }
      out << '\n';
    }
  }
  if (o.oracle) oracleNote(out, o, "agrees with Bellman-Ford");
  return kExitOk;
}

int cmdComplements(const Options& o, std::ostream& out) {
  const auto m = load(o);
  const auto pairs = allComplementaryPairs(m);
  if (o.oracle && pairs != oracles::bruteComplementPairs(m)) throw Invalid("complement pairs disagree with brute force");
  if (o.json) {
    auto list = Json::array();
    for (auto [a, b] : pairs) list.push_back(Json::array({m.stateName(a), m.stateName(b)}));
    out << Json{{"pairs", std::move(list)}}.dump() << '\n';
  } else {
    if (pairs.empty()) out << "none\n";
    for (auto [a, b] : pairs) out << m.stateName(a) << '\t' << m.stateName(b) << '\n';
    if (o.oracle) oracleNote(out, o, "agrees with content intersection");
  }
  return kExitOk;
}

int cmdOrient(const Options& o, std::ostream& out) {
  const auto m = load(o);
  const auto found = findClosedOrientation(m);
  if (o.oracle) {
    if (found && !oracles::bruteIsClosed(m, *found)) throw Invalid("orientation found is not closed");
    if (m.tokenCount() <= oracles::kMaxScanTokens && oracles::bruteClosedScan(m).empty() == found.has_value())
      throw Invalid("closed-orientation search disagrees with exhaustive scan");
  }
  if (found && !o.output.empty()) io::writeFile(o.output, io::writeOrientation(*found));
  if (o.json) {
    Json doc;
    doc["closed"] = found.has_value();
    if (found) doc["positive"] = tokenNames(m, found->positiveTokens());
    out << doc.dump() << '\n';
  } else {
    if (found) out << "closed orientation: " << words(m, found->positiveTokens()) << '\n';
    else out << "none\n";
    if (o.oracle) oracleNote(out, o, "agrees with exhaustive scan");
  }
  return kExitOk;
}

int cmdClosed(const Options& o, std::ostream& out) {
  const auto m = load(o);
  const auto orientation = io::parseOrientation(io::readFile(o.orientation), m.tokens());
  const bool closed = isClosed(m, orientation);
  const auto witness = closed ? std::nullopt : findViolatingTriple(m, orientation);
  if (o.oracle && closed != oracles::bruteIsClosed(m, orientation)) throw Invalid("closedness disagrees with brute force");
  if (o.json) {
    Json doc;
    doc["closed"] = closed;
    if (witness) {
      doc["witness"] = {{"state", m.stateName(witness->state)},
                        {"first", m.tokens().name(witness->first)},
                        {"second", m.tokens().name(witness->second)}};
    }
    out << doc.dump() << '\n';
  } else {
    if (closed) {
      out << "closed\n";
    } else {
      out << "not closed\n";
      if (witness)
        out << "witness: state " << m.stateName(witness->state) << ", " << m.tokens().name(witness->first) << " then "
            << m.tokens().name(witness->second) << " is not stepwise effective\n";
    }
    if (o.oracle) oracleNote(out, o, "agrees with the all-triples definition");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

template <OpaqueState S>
int stream(const Options& o, BlackBoxMedium<S> box, const std::function<std::string(const S&)>& render,
           const std::function<std::string(Token)>& tokenName, std::optional<std::size_t> expected,
           std::ostream& out) {
  ReverseSearch<S> search(std::move(box));
  std::size_t states = 0;
  Message word;
  while (auto event = search.advance()) {
    if (auto* visit = std::get_if<typename ReverseSearch<S>::Visit>(&*event)) {
      ++states;
      if (o.json) out << Json{{"state", render(visit->state)}}.dump() << std::endl;
      else out << render(visit->state) << std::endl;
    } else {
      word.push_back(std::get<typename ReverseSearch<S>::Return>(*event).token);
    }
  }
  if (o.reset) {
    if (o.json) {
      auto list = Json::array();
      for (Token t : word) list.push_back(tokenName(t));
      out << Json{{"reset", std::move(list)}}.dump() << '\n';
    } else {
      std::string text;
      for (Token t : word) text += (text.empty() ? "" : " ") + tokenName(t);
      out << "reset: " << text << '\n';
    }
  }
  if (expected && *expected != states)
    throw Invalid("enumerated " + std::to_string(states) + " states but the oracle counts " + std::to_string(*expected));
  if (expected) oracleNote(out, o, "count " + std::to_string(states) + " confirmed");
  return kExitOk;
}

int cmdEnumerate(const Options& o, std::ostream& out) {
  const auto& a = o.args;
  auto need = [&](std::size_t k) {
    if (a.size() != k) throw UsageError("enumerate " + o.kind + " takes " + std::to_string(k) + " argument(s)");
  };

  if (o.kind == "wrap") {
    need(1);
    Options copy = o;
    copy.file = a[0];
    const auto m = load(copy);
    std::optional<std::size_t> expected;
    if (o.oracle) expected = m.stateCount();
    return stream<State>(
        o, wrapExplicit(m), [&](const State& s) { return m.stateName(s); },
        [&](Token t) { return m.tokens().name(t); }, expected, out);
  }

  std::size_t universe = 0;
  std::function<bool(const ElementSet&)> member;
  std::vector<std::string> names;
  if (o.kind == "powerset") {
    need(1);
    universe = count(a[0], "powerset size");
    member = [](const ElementSet&) { return true; };
  } else if (o.kind == "maxsize") {
    need(2);
    const auto k = count(a[0], "size bound");
    universe = count(a[1], "universe size");
    member = [k](const ElementSet& s) { return s.count() <= k; };
  } else if (o.kind == "indep") {
    need(1);
    const auto g = io::parseGraph(io::readFile(a[0]), "edge");
    universe = g.vertices.size();
    names = g.vertices;
    member = [edges = g.edges](const ElementSet& s) {
      return std::none_of(edges.begin(), edges.end(), [&](auto e) { return s.test(e.first) && s.test(e.second); });
    };
  } else {
    throw UsageError("unknown enumeration '" + o.kind + "'");
  }
  if (universe > 63) throw UsageError("enumerate: at most 63 elements are supported");
  if (names.empty())
    for (std::size_t x = 0; x < universe; ++x) names.push_back(std::to_string(x + 1));

  std::optional<std::size_t> expected;
  if (o.oracle) {
    if (universe > kMaxOracleUniverse) throw UsageError("oracle: at most 24 elements can be counted exhaustively");
    std::size_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe); ++mask)
      if (member(ElementSet(universe, mask))) ++total;
    expected = total;
  }
  auto render = [&](const ElementSet& s) {
    std::string text = "{";
    for (auto x = s.find_first(); x != ElementSet::npos; x = s.find_next(x)) {
      if (text.size() > 1) text += ',';
      text += names[x];
    }
    return text + "}";
  };
  auto tokenName = [&](Token t) { return std::string(t % 2 == 0 ? "i_" : "d_") + names[t / 2]; };
  return stream<ElementSet>(o, setFamilyOracle(universe, member, ElementSet(universe)), render, tokenName, expected,
                            out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Build, check and analyse media: token systems acting on finite state sets.", "media"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_flag("--oracle", o.oracle, "Cross-check results against brute-force references (small inputs)");
  app.add_flag("--trust", o.trust, "Skip verifying input media before running algorithms");

  auto* gen = app.add_subcommand("gen", "Generate a medium");
  gen->add_option("kind", o.kind, "perm | toporder | acyclic | family | downclosed | indep | btree")
      ->required()
      ->check(CLI::IsMember({"perm", "toporder", "acyclic", "family", "downclosed", "indep", "btree"}));
  gen->add_option("argument", o.args, "Item count, input file, or tree height")->required();
  gen->add_option("-o,--output", o.output, "Output medium file (default: standard output)");
  gen->add_option("--leaves", o.leaves, "btree: also bound the number of leaves");

  auto* check = app.add_subcommand("check", "Verify the medium axioms");
  check->add_option("file", o.file)->required();

  auto* stats = app.add_subcommand("stats", "Print n, tau, m and the size bounds");
  stats->add_option("file", o.file)->required();

  auto* reset = app.add_subcommand("reset", "Reset sequence of length n-1");
  reset->add_option("file", o.file)->required();

  auto* sssp = app.add_subcommand("sssp", "Shortest-path distances to or from one state");
  sssp->add_option("file", o.file)->required();
  sssp->add_option("--to", o.to, "Target state (label or index)");
  sssp->add_option("--from", o.from, "Source state (label or index)");
  sssp->add_option("--lengths", o.lengths, "Token length file (default: unit lengths)");

  auto* apsp = app.add_subcommand("apsp", "All-pairs distance and first-token tables");
  apsp->add_option("file", o.file)->required();
  apsp->add_option("--lengths", o.lengths, "Token length file (default: unit lengths)");
  apsp->add_option("-o,--output", o.output, "Write the tables as JSON to this file");

  auto* complements = app.add_subcommand("complements", "All complementary state pairs");
  complements->add_option("file", o.file)->required();

  auto* orient = app.add_subcommand("orient", "Find a closed orientation");
  orient->add_option("file", o.file)->required();
  orient->add_option("-o,--output", o.output, "Write the orientation file here when one exists");

  auto* closed = app.add_subcommand("closed", "Test an orientation for closedness");
  closed->add_option("file", o.file)->required();
  closed->add_option("--orientation", o.orientation, "Orientation file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Stream the states of a black-box medium");
  enumerate->add_option("kind", o.kind, "powerset k | maxsize k u | indep graphfile | wrap mediumfile")
      ->required()
      ->check(CLI::IsMember({"powerset", "maxsize", "indep", "wrap"}));
  enumerate->add_option("argument", o.args)->required();
  enumerate->add_flag("--reset", o.reset, "Also print the reset word found during the traversal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmdGen(o, out);
    if (*check) return cmdCheck(o, out);
    if (*stats) return cmdStats(o, out);
    if (*reset) return cmdReset(o, out);
    if (*sssp) return cmdSssp(o, out);
    if (*apsp) return cmdApsp(o, out);
    if (*complements) return cmdComplements(o, out);
    if (*orient) return cmdOrient(o, out);
    if (*closed) return cmdClosed(o, out);
    if (*enumerate) return cmdEnumerate(o, out);
  } catch (const UsageError& e) {
    err << "media: " << e.what() << '\n';
    return kExitUsage;
  } catch (const io::IoError& e) {
    err << "media: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "media: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace media::cli
