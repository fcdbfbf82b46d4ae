#ifndef SSCREEN_TRANSCRIPT_IO_HPP
#define SSCREEN_TRANSCRIPT_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "engine.hpp"

namespace sscreen {

using json = nlohmann::ordered_json;

namespace io {

inline json sets(const std::vector<RSet>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.str());
  return a;
}

inline std::vector<RSet> parse_sets(const json& a) {
  std::vector<RSet> out;
  for (const auto& s : a) out.push_back(RSet::parse(s.get<std::string>()));
  return out;
}

inline json opt_rational(const std::optional<Rational>& r) { return r ? json(r->fraction_str()) : json(nullptr); }

inline json opt_set(const std::optional<RSet>& s) { return s ? json(s->str()) : json(nullptr); }

}  // namespace io

inline json to_json(const Cover& c) { return {{"target", c.target().str()}, {"members", io::sets(c.members())}}; }

inline Cover cover_from_json(const json& j) {
  return Cover(RSet::parse(j.at("target").get<std::string>()), io::parse_sets(j.at("members")));
}

inline json to_json(const GameConfig& c) {
  json j = {{"ruleset", to_string(c.ruleset)},
            {"length", c.length.str()},
            {"ambient", c.ambient.str()},
            {"target", c.target.str()},
            {"one", c.one},
            {"two", c.two},
            {"budget", c.schedule.main_budget}};
  if (c.subspace) j["subspace"] = c.subspace->str();
  if (c.one_home) j["one_home"] = c.one_home->str();
  return j;
}

inline GameConfig config_from_json(const json& j) {
  GameConfig c;
  c.ruleset = parse_ruleset(j.at("ruleset").get<std::string>());
  c.length = Ordinal::parse(j.at("length").get<std::string>());
  c.ambient = Interval::parse(j.at("ambient").get<std::string>());
  c.target = TargetSpec::parse(j.at("target").get<std::string>());
  c.one = j.at("one").get<std::string>();
  c.two = j.at("two").get<std::string>();
  c.schedule.main_budget = j.at("budget").get<std::uint64_t>();
  if (j.contains("subspace")) c.subspace = Interval::parse(j["subspace"].get<std::string>());
  if (j.contains("one_home")) c.one_home = Interval::parse(j["one_home"].get<std::string>());
  return c;
}

inline json to_json(const InningRecord& r) {
  json j = {{"inning", r.inning.str()},
            {"one", io::sets(r.one)},
            {"two", io::sets(r.two)},
            {"checks", {{"refines", r.refines}, {"ruleset", to_string(r.ruleset)}, {"min_gap", io::opt_rational(r.min_gap)}}}};
  if (r.extension) j["extension"] = true;
  if (r.limit) j["limit_inning"] = true;
  return j;
}

inline json to_json(const LimitRecord& r) {
  return {{"limit", r.limit.str()},
          {"digest", {{"innings", r.digest.innings}, {"covered_measure", r.digest.covered_measure.fraction_str()}}},
          {"extensions", r.extensions}};
}

inline json to_json(const Rejection& r) {
  json j = {{"kind", r.kind}, {"offender", r.offender}, {"message", r.message}};
  j["member"] = r.member ? json(*r.member) : json(nullptr);
  j["other"] = r.other ? json(*r.other) : json(nullptr);
  j["point"] = io::opt_rational(r.point);
  return j;
}

inline json to_json(const Verdict& v) {
  const Certificate& c = v.certificate;
  json cert = {{"winner", v.winner.empty() ? json(nullptr) : json(v.winner)}};
  if (!c.coverage_basis.empty()) cert["coverage_basis"] = c.coverage_basis;
  cert["union"] = io::opt_set(c.union_set);
  if (!c.nested.empty()) {
    json chain = json::array();
    for (const auto& l : c.nested) chain.push_back({{"O", l.o.str()}, {"T", l.t.str()}, {"O_next", l.o_next.str()}});
    cert["nested"] = chain;
  }
  if (c.uncovered_open) cert["uncovered_open"] = c.uncovered_open->str();
  if (c.uncovered_point) cert["uncovered_point"] = c.uncovered_point->fraction_str();
  if (c.uncovered_measure) cert["uncovered_measure"] = c.uncovered_measure->fraction_str();
  if (c.avoided_points) cert["avoided_points"] = *c.avoided_points;
  if (c.rejection) cert["rejection"] = to_json(*c.rejection);
  if (!c.note.empty()) cert["note"] = c.note;
  return {{"verdict", to_string(v.outcome)}, {"certificate", cert}};
}

/// JSON Lines: a config line, one line per record, and the verdict line.
inline void write_transcript(std::ostream& os, const Transcript& tr) {
  os << json{{"config", to_json(tr.config)}}.dump() << '\n';
  for (const auto& r : tr.records) std::visit([&](const auto& rec) { os << to_json(rec).dump() << '\n'; }, r);
  os << to_json(tr.verdict).dump() << '\n';
}

inline std::string transcript_text(const Transcript& tr) {
  std::ostringstream os;
  write_transcript(os, tr);
  return os.str();
}

/// Reads the records back (verdict details are kept only as outcome and winner).
inline Transcript read_transcript(std::istream& is) {
  Transcript tr;
  std::string line;
  bool saw_config = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw ParseError("transcript line is not JSON: " + line.substr(0, 60));
    try {
      if (j.contains("config")) {
        tr.config = config_from_json(j["config"]);
        saw_config = true;
      } else if (j.contains("inning")) {
        InningRecord r;
        r.inning = Ordinal::parse(j["inning"].get<std::string>());
        r.one = io::parse_sets(j["one"]);
        r.two = io::parse_sets(j["two"]);
        const auto& ch = j["checks"];
        r.refines = ch["refines"].get<bool>();
        r.ruleset = parse_ruleset(ch["ruleset"].get<std::string>());
        if (!ch["min_gap"].is_null()) r.min_gap = Rational::parse(ch["min_gap"].get<std::string>());
        r.extension = j.value("extension", false);
        r.limit = j.value("limit_inning", false);
        tr.records.emplace_back(std::move(r));
      } else if (j.contains("limit")) {
        LimitRecord r;
        r.limit = Ordinal::parse(j["limit"].get<std::string>());
        r.digest.innings = j["digest"]["innings"].get<std::uint64_t>();
        r.digest.covered_measure = Rational::parse(j["digest"]["covered_measure"].get<std::string>());
        r.extensions = j["extensions"].get<std::size_t>();
        tr.records.emplace_back(std::move(r));
      } else if (j.contains("verdict")) {
        std::string o = j["verdict"].get<std::string>();
        for (Outcome x : {Outcome::TwoWinsCovered, Outcome::OneWinsCertified, Outcome::OneWinsUncovered, Outcome::Truncated,
                          Outcome::Forfeit, Outcome::InvariantViolated})
          if (to_string(x) == o) tr.verdict.outcome = x;
        const auto& w = j["certificate"]["winner"];
        if (!w.is_null()) tr.verdict.winner = w.get<std::string>();
      } else {
        throw ParseError("unrecognized transcript line: " + line.substr(0, 60));
      }
    } catch (const json::exception& e) {
      throw ParseError("malformed transcript line: " + std::string(e.what()));
    }
  }
  if (!saw_config) throw ParseError("transcript has no config line");
  return tr;
}

}  // namespace sscreen

#endif
