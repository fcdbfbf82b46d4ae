#ifndef SSCREEN_CLI_HPP
#define SSCREEN_CLI_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "analyzer.hpp"
#include "sampling.hpp"
#include "transcript_io.hpp"

namespace sscreen::cli {

constexpr int kUsage = 64;
constexpr const char* kOutDirEnv = "SSCREEN_OUT_DIR";

struct Streams {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
};

/// Checked claims printed as `[ok]` / `[FAIL]` lines.
class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}
  void heading(const std::string& text) { out_ << "\n== " << text << '\n'; }
  void line(const std::string& text) { out_ << "  " << text << '\n'; }
  bool claim(bool ok, const std::string& text) {
    out_ << (ok ? "  [ok]   " : "  [FAIL] ") << text << '\n';
    if (!ok) ++failures_;
    return ok;
  }
  int failures() const { return failures_; }
  int exit_code() const { return failures_ ? 3 : 0; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

inline std::string short_set(const RSet& s, std::size_t max_parts = 6) {
  if (s.size() <= max_parts) return s.str();
  std::ostringstream os;
  os << s.size() << " components, measure " << std::setprecision(6) << measure(s).approx();
  return os.str();
}

inline std::string approx_set(const RSet& s) {
  if (s.empty()) return "{}";
  std::ostringstream os;
  os << std::setprecision(12);
  const Interval& f = s.front();
  os << "near " << midpoint(f.lo(), f.hi()).approx();
  if (s.size() > 1) os << " (" << s.size() << " components)";
  os << ", width " << std::setprecision(3) << (f.hi() - f.lo()).approx();
  return os.str();
}

/// Members separated by ';', unions inside a member joined with 'U'; `{}` or a blank line is the empty family.
inline std::vector<RSet> parse_family(const std::string& line) {
  std::string text;
  for (char c : line)
    if (c != ' ' && c != '\t' && c != '\r') text += c;
  std::vector<RSet> out;
  if (text.empty() || text == "{}") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    std::string member = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::vector<Interval> parts;
    std::size_t p = 0;
    while (p <= member.size()) {
      std::size_t u = member.find_first_of("Uu", p);
      std::string piece = member.substr(p, u == std::string::npos ? std::string::npos : u - p);
      parts.push_back(Interval::parse(piece));
      if (u == std::string::npos) break;
      p = u + 1;
    }
    out.push_back(RSet::normalize(std::move(parts)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

inline std::string describe(const Rejection& r) {
  std::string s = "rejected (" + r.kind + "): ";
  if (r.kind == "NotDiscrete" && r.point)
    return s + "closures share " + r.point->str() + " (members " + std::to_string(*r.member) + " and " + std::to_string(*r.other) + ")";
  if (r.kind == "NotDisjoint" && r.point)
    return s + "members " + std::to_string(*r.member) + " and " + std::to_string(*r.other) + " both contain " + r.point->str();
  if (r.kind == "NotCovering" && r.point) return s + "uncovered point " + r.point->str() + "; " + r.message;
  return s + r.message;
}

// ---------------------------------------------------------------------------
// play

struct PlayOptions {
  std::string game = "selection";
  std::string ruleset = "d";
  std::string length = "w";
  std::string one = "grid";
  std::string two = "halving";
  std::string target = "full";
  std::string ambient = "[0,1]";
  std::string subspace;
  std::string one_home;
  std::uint64_t innings = 8;
  std::string json_path;
  bool quiet = false;
};

inline GameConfig build_config(const PlayOptions& o) {
  GameConfig c;
  c.ruleset = parse_ruleset(o.ruleset);
  c.length = Ordinal::parse(o.length);
  c.ambient = Interval::parse(o.ambient);
  c.target = TargetSpec::parse(o.target);
  c.one = canonical_id(o.one, "one");
  c.two = canonical_id(o.two, "two");
  c.schedule.main_budget = o.innings;
  if (!o.one_home.empty()) c.one_home = Interval::parse(o.one_home);
  if (!o.subspace.empty()) c = lift_to_closed_subspace(c, RSet::parse(o.subspace));
  return c;
}

inline std::string default_transcript_path(const GameConfig& c) {
  const char* dir = std::getenv(kOutDirEnv);
  if (!dir || !*dir) return {};
  std::string name = "play_" + c.one + "_" + c.two + "_" + c.length.str() + ".jsonl";
  for (char& ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '.' && ch != '_' && ch != '-') ch = '_';
  return (std::filesystem::path(dir) / name).string();
}

inline void print_summary(std::ostream& out, const Transcript& tr) {
  const Verdict& v = tr.verdict;
  const Certificate& c = v.certificate;
  std::size_t limits = 0, extensions = 0;
  for (const auto& r : tr.records)
    if (const auto* l = std::get_if<LimitRecord>(&r)) {
      ++limits;
      extensions += l->extensions;
    }
  out << "verdict: " << to_string(v.outcome);
  if (!v.winner.empty()) out << " (winner: " << v.winner << ")";
  out << '\n';
  out << "innings: " << tr.innings().size();
  if (limits) out << " (" << limits << " limit stage(s), " << extensions << " extension innings)";
  out << '\n';
  if (c.union_set) out << "union of TWO's moves: " << short_set(*c.union_set) << '\n';
  if (!c.coverage_basis.empty()) out << "coverage basis: " << c.coverage_basis << '\n';
  if (!c.nested.empty()) out << "nested-closure chain: " << c.nested.size() << " links verified\n";
  if (c.uncovered_open) out << "uncovered open set: " << approx_set(*c.uncovered_open) << '\n';
  if (c.uncovered_point) out << "uncovered point: " << c.uncovered_point->str() << '\n';
  if (c.uncovered_measure) out << "uncovered measure: " << c.uncovered_measure->str() << '\n';
  if (c.avoided_points) out << "closure of the final O avoids q_0..q_" << *c.avoided_points - 1 << '\n';
  if (c.rejection) out << describe(*c.rejection) << " [offender: " << c.rejection->offender << "]\n";
  if (!c.note.empty()) out << "note: " << c.note << '\n';
}

inline int write_file(const std::string& path, const std::string& text, Streams& s) {
  std::ofstream f(path);
  if (!f) {
    s.err << "cannot write " << path << '\n';
    return kUsage;
  }
  f << text;
  return 0;
}

inline int cmd_play_bm(const PlayOptions& o, Streams& s) {
  std::string two = canonical_id(o.two, "two");
  const std::string prefix = "two:bm-first-category:";
  if (two.substr(0, prefix.size()) != prefix) {
    s.err << "the bm game needs --two bm-first-category:<enum>\n";
    return kUsage;
  }
  RationalEnumeration points(two.substr(prefix.size()));
  Interval ambient = Interval::parse(o.ambient);
  std::string one = canonical_id(o.one, "one");
  BMStrategy bm;
  if (one == "one:main-compact") {
    bm = bm_one_compact(ambient);
  } else if (one.substr(0, 16) == "one:main-gdelta:") {
    bm = bm_one_dense_gdelta(GDeltaSpec(one.substr(16)), ambient);
  } else {
    s.err << "the bm game needs --one main-compact or main-gdelta:<enum>\n";
    return kUsage;
  }
  BMPlay play = play_banach_mazur(bm, points, o.innings);
  std::ostringstream lines;
  for (std::size_t n = 0; n < play.rounds.size(); ++n) {
    const auto& r = play.rounds[n];
    lines << json{{"inning", std::to_string(n)},
                  {"one", r.one.str()},
                  {"two", r.two.str()},
                  {"nowhere_dense", r.nowhere_dense.str()},
                  {"checks", {{"nested", r.nested}, {"avoids", r.avoids}}}}
                 .dump()
          << '\n';
  }
  std::string verdict = play.ok() ? "two-avoids-first-category" : "invariant-violation";
  lines << json{{"verdict", verdict}, {"certificate", {{"innings", play.rounds.size()}, {"avoided", "q_0..q_" + std::to_string(o.innings - 1)}}}}.dump()
        << '\n';
  if (!o.json_path.empty())
    if (int rc = write_file(o.json_path, lines.str(), s)) return rc;
  if (!o.quiet) {
    s.out << "verdict: " << verdict << '\n';
    if (!play.rounds.empty()) s.out << "last T_n: " << approx_set(play.rounds.back().two) << '\n';
  }
  return play.ok() ? 0 : 3;
}

inline int cmd_play(const PlayOptions& o, Streams& s) {
  if (o.game == "bm") return cmd_play_bm(o, s);
  if (o.game != "selection") {
    s.err << "unknown game '" << o.game << "' (selection|bm)\n";
    return kUsage;
  }
  GameConfig cfg = build_config(o);
  Transcript tr = play(cfg);
  std::string path = o.json_path.empty() ? default_transcript_path(cfg) : o.json_path;
  if (!path.empty())
    if (int rc = write_file(path, transcript_text(tr), s)) return rc;
  if (!o.quiet) {
    print_summary(s.out, tr);
    if (!path.empty()) s.out << "transcript: " << path << '\n';
  }
  return tr.verdict.exit_code();
}

// ---------------------------------------------------------------------------
// demos

inline GameConfig demo_config(const std::string& one, const std::string& two, const std::string& length, std::uint64_t budget,
                              const std::string& target = "full", Ruleset ruleset = Ruleset::Discrete) {
  GameConfig c;
  c.ruleset = ruleset;
  c.length = Ordinal::parse(length);
  c.target = TargetSpec::parse(target);
  c.one = one;
  c.two = two;
  c.schedule.main_budget = budget;
  return c;
}

inline std::vector<std::string> main_two_catalog() {
  return {"two:empty", "two:first-member", "two:greedy", "two:halving", "two:countable:farey"};
}

inline void demo_one_main(Report& r) {
  r.heading("ONE wins the discrete length-w game on [0,1]");
  r.line("every discrete family refining ONE's cover leaves part of O_n uncovered, and the");
  r.line("Banach-Mazur moves nest with closures, so the intersection of the O_n is nonempty.");
  for (const auto& two : main_two_catalog()) {
    Transcript tr = play(demo_config("one:main-compact", two, "w", 25));
    const auto& c = tr.verdict.certificate;
    bool ok = tr.verdict.outcome == Outcome::OneWinsCertified && c.nested.size() == 25 && c.uncovered_open && !c.uncovered_open->empty();
    r.claim(ok, "vs " + two + ": " + to_string(tr.verdict.outcome) + ", closure(O_{n+1}) in T_n in O_n for 25 innings, uncovered " +
                    (c.uncovered_open ? approx_set(*c.uncovered_open) : std::string("-")));
  }
}

inline void demo_omega_plus_one(Report& r) {
  r.heading("TWO wins the discrete length w+1 game on [0,1]");
  r.line("halving leaves residual measure exactly 2^-n after n innings; at the limit inning the");
  r.line("finitely many residual pieces are fattened into one discrete family.");
  for (const std::string one : {"one:grid", "one:avoid-fixed"}) {
    Transcript tr = play(demo_config(one, "two:halving-omega-plus-1", "w+1", 12));
    RSet amb(Interval::closed(0, 1));
    RSet u;
    bool halves = true;
    std::size_t n = 0, ext = 0;
    for (const auto* i : tr.innings()) {
      if (i->limit) break;
      u = set_union(u, union_all(i->two));
      ++n;
      halves = halves && measure(subtract(amb, u)) == Rational::pow2(-static_cast<long>(n));
      if (n == 2) halves = halves && measure(subtract(amb, u)) == Rational(1, 4);
      if (i->extension) ++ext;
    }
    bool covered = tr.verdict.outcome == Outcome::TwoWinsCovered && tr.two_union() == amb;
    r.claim(halves, "vs " + one + ": residual measure is 2^-n after each of " + std::to_string(n) + " pre-limit innings (1/4 after two)");
    r.claim(covered, "vs " + one + ": " + to_string(tr.verdict.outcome) + ", union of all moves = [0,1] exactly (" +
                         std::to_string(ext) + " extension innings)");
  }
}

inline void demo_cantor(Report& r) {
  r.heading("TWO wins the one-inning discrete game on the Cantor set");
  r.line("fattened level-n pieces form a discrete family inside single members.");
  for (const std::string one : {"one:grid", "one:avoid-fixed", "one:main-compact"}) {
    Transcript tr = play(demo_config(one, "two:cantor-oneshot", "1", 8, "cantor"));
    auto innings = tr.innings();
    bool ok = tr.verdict.outcome == Outcome::TwoWinsCovered && innings.size() == 1;
    std::string detail;
    if (ok) {
      std::size_t members = innings[0]->two.size();
      int level = 0;
      while ((std::size_t{1} << level) < members) ++level;
      Rational gamma = Rational::pow3(-(level + 1));
      ok = (std::size_t{1} << level) == members && (members == 1 || (innings[0]->min_gap && !(*innings[0]->min_gap < gamma)));
      detail = ", level " + std::to_string(level) + ", " + std::to_string(members) + " members, min gap >= " + gamma.str();
    }
    r.claim(ok, "vs " + one + ": " + to_string(tr.verdict.outcome) + detail);
  }
}

inline void demo_rationals(Report& r) {
  r.heading("rationals: covered one point per inning, never in one inning");
  for (const std::string one : {"one:grid", "one:avoid-fixed", "one:main-compact"}) {
    // the grid cover at inning n has about 2^(n+2) members
    const std::size_t n = 12;
    Transcript tr = play(demo_config(one, "two:countable:farey", "w", n, "countable:farey"));
    RationalEnumeration q("farey");
    RSet u = tr.two_union();
    bool all = true;
    for (std::size_t k = 0; k < n; ++k) all = all && contains_point(u, q.at(k));
    r.claim(all && tr.verdict.outcome == Outcome::TwoWinsCovered,
            "vs " + one + ": q_0..q_11 covered after 12 innings, one point per inning");
  }
  PlayContext ctx;
  Cover cover = avoid_cover(middle_half(ctx.ambient), ctx.ambient);
  for (const auto& id : two_catalog()) {
    auto two = make_two(id, ctx);
    std::vector<RSet> family;
    try {
      family = two->respond(InningLabel{}, cover);
    } catch (const Error&) {
      continue;
    }
    if (!referee_step(Ruleset::Discrete, cover, family, RSet(ctx.ambient)).accepted()) continue;
    auto w = dense_discrete_witness(family);
    Rational x = std::holds_alternative<Rational>(w) ? std::get<Rational>(w)
                                                     : midpoint(std::get<Interval>(w).lo(), std::get<Interval>(w).hi());
    r.claim(!contains_point(union_all(family), x), id + "'s one-shot family misses the rational " + x.str());
  }
}

inline void demo_gdelta(Report& r) {
  r.heading("ONE wins the length-w game for the irrationals in [0,1]");
  r.line("G_n = [0,1] minus q_n; the nested play avoids q_0..q_{n-1}.");
  for (const auto& two : main_two_catalog()) {
    Transcript tr = play(demo_config("one:main-gdelta:farey", two, "w", 25, "gdelta:farey"));
    const auto& c = tr.verdict.certificate;
    bool ok = tr.verdict.outcome == Outcome::OneWinsCertified && c.avoided_points && *c.avoided_points == 25;
    r.claim(ok, "vs " + two + ": " + to_string(tr.verdict.outcome) + ", closure of O_25 avoids q_0..q_24");
  }
  r.heading("TWO avoids a first-category set in the Banach-Mazur game");
  BMPlay bm = play_banach_mazur(bm_one_compact(Interval::closed(0, 1)), RationalEnumeration("farey"), 25);
  r.claim(bm.ok(), "F_n = {q_n}: closure(T_n) in O_n and misses F_n for 25 innings");
}

inline void demo_alpha_minus(Report& r) {
  r.heading("alpha^- for infinite ordinals below w^w");
  for (const std::string text : {"w*2", "w^2", "w+5", "w", "w^2+w", "w^3*2+w^2", "w^2*3+w*2+7"}) {
    Ordinal a = Ordinal::parse(text);
    Ordinal m = alpha_minus(a);
    bool ok = m <= a && (m.is_finite() || alpha_minus(m) == m);
    r.claim(ok, text + " -> " + m.str() +
                    "  (alpha^- <= alpha" + (m.is_finite() ? ")" : ", idempotent)"));
  }
}

inline void demo_inequivalence(Report& r) {
  r.heading("disjoint and discrete games differ on [0,1]");
  Transcript c = play(demo_config("one:grid", "two:chain-puncture", "2", 8, "full", Ruleset::Disjoint));
  RSet amb(Interval::closed(0, 1));
  bool two_wins = c.verdict.outcome == Outcome::TwoWinsCovered && c.innings().size() == 2 && c.two_union() == amb;
  r.claim(two_wins, "disjoint game: chain-puncture then clean-up covers [0,1] exactly in 2 innings");
  if (!c.innings().empty()) {
    const auto* first = c.innings().front();
    auto judged = referee_step(Ruleset::Discrete, std::span<const RSet>(first->one), first->two, amb);
    bool rejected = !judged.accepted() && judged.rejection->kind == "NotDiscrete";
    r.claim(rejected, "the same first family under the discrete rules: " +
                          (judged.rejection ? describe(*judged.rejection) : std::string("accepted")));
  }
  Transcript d = play(demo_config("one:grid", "two:chain-puncture", "2", 8));
  r.claim(d.verdict.outcome == Outcome::Forfeit && d.verdict.exit_code() == 2, "discrete game: the puncture move is an illegal move (exit 2)");
  demo_one_main(r);
}

inline int cmd_demo(const std::string& name, Streams& s) {
  static const std::map<std::string, std::function<void(Report&)>> demos = {
      {"one-main", demo_one_main},   {"omega-plus-one", demo_omega_plus_one}, {"cantor", demo_cantor},
      {"rationals", demo_rationals}, {"gdelta", demo_gdelta},                 {"alpha-minus", demo_alpha_minus},
      {"inequivalence", demo_inequivalence}};
  auto it = demos.find(name);
  if (it == demos.end()) {
    s.err << "unknown demo '" << name << "'; known:";
    for (const auto& [k, _] : demos) s.err << ' ' << k;
    s.err << '\n';
    return kUsage;
  }
  Report r(s.out);
  it->second(r);
  s.out << (r.failures() ? "\nsome checks FAILED\n" : "\nall checks passed\n");
  return r.exit_code();
}

// ---------------------------------------------------------------------------
// analyze

inline std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad index '" + item + "'");
    }
    if (used != item.size() || v < 1) throw ParseError("bad index '" + item + "'");
    out.push_back(v);
  }
  return out;
}

inline int cmd_analyze_core(const std::string& two, const std::string& tau, int depth, Streams& s) {
  auto core = strategy_core(two_factory(canonical_id(two, "two")), parse_indices(tau), depth);
  json levels = json::array();
  for (const auto& l : core.levels) levels.push_back(l.str());
  s.out << json{{"tau", core.tau}, {"depth_m", core.depth_m}, {"set", core.set.str()}, {"levels", levels}}.dump() << '\n';
  return 0;
}

inline int cmd_analyze_escape(const std::string& two, const std::string& witness, int k, int search, Streams& s) {
  auto factory = two_factory(canonical_id(two, "two"));
  auto found = find_escape(factory, Rational::parse(witness), k, search);
  json steps = json::array();
  for (const auto& st : found.partial.steps) steps.push_back({{"index", st.index}, {"closure", st.response_closure.str()}});
  bool verified = found.certificate && verify_escape(factory, *found.certificate);
  s.out << json{{"witness", found.partial.witness.str()},
                {"indices", found.partial.indices()},
                {"depth_reached", found.depth_reached},
                {"certificate", found.certificate.has_value()},
                {"verified", verified},
                {"exhausted_at", found.exhausted_at},
                {"steps", steps}}
               .dump()
        << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// check

inline int cmd_check(std::uint64_t seed, int count, Streams& s) {
  Report r(s.out);
  Sampler rng(seed);
  r.heading("invariant suites (seed " + std::to_string(seed) + ", " + std::to_string(count) + " cases each)");

  int bad = 0;
  for (int i = 0; i < count; ++i) {
    Interval t = rng.subinterval();
    Cover c = rng.cover_of(t);
    auto h = halving_refinement(c);
    RSet u = h.family.union_set();
    bool ok = refines(h.family.members(), c.members()).ok && is_subset(u, RSet(t)) &&
              measure(subtract(RSet(t), u)) == t.length() / Rational(2);
    Rational delta = lebesgue_number(c);
    if (h.grid > 2)
      for (const auto& m : h.family.members()) ok = ok && m.front().length() < delta;
    bad += !ok;
  }
  r.claim(bad == 0, "halving: discrete, refining, inside [a,b], residual exactly L/2, fine grids below the Lebesgue number");

  bad = 0;
  for (int i = 0; i < count; ++i) {
    Cover c = rng.cover_of(rng.subinterval());
    bad += !verify_lebesgue(c, lebesgue_number(c)).ok;
  }
  r.claim(bad == 0, "lebesgue_number passes verify_lebesgue");

  bad = 0;
  CantorSpec spec;
  for (int i = 0; i < count / 2; ++i) {
    Cover c = rng.cover_of(spec.ambient);
    auto m = cantor_one_shot(c, spec);
    bool ok = refines(m.family.members(), c.members()).ok && cantor_covered(m.family.union_set(), spec).covered;
    if (m.family.min_gap()) ok = ok && !(*m.family.min_gap() < m.gamma);
    bad += !ok;
  }
  r.claim(bad == 0, "cantor one-shot: refining, covers C, min gap >= 3^-(n+1)");

  bad = 0;
  RSet amb(Interval::closed(0, 1));
  for (int i = 0; i < count; ++i) {
    Cover c = rng.cover_of(Interval::closed(0, 1));
    std::vector<RSet> members;
    for (const auto& m : c.members()) members.push_back(intersect(m, amb));
    std::vector<RSet> fam;
    int n = static_cast<int>(rng.uniform(0, 3));
    for (int j = 0; j < n; ++j) {
      Rational a = rng.rational(0, 1, 16), b = rng.rational(0, 1, 16);
      if (b < a) std::swap(a, b);
      if (a == b) continue;
      fam.emplace_back(Interval::open(a, b));
    }
    auto judged = referee_step(Ruleset::Discrete, std::span<const RSet>(members), fam, amb);
    bool predicate = refines(fam, members).ok && std::holds_alternative<DiscreteFamily>(is_discrete(fam));
    bool ok = judged.accepted() == predicate;
    if (auto& rej = judged.rejection; rej && rej->kind == "NotDiscrete")
      ok = ok && contains_point(closure(fam[*rej->member]), *rej->point) && contains_point(closure(fam[*rej->other]), *rej->point);
    if (auto& rej = judged.rejection; rej && rej->kind == "IllegalRefinement") {
      for (const auto& m : members) ok = ok && !is_subset(fam[*rej->member], m);
    }
    bad += !ok;
  }
  r.claim(bad == 0, "referee: accepts exactly the discrete refinements, witnesses revalidate");

  bad = 0;
  for (int i = 0; i < count; ++i) {
    Interval o = rng.subinterval();
    Cover c = avoid_cover(Interval::open(o.lo(), o.hi()), Interval::closed(0, 1));
    bool ok = c.union_set() == amb;
    for (const auto& m : c.members()) ok = ok && is_open_in(m, amb) && !is_subset(RSet(Interval::open(o.lo(), o.hi())), closure(m));
    bad += !ok;
  }
  r.claim(bad == 0, "avoid_cover: open members covering [0,1], no closure contains O");

  bad = 0;
  for (std::uint32_t e1 = 1; e1 <= 3; ++e1)
    for (std::uint64_t c1 = 1; c1 <= 3; ++c1)
      for (std::uint64_t tail = 0; tail <= 3; ++tail) {
        Ordinal a = Ordinal::omega_power(e1, c1) + Ordinal(tail);
        Ordinal m = alpha_minus(a);
        bad += !(m <= a && (m.is_finite() || alpha_minus(m) == m));
      }
  r.claim(bad == 0, "alpha^-: below alpha and idempotent where infinite");

  s.out << (r.failures() ? "\nsome checks FAILED\n" : "\nall checks passed\n");
  return r.exit_code();
}

// ---------------------------------------------------------------------------
// interactive

struct SessionEnded {};

inline const char* kFamilyGrammar =
    "grammar: members separated by ';', each an interval such as (1/10,2/10) or [0,1/4); a member with several parts "
    "joins them with 'U'; '{}' is the empty family; 'quit' ends the session";

inline std::string read_line(Streams& s, const std::string& prompt) {
  s.out << prompt << std::flush;
  std::string line;
  if (!std::getline(s.in, line)) throw SessionEnded{};
  auto first = line.find_first_not_of(" \t\r");
  if (first != std::string::npos && line.substr(first, 4) == "quit") throw SessionEnded{};
  return line;
}

inline std::string show_family(const std::vector<RSet>& f) {
  if (f.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " ; " : "") + f[i].str();
  return out;
}

class HumanTwo : public TwoPlayer {
 public:
  HumanTwo(Streams& s, PlayContext ctx) : s_(s), ctx_(std::move(ctx)) {}
  std::string id() const override { return "two:human"; }
  std::vector<RSet> respond(const InningLabel& inning, const Cover& cover) override {
    s_.out << "inning " << inning.str() << ", ONE covers with: " << show_family(cover.members()) << '\n';
    while (true) {
      std::string line = read_line(s_, "TWO> ");
      std::vector<RSet> family;
      try {
        family = parse_family(line);
      } catch (const Error& e) {
        s_.out << "cannot parse: " << e.what() << "\n" << kFamilyGrammar << '\n';
        continue;
      }
      auto judged = referee_step(ctx_.ruleset, cover, family, RSet(ctx_.ambient));
      if (judged.accepted()) {
        s_.out << "accepted\n";
        return family;
      }
      s_.out << describe(*judged.rejection) << '\n';
    }
  }

 private:
  Streams& s_;
  PlayContext ctx_;
};

class HumanOne : public OnePlayer {
 public:
  HumanOne(Streams& s, PlayContext ctx) : s_(s), ctx_(std::move(ctx)) {}
  std::string id() const override { return "one:human"; }
  Cover cover(const InningLabel& inning) override {
    s_.out << "inning " << inning.str() << ", enter ONE's open cover of " << ctx_.ambient.str() << '\n';
    while (true) {
      std::string line = read_line(s_, "ONE> ");
      std::vector<RSet> members;
      try {
        members = parse_family(line);
      } catch (const Error& e) {
        s_.out << "cannot parse: " << e.what() << "\n" << kFamilyGrammar << '\n';
        continue;
      }
      if (auto bad = validate_cover(members, ctx_.ambient, ctx_.target)) {
        s_.out << describe(*bad) << '\n';
        continue;
      }
      s_.out << "accepted\n";
      return Cover(RSet(), std::move(members));
    }
  }
  void observe(const InningLabel&, const std::vector<RSet>& family) override {
    s_.out << "TWO answers: " << show_family(family) << '\n';
  }

 private:
  Streams& s_;
  PlayContext ctx_;
};

inline int cmd_interactive(const std::string& as, const std::string& opponent, const PlayOptions& o, Streams& s) {
  GameConfig cfg = build_config(o);
  cfg.length = Ordinal(o.innings);
  PlayContext ctx{effective_ambient(cfg), effective_target(cfg), cfg.ruleset};
  std::unique_ptr<OnePlayer> one;
  std::unique_ptr<TwoPlayer> two;
  if (as == "two") {
    two = std::make_unique<HumanTwo>(s, ctx);
    one = make_one(opponent.empty() ? "one:grid" : canonical_id(opponent, "one"), ctx);
  } else if (as == "one") {
    one = std::make_unique<HumanOne>(s, ctx);
    two = make_two(opponent.empty() ? "two:halving" : canonical_id(opponent, "two"), ctx);
  } else {
    s.err << "--as must be one or two\n";
    return kUsage;
  }
  s.out << "interactive " << to_string(cfg.ruleset) << " game on " << ctx.ambient.str() << ", " << o.innings << " innings\n";
  if (as == "two") s.out << kFamilyGrammar << '\n';
  try {
    Transcript tr = play(cfg, std::move(one), std::move(two));
    print_summary(s.out, tr);
    if (!o.json_path.empty())
      if (int rc = write_file(o.json_path, transcript_text(tr), s)) return rc;
    return tr.verdict.exit_code();
  } catch (const SessionEnded&) {
    s.out << "session ended\n";
    return 0;
  }
}

// ---------------------------------------------------------------------------
// entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  Streams s{out, err, in};
  CLI::App app{"selective screenability games on the real line: play, demos, analyses"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value configuration file");

  PlayOptions po;
  auto add_game_flags = [&](CLI::App* sub) {
    sub->add_option("--ruleset", po.ruleset, "d|discrete|c|disjoint");
    sub->add_option("--one", po.one, "ONE strategy id");
    sub->add_option("--two", po.two, "TWO strategy id");
    sub->add_option("--target", po.target, "full|closed:<set>|cantor|countable:<enum>|gdelta:<enum>");
    sub->add_option("--ambient", po.ambient, "closed ambient interval");
    sub->add_option("--subspace", po.subspace, "restrict the game to a closed subinterval");
    sub->add_option("--innings", po.innings, "innings before each limit stage (or in total when interactive)");
    sub->add_option("--json", po.json_path, "transcript output (JSON Lines)");
  };

  auto* play_cmd = app.add_subcommand("play", "run a match and write its transcript");
  add_game_flags(play_cmd);
  play_cmd->add_option("--length", po.length, "game length in Cantor normal form, e.g. w+1");
  play_cmd->add_option("--one-home", po.one_home, "closed subinterval ONE plays on (lifted to the ambient)");
  play_cmd->add_option("--game", po.game, "selection|bm");
  play_cmd->add_flag("--quiet", po.quiet, "no summary");

  std::string demo_name;
  auto* demo_cmd = app.add_subcommand("demo", "scripted scenarios with checked claims");
  demo_cmd->add_option("name", demo_name, "one-main|omega-plus-one|cantor|rationals|gdelta|alpha-minus|inequivalence")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "closed cores and escaping plays of TWO strategies");
  analyze_cmd->require_subcommand(1);
  std::string a_two = "two:first-member", a_tau, a_witness = "1/2";
  int a_depth = 8, a_k = 5, a_search = 12;
  auto* core_cmd = analyze_cmd->add_subcommand("core", "approximate C_tau from above");
  core_cmd->add_option("--two", a_two, "TWO strategy id");
  core_cmd->add_option("--tau", a_tau, "comma-separated ball indices");
  core_cmd->add_option("--depth", a_depth, "number of intersectands");
  auto* escape_cmd = analyze_cmd->add_subcommand("escape", "search a play whose answers keep missing a point");
  escape_cmd->add_option("--two", a_two, "TWO strategy id");
  escape_cmd->add_option("--witness", a_witness, "rational point");
  escape_cmd->add_option("--k", a_k, "play depth");
  escape_cmd->add_option("--search", a_search, "largest ball index tried per step");

  std::uint64_t seed = 1;
  int count = 200;
  auto* check_cmd = app.add_subcommand("check", "run the invariant suites");
  check_cmd->add_option("--seed", seed, "random seed");
  check_cmd->add_option("--count", count, "cases per suite");

  std::string as, opponent;
  auto* inter_cmd = app.add_subcommand("interactive", "play one side by hand");
  add_game_flags(inter_cmd);
  inter_cmd->add_option("--as", as, "one|two")->required();
  inter_cmd->add_option("--opponent", opponent, "strategy id of the other side");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*play_cmd) return cmd_play(po, s);
    if (*demo_cmd) return cmd_demo(demo_name, s);
    if (*core_cmd) return cmd_analyze_core(a_two, a_tau, a_depth, s);
    if (*escape_cmd) return cmd_analyze_escape(a_two, a_witness, a_k, a_search, s);
    if (*check_cmd) return cmd_check(seed, count, s);
    if (*inter_cmd) {
      if (po.innings == 8 && inter_cmd->count("--innings") == 0) po.innings = 5;
      return cmd_interactive(as, opponent, po, s);
    }
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sscreen::cli

#endif
