// parityknot: command-line front end for the parity invariants of free and
// virtual knots.
//
// Exit codes: 0 ok, 1 invariance/vanishing violation, 2 input error,
// 3 internal error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parityknot/parityknot.hpp"

namespace pk = parityknot;
using nlohmann::json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct RunConfig {
  std::vector<int> m{1};
  std::vector<int> k{1};
  std::string type_rule = "even-linked";
  bool closed = false;
  std::uint64_t seed = 1;
  std::string format = "json";
};

// A parsed knot: always held as a Gauss diagram; free inputs are all
// positive and only their underlying chord diagram is read.
struct Knot {
  pk::GaussDiagram diagram;
  bool is_virtual = false;
};

Knot parse_knot(const std::string& text, bool closed) {
  if (pk::looks_virtual(text)) return {pk::parse_virtual_code(text, closed), true};
  return {pk::GaussDiagram::all_positive(pk::parse_free_code(text, closed)), false};
}

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw pk::ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool lists) {
  if (lists) {
    cmd->add_option("--m", cfg.m, "filtration depth(s)")->envname("PARITYKNOT_M")->check(CLI::PositiveNumber);
    cmd->add_option("--k", cfg.k, "truncation degree(s)")->envname("PARITYKNOT_K")->check(CLI::NonNegativeNumber);
  } else {
    cmd->add_option_function<int>(
           "--m", [&](int v) { cfg.m = {v}; }, "filtration depth")
        ->envname("PARITYKNOT_M")
        ->check(CLI::PositiveNumber);
    cmd->add_option_function<int>(
           "--k", [&](int v) { cfg.k = {v}; }, "truncation degree")
        ->envname("PARITYKNOT_K")
        ->check(CLI::NonNegativeNumber);
  }
  cmd->add_option("--type-rule", cfg.type_rule, "even-linked | odd-linked | mod4")
      ->envname("PARITYKNOT_TYPE_RULE")
      ->check(CLI::IsMember({"even-linked", "odd-linked", "mod4"}));
  cmd->add_flag("--closed", cfg.closed, "treat inputs as compact (closed) knots")->envname("PARITYKNOT_CLOSED");
  cmd->add_option("--seed", cfg.seed, "random seed")->envname("PARITYKNOT_SEED");
  cmd->add_option("--format", cfg.format, "json | table")
      ->envname("PARITYKNOT_FORMAT")
      ->check(CLI::IsMember({"json", "table"}));
}

// --- invariant -----------------------------------------------------------------

json invariant_report(const Knot& knot, int m, int k, pk::TypeRule rule) {
  const auto& d = knot.diagram.underlying();
  json r = {{"m", m}, {"k", k}, {"rule", pk::to_string(rule)}, {"closed", d.closed()},
            {"virtual", knot.is_virtual}, {"gamma", nullptr}, {"delta", nullptr},
            {"canonical", nullptr}, {"vassiliev", nullptr}};
  if (!d.closed()) {
    r["gamma"] = pk::gamma(d, m, rule);
    if (knot.is_virtual) {
      r["delta"] = pk::delta(knot.diagram, m, rule);
      r["vassiliev"] = pk::vassiliev_value(knot.diagram, m, k, rule);
    }
  } else if (knot.is_virtual) {
    r["canonical"] = pk::delta_compact(knot.diagram, m, rule);
    r["gamma_canonical"] = pk::gamma_compact(d, m, rule);
  } else {
    r["canonical"] = pk::gamma_compact(d, m, rule);
  }
  return r;
}

std::string table_line(const json& r) {
  std::ostringstream out;
  out << "m=" << r["m"] << " k=" << r["k"] << " rule=" << r["rule"].get<std::string>();
  for (const char* key : {"gamma", "delta", "canonical", "gamma_canonical"}) {
    if (r.contains(key) && !r[key].is_null()) out << "  " << key << "=" << r[key].dump();
  }
  if (!r["vassiliev"].is_null()) {
    pk::AlgebraElement v = pk::algebra_element_from_json(r["vassiliev"], r["m"], r["k"]);
    out << "  vassiliev=" << pk::to_string(v);
  }
  return out.str();
}

int cmd_invariant(const std::string& code, const std::string& file, bool batch, bool lenient,
                  const RunConfig& cfg) {
  const pk::TypeRule rule = pk::parse_type_rule(cfg.type_rule);
  std::vector<std::string> inputs;
  if (!file.empty()) {
    std::string text = read_all(file);
    if (batch) {
      std::istringstream lines(text);
      for (std::string line; std::getline(lines, line);) inputs.push_back(line);
    } else {
      inputs.push_back(text);
    }
  } else {
    inputs.push_back(code);
  }

  json reports = json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Knot knot;
    try {
      knot = parse_knot(inputs[i], cfg.closed);
    } catch (const pk::ParseError& e) {
      if (batch && lenient) {
        std::cerr << "line " << i + 1 << ": " << e.what() << " (skipped)\n";
        continue;
      }
      throw pk::ParseError(batch ? "line " + std::to_string(i + 1) + ": " + e.what() : e.what());
    }
    json per_knot = json::array();
    for (int m : cfg.m) {
      for (int k : cfg.k) per_knot.push_back(invariant_report(knot, m, k, rule));
    }
    json entry = per_knot.size() == 1 ? per_knot[0] : per_knot;
    if (batch) entry = {{"line", i + 1}, {"report", entry}};
    reports.push_back(entry);
  }

  if (cfg.format == "json") {
    std::cout << (batch ? reports : reports[0]).dump(2) << "\n";
  } else {
    for (const auto& entry : reports) {
      const json& rep = batch ? entry["report"] : entry;
      if (batch) std::cout << "line " << entry["line"] << ":\n";
      for (const auto& r : rep.is_array() ? rep : json::array({rep})) std::cout << table_line(r) << "\n";
    }
  }
  return 0;
}

// --- compare -------------------------------------------------------------------

int cmd_compare(const std::string& a_text, const std::string& b_text, const RunConfig& cfg) {
  const pk::TypeRule rule = pk::parse_type_rule(cfg.type_rule);
  Knot a = parse_knot(a_text, cfg.closed);
  Knot b = parse_knot(b_text, cfg.closed);
  const bool both_virtual = a.is_virtual && b.is_virtual;

  json differing = json::array();
  auto check = [&](const std::string& name, int m, std::optional<int> k, const json& va, const json& vb) {
    if (va != vb) {
      json w = {{"invariant", name}, {"m", m}, {"a", va}, {"b", vb}};
      if (k) w["k"] = *k;
      differing.push_back(w);
    }
  };
  for (int m : cfg.m) {
    const auto& da = a.diagram.underlying();
    const auto& db = b.diagram.underlying();
    if (cfg.closed) {
      check("gamma_canonical", m, {}, pk::gamma_compact(da, m, rule), pk::gamma_compact(db, m, rule));
      if (both_virtual) {
        check("delta_canonical", m, {}, pk::delta_compact(a.diagram, m, rule),
              pk::delta_compact(b.diagram, m, rule));
      }
      continue;
    }
    check("gamma", m, {}, pk::gamma(da, m, rule), pk::gamma(db, m, rule));
    if (!both_virtual) continue;
    check("delta", m, {}, pk::delta(a.diagram, m, rule), pk::delta(b.diagram, m, rule));
    for (int k : cfg.k) {
      check("vassiliev", m, k, pk::vassiliev_value(a.diagram, m, k, rule),
            pk::vassiliev_value(b.diagram, m, k, rule));
    }
  }

  json out = {{"verdict", differing.empty() ? "not-distinguished" : "distinguished"},
              {"witness", differing.empty() ? json(nullptr) : differing[0]},
              {"differing", differing}};
  if (cfg.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << out["verdict"].get<std::string>();
    if (!differing.empty()) {
      std::cout << " by " << differing[0]["invariant"].get<std::string>() << " (m=" << differing[0]["m"] << ")";
    }
    std::cout << "\n";
  }
  return 0;
}

// --- fuzz ----------------------------------------------------------------------

struct FuzzArgs {
  std::size_t trials = 1000;
  std::size_t steps = 30;
  std::size_t max_chords = 64;
  std::size_t max_start_chords = 10;
  std::string kinds = "all";
  std::string mode = "free";
  unsigned threads = 0;
  std::string replay;
};

int cmd_fuzz(const FuzzArgs& args, const RunConfig& cfg) {
  pk::FuzzConfig base;
  base.kind = args.mode == "virtual" ? pk::KnotKind::Virtual : pk::KnotKind::Free;
  base.closed = cfg.closed;
  base.rule = pk::parse_type_rule(cfg.type_rule);
  base.trials = args.trials;
  base.steps = args.steps;
  base.max_chords = args.max_chords;
  base.max_start_chords = args.max_start_chords;
  base.seed = cfg.seed;
  base.kinds = pk::MoveKindSet::parse(args.kinds);
  base.threads = args.threads;

  if (!args.replay.empty()) {
    json report;
    try {
      report = json::parse(read_all(args.replay));
    } catch (const json::exception& e) {
      throw pk::ParseError(std::string("replay file: ") + e.what());
    }
    base.m = cfg.m.front();
    auto failure = pk::fuzz_failure_from_json(report);
    auto at = pk::replay(failure, base);
    json out = {{"reproduced", at.has_value()}, {"move_index", at ? json(*at) : json(nullptr)}};
    std::cout << out.dump(2) << "\n";
    return at ? kExitViolation : 0;
  }

  json settings = json::array();
  std::size_t violations = 0;
  for (int m : cfg.m) {
    pk::FuzzConfig c = base;
    c.m = m;
    auto summary = pk::run_fuzz(c);
    violations += summary.violations;
    json s = summary;
    s["m"] = m;
    s["mode"] = args.mode;
    s["closed"] = cfg.closed;
    s["rule"] = cfg.type_rule;
    s["seed"] = cfg.seed;
    settings.push_back(s);
  }
  if (cfg.format == "json") {
    std::cout << settings.dump(2) << "\n";
  } else {
    for (const auto& s : settings) {
      std::cout << "m=" << s["m"] << " mode=" << args.mode << (cfg.closed ? " closed" : " long")
                << " trials=" << s["trials"] << " moves=" << s["moves_applied"]
                << " violations=" << s["violations"] << "\n";
      for (const auto& c : s["gamma_divisibility"]["coordinates"]) {
        std::cout << "  gamma[" << c["coordinate"] << "] divisible by 4: " << c["by4"] << "/"
                  << s["gamma_divisibility"]["samples"] << "\n";
      }
      for (const auto& f : s["failures"]) std::cout << "  failure: " << f.dump() << "\n";
    }
  }
  return violations ? kExitViolation : 0;
}

// --- vassiliev-check -------------------------------------------------------------

int cmd_vassiliev_check(std::size_t trials, const RunConfig& cfg) {
  const pk::TypeRule rule = pk::parse_type_rule(cfg.type_rule);
  json results = json::array();
  std::size_t violations = 0;
  for (int m : cfg.m) {
    for (int k : cfg.k) {
      auto s = pk::run_vassiliev_check(m, k, trials, cfg.seed, rule);
      violations += s.violations;
      json j = s;
      j["m"] = m;
      j["k"] = k;
      results.push_back(j);
    }
  }
  if (cfg.format == "json") {
    std::cout << results.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << "m=" << r["m"] << " k=" << r["k"] << " trials=" << r["trials"]
                << " violations=" << r["violations"] << "\n";
    }
  }
  return violations ? kExitViolation : 0;
}

// --- random ------------------------------------------------------------------------

int cmd_random(std::size_t n, bool is_virtual, const RunConfig& cfg) {
  if (is_virtual) {
    auto k = pk::random_gauss_diagram(n, cfg.seed, cfg.closed);
    if (cfg.format == "json") {
      std::cout << json(k).dump() << "\n";
    } else {
      std::cout << pk::serialize_virtual_code(k) << "\n";
    }
  } else {
    auto d = pk::random_diagram(n, cfg.seed, cfg.closed);
    if (cfg.format == "json") {
      std::cout << json(d).dump() << "\n";
    } else {
      std::cout << pk::serialize_free_code(d) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity-based group-valued invariants of free and virtual knots"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "parityknot 0.1.0");

  RunConfig cfg;

  auto* inv = app.add_subcommand("invariant", "compute gamma / delta / canonical forms / Vassiliev values");
  std::string code, file;
  bool batch = false, lenient = false;
  inv->add_option("code", code, "free code ('1 2 1 2') or Gauss code ('O1+ O2+ U1+ U2+')");
  inv->add_option("--file,-f", file, "read the knot from a file ('-' for stdin)");
  inv->add_flag("--batch", batch, "one knot per line of --file");
  inv->add_flag("--lenient", lenient, "skip malformed batch lines instead of failing");
  add_common(inv, cfg, true);

  auto* cmp = app.add_subcommand("compare", "try to distinguish two knots");
  std::string code_a, code_b;
  cmp->add_option("a", code_a)->required();
  cmp->add_option("b", code_b)->required();
  add_common(cmp, cfg, true);

  auto* fz = app.add_subcommand("fuzz", "certify invariance under random Reidemeister walks");
  FuzzArgs fargs;
  fz->add_option("--trials", fargs.trials)->envname("PARITYKNOT_TRIALS");
  fz->add_option("--steps", fargs.steps)->envname("PARITYKNOT_STEPS");
  fz->add_option("--max-chords", fargs.max_chords)->envname("PARITYKNOT_MAX_CHORDS");
  fz->add_option("--max-start-chords", fargs.max_start_chords)->envname("PARITYKNOT_MAX_START_CHORDS");
  fz->add_option("--kinds", fargs.kinds, "r1,r2,r3,virtualize or finer kinds; default all")
      ->envname("PARITYKNOT_KINDS");
  fz->add_option("--mode", fargs.mode, "free | virtual")
      ->envname("PARITYKNOT_MODE")
      ->check(CLI::IsMember({"free", "virtual"}));
  fz->add_option("--threads", fargs.threads)->envname("PARITYKNOT_THREADS");
  fz->add_option("--replay", fargs.replay, "replay a failure report (JSON) single-threaded");
  add_common(fz, cfg, true);

  auto* vc = app.add_subcommand("vassiliev-check", "check the alternating sums vanish in the truncated algebra");
  std::size_t vtrials = 200;
  vc->add_option("--trials", vtrials)->envname("PARITYKNOT_TRIALS");
  add_common(vc, cfg, true);

  auto* cay = app.add_subcommand("cayley", "emit a Cayley-graph ball as DOT");
  std::string group = "gm";
  int radius = 2;
  cay->add_option("--group", group, "gm | tilde")->check(CLI::IsMember({"gm", "tilde"}));
  cay->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  add_common(cay, cfg, false);

  auto* rnd = app.add_subcommand("random", "emit a random diagram");
  std::size_t n = 4;
  bool rnd_virtual = false;
  rnd->add_option("--n", n, "chord count");
  rnd->add_flag("--virtual", rnd_virtual, "emit a Gauss code with random signs and arrows");
  add_common(rnd, cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*inv) return cmd_invariant(code, file, batch, lenient, cfg);
    if (*cmp) return cmd_compare(code_a, code_b, cfg);
    if (*fz) return cmd_fuzz(fargs, cfg);
    if (*vc) return cmd_vassiliev_check(vtrials, cfg);
    if (*cay) {
      std::cout << pk::to_dot(pk::cayley_ball(pk::parse_group_kind(group), cfg.m.front(), radius));
      return 0;
    }
    if (*rnd) {
      if (rnd->get_option("--format")->count() == 0) cfg.format = "table";
      return cmd_random(n, rnd_virtual, cfg);
    }
  } catch (const pk::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const pk::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
