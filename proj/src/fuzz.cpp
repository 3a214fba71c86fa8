#include "parityknot/fuzz.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <thread>

#include "parityknot/invariants.hpp"

namespace parityknot {

namespace {

constexpr std::size_t kKeptFailures = 8;

struct TrialOutcome {
  std::size_t moves = 0;
  std::optional<FuzzFailure> failure;
  std::vector<std::vector<std::int64_t>> gammas;
};

std::vector<std::int64_t> gamma_sample(const GaussDiagram& k, int m, TypeRule rule) {
  const auto& d = k.underlying();
  GmElement g = d.closed() ? gamma_compact(d, m, rule) : gamma(d, m, rule);
  return {g.coords().begin(), g.coords().end()};
}

TrialOutcome run_trial(const FuzzConfig& cfg, std::size_t trial) {
  TrialOutcome out;
  const std::uint64_t seed = trial_seed(cfg.seed, trial);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(0, cfg.max_start_chords);
  const bool decorated = cfg.kind == KnotKind::Virtual;
  const std::size_t n = size(rng);
  const std::uint64_t diagram_seed = rng();
  GaussDiagram start = decorated ? random_gauss_diagram(n, diagram_seed, cfg.closed)
                                 : GaussDiagram::all_positive(random_diagram(n, diagram_seed, cfg.closed));

  WalkOptions opts{cfg.kinds, cfg.max_chords, cfg.add_probability};
  GaussDiagram cur = start;
  const auto before = tracked_invariant(cur, cfg.kind, cfg.m, cfg.rule);
  out.gammas.push_back(gamma_sample(cur, cfg.m, cfg.rule));
  std::vector<MoveInstance> log;
  for (std::size_t step = 0; step < cfg.steps; ++step) {
    auto mv = random_move(cur, decorated, opts, rng);
    if (!mv) break;
    cur = decorated ? apply_move(cur, *mv) : GaussDiagram::all_positive(apply_move(cur.underlying(), *mv));
    log.push_back(*mv);
    ++out.moves;
    auto after = tracked_invariant(cur, cfg.kind, cfg.m, cfg.rule);
    out.gammas.push_back(gamma_sample(cur, cfg.m, cfg.rule));
    if (after != before) {
      out.failure = FuzzFailure{seed, start, log, before, after};
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> tracked_invariant(const GaussDiagram& k, KnotKind kind, int m, TypeRule rule) {
  if (kind == KnotKind::Free) {
    const auto& d = k.underlying();
    return (d.closed() ? gamma_compact(d, m, rule) : gamma(d, m, rule)).to_array();
  }
  return (k.closed() ? delta_compact(k, m, rule) : delta(k, m, rule)).to_array();
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

FuzzSummary run_fuzz(const FuzzConfig& cfg) {
  std::vector<TrialOutcome> outcomes(cfg.trials);
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cfg.trials, 1)));

  if (threads <= 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t) outcomes[t] = run_trial(cfg, t);
  } else {
    std::vector<std::jthread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < cfg.trials; t += threads) outcomes[t] = run_trial(cfg, t);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
    pool.clear();
    if (error) std::rethrow_exception(error);
  }

  FuzzSummary summary;
  summary.trials = cfg.trials;
  summary.gamma_divisibility.divisible.assign(static_cast<std::size_t>(cfg.m), {0, 0, 0, 0});
  for (auto& o : outcomes) {
    summary.moves_applied += o.moves;
    if (o.failure) {
      ++summary.violations;
      if (summary.failures.size() < kKeptFailures) summary.failures.push_back(std::move(*o.failure));
    }
    for (const auto& g : o.gammas) {
      ++summary.gamma_divisibility.samples;
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t p = 0; p < 4; ++p) {
          std::int64_t mod = std::int64_t{2} << p;
          if (g[i] % mod == 0) ++summary.gamma_divisibility.divisible[i][p];
        }
      }
    }
  }
  return summary;
}

std::optional<std::size_t> replay(const FuzzFailure& failure, const FuzzConfig& cfg) {
  const bool decorated = cfg.kind == KnotKind::Virtual;
  GaussDiagram cur = failure.start;
  const auto before = tracked_invariant(cur, cfg.kind, cfg.m, cfg.rule);
  for (std::size_t i = 0; i < failure.log.size(); ++i) {
    cur = decorated ? apply_move(cur, failure.log[i])
                    : GaussDiagram::all_positive(apply_move(cur.underlying(), failure.log[i]));
    if (tracked_invariant(cur, cfg.kind, cfg.m, cfg.rule) != before) return i;
  }
  return std::nullopt;
}

VassilievCheckSummary run_vassiliev_check(int m, int k, std::size_t trials, std::uint64_t seed,
                                          TypeRule rule, std::size_t extra_chords) {
  VassilievCheckSummary summary;
  summary.trials = trials;
  const auto singular_count = static_cast<std::size_t>(k) + 1;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    std::mt19937_64 rng(s);
    std::uniform_int_distribution<std::size_t> size(singular_count, singular_count + extra_chords);
    const std::size_t n = size(rng);
    GaussDiagram knot = random_gauss_diagram(n, rng(), false);
    std::vector<ChordId> chords(n);
    for (std::size_t c = 0; c < n; ++c) chords[c] = static_cast<ChordId>(c);
    std::shuffle(chords.begin(), chords.end(), rng);
    chords.resize(singular_count);
    std::sort(chords.begin(), chords.end());
    AlgebraElement sum = alternating_sum({knot, chords}, m, k, rule);
    if (!sum.is_zero()) {
      ++summary.violations;
      if (summary.failures.size() < kKeptFailures) {
        summary.failures.push_back({s, knot, chords, nlohmann::json(sum)});
      }
    }
  }
  return summary;
}

void to_json(nlohmann::json& j, const VassilievViolation& v) {
  j = nlohmann::json{{"seed", v.seed}, {"knot", v.knot}, {"singular", v.singular}, {"value", v.value}};
}

void to_json(nlohmann::json& j, const VassilievCheckSummary& s) {
  j = nlohmann::json{{"trials", s.trials}, {"violations", s.violations}, {"failures", s.failures}};
}

void to_json(nlohmann::json& j, const FuzzFailure& f) {
  j = nlohmann::json{{"seed", f.seed},
                     {"start", f.start},
                     {"log", f.log},
                     {"value_before", f.value_before},
                     {"value_after", f.value_after}};
}

FuzzFailure fuzz_failure_from_json(const nlohmann::json& j) {
  FuzzFailure f;
  f.seed = j.at("seed").get<std::uint64_t>();
  f.start = gauss_diagram_from_json(j.at("start"));
  for (const auto& mv : j.at("log")) f.log.push_back(move_from_json(mv));
  f.value_before = j.at("value_before").get<std::vector<std::int64_t>>();
  f.value_after = j.at("value_after").get<std::vector<std::int64_t>>();
  return f;
}

void to_json(nlohmann::json& j, const FuzzSummary& s) {
  nlohmann::json div = nlohmann::json::array();
  for (std::size_t i = 0; i < s.gamma_divisibility.divisible.size(); ++i) {
    const auto& d = s.gamma_divisibility.divisible[i];
    div.push_back({{"coordinate", i}, {"by2", d[0]}, {"by4", d[1]}, {"by8", d[2]}, {"by16", d[3]}});
  }
  j = nlohmann::json{{"trials", s.trials},
                     {"moves_applied", s.moves_applied},
                     {"violations", s.violations},
                     {"failures", s.failures},
                     {"gamma_divisibility", {{"samples", s.gamma_divisibility.samples}, {"coordinates", div}}}};
}

}  // namespace parityknot
