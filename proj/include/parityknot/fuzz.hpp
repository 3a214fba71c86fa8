#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "parityknot/diagram.hpp"
#include "parityknot/moves.hpp"
#include "parityknot/parity.hpp"

namespace parityknot {

enum class KnotKind : std::uint8_t { Free, Virtual };

/// Value checked by the fuzzer for one setting:
///   free long -> gamma, free closed -> gamma_compact,
///   virtual long -> delta, virtual closed -> delta_compact.
/// Free knots read only the underlying chord diagram.
std::vector<std::int64_t> tracked_invariant(const GaussDiagram& k, KnotKind kind, int m, TypeRule rule);

struct FuzzConfig {
  KnotKind kind = KnotKind::Free;
  bool closed = false;
  int m = 1;
  TypeRule rule = TypeRule::EvenLinked;
  std::size_t trials = 1000;
  std::size_t steps = 30;
  std::size_t max_start_chords = 10;
  std::size_t max_chords = 64;
  std::uint64_t seed = 1;
  MoveKindSet kinds = MoveKindSet::all();
  double add_probability = 0.35;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct FuzzFailure {
  std::uint64_t seed = 0;  // trial seed
  GaussDiagram start;
  std::vector<MoveInstance> log;  // up to and including the offending move
  std::vector<std::int64_t> value_before;
  std::vector<std::int64_t> value_after;
};

/// Per gamma coordinate: how many sampled values were divisible by 2, 4,
/// 8 and 16.
struct DivisibilityStats {
  std::size_t samples = 0;
  std::vector<std::array<std::size_t, 4>> divisible;
};

struct FuzzSummary {
  std::size_t trials = 0;
  std::size_t moves_applied = 0;
  std::size_t violations = 0;
  std::vector<FuzzFailure> failures;  // first few, by trial order
  DivisibilityStats gamma_divisibility;
};

/// Seed of trial i, derived from the run seed with splitmix64.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

FuzzSummary run_fuzz(const FuzzConfig& cfg);

/// Replays a failure report single-threaded. Returns the first move index
/// after which the invariant changes, or nullopt if the log is clean.
std::optional<std::size_t> replay(const FuzzFailure& failure, const FuzzConfig& cfg);

struct VassilievViolation {
  std::uint64_t seed = 0;
  GaussDiagram knot;
  std::vector<ChordId> singular;
  nlohmann::json value;
};

struct VassilievCheckSummary {
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::vector<VassilievViolation> failures;
};

/// Draws random long Gauss diagrams with between k+1 and k+1+extra_chords
/// chords, makes k+1 random chords singular, and checks that the
/// alternating sum vanishes after truncation at degree k.
VassilievCheckSummary run_vassiliev_check(int m, int k, std::size_t trials, std::uint64_t seed,
                                          TypeRule rule = TypeRule::EvenLinked,
                                          std::size_t extra_chords = 6);

void to_json(nlohmann::json& j, const VassilievViolation& v);
void to_json(nlohmann::json& j, const VassilievCheckSummary& s);

void to_json(nlohmann::json& j, const FuzzFailure& f);
FuzzFailure fuzz_failure_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const FuzzSummary& s);

}  // namespace parityknot
