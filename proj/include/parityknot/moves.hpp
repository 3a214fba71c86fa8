#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "parityknot/diagram.hpp"

namespace parityknot {

enum class MoveKind : std::uint8_t { R1Add, R1Remove, R2Add, R2Remove, R3, Virtualize };

std::string to_string(MoveKind kind);
MoveKind parse_move_kind(std::string_view text);

class MoveKindSet {
 public:
  constexpr MoveKindSet() = default;
  constexpr MoveKindSet(std::initializer_list<MoveKind> kinds) {
    for (auto k : kinds) insert(k);
  }
  static constexpr MoveKindSet all() {
    return {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add,
            MoveKind::R2Remove, MoveKind::R3, MoveKind::Virtualize};
  }
  constexpr void insert(MoveKind k) { bits_ |= bit(k); }
  constexpr bool contains(MoveKind k) const { return bits_ & bit(k); }
  constexpr bool empty() const { return bits_ == 0; }

  /// Comma separated list, e.g. "r1,r2-remove,r3,virtualize". "r1" and "r2"
  /// expand to both directions; "all" selects everything.
  static MoveKindSet parse(std::string_view text);

 private:
  static constexpr std::uint8_t bit(MoveKind k) { return std::uint8_t(1u << static_cast<unsigned>(k)); }
  std::uint8_t bits_ = 0;
};

// Slots are insertion points 0..L: slot p inserts before position p.

struct R1Add {
  std::size_t slot;
  Sign sign = Sign::Plus;
  Occurrence over = Occurrence::First;
  friend bool operator==(const R1Add&, const R1Add&) = default;
};

struct R1Remove {
  ChordId chord;
  friend bool operator==(const R1Remove&, const R1Remove&) = default;
};

/// Inserts "a b" at first_slot and "a b" (crossed) or "b a" at second_slot.
/// The two new chords get opposite signs, `sign` being a's.
struct R2Add {
  std::size_t first_slot;
  std::size_t second_slot;
  bool crossed = true;
  Sign sign = Sign::Plus;
  std::array<Occurrence, 2> over{Occurrence::First, Occurrence::First};
  friend bool operator==(const R2Add&, const R2Add&) = default;
};

struct R2Remove {
  ChordId a;
  ChordId b;
  friend bool operator==(const R2Remove&, const R2Remove&) = default;
};

/// Three adjacent position pairs, each named by its first position (the
/// partner is the next position, cyclically on closed diagrams). Applying
/// swaps the two ends inside every pair.
struct R3 {
  std::array<std::size_t, 3> pairs;
  friend bool operator==(const R3&, const R3&) = default;
};

struct Virtualize {
  ChordId chord;
  friend bool operator==(const Virtualize&, const Virtualize&) = default;
};

using MoveInstance = std::variant<R1Add, R1Remove, R2Add, R2Remove, R3, Virtualize>;

MoveKind kind_of(const MoveInstance& mv);

/// Every applicable move of the requested kinds. Additions are enumerated
/// over all slots and decorations, so the list is large; random walks
/// sample additions directly instead.
std::vector<MoveInstance> enumerate_moves(const ChordDiagram& d, MoveKindSet kinds);
std::vector<MoveInstance> enumerate_moves(const GaussDiagram& k, MoveKindSet kinds);

/// Throws StaleMove if mv is not applicable to the diagram.
ChordDiagram apply_move(const ChordDiagram& d, const MoveInstance& mv);
GaussDiagram apply_move(const GaussDiagram& k, const MoveInstance& mv);

struct WalkOptions {
  MoveKindSet kinds = MoveKindSet::all();
  std::size_t max_chords = 64;
  double add_probability = 0.35;
};

/// Picks one random applicable move, or nothing if none exists.
std::optional<MoveInstance> random_move(const GaussDiagram& k, bool decorated,
                                        const WalkOptions& opts, std::mt19937_64& rng);

template <class Diagram>
struct WalkResult {
  Diagram diagram;
  std::vector<MoveInstance> log;
};

WalkResult<ChordDiagram> random_walk(const ChordDiagram& d, std::size_t steps, std::uint64_t seed,
                                     const WalkOptions& opts = {});
WalkResult<GaussDiagram> random_walk(const GaussDiagram& k, std::size_t steps, std::uint64_t seed,
                                     const WalkOptions& opts = {});

void to_json(nlohmann::json& j, const MoveInstance& mv);
MoveInstance move_from_json(const nlohmann::json& j);

}  // namespace parityknot
