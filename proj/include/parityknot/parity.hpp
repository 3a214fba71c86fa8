#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parityknot/diagram.hpp"

namespace parityknot {

// First type selects a'_k, second type selects a''_k.
enum class ChordType : std::uint8_t { One, Two };

// How the type of an index-k chord is read off f^k(D).
//   EvenLinked: One iff the chord links an even number of even chords of f^k(D).
//   OddLinked:  One iff the chord links an even number of odd chords of f^k(D).
//   LinkCountMod4: One iff the chord links 0 or 1 chords of D, mod 4. Not an
//               invariant; exists so the fuzzer can be shown to catch a
//               wrong rule.
enum class TypeRule : std::uint8_t { EvenLinked, OddLinked, LinkCountMod4 };

std::string to_string(TypeRule rule);
TypeRule parse_type_rule(std::string_view text);

struct IndexAssignment {
  int m = 1;
  std::vector<int> index;  // by chord id, values in [0, m]
};

struct TypeAssignment {
  TypeRule rule = TypeRule::EvenLinked;
  std::vector<std::optional<ChordType>> type;  // engaged exactly where index < m
};

struct Filtration {
  IndexAssignment index;
  TypeAssignment type;
};

/// Chords linked with an odd number of other chords, ascending.
std::vector<ChordId> odd_chords(const ChordDiagram& d);

/// Deletes every odd chord; surviving chords keep their relative order and
/// are renumbered.
ChordDiagram f_step(const ChordDiagram& d);

IndexAssignment index_assignment(const ChordDiagram& d, int m);
TypeAssignment type_assignment(const ChordDiagram& d, int m, TypeRule rule);

/// Index and type in one pass over the m-1 filtration steps.
Filtration filtration(const ChordDiagram& d, int m, TypeRule rule);

}  // namespace parityknot
