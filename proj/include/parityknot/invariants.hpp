#pragma once

#include <vector>

#include "parityknot/algebra.hpp"
#include "parityknot/diagram.hpp"
#include "parityknot/groups.hpp"
#include "parityknot/parity.hpp"

namespace parityknot {

/// Letters read along the word from the basepoint: a_m for index-m chords,
/// otherwise a'_k or a''_k by type. Every exponent is +1.
Word gamma_word(const ChordDiagram& d, int m, TypeRule rule = TypeRule::EvenLinked);

/// As gamma_word, with exponent sign(c) on letters of level < m. Arrows are
/// never read.
Word delta_word(const GaussDiagram& k, int m, TypeRule rule = TypeRule::EvenLinked);

/// Value in G_m of a long free knot. Throws NotLong for closed diagrams.
GmElement gamma(const ChordDiagram& d, int m, TypeRule rule = TypeRule::EvenLinked);

/// Conjugacy canonical form of gamma for a closed diagram. Every basepoint
/// placement is evaluated; disagreement raises CanonicalMismatch.
GmElement gamma_compact(const ChordDiagram& d, int m, TypeRule rule = TypeRule::EvenLinked);

/// Value in tilde-G_m of a long virtual knot.
TildeElement delta(const GaussDiagram& k, int m, TypeRule rule = TypeRule::EvenLinked);

/// Lexicographically least delta over all basepoint placements of a closed
/// Gauss diagram.
TildeElement delta_compact(const GaussDiagram& k, int m, TypeRule rule = TypeRule::EvenLinked);

AlgebraElement vassiliev_value(const GaussDiagram& k, int m, int degree,
                               TypeRule rule = TypeRule::EvenLinked);

/// Gauss diagram with some crossings made rigid vertices.
struct SingularKnot {
  GaussDiagram base;
  std::vector<ChordId> singular;
};

/// Sum over all sign choices s on the singular chords of
/// (-1)^{#negative} * vassiliev_value(K_s).
AlgebraElement alternating_sum(const SingularKnot& s, int m, int degree,
                               TypeRule rule = TypeRule::EvenLinked);

}  // namespace parityknot
