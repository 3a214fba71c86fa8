#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace parityknot {

using ChordId = std::int32_t;

// Which of a chord's two occurrences (in word order from the basepoint) is
// the overcrossing end, i.e. where the arrow departs.
enum class Occurrence : std::uint8_t { First, Second };

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign negate(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr Occurrence flip(Occurrence o) {
  return o == Occurrence::First ? Occurrence::Second : Occurrence::First;
}

/// A chord diagram stored as a double-occurrence word.
///
/// Chord ids are always dense, 0..n-1, numbered in order of first
/// appearance, so two diagrams with the same chord structure compare equal.
/// A long diagram (closed() == false) has its basepoint just before
/// position 0 and the basepoint arc carries no chord ends. A closed diagram
/// has the same storage; only rotation and move sites across the seam
/// differ.
class ChordDiagram {
 public:
  ChordDiagram() = default;

  /// Accepts arbitrary integer labels, each of which must occur exactly
  /// twice (throws LabelCountError otherwise), and renumbers them.
  explicit ChordDiagram(std::span<const ChordId> labels, bool closed = false);
  ChordDiagram(std::initializer_list<ChordId> labels, bool closed = false)
      : ChordDiagram(std::span<const ChordId>(labels.begin(), labels.size()), closed) {}

  std::span<const ChordId> word() const { return word_; }
  std::size_t chord_count() const { return ends_.size(); }
  std::size_t length() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  bool closed() const { return closed_; }

  ChordDiagram with_closed(bool closed) const;

  /// Positions of the two ends of chord c, ascending.
  std::array<std::size_t, 2> ends(ChordId c) const;

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  std::vector<ChordId> word_;
  std::vector<std::array<std::size_t, 2>> ends_;
  bool closed_ = false;
};

/// One position of a Gauss word: chord label, whether this end is the
/// overcrossing, and the crossing sign.
struct Endpoint {
  ChordId label;
  bool over;
  Sign sign;
};

/// A chord diagram decorated with a sign and an arrow per chord.
class GaussDiagram {
 public:
  GaussDiagram() = default;
  GaussDiagram(ChordDiagram underlying, std::vector<Sign> signs, std::vector<Occurrence> over);

  /// Builds from a per-position description. Each label must occur twice,
  /// exactly once with over = true, and both occurrences must carry the
  /// same sign.
  static GaussDiagram from_endpoints(std::span<const Endpoint> endpoints, bool closed);

  /// Undecorated diagram with every chord positive and the arrow leaving
  /// the first occurrence.
  static GaussDiagram all_positive(const ChordDiagram& underlying);

  const ChordDiagram& underlying() const { return underlying_; }
  std::span<const ChordId> word() const { return underlying_.word(); }
  std::size_t chord_count() const { return underlying_.chord_count(); }
  std::size_t length() const { return underlying_.length(); }
  bool closed() const { return underlying_.closed(); }

  Sign sign(ChordId c) const;
  Occurrence over(ChordId c) const;
  std::span<const Sign> signs() const { return signs_; }
  std::span<const Occurrence> overs() const { return over_; }

  /// True when the end at `pos` is the overcrossing end of its chord.
  bool is_over_at(std::size_t pos) const;

  std::vector<Endpoint> endpoints() const;

  GaussDiagram with_sign(ChordId c, Sign s) const;
  GaussDiagram with_closed(bool closed) const;
  /// Inverts the arrow of chord c and keeps everything else.
  GaussDiagram with_arrow_flipped(ChordId c) const;

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

 private:
  ChordDiagram underlying_;
  std::vector<Sign> signs_;
  std::vector<Occurrence> over_;
};

ChordDiagram parse_free_code(std::string_view text, bool closed = false);
GaussDiagram parse_virtual_code(std::string_view text, bool closed = false);

/// True if the text looks like a Gauss code (tokens starting with O/U).
/// Empty text counts as virtual: it is the unknot in either reading.
bool looks_virtual(std::string_view text);

std::string serialize_free_code(const ChordDiagram& d);
std::string serialize_virtual_code(const GaussDiagram& k);

/// True iff exactly one end of d lies strictly between the two ends of c.
bool linked(const ChordDiagram& d, ChordId c, ChordId e);

/// Number of chords linked with c.
std::size_t linked_count(const ChordDiagram& d, ChordId c);

ChordDiagram rotate_basepoint(const ChordDiagram& d, long long steps);
GaussDiagram rotate_basepoint(const GaussDiagram& k, long long steps);

/// Uniformly random perfect matching on 2n positions; deterministic in seed.
ChordDiagram random_diagram(std::size_t n, std::uint64_t seed, bool closed = false);
/// As random_diagram, with independent uniform signs and arrows.
GaussDiagram random_gauss_diagram(std::size_t n, std::uint64_t seed, bool closed = false);

void to_json(nlohmann::json& j, const ChordDiagram& d);
void to_json(nlohmann::json& j, const GaussDiagram& k);
ChordDiagram chord_diagram_from_json(const nlohmann::json& j);
GaussDiagram gauss_diagram_from_json(const nlohmann::json& j);

}  // namespace parityknot
