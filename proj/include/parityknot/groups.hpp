#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace parityknot {

enum class GroupKind : std::uint8_t { Gm, GmTilde };

std::string to_string(GroupKind kind);
GroupKind parse_group_kind(std::string_view text);

enum class Prime : std::uint8_t { One, Two };

constexpr Prime swap(Prime p) { return p == Prime::One ? Prime::Two : Prime::One; }

/// A generator a'_level, a''_level or a_m, possibly inverted. For the top
/// level m the prime is ignored and the exponent is +1 (a_m is an
/// involution).
struct Letter {
  int level = 0;
  Prime prime = Prime::One;
  int exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Canonical form of a letter for level m (top-level letters lose their
/// prime and exponent).
Letter normalize(Letter g, int m);
Letter inverse(Letter g, GroupKind kind, int m);
std::string to_string(Letter g, int m);

/// Point of the G_m grid: integers x_1..x_m and a bit.
class GmElement {
 public:
  explicit GmElement(int m = 1);
  GmElement(std::vector<std::int64_t> coords, int bit);

  int m() const { return static_cast<int>(coords_.size()); }
  std::span<const std::int64_t> coords() const { return coords_; }
  std::int64_t coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
  int bit() const { return bit_; }
  bool is_identity() const;

  /// Right multiplication by a generator.
  void apply(Letter g);

  /// Coordinates followed by the bit.
  std::vector<std::int64_t> to_array() const;
  std::string to_string() const;

  friend auto operator<=>(const GmElement&, const GmElement&) = default;

 private:
  std::vector<std::int64_t> coords_;
  int bit_ = 0;
};

/// Point of the tilde-G_m grid: integers y_1..y_{2m} and a bit. Level i
/// owns the pair (y_{2i+1}, y_{2i+2}).
class TildeElement {
 public:
  explicit TildeElement(int m = 1);
  TildeElement(std::vector<std::int64_t> coords, int bit);

  int m() const { return static_cast<int>(coords_.size() / 2); }
  std::span<const std::int64_t> coords() const { return coords_; }
  std::int64_t coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
  int bit() const { return bit_; }
  bool is_identity() const;

  void apply(Letter g);

  std::vector<std::int64_t> to_array() const;
  std::string to_string() const;

  friend auto operator<=>(const TildeElement&, const TildeElement&) = default;

 private:
  std::vector<std::int64_t> coords_;
  int bit_ = 0;
};

GmElement gm_apply(GmElement e, Letter g);
TildeElement tilde_apply(TildeElement e, Letter g);

GmElement eval_gm(int m, std::span<const Letter> w);
TildeElement eval_tilde(int m, std::span<const Letter> w);

/// A word evaluating to e: a_m first if the bit is set, then levels m-1
/// down to 0, each walked greedily to its target.
Word coords_to_word(const GmElement& e);
Word coords_to_word(const TildeElement& e);

GmElement mul(const GmElement& a, const GmElement& b);
GmElement inv(const GmElement& a);
TildeElement mul(const TildeElement& a, const TildeElement& b);
TildeElement inv(const TildeElement& a);

/// Exchanges a' and a'' at every level below m.
Word swap_primes(std::span<const Letter> w, int m);

/// (|x_1|, ..., |x_m|, 0). Throws BitNotZero for elements with bit 1.
/// This names the conjugacy class only when every x_i is even (always the
/// case for gamma values); odd coordinates fall into larger classes.
GmElement gm_conjugacy_canonical(const GmElement& e);

// ---------------------------------------------------------------------------
// Rewriting oracle
//
// Works on words only, never on grid coordinates. The central element
// z_i = (a'_i)^2 of tilde-G_m is introduced as an auxiliary symbol so that
// inverse letters can be eliminated. Rules, applied leftmost first:
//   a^-1        -> a            (G_m letters; a_m in both groups)
//   x_i^-1      -> Z_i^-1 x_i   (tilde-G_m, i < m)
//   x Z         -> Z x
//   Z_i^s Z_i^-s -> 1, otherwise Z symbols are sorted by (level, sign)
//   x_i y_j     -> y_j x_i'     (i < j, x_i' has the other prime)
//   x x         -> 1 (G_m, a_m)  |  Z_i (tilde-G_m, i < m)
// ---------------------------------------------------------------------------

struct NormalForm {
  std::vector<std::int64_t> central;  // exponent of z_i, tilde-G_m only
  Word letters;                       // level-descending, no equal neighbours

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

inline constexpr std::size_t kDefaultRewriteBudget = 1u << 20;

/// Throws BoundExceeded after `step_budget` rule applications.
NormalForm rewrite_reduce(GroupKind kind, int m, std::span<const Letter> w,
                          std::size_t step_budget = kDefaultRewriteBudget);

/// Renders a normal form as a plain word (z_i^q as (a'_i)^{2q}).
Word to_word(const NormalForm& nf, int m);

// ---------------------------------------------------------------------------
// Cayley balls
// ---------------------------------------------------------------------------

/// Generators used for Cayley graphs: a'_k, a''_k, a_m for G_m; a'_k^{+-1},
/// a''_k^{+-1}, a_m for tilde-G_m.
Word generators(GroupKind kind, int m);

struct CayleyGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    Letter label;
  };
  GroupKind kind = GroupKind::Gm;
  int m = 1;
  std::vector<std::vector<std::int64_t>> nodes;  // coordinates then bit; node 0 is the identity
  std::vector<std::size_t> depth;
  std::vector<Edge> edges;
};

CayleyGraph cayley_ball(GroupKind kind, int m, int radius);
std::string to_dot(const CayleyGraph& g);

void to_json(nlohmann::json& j, const GmElement& e);
void to_json(nlohmann::json& j, const TildeElement& e);

}  // namespace parityknot
