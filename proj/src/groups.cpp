#include "parityknot/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "parityknot/errors.hpp"

namespace parityknot {

namespace {

int parity(std::int64_t v) { return static_cast<int>(v & 1); }

void check_level(int level, int m) {
  if (level < 0 || level > m) {
    throw ParameterMismatch("letter level " + std::to_string(level) + " outside [0, " +
                            std::to_string(m) + "]");
  }
}

// Parity of coords[from..] plus the bit.
int tail_parity(std::span<const std::int64_t> coords, std::size_t from, int bit) {
  std::int64_t s = bit;
  for (std::size_t i = from; i < coords.size(); ++i) s += coords[i];
  return parity(s);
}

std::string join_coords(const std::vector<std::int64_t>& a) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ',';
    out << a[i];
  }
  out << ')';
  return out.str();
}

}  // namespace

std::string to_string(GroupKind kind) { return kind == GroupKind::Gm ? "gm" : "tilde"; }

GroupKind parse_group_kind(std::string_view text) {
  if (text == "gm" || text == "G") return GroupKind::Gm;
  if (text == "tilde" || text == "tilde-gm") return GroupKind::GmTilde;
  throw SyntaxError("unknown group '" + std::string(text) + "'");
}

Letter normalize(Letter g, int m) {
  if (g.level == m) return Letter{m, Prime::One, 1};
  return g;
}

Letter inverse(Letter g, GroupKind kind, int m) {
  g = normalize(g, m);
  if (kind == GroupKind::Gm || g.level == m) return g;
  g.exponent = -g.exponent;
  return g;
}

std::string to_string(Letter g, int m) {
  if (g.level == m) return "a_" + std::to_string(m);
  std::string s = g.prime == Prime::One ? "a'_" : "a''_";
  s += std::to_string(g.level);
  if (g.exponent < 0) s += "^-1";
  return s;
}

// --- G_m --------------------------------------------------------------------

GmElement::GmElement(int m) : coords_(static_cast<std::size_t>(m), 0) {
  if (m < 1) throw ParameterMismatch("m must be at least 1");
}

GmElement::GmElement(std::vector<std::int64_t> coords, int bit) : coords_(std::move(coords)), bit_(bit) {
  if (coords_.empty()) throw ParameterMismatch("m must be at least 1");
  if (bit != 0 && bit != 1) throw ParameterMismatch("grid bit must be 0 or 1");
}

bool GmElement::is_identity() const {
  return bit_ == 0 && std::all_of(coords_.begin(), coords_.end(), [](auto v) { return v == 0; });
}

void GmElement::apply(Letter g) {
  check_level(g.level, m());
  if (g.level == m()) {
    bit_ ^= 1;
    return;
  }
  auto k = static_cast<std::size_t>(g.level);
  int s = tail_parity(coords_, k, bit_);
  std::int64_t step = s == 0 ? 1 : -1;
  if (g.prime == Prime::Two) step = -step;
  coords_[k] += step;
}

std::vector<std::int64_t> GmElement::to_array() const {
  std::vector<std::int64_t> a = coords_;
  a.push_back(bit_);
  return a;
}

std::string GmElement::to_string() const { return join_coords(to_array()); }

// --- tilde G_m ----------------------------------------------------------------

TildeElement::TildeElement(int m) : coords_(2 * static_cast<std::size_t>(m), 0) {
  if (m < 1) throw ParameterMismatch("m must be at least 1");
}

TildeElement::TildeElement(std::vector<std::int64_t> coords, int bit)
    : coords_(std::move(coords)), bit_(bit) {
  if (coords_.empty() || coords_.size() % 2 != 0) {
    throw ParameterMismatch("tilde-G_m coordinates come in level pairs");
  }
  if (bit != 0 && bit != 1) throw ParameterMismatch("grid bit must be 0 or 1");
}

bool TildeElement::is_identity() const {
  return bit_ == 0 && std::all_of(coords_.begin(), coords_.end(), [](auto v) { return v == 0; });
}

void TildeElement::apply(Letter g) {
  check_level(g.level, m());
  if (g.level == m()) {
    bit_ ^= 1;
    return;
  }
  auto k = static_cast<std::size_t>(g.level);
  int s = tail_parity(coords_, 2 * k, bit_);
  // Inverse letters select with the parity they leave behind.
  if (g.exponent < 0) s ^= 1;
  bool low = (g.prime == Prime::One) == (s == 0);
  coords_[low ? 2 * k : 2 * k + 1] += g.exponent < 0 ? -1 : 1;
}

std::vector<std::int64_t> TildeElement::to_array() const {
  std::vector<std::int64_t> a = coords_;
  a.push_back(bit_);
  return a;
}

std::string TildeElement::to_string() const { return join_coords(to_array()); }

GmElement gm_apply(GmElement e, Letter g) {
  e.apply(g);
  return e;
}

TildeElement tilde_apply(TildeElement e, Letter g) {
  e.apply(g);
  return e;
}

GmElement eval_gm(int m, std::span<const Letter> w) {
  GmElement e(m);
  for (const auto& g : w) e.apply(g);
  return e;
}

TildeElement eval_tilde(int m, std::span<const Letter> w) {
  TildeElement e(m);
  for (const auto& g : w) e.apply(g);
  return e;
}

Word coords_to_word(const GmElement& target) {
  const int m = target.m();
  Word w;
  GmElement cur(m);
  auto emit = [&](Letter g) {
    cur.apply(g);
    w.push_back(g);
  };
  if (target.bit()) emit(Letter{m, Prime::One, 1});
  for (int k = m - 1; k >= 0; --k) {
    auto ku = static_cast<std::size_t>(k);
    while (cur.coords()[ku] != target.coords()[ku]) {
      bool up = cur.coords()[ku] < target.coords()[ku];
      int s = tail_parity(cur.coords(), ku, cur.bit());
      // a'_k moves up at even parity, a''_k moves up at odd parity.
      bool one = up == (s == 0);
      emit(Letter{k, one ? Prime::One : Prime::Two, 1});
    }
  }
  return w;
}

Word coords_to_word(const TildeElement& target) {
  const int m = target.m();
  Word w;
  TildeElement cur(m);
  auto emit = [&](Letter g) {
    cur.apply(g);
    w.push_back(g);
  };
  if (target.bit()) emit(Letter{m, Prime::One, 1});
  for (int k = m - 1; k >= 0; --k) {
    auto lo = 2 * static_cast<std::size_t>(k);
    for (std::size_t sel : {lo, lo + 1}) {
      while (cur.coords()[sel] != target.coords()[sel]) {
        int exponent = cur.coords()[sel] < target.coords()[sel] ? 1 : -1;
        int s = tail_parity(cur.coords(), lo, cur.bit());
        if (exponent < 0) s ^= 1;
        bool one = (sel == lo) == (s == 0);
        emit(Letter{k, one ? Prime::One : Prime::Two, exponent});
      }
    }
  }
  return w;
}

GmElement mul(const GmElement& a, const GmElement& b) {
  if (a.m() != b.m()) throw ParameterMismatch("mul: elements of different G_m");
  GmElement out = a;
  for (const auto& g : coords_to_word(b)) out.apply(g);
  return out;
}

GmElement inv(const GmElement& a) {
  Word w = coords_to_word(a);
  GmElement out(a.m());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.apply(inverse(*it, GroupKind::Gm, a.m()));
  return out;
}

TildeElement mul(const TildeElement& a, const TildeElement& b) {
  if (a.m() != b.m()) throw ParameterMismatch("mul: elements of different tilde-G_m");
  TildeElement out = a;
  for (const auto& g : coords_to_word(b)) out.apply(g);
  return out;
}

TildeElement inv(const TildeElement& a) {
  Word w = coords_to_word(a);
  TildeElement out(a.m());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.apply(inverse(*it, GroupKind::GmTilde, a.m()));
  return out;
}

Word swap_primes(std::span<const Letter> w, int m) {
  Word out(w.begin(), w.end());
  for (auto& g : out) {
    if (g.level < m) g.prime = swap(g.prime);
  }
  return out;
}

GmElement gm_conjugacy_canonical(const GmElement& e) {
  if (e.bit() != 0) throw BitNotZero("conjugacy canonical form is defined for bit-0 elements only");
  std::vector<std::int64_t> c(e.coords().begin(), e.coords().end());
  for (auto& v : c) v = v < 0 ? -v : v;
  return GmElement(std::move(c), 0);
}

// --- rewriting oracle -----------------------------------------------------------

namespace {

struct Symbol {
  bool central = false;
  Letter letter;  // for central symbols: level i, exponent +-1

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

class Rewriter {
 public:
  Rewriter(GroupKind kind, int m, std::size_t budget) : kind_(kind), m_(m), budget_(budget) {}

  NormalForm run(std::span<const Letter> w) {
    std::vector<Symbol> s;
    s.reserve(w.size() * 2);
    for (const auto& g : w) {
      check_level(g.level, m_);
      s.push_back({false, g});
    }
    while (step(s)) {
      if (++steps_ > budget_) {
        throw BoundExceeded("rewriting exceeded " + std::to_string(budget_) + " steps");
      }
    }
    NormalForm nf;
    if (kind_ == GroupKind::GmTilde) nf.central.assign(static_cast<std::size_t>(m_), 0);
    for (const auto& sym : s) {
      if (sym.central) {
        nf.central[static_cast<std::size_t>(sym.letter.level)] += sym.letter.exponent;
      } else {
        nf.letters.push_back(sym.letter);
      }
    }
    return nf;
  }

 private:
  bool top(const Letter& g) const { return g.level == m_; }

  // Applies the leftmost applicable rule. Returns false at a fixpoint.
  bool step(std::vector<Symbol>& s) {
    for (std::size_t p = 0; p < s.size(); ++p) {
      Symbol& x = s[p];
      if (!x.central && x.letter.exponent < 0) {
        if (kind_ == GroupKind::Gm || top(x.letter)) {
          x.letter.exponent = 1;
        } else {
          x.letter.exponent = 1;
          s.insert(s.begin() + static_cast<std::ptrdiff_t>(p),
                   Symbol{true, Letter{x.letter.level, Prime::One, -1}});
        }
        return true;
      }
      if (!x.central && top(x.letter) && x.letter.prime != Prime::One) {
        x.letter.prime = Prime::One;
        return true;
      }
      if (p + 1 >= s.size()) break;
      Symbol& y = s[p + 1];
      if (!x.central && y.central) {
        std::swap(x, y);
        return true;
      }
      if (x.central && y.central) {
        if (x.letter.level == y.letter.level && x.letter.exponent != y.letter.exponent) {
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(p), s.begin() + static_cast<std::ptrdiff_t>(p + 2));
          return true;
        }
        if (std::pair(x.letter.level, x.letter.exponent) > std::pair(y.letter.level, y.letter.exponent)) {
          std::swap(x, y);
          return true;
        }
        continue;
      }
      if (x.central || y.central) continue;
      if (x.letter.exponent < 0 || y.letter.exponent < 0) continue;  // handled at p+1 next pass
      if (x.letter.level < y.letter.level) {
        Letter moved = x.letter;
        moved.prime = swap(moved.prime);
        x.letter = y.letter;
        y.letter = moved;
        return true;
      }
      if (x.letter == y.letter) {
        if (kind_ == GroupKind::Gm || top(x.letter)) {
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(p), s.begin() + static_cast<std::ptrdiff_t>(p + 2));
        } else {
          int level = x.letter.level;
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(p + 1));
          s[p] = Symbol{true, Letter{level, Prime::One, 1}};
        }
        return true;
      }
    }
    return false;
  }

  GroupKind kind_;
  int m_;
  std::size_t budget_;
  std::size_t steps_ = 0;
};

}  // namespace

NormalForm rewrite_reduce(GroupKind kind, int m, std::span<const Letter> w, std::size_t step_budget) {
  if (m < 1) throw ParameterMismatch("m must be at least 1");
  return Rewriter(kind, m, step_budget).run(w);
}

Word to_word(const NormalForm& nf, int m) {
  Word w;
  for (std::size_t i = 0; i < nf.central.size(); ++i) {
    std::int64_t q = nf.central[i];
    int exponent = q < 0 ? -1 : 1;
    for (std::int64_t r = 0; r < 2 * (q < 0 ? -q : q); ++r) {
      w.push_back(Letter{static_cast<int>(i), Prime::One, exponent});
    }
  }
  for (const auto& g : nf.letters) w.push_back(normalize(g, m));
  return w;
}

// --- Cayley balls ------------------------------------------------------------

Word generators(GroupKind kind, int m) {
  Word gens;
  for (int k = 0; k < m; ++k) {
    for (Prime p : {Prime::One, Prime::Two}) {
      gens.push_back(Letter{k, p, 1});
      if (kind == GroupKind::GmTilde) gens.push_back(Letter{k, p, -1});
    }
  }
  gens.push_back(Letter{m, Prime::One, 1});
  return gens;
}

CayleyGraph cayley_ball(GroupKind kind, int m, int radius) {
  if (radius < 0) throw ParameterMismatch("radius must be non-negative");
  if (m < 1) throw ParameterMismatch("m must be at least 1");
  CayleyGraph g;
  g.kind = kind;
  g.m = m;
  const Word gens = generators(kind, m);

  auto step = [&](const std::vector<std::int64_t>& node, Letter l) {
    std::vector<std::int64_t> coords(node.begin(), node.end() - 1);
    int bit = static_cast<int>(node.back());
    if (kind == GroupKind::Gm) return gm_apply(GmElement(std::move(coords), bit), l).to_array();
    return tilde_apply(TildeElement(std::move(coords), bit), l).to_array();
  };

  std::map<std::vector<std::int64_t>, std::size_t> seen;
  auto identity = kind == GroupKind::Gm ? GmElement(m).to_array() : TildeElement(m).to_array();
  seen.emplace(identity, 0);
  g.nodes.push_back(identity);
  g.depth.push_back(0);

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    if (g.depth[u] == static_cast<std::size_t>(radius)) continue;
    for (const auto& l : gens) {
      auto next = step(g.nodes[u], l);
      auto [it, inserted] = seen.emplace(next, g.nodes.size());
      if (inserted) {
        g.nodes.push_back(std::move(next));
        g.depth.push_back(g.depth[u] + 1);
        queue.push_back(it->second);
      }
      g.edges.push_back({u, it->second, l});
    }
  }
  return g;
}

std::string to_dot(const CayleyGraph& g) {
  std::ostringstream out;
  out << "digraph cayley_" << to_string(g.kind) << "_" << g.m << " {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << join_coords(g.nodes[i]) << "\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << to_string(e.label, g.m) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

void to_json(nlohmann::json& j, const GmElement& e) { j = e.to_array(); }
void to_json(nlohmann::json& j, const TildeElement& e) { j = e.to_array(); }

}  // namespace parityknot
