#include "parityknot/parity.hpp"

#include <algorithm>

#include "parityknot/errors.hpp"

namespace parityknot {

namespace {

// Linking data for a sub-word over original chord ids. `present` marks the
// chords that still occur in `word`.
struct LevelView {
  std::vector<std::size_t> first, second;
  std::vector<bool> present;

  LevelView(const std::vector<ChordId>& word, std::size_t n)
      : first(n, 0), second(n, 0), present(n, false) {
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
      auto c = static_cast<std::size_t>(word[pos]);
      if (!present[c]) {
        first[c] = pos;
        present[c] = true;
      } else {
        second[c] = pos;
      }
    }
  }

  bool linked(std::size_t c, std::size_t d) const {
    bool x = first[c] < first[d] && first[d] < second[c];
    bool y = first[c] < second[d] && second[d] < second[c];
    return x != y;
  }
};

void require_depth(int m) {
  if (m < 1) throw ParameterMismatch("filtration depth m must be at least 1");
}

}  // namespace

std::string to_string(TypeRule rule) {
  switch (rule) {
    case TypeRule::EvenLinked:
      return "even-linked";
    case TypeRule::OddLinked:
      return "odd-linked";
    case TypeRule::LinkCountMod4:
      return "mod4";
  }
  return "?";
}

TypeRule parse_type_rule(std::string_view text) {
  if (text == "even-linked") return TypeRule::EvenLinked;
  if (text == "odd-linked") return TypeRule::OddLinked;
  if (text == "mod4") return TypeRule::LinkCountMod4;
  throw SyntaxError("unknown type rule '" + std::string(text) + "'");
}

std::vector<ChordId> odd_chords(const ChordDiagram& d) {
  std::vector<ChordId> out;
  for (std::size_t c = 0; c < d.chord_count(); ++c) {
    if (linked_count(d, static_cast<ChordId>(c)) % 2 == 1) out.push_back(static_cast<ChordId>(c));
  }
  return out;
}

ChordDiagram f_step(const ChordDiagram& d) {
  auto odd = odd_chords(d);
  std::vector<ChordId> kept;
  for (ChordId c : d.word()) {
    if (!std::binary_search(odd.begin(), odd.end(), c)) kept.push_back(c);
  }
  return ChordDiagram(kept, d.closed());
}

Filtration filtration(const ChordDiagram& d, int m, TypeRule rule) {
  require_depth(m);
  const std::size_t n = d.chord_count();
  Filtration out;
  out.index.m = m;
  out.index.index.assign(n, m);
  out.type.rule = rule;
  out.type.type.assign(n, std::nullopt);

  std::vector<ChordId> current(d.word().begin(), d.word().end());
  std::vector<bool> odd(n, false);
  std::vector<std::size_t> total_links(n, 0);
  for (int level = 0; level < m && !current.empty(); ++level) {
    LevelView view(current, n);
    std::fill(odd.begin(), odd.end(), false);
    bool any_odd = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (!view.present[c]) continue;
      std::size_t links = 0;
      for (std::size_t e = 0; e < n; ++e) {
        if (e != c && view.present[e] && view.linked(c, e)) ++links;
      }
      odd[c] = links % 2 == 1;
      if (level == 0) total_links[c] = links;
      any_odd = any_odd || odd[c];
    }
    if (!any_odd) break;  // f is the identity from here on

    for (std::size_t c = 0; c < n; ++c) {
      if (!view.present[c] || !odd[c]) continue;
      out.index.index[c] = level;
      std::size_t count = 0;
      for (std::size_t e = 0; e < n; ++e) {
        if (e == c || !view.present[e] || !view.linked(c, e)) continue;
        if (rule == TypeRule::EvenLinked && !odd[e]) ++count;
        if (rule == TypeRule::OddLinked && odd[e]) ++count;
      }
      if (rule == TypeRule::LinkCountMod4) count = total_links[c] % 4 < 2 ? 0 : 1;
      out.type.type[c] = count % 2 == 0 ? ChordType::One : ChordType::Two;
    }
    std::erase_if(current, [&](ChordId c) { return odd[static_cast<std::size_t>(c)]; });
  }
  return out;
}

IndexAssignment index_assignment(const ChordDiagram& d, int m) {
  return filtration(d, m, TypeRule::EvenLinked).index;
}

TypeAssignment type_assignment(const ChordDiagram& d, int m, TypeRule rule) {
  return filtration(d, m, rule).type;
}

}  // namespace parityknot
