#include "parityknot/invariants.hpp"

#include <algorithm>
#include <optional>

#include "parityknot/errors.hpp"

namespace parityknot {

namespace {

Word letters_for(const ChordDiagram& d, const Filtration& f, std::span<const Sign> signs) {
  const int m = f.index.m;
  Word w;
  w.reserve(d.length());
  for (ChordId c : d.word()) {
    auto cu = static_cast<std::size_t>(c);
    int level = f.index.index[cu];
    if (level == m) {
      w.push_back(Letter{m, Prime::One, 1});
      continue;
    }
    Prime p = *f.type.type[cu] == ChordType::One ? Prime::One : Prime::Two;
    int exponent = signs.empty() ? 1 : value(signs[cu]);
    w.push_back(Letter{level, p, exponent});
  }
  return w;
}

// Evaluates every cyclic shift of w, i.e. every basepoint placement.
template <class Element, class Visit>
void for_each_rotation(int m, const Word& w, Visit visit) {
  if (w.empty()) {
    visit(Element(m));
    return;
  }
  for (std::size_t r = 0; r < w.size(); ++r) {
    Element e(m);
    for (std::size_t i = 0; i < w.size(); ++i) e.apply(w[(r + i) % w.size()]);
    visit(e);
  }
}

}  // namespace

Word gamma_word(const ChordDiagram& d, int m, TypeRule rule) {
  return letters_for(d, filtration(d, m, rule), {});
}

Word delta_word(const GaussDiagram& k, int m, TypeRule rule) {
  return letters_for(k.underlying(), filtration(k.underlying(), m, rule), k.signs());
}

GmElement gamma(const ChordDiagram& d, int m, TypeRule rule) {
  if (d.closed()) throw NotLong("gamma needs a long diagram; use gamma_compact");
  return eval_gm(m, gamma_word(d, m, rule));
}

GmElement gamma_compact(const ChordDiagram& d, int m, TypeRule rule) {
  if (!d.closed()) throw NotClosed("gamma_compact needs a closed diagram");
  Word w = gamma_word(d, m, rule);
  std::optional<GmElement> canonical;
  for_each_rotation<GmElement>(m, w, [&](const GmElement& e) {
    GmElement c = gm_conjugacy_canonical(e);
    if (!canonical) {
      canonical = c;
    } else if (*canonical != c) {
      throw CanonicalMismatch("basepoint placements give " + canonical->to_string() + " and " +
                              c.to_string());
    }
  });
  return *canonical;
}

TildeElement delta(const GaussDiagram& k, int m, TypeRule rule) {
  if (k.closed()) throw NotLong("delta needs a long diagram; use delta_compact");
  return eval_tilde(m, delta_word(k, m, rule));
}

TildeElement delta_compact(const GaussDiagram& k, int m, TypeRule rule) {
  if (!k.closed()) throw NotClosed("delta_compact needs a closed diagram");
  Word w = delta_word(k, m, rule);
  std::optional<TildeElement> best;
  std::vector<std::int64_t> best_key;
  for_each_rotation<TildeElement>(m, w, [&](const TildeElement& e) {
    auto key = e.to_array();
    if (!best || key < best_key) {
      best = e;
      best_key = std::move(key);
    }
  });
  return *best;
}

AlgebraElement vassiliev_value(const GaussDiagram& k, int m, int degree, TypeRule rule) {
  return project(delta(k, m, rule), degree);
}

AlgebraElement alternating_sum(const SingularKnot& s, int m, int degree, TypeRule rule) {
  const GaussDiagram& base = s.base;
  if (base.closed()) throw NotLong("alternating_sum is defined for long knots");
  std::vector<ChordId> singular = s.singular;
  std::sort(singular.begin(), singular.end());
  if (std::adjacent_find(singular.begin(), singular.end()) != singular.end()) {
    throw UnknownChord("singular chords must be distinct");
  }
  for (ChordId c : singular) base.underlying().ends(c);
  if (singular.size() >= 63) throw ParameterMismatch("too many singular crossings");

  // Signs never change the parity structure, so the letters are fixed and
  // only exponents vary across resolutions.
  const Filtration f = filtration(base.underlying(), m, rule);
  std::vector<Sign> signs(base.signs().begin(), base.signs().end());
  AlgebraElement total(m, degree);
  const std::uint64_t count = std::uint64_t{1} << singular.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    int negatives = 0;
    for (std::size_t i = 0; i < singular.size(); ++i) {
      bool neg = (mask >> i) & 1;
      negatives += neg;
      signs[static_cast<std::size_t>(singular[i])] = neg ? Sign::Minus : Sign::Plus;
    }
    auto value = project(eval_tilde(m, letters_for(base.underlying(), f, signs)), degree);
    total = add(total, negatives % 2 ? scale(value, -1) : value);
  }
  return total;
}

}  // namespace parityknot
