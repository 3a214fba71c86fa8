#pragma once

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "parityknot/groups.hpp"

namespace support {

using parityknot::GroupKind;
using parityknot::Letter;
using parityknot::Prime;
using parityknot::Word;

inline Letter p1(int level, int exp = 1) { return {level, Prime::One, exp}; }
inline Letter p2(int level, int exp = 1) { return {level, Prime::Two, exp}; }
inline Letter top(int m) { return {m, Prime::One, 1}; }

struct Relation {
  std::string name;
  Word lhs;
  Word rhs;
};

// Defining relations of the two presentations, one instance per level (pair).
inline std::vector<Relation> relations(GroupKind kind, int m) {
  std::vector<Relation> out;
  out.push_back({"a_m^2 = e", {top(m), top(m)}, {}});
  for (int i = 0; i < m; ++i) {
    auto n = std::to_string(i);
    if (kind == GroupKind::Gm) {
      out.push_back({"a'_" + n + "^2 = e", {p1(i), p1(i)}, {}});
      out.push_back({"a''_" + n + "^2 = e", {p2(i), p2(i)}, {}});
    } else {
      out.push_back({"a'_" + n + "^2 = a''_" + n + "^2", {p1(i), p1(i)}, {p2(i), p2(i)}});
    }
    out.push_back({"a'_" + n + " a_m = a_m a''_" + n, {p1(i), top(m)}, {top(m), p2(i)}});
    for (int j = i + 1; j < m; ++j) {
      auto ij = n + "," + std::to_string(j);
      out.push_back({"a'_i a'_j = a'_j a''_i @" + ij, {p1(i), p1(j)}, {p1(j), p2(i)}});
      out.push_back({"a'_i a''_j = a''_j a''_i @" + ij, {p1(i), p2(j)}, {p2(j), p2(i)}});
      if (kind == GroupKind::GmTilde) {
        out.push_back({"a'_j a'_i = a''_i a'_j @" + ij, {p1(j), p1(i)}, {p2(i), p1(j)}});
        out.push_back({"a''_j a'_i = a''_i a''_j @" + ij, {p2(j), p1(i)}, {p2(i), p2(j)}});
      }
    }
  }
  return out;
}

inline parityknot::GmElement random_gm(int m, std::mt19937_64& rng, int range = 20) {
  std::uniform_int_distribution<std::int64_t> c(-range, range);
  std::vector<std::int64_t> coords(static_cast<std::size_t>(m));
  for (auto& x : coords) x = c(rng);
  return {coords, static_cast<int>(rng() % 2)};
}

inline parityknot::TildeElement random_tilde(int m, std::mt19937_64& rng, int range = 20) {
  std::uniform_int_distribution<std::int64_t> c(-range, range);
  std::vector<std::int64_t> coords(static_cast<std::size_t>(2 * m));
  for (auto& x : coords) x = c(rng);
  return {coords, static_cast<int>(rng() % 2)};
}

template <class Element>
Element replay(Element e, const Word& w) {
  for (const auto& g : w) e.apply(g);
  return e;
}

// Calls visit(word) for every word over `alphabet` of length 0..max_len.
inline void for_each_word(const Word& alphabet, std::size_t max_len,
                          const std::function<void(const Word&)>& visit) {
  Word w;
  std::function<void()> rec = [&] {
    visit(w);
    if (w.size() == max_len) return;
    for (const auto& g : alphabet) {
      w.push_back(g);
      rec();
      w.pop_back();
    }
  };
  rec();
}

}  // namespace support

namespace support {

// Printable key of a rewriting normal form.
inline std::string key(const parityknot::NormalForm& nf, int m) {
  std::string out;
  for (auto c : nf.central) out += std::to_string(c) + ",";
  out += "|";
  for (const auto& g : nf.letters) out += parityknot::to_string(g, m) + " ";
  return out;
}

}  // namespace support
