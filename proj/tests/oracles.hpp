#pragma once

// Test-only reference computations. Nothing here calls into the library's
// linking, filtration, or grid code; the point is to have a second route.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

// Two chords are linked iff the word restricted to them reads c d c d or
// d c d c.
inline bool linked(const std::vector<int>& word, int c, int d) {
  std::vector<int> pattern;
  for (int x : word) {
    if (x == c || x == d) pattern.push_back(x);
  }
  return pattern.size() == 4 && pattern[0] == pattern[2] && pattern[1] == pattern[3];
}

inline std::vector<int> chords_of(const std::vector<int>& word) {
  std::vector<int> out(word.begin(), word.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_odd(const std::vector<int>& word, int c) {
  int count = 0;
  for (int d : chords_of(word)) {
    if (d != c && linked(word, c, d)) ++count;
  }
  return count % 2 == 1;
}

struct IndexType {
  std::map<int, int> index;
  std::map<int, int> type;  // 1 or 2, only for index < m
};

// Filtration by explicit repeated deletion. rule_even: count even chords of
// the current diagram; otherwise count odd ones.
inline IndexType index_type(std::vector<int> word, int m, bool rule_even) {
  IndexType out;
  for (int c : chords_of(word)) out.index[c] = m;
  for (int level = 0; level < m; ++level) {
    std::vector<int> odd;
    for (int c : chords_of(word)) {
      if (is_odd(word, c)) odd.push_back(c);
    }
    for (int c : odd) {
      out.index[c] = level;
      int count = 0;
      for (int d : chords_of(word)) {
        bool d_odd = std::find(odd.begin(), odd.end(), d) != odd.end();
        if (d != c && linked(word, c, d) && d_odd != rule_even) ++count;
      }
      out.type[c] = count % 2 == 0 ? 1 : 2;
    }
    std::erase_if(word, [&](int x) { return std::find(odd.begin(), odd.end(), x) != odd.end(); });
  }
  return out;
}

// (1 + t)^{-q} as the power series inverse of (1 + t)^q, truncated.
inline std::vector<long double> series_inverse(const std::vector<long double>& a, int degree) {
  std::vector<long double> b(static_cast<std::size_t>(degree) + 1, 0);
  b[0] = 1 / a[0];
  for (int n = 1; n <= degree; ++n) {
    long double s = 0;
    for (int j = 1; j <= n && j < static_cast<int>(a.size()); ++j) s += a[j] * b[n - j];
    b[n] = -s / a[0];
  }
  return b;
}

inline std::vector<int> random_word(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> w;
  for (std::size_t c = 0; c < n; ++c) {
    w.push_back(static_cast<int>(c));
    w.push_back(static_cast<int>(c));
  }
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

}  // namespace oracle
