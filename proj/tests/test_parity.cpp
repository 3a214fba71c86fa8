#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "parityknot/errors.hpp"
#include "parityknot/parity.hpp"

using namespace parityknot;

TEST_CASE("odd chords") {
  CHECK(odd_chords(ChordDiagram{1, 2, 1, 2}) == std::vector<ChordId>{0, 1});
  CHECK(odd_chords(ChordDiagram{1, 2, 3, 1, 2, 3}).empty());
  CHECK(odd_chords(ChordDiagram{}).empty());
}

TEST_CASE("f step") {
  CHECK(f_step(ChordDiagram{1, 2, 1, 2}).empty());
  CHECK(f_step(ChordDiagram{1, 2, 3, 1, 2, 3}) == ChordDiagram{1, 2, 3, 1, 2, 3});
  CHECK(f_step(ChordDiagram{1, 2, 1, 3, 2, 3}) == ChordDiagram{2, 2});
}

TEST_CASE("index assignment") {
  CHECK(index_assignment(ChordDiagram{1, 2, 1, 2}, 1).index == std::vector<int>{0, 0});
  CHECK(index_assignment(ChordDiagram{1, 2, 1, 3, 2, 3}, 2).index == std::vector<int>{0, 2, 0});
  CHECK(index_assignment(ChordDiagram{1, 1}, 3).index == std::vector<int>{3});
  CHECK_THROWS_AS(index_assignment(ChordDiagram{1, 1}, 0), ParameterMismatch);
}

TEST_CASE("type assignment") {
  auto t = type_assignment(ChordDiagram{1, 2, 1, 2}, 1, TypeRule::EvenLinked);
  CHECK(t.type[0] == ChordType::One);
  CHECK(t.type[1] == ChordType::One);
  t = type_assignment(ChordDiagram{1, 2, 1, 2}, 1, TypeRule::OddLinked);
  CHECK(t.type[0] == ChordType::Two);
  CHECK(t.type[1] == ChordType::Two);
  t = type_assignment(ChordDiagram{1, 2, 1, 3, 2, 3}, 1, TypeRule::EvenLinked);
  CHECK(t.type[0] == ChordType::Two);
  CHECK_FALSE(t.type[1].has_value());
  CHECK(t.type[2] == ChordType::Two);
  CHECK(parse_type_rule("odd-linked") == TypeRule::OddLinked);
  CHECK(to_string(TypeRule::EvenLinked) == "even-linked");
}

TEST_CASE("filtration agrees with explicit deletion oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    auto w = oracle::random_word(rng() % 11, rng);
    std::vector<ChordId> labels(w.begin(), w.end());
    ChordDiagram d(labels);
    std::vector<int> dense(d.word().begin(), d.word().end());
    int m = 1 + static_cast<int>(rng() % 3);
    for (TypeRule rule : {TypeRule::EvenLinked, TypeRule::OddLinked}) {
      auto f = filtration(d, m, rule);
      auto ref = oracle::index_type(dense, m, rule == TypeRule::EvenLinked);
      for (std::size_t c = 0; c < d.chord_count(); ++c) {
        int id = static_cast<int>(c);
        REQUIRE(f.index.index[c] == ref.index.at(id));
        if (ref.index.at(id) < m) {
          REQUIRE(f.type.type[c].has_value());
          REQUIRE((*f.type.type[c] == ChordType::One ? 1 : 2) == ref.type.at(id));
        } else {
          REQUIRE_FALSE(f.type.type[c].has_value());
        }
      }
    }
  }
}

TEST_CASE("index and type are unchanged by rotating a closed diagram") {
  // Linking is rotation invariant, so the filtration just relabels.
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto d = random_diagram(seed % 9, seed, true);
    if (d.empty()) continue;
    auto r = rotate_basepoint(d, static_cast<long long>(seed % d.length()));
    auto fd = filtration(d, 3, TypeRule::EvenLinked);
    auto fr = filtration(r, 3, TypeRule::EvenLinked);
    std::vector<int> hist_d(4), hist_r(4);
    for (int i : fd.index.index) ++hist_d[static_cast<std::size_t>(i)];
    for (int i : fr.index.index) ++hist_r[static_cast<std::size_t>(i)];
    REQUIRE(hist_d == hist_r);
  }
}
