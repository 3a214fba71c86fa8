#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "group_support.hpp"
#include "parityknot/errors.hpp"
#include "parityknot/groups.hpp"

using namespace parityknot;
using namespace support;

namespace {

using V = std::vector<std::int64_t>;

}  // namespace

TEST_CASE("G_m action examples") {
  CHECK(gm_apply(GmElement(1), p1(0)).to_array() == V{1, 0});
  CHECK(gm_apply(GmElement({1}, 0), p1(0)).to_array() == V{0, 0});
  CHECK(gm_apply(GmElement({3}, 0), top(1)).to_array() == V{3, 1});
  CHECK(eval_gm(1, Word{p1(0), top(1)}) == eval_gm(1, Word{top(1), p2(0)}));
  CHECK(eval_gm(1, Word{p1(0), top(1)}).to_array() == V{1, 1});
  CHECK(eval_gm(2, Word{}).is_identity());
}

TEST_CASE("tilde G_m action examples") {
  CHECK(tilde_apply(TildeElement(1), p1(0)).to_array() == V{1, 0, 0});
  CHECK(tilde_apply(TildeElement({1, 0}, 0), p1(0)).to_array() == V{1, 1, 0});
  CHECK(tilde_apply(TildeElement({1, 1}, 0), p1(0, -1)).to_array() == V{1, 0, 0});
  CHECK(eval_tilde(1, Word(4, p1(0))).to_array() == V{2, 2, 0});
  CHECK(eval_tilde(1, Word{p1(0), p1(0)}) == eval_tilde(1, Word{p2(0), p2(0)}));
}

TEST_CASE("coords_to_word") {
  CHECK(coords_to_word(GmElement(2)).empty());
  CHECK(coords_to_word(TildeElement(2)).empty());
  CHECK(eval_gm(1, coords_to_word(GmElement({2}, 0))).to_array() == V{2, 0});
  CHECK(coords_to_word(TildeElement({0, -1}, 0)) == Word{p1(0, -1)});

  std::mt19937_64 rng(3);
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < 1000; ++i) {
      auto g = random_gm(m, rng);
      REQUIRE(eval_gm(m, coords_to_word(g)) == g);
      auto t = random_tilde(m, rng);
      REQUIRE(eval_tilde(m, coords_to_word(t)) == t);
    }
  }
}

TEST_CASE("multiplication and inversion") {
  CHECK(inv(TildeElement({2, 2}, 0)).to_array() == V{-2, -2, 0});
  CHECK(inv(GmElement(2)).is_identity());
  std::mt19937_64 rng(4);
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < 1000; ++i) {
      auto a = random_gm(m, rng), b = random_gm(m, rng), c = random_gm(m, rng);
      REQUIRE(mul(a, GmElement(m)) == a);
      REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
      REQUIRE(mul(a, inv(a)).is_identity());
      REQUIRE(mul(inv(a), a).is_identity());
      auto x = random_tilde(m, rng), y = random_tilde(m, rng), z = random_tilde(m, rng);
      REQUIRE(mul(x, TildeElement(m)) == x);
      REQUIRE(mul(mul(x, y), z) == mul(x, mul(y, z)));
      REQUIRE(mul(x, inv(x)).is_identity());
      REQUIRE(mul(inv(x), x).is_identity());
    }
  }
}

TEST_CASE("relation suite") {
  std::mt19937_64 rng(1);
  for (int m = 1; m <= 3; ++m) {
    for (const auto& rel : relations(GroupKind::Gm, m)) {
      for (int i = 0; i < 1000; ++i) {
        auto e = random_gm(m, rng);
        INFO(rel.name);
        REQUIRE(replay(e, rel.lhs) == replay(e, rel.rhs));
      }
    }
    for (const auto& rel : relations(GroupKind::GmTilde, m)) {
      for (int i = 0; i < 1000; ++i) {
        auto e = random_tilde(m, rng);
        INFO(rel.name);
        REQUIRE(replay(e, rel.lhs) == replay(e, rel.rhs));
      }
    }
  }
}

TEST_CASE("involutions and inverse letters") {
  std::mt19937_64 rng(2);
  for (int m = 1; m <= 3; ++m) {
    for (const auto& g : generators(GroupKind::Gm, m)) {
      for (int i = 0; i < 1000; ++i) {
        auto e = random_gm(m, rng);
        REQUIRE(gm_apply(gm_apply(e, g), g) == e);
      }
    }
    for (const auto& g : generators(GroupKind::GmTilde, m)) {
      auto ginv = inverse(g, GroupKind::GmTilde, m);
      for (int i = 0; i < 1000; ++i) {
        auto e = random_tilde(m, rng);
        REQUIRE(tilde_apply(tilde_apply(e, g), ginv) == e);
        REQUIRE(tilde_apply(tilde_apply(e, ginv), g) == e);
      }
    }
  }
}

TEST_CASE("squares of tilde letters are central") {
  std::mt19937_64 rng(7);
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < m; ++i) {
      Word z{p1(i), p1(i)};
      for (const auto& g : generators(GroupKind::GmTilde, m)) {
        Word zg = z, gz{g};
        zg.push_back(g);
        gz.insert(gz.end(), z.begin(), z.end());
        for (int s = 0; s < 1000; ++s) {
          auto e = random_tilde(m, rng);
          REQUIRE(replay(e, zg) == replay(e, gz));
        }
      }
      // z_i adds one to both coordinates of its level pair
      auto e = random_tilde(m, rng);
      auto shifted = replay(e, z);
      for (int c = 0; c < 2 * m; ++c) {
        bool own = c / 2 == i;
        REQUIRE(shifted.coord(c) == e.coord(c) + (own ? 1 : 0));
      }
    }
  }
}

TEST_CASE("parity clock") {
  std::mt19937_64 rng(8);
  for (int m = 1; m <= 3; ++m) {
    auto gm_alpha = generators(GroupKind::Gm, m);
    auto tl_alpha = generators(GroupKind::GmTilde, m);
    for (int trial = 0; trial < 1000; ++trial) {
      GmElement g(m);
      TildeElement t(m);
      for (std::size_t p = 0; p < 20; ++p) {
        auto ga = g.to_array();
        auto ta = t.to_array();
        REQUIRE(std::abs(std::accumulate(ga.begin(), ga.end(), std::int64_t{0})) % 2 == static_cast<std::int64_t>(p % 2));
        REQUIRE(std::abs(std::accumulate(ta.begin(), ta.end(), std::int64_t{0})) % 2 == static_cast<std::int64_t>(p % 2));
        g.apply(gm_alpha[rng() % gm_alpha.size()]);
        t.apply(tl_alpha[rng() % tl_alpha.size()]);
      }
    }
  }
}

TEST_CASE("conjugacy canonical form") {
  CHECK(gm_conjugacy_canonical(GmElement({-3, 2}, 0)).to_array() == V{3, 2, 0});
  CHECK(gm_conjugacy_canonical(GmElement({0, -5}, 0)).to_array() == V{0, 5, 0});
  CHECK(gm_conjugacy_canonical(GmElement(2)).is_identity());
  CHECK_THROWS_AS(gm_conjugacy_canonical(GmElement({1}, 1)), BitNotZero);
  // conjugates of an even bit-0 element share its canonical form
  std::mt19937_64 rng(9);
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < 1000; ++i) {
      auto r = random_gm(m, rng);
      std::vector<std::int64_t> even;
      for (auto x : r.coords()) even.push_back(2 * x);
      GmElement e(even, 0);
      auto g = random_gm(m, rng);
      auto conj = mul(mul(inv(g), e), g);
      REQUIRE(gm_conjugacy_canonical(conj) == gm_conjugacy_canonical(e));
    }
  }
  // odd coordinates: a'' and a' a'' a' are conjugate but |x| differs
  GmElement a1({1}, 0), a2({-1}, 0);
  auto conj = mul(mul(inv(a1), a2), a1);
  CHECK(std::abs(conj.coord(0)) == 3);
  CHECK(gm_conjugacy_canonical(conj) != gm_conjugacy_canonical(a2));
}

TEST_CASE("rewriting oracle") {
  CHECK(rewrite_reduce(GroupKind::Gm, 1, Word{p1(0), p1(0)}).letters.empty());
  CHECK(rewrite_reduce(GroupKind::Gm, 1, Word{p1(0), top(1)}) ==
        rewrite_reduce(GroupKind::Gm, 1, Word{top(1), p2(0)}));
  CHECK(rewrite_reduce(GroupKind::GmTilde, 1, Word{p1(0), p1(0)}) ==
        rewrite_reduce(GroupKind::GmTilde, 1, Word{p2(0), p2(0)}));
  CHECK_THROWS_AS(rewrite_reduce(GroupKind::GmTilde, 2, Word(40, p1(0, -1)), 3), BoundExceeded);

  std::mt19937_64 rng(10);
  for (int m = 1; m <= 3; ++m) {
    for (GroupKind kind : {GroupKind::Gm, GroupKind::GmTilde}) {
      auto alpha = generators(kind, m);
      for (int trial = 0; trial < 1000; ++trial) {
        Word w;
        for (std::size_t n = rng() % 13; n > 0; --n) w.push_back(alpha[rng() % alpha.size()]);
        auto nf = to_word(rewrite_reduce(kind, m, w), m);
        if (kind == GroupKind::Gm) {
          REQUIRE(eval_gm(m, w) == eval_gm(m, nf));
        } else {
          REQUIRE(eval_tilde(m, w) == eval_tilde(m, nf));
        }
      }
    }
  }
}

TEST_CASE("oracle faithfulness on short words") {
  for (int m = 1; m <= 2; ++m) {
    for (GroupKind kind : {GroupKind::Gm, GroupKind::GmTilde}) {
      std::map<V, NormalForm> by_coords;
      std::map<std::string, V> by_nf;
      std::size_t mismatches = 0;
      for_each_word(generators(kind, m), 4, [&](const Word& w) {
        V coords = kind == GroupKind::Gm ? eval_gm(m, w).to_array() : eval_tilde(m, w).to_array();
        auto nf = rewrite_reduce(kind, m, w);
        auto nf_key = key(nf, m);
        auto [it, fresh] = by_coords.emplace(coords, nf);
        if (!fresh && !(it->second == nf)) ++mismatches;
        auto [jt, fresh2] = by_nf.emplace(nf_key, coords);
        if (!fresh2 && jt->second != coords) ++mismatches;
      });
      CHECK(mismatches == 0);
    }
  }
}

TEST_CASE("cayley balls") {
  CHECK(cayley_ball(GroupKind::Gm, 1, 0).nodes.size() == 1);
  auto g1 = cayley_ball(GroupKind::Gm, 1, 1);
  CHECK(g1.nodes.size() == 4);
  CHECK(g1.nodes[0] == V{0, 0});
  auto t1 = cayley_ball(GroupKind::GmTilde, 1, 1);
  CHECK(t1.nodes.size() == 6);
  std::set<V> nodes(t1.nodes.begin(), t1.nodes.end());
  CHECK(nodes == std::set<V>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {-1, 0, 0}, {0, 0, 1}});
  auto dot = to_dot(g1);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(to_string(p2(0, -1), 1) == "a''_0^-1");
  CHECK(to_string(top(1), 1) == "a_1");
}

TEST_CASE("prime swap") {
  Word w{p1(0), p2(1, -1), top(2)};
  CHECK(swap_primes(w, 2) == Word{p2(0), p1(1, -1), top(2)});
  CHECK(swap_primes(swap_primes(w, 2), 2) == w);
}
