#include <doctest.h>

#include <random>

#include "group_support.hpp"
#include "oracles.hpp"
#include "parityknot/algebra.hpp"

using namespace parityknot;

namespace {

TruncatedPoly poly1(int degree, std::initializer_list<Rational> coeffs) {
  TruncatedPoly p(1, degree);
  int e = 0;
  for (const auto& c : coeffs) p.add_term({e++}, c);
  return p;
}

}  // namespace

TEST_CASE("generalized binomial") {
  CHECK(generalized_binomial(-2, 2) == 3);
  CHECK(generalized_binomial(5, 2) == 10);
  CHECK(generalized_binomial(2, 3) == 0);
  CHECK(generalized_binomial(-1, 3) == -1);
  CHECK(binom_power(0, 0, 1, 3) == TruncatedPoly::one(1, 3));
  CHECK(binom_power(2, 0, 1, 1) == poly1(1, {1, 2}));
  CHECK(binom_power(-2, 0, 1, 2) == poly1(2, {1, -2, 3}));
  CHECK((binom_power(-2, 0, 1, 2) * binom_power(2, 0, 1, 2)) == TruncatedPoly::one(1, 2));
}

TEST_CASE("binomial powers agree with series inversion") {
  for (int q = 1; q <= 12; ++q) {
    const int degree = 6;
    std::vector<long double> a(degree + 1, 0);
    for (int j = 0; j <= degree; ++j) a[static_cast<std::size_t>(j)] = static_cast<long double>(generalized_binomial(q, j));
    auto ref = oracle::series_inverse(a, degree);
    auto p = binom_power(-q, 0, 1, degree);
    for (int j = 0; j <= degree; ++j) {
      auto c = p.coeff({j});
      REQUIRE(static_cast<long double>(c) == doctest::Approx(static_cast<double>(ref[static_cast<std::size_t>(j)])));
    }
    REQUIRE((p * binom_power(q, 0, 1, degree)) == TruncatedPoly::one(1, degree));
  }
}

TEST_CASE("truncated polynomial arithmetic") {
  auto t0 = TruncatedPoly::variable(2, 2, 0);
  auto t1 = TruncatedPoly::variable(2, 2, 1);
  CHECK((t0 * t0 * t0).is_zero());
  CHECK((t0 * t1).coeff({1, 1}) == 1);
  CHECK((t0 - t0).is_zero());
  CHECK((TruncatedPoly::one(1, 1) + TruncatedPoly::variable(1, 1, 0).scaled(2)).to_string() == "1 + 2*t0");
  CHECK(TruncatedPoly(1, 2).to_string() == "0");

  std::mt19937_64 rng(12);
  auto random_poly = [&] {
    TruncatedPoly p(2, 3);
    for (int i = 0; i < 5; ++i) p.add_term({int(rng() % 3), int(rng() % 3)}, Rational(int(rng() % 7) - 3, int(rng() % 4) + 1));
    return p;
  };
  for (int i = 0; i < 300; ++i) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
  }

  nlohmann::json j = binom_power(-3, 1, 2, 3);
  CHECK(truncated_poly_from_json(j, 2, 3) == binom_power(-3, 1, 2, 3));
}

TEST_CASE("projection") {
  auto id = project(TildeElement(1), 1);
  CHECK(id.terms().size() == 1);
  CHECK(id.terms().begin()->first.is_identity());
  CHECK(id.terms().begin()->second == TruncatedPoly::one(1, 1));

  auto tre = project(TildeElement({2, 2}, 0), 1);
  CHECK(to_string(tre) == "{(0,0) -> 1 + 2*t0}");
  CHECK(project(TildeElement({2, 2}, 0), 0) == project(TildeElement(1), 0));

  auto diff = add(tre, scale(id, -1));
  CHECK(to_string(diff) == "{(0,0) -> 2*t0}");
  CHECK(is_zero(add(id, scale(id, -1))));
  CHECK(is_zero(AlgebraElement(1, 1)));

  nlohmann::json j = tre;
  CHECK(algebra_element_from_json(j, 1, 1) == tre);
}

TEST_CASE("projection turns central shifts into coefficient factors") {
  std::mt19937_64 rng(13);
  for (int m = 1; m <= 3; ++m) {
    for (int k = 0; k <= 3; ++k) {
      for (int trial = 0; trial < 300; ++trial) {
        auto e = support::random_tilde(m, rng, 6);
        int level = static_cast<int>(rng() % static_cast<unsigned>(m));
        auto shifted = support::replay(e, {support::p1(level), support::p1(level)});
        auto lhs = project(shifted, k);
        auto rhs = multiply_coefficients(project(e, k), TruncatedPoly::one(m, k) + TruncatedPoly::variable(m, k, level));
        REQUIRE(lhs == rhs);
      }
    }
  }
}
