#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "parityknot/groups.hpp"

namespace parityknot {

using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector (e_0, ..., e_{m-1}) of a monomial in t_0..t_{m-1}.
using Exponents = std::vector<int>;

/// Polynomial in t_i = z_i - 1 with rational coefficients, truncated at
/// total degree `degree`. Zero coefficients are never stored.
class TruncatedPoly {
 public:
  TruncatedPoly(int vars, int degree);

  static TruncatedPoly one(int vars, int degree);
  /// t_i
  static TruncatedPoly variable(int vars, int degree, int i);

  int vars() const { return vars_; }
  int degree() const { return degree_; }
  const std::map<Exponents, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(const Exponents& e) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c * t^e. Monomials above the truncation degree vanish.
  void add_term(const Exponents& e, const Rational& c);

  TruncatedPoly& operator+=(const TruncatedPoly& o);
  friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
  friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) { return a += b.scaled(-1); }
  friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);
  TruncatedPoly scaled(const Rational& r) const;

  /// e.g. "1 + 2*t0 - 1/2*t0*t1^2"
  std::string to_string() const;

  friend bool operator==(const TruncatedPoly&, const TruncatedPoly&) = default;

 private:
  void check_compatible(const TruncatedPoly& o) const;

  int vars_;
  int degree_;
  std::map<Exponents, Rational> coeffs_;
};

/// q(q-1)...(q-j+1)/j!, valid for negative q.
Rational generalized_binomial(std::int64_t q, int j);

/// (1 + t_var)^q truncated at `degree`.
TruncatedPoly binom_power(std::int64_t q, int var, int vars, int degree);

/// Element of the truncated group algebra: finite sum of G_m grid points
/// with polynomial coefficients.
class AlgebraElement {
 public:
  AlgebraElement(int m, int k);

  int m() const { return m_; }
  int k() const { return k_; }
  const std::map<GmElement, TruncatedPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const GmElement& g, const TruncatedPoly& p);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  int m_;
  int k_;
  std::map<GmElement, TruncatedPoly> terms_;
};

/// Writes e = (prod_i z_i^{q_i}) * h with h having level pairs (d_i, 0) and
/// returns h's G_m grid point with coefficient prod_i (1 + t_i)^{q_i}.
AlgebraElement project(const TildeElement& e, int k);

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const Rational& r);
/// Multiplies every coefficient by p (used for central z-shifts).
AlgebraElement multiply_coefficients(const AlgebraElement& a, const TruncatedPoly& p);
inline bool is_zero(const AlgebraElement& a) { return a.is_zero(); }

std::string to_string(const AlgebraElement& a);

void to_json(nlohmann::json& j, const TruncatedPoly& p);
void to_json(nlohmann::json& j, const AlgebraElement& a);
TruncatedPoly truncated_poly_from_json(const nlohmann::json& j, int vars, int degree);
AlgebraElement algebra_element_from_json(const nlohmann::json& j, int m, int k);

}  // namespace parityknot
