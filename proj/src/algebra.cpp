#include "parityknot/algebra.hpp"

#include <numeric>
#include <sstream>

#include "parityknot/errors.hpp"

namespace parityknot {

namespace {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string exponents_key(const Exponents& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "]";
}

}  // namespace

TruncatedPoly::TruncatedPoly(int vars, int degree) : vars_(vars), degree_(degree) {
  if (vars < 1) throw ParameterMismatch("polynomial needs at least one variable");
  if (degree < 0) throw ParameterMismatch("truncation degree must be non-negative");
}

TruncatedPoly TruncatedPoly::one(int vars, int degree) {
  TruncatedPoly p(vars, degree);
  p.add_term(Exponents(static_cast<std::size_t>(vars), 0), 1);
  return p;
}

TruncatedPoly TruncatedPoly::variable(int vars, int degree, int i) {
  TruncatedPoly p(vars, degree);
  Exponents e(static_cast<std::size_t>(vars), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  p.add_term(e, 1);
  return p;
}

Rational TruncatedPoly::coeff(const Exponents& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void TruncatedPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != static_cast<std::size_t>(vars_)) throw ParameterMismatch("exponent vector length");
  if (total_degree(e) > degree_ || c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void TruncatedPoly::check_compatible(const TruncatedPoly& o) const {
  if (vars_ != o.vars_ || degree_ != o.degree_) {
    throw ParameterMismatch("polynomials from different truncated rings");
  }
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
  a.check_compatible(b);
  TruncatedPoly out(a.vars_, a.degree_);
  for (const auto& [ea, ca] : a.coeffs_) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.coeffs_) {
      if (da + total_degree(eb) > a.degree_) continue;
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

TruncatedPoly TruncatedPoly::scaled(const Rational& r) const {
  TruncatedPoly out(vars_, degree_);
  for (const auto& [e, c] : coeffs_) out.add_term(e, c * r);
  return out;
}

std::string TruncatedPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (total_degree(e) == 0 || mag != 1) factors.push_back(mag.str());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back("t" + std::to_string(i) + (e[i] > 1 ? "^" + std::to_string(e[i]) : ""));
    }
    for (std::size_t f = 0; f < factors.size(); ++f) out << (f ? "*" : "") << factors[f];
  }
  return out.str();
}

Rational generalized_binomial(std::int64_t q, int j) {
  Rational r = 1;
  for (int i = 0; i < j; ++i) {
    r *= Rational(q - i);
    r /= Rational(i + 1);
  }
  return r;
}

TruncatedPoly binom_power(std::int64_t q, int var, int vars, int degree) {
  if (var < 0 || var >= vars) throw ParameterMismatch("variable index out of range");
  TruncatedPoly p(vars, degree);
  Exponents e(static_cast<std::size_t>(vars), 0);
  for (int j = 0; j <= degree; ++j) {
    e[static_cast<std::size_t>(var)] = j;
    p.add_term(e, generalized_binomial(q, j));
  }
  return p;
}

AlgebraElement::AlgebraElement(int m, int k) : m_(m), k_(k) {
  if (m < 1) throw ParameterMismatch("m must be at least 1");
  if (k < 0) throw ParameterMismatch("k must be non-negative");
}

void AlgebraElement::add_term(const GmElement& g, const TruncatedPoly& p) {
  if (g.m() != m_ || p.vars() != m_ || p.degree() != k_) {
    throw ParameterMismatch("term does not belong to this algebra");
  }
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement project(const TildeElement& e, int k) {
  const int m = e.m();
  AlgebraElement out(m, k);
  std::vector<std::int64_t> diff(static_cast<std::size_t>(m));
  TruncatedPoly coeff = TruncatedPoly::one(m, k);
  for (int i = 0; i < m; ++i) {
    std::int64_t low = e.coord(2 * i);
    std::int64_t high = e.coord(2 * i + 1);
    diff[static_cast<std::size_t>(i)] = low - high;
    coeff = coeff * binom_power(high, i, m, k);
  }
  out.add_term(GmElement(std::move(diff), e.bit()), coeff);
  return out;
}

namespace {

void check_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.m() != b.m() || a.k() != b.k()) {
    throw ParameterMismatch("algebra elements with different (m, k)");
  }
}

}  // namespace

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_algebra(a, b);
  AlgebraElement out = a;
  for (const auto& [g, p] : b.terms()) out.add_term(g, p);
  return out;
}

AlgebraElement scale(const AlgebraElement& a, const Rational& r) {
  AlgebraElement out(a.m(), a.k());
  for (const auto& [g, p] : a.terms()) out.add_term(g, p.scaled(r));
  return out;
}

AlgebraElement multiply_coefficients(const AlgebraElement& a, const TruncatedPoly& q) {
  AlgebraElement out(a.m(), a.k());
  for (const auto& [g, p] : a.terms()) out.add_term(g, p * q);
  return out;
}

std::string to_string(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [g, p] : a.terms()) {
    if (!s.empty()) s += " + ";
    s += g.to_string() + " -> " + p.to_string();
  }
  return "{" + s + "}";
}

void to_json(nlohmann::json& j, const TruncatedPoly& p) {
  j = nlohmann::json::object();
  for (const auto& [e, c] : p.coeffs()) j[exponents_key(e)] = c.str();
}

void to_json(nlohmann::json& j, const AlgebraElement& a) {
  j = nlohmann::json::array();
  for (const auto& [g, p] : a.terms()) j.push_back({{"gm", g.to_array()}, {"poly", p}});
}

TruncatedPoly truncated_poly_from_json(const nlohmann::json& j, int vars, int degree) {
  TruncatedPoly p(vars, degree);
  try {
    for (const auto& [key, val] : j.items()) {
      auto e = nlohmann::json::parse(key).get<Exponents>();
      if (e.size() != static_cast<std::size_t>(vars) || total_degree(e) > degree) {
        throw SyntaxError("monomial " + key + " is outside the truncated ring");
      }
      p.add_term(e, Rational(val.get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("polynomial json: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw SyntaxError(std::string("polynomial json: ") + e.what());
  }
  return p;
}

AlgebraElement algebra_element_from_json(const nlohmann::json& j, int m, int k) {
  AlgebraElement a(m, k);
  try {
    for (const auto& term : j) {
      auto arr = term.at("gm").get<std::vector<std::int64_t>>();
      if (arr.size() != static_cast<std::size_t>(m) + 1) throw SyntaxError("gm array has wrong length");
      int bit = static_cast<int>(arr.back());
      arr.pop_back();
      a.add_term(GmElement(std::move(arr), bit), truncated_poly_from_json(term.at("poly"), m, k));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("algebra json: ") + e.what());
  }
  return a;
}

}  // namespace parityknot
