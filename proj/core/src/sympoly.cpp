#include "jackcbe/sympoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace jackcbe {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    r.canonicalize();
    return r;
  }
  // Decimal literal: digits after the point become a power-of-ten denominator.
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const auto scale = text.size() - dot - 1;
  mpz_class num;
  if (digits == "-" || digits.empty() || num.set_str(digits, 10) != 0)
    throw std::invalid_argument("parse_rational: bad decimal '" + text + "'");
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

AlphaParam::AlphaParam(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ <= 0) throw std::invalid_argument("AlphaParam: alpha must be positive, got " + value_.get_str());
}

AlphaParam AlphaParam::from_beta(const Rational& beta) {
  if (beta <= 0) throw std::invalid_argument("AlphaParam::from_beta: beta must be positive");
  return AlphaParam(Rational(2) / beta);
}

SymPoly::SymPoly(Terms terms) {
  for (auto& [mu, c] : terms) set(mu, std::move(c));
}

SymPoly SymPoly::power_sum(const Partition& mu) {
  SymPoly p;
  p.terms_.emplace(mu, Rational(1));
  return p;
}

SymPoly SymPoly::constant(const Rational& c) {
  SymPoly p;
  p.set(Partition{}, c);
  return p;
}

void SymPoly::set(const Partition& mu, Rational c) {
  c.canonicalize();
  if (c == 0) {
    terms_.erase(mu);
  } else {
    terms_[mu] = std::move(c);
  }
}

Rational SymPoly::coefficient(const Partition& mu) const {
  const auto it = terms_.find(mu);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SymPoly::degree() const noexcept {
  int d = -1;
  for (const auto& [mu, c] : terms_) d = std::max(d, mu.weight());
  return d;
}

SymPoly& SymPoly::add_scaled(const SymPoly& other, const Rational& c) {
  if (c == 0) return *this;
  for (const auto& [mu, v] : other.terms_) {
    auto it = terms_.find(mu);
    if (it == terms_.end()) {
      terms_.emplace(mu, v * c);
    } else {
      it->second += v * c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SymPoly& SymPoly::operator+=(const SymPoly& other) { return add_scaled(other, Rational(1)); }
SymPoly& SymPoly::operator-=(const SymPoly& other) { return add_scaled(other, Rational(-1)); }

SymPoly& SymPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, v] : terms_) v *= c;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly out;
  for (const auto& [mu, x] : a.terms_)
    for (const auto& [nu, y] : b.terms_) {
      SymPoly term;
      term.terms_.emplace(mu.join(nu), x * y);
      out += term;
    }
  return out;
}

std::string SymPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*p" << mu.str();
  }
  return os.str();
}

Rational power_sum_norm(const Partition& mu, const AlphaParam& alpha) {
  Rational a_pow(1);
  for (int i = 0; i < mu.length(); ++i) a_pow *= alpha.value();
  return Rational(z_lambda(mu)) * a_pow;
}

Rational inner_product_alpha(const SymPoly& p, const SymPoly& q, const AlphaParam& alpha) {
  Rational sum(0);
  const auto& small = p.terms().size() <= q.terms().size() ? p : q;
  const auto& large = &small == &p ? q : p;
  for (const auto& [mu, c] : small.terms()) {
    const auto it = large.terms().find(mu);
    if (it == large.terms().end()) continue;
    sum += c * it->second * power_sum_norm(mu, alpha);
  }
  return sum;
}

Specialization Specialization::plancherel(double q) {
  if (q < 0) throw std::invalid_argument("Specialization::plancherel: q must be nonnegative");
  return Specialization({{1, Complex(std::sqrt(q), 0.0)}}, true);
}

Complex Specialization::power_sum(int j) const {
  if (j < 1) throw std::invalid_argument("Specialization::power_sum: index must be >= 1");
  const auto it = values_.find(j);
  if (it != values_.end()) return it->second;
  if (zero_elsewhere_) return {0.0, 0.0};
  throw std::out_of_range("Specialization: no value for p_" + std::to_string(j));
}

Complex Specialization::evaluate(const Partition& mu) const {
  Complex v(1.0, 0.0);
  for (int part : mu.parts()) v *= power_sum(part);
  return v;
}

Specialization Specialization::conj() const {
  std::map<int, Complex> c;
  for (const auto& [j, v] : values_) c.emplace(j, std::conj(v));
  return Specialization(std::move(c), zero_elsewhere_);
}

Complex specialize(const SymPoly& p, const Specialization& rho) {
  Complex sum(0.0, 0.0);
  for (const auto& [mu, c] : p.terms()) sum += c.get_d() * rho.evaluate(mu);
  return sum;
}

}  // namespace jackcbe
