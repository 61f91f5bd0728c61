#pragma once

#include <complex>
#include <map>
#include <string>

#include <gmpxx.h>

#include "jackcbe/partition.hpp"

namespace jackcbe {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Parses "3", "-2/5" or a decimal such as "0.5" into an exact rational.
Rational parse_rational(const std::string& text);

/// The Jack parameter alpha; always a strictly positive exact rational.
class AlphaParam {
 public:
  explicit AlphaParam(Rational value);
  explicit AlphaParam(long num, long den = 1) : AlphaParam(Rational(num, den)) {}

  /// alpha = 2 / beta for rational beta.
  static AlphaParam from_beta(const Rational& beta);

  const Rational& value() const noexcept { return value_; }
  double to_double() const { return value_.get_d(); }
  std::string str() const { return value_.get_str(); }

  friend bool operator==(const AlphaParam& a, const AlphaParam& b) { return a.value_ == b.value_; }

 private:
  Rational value_;
};

/// A symmetric function stored by its exact coefficients on the power-sum
/// basis p_mu. Zero coefficients are never stored.
class SymPoly {
 public:
  using Terms = std::map<Partition, Rational>;

  SymPoly() = default;
  explicit SymPoly(Terms terms);

  /// The single power-sum product p_mu.
  static SymPoly power_sum(const Partition& mu);
  static SymPoly constant(const Rational& c);

  const Terms& terms() const noexcept { return terms_; }
  Rational coefficient(const Partition& mu) const;
  /// Largest weight carrying a nonzero coefficient; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_zero() const noexcept { return terms_.empty(); }

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly& operator*=(const Rational& c);
  /// Adds c * other without allocating a temporary.
  SymPoly& add_scaled(const SymPoly& other, const Rational& c);

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
  friend SymPoly operator*(const Rational& c, SymPoly a) { return a *= c; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  void set(const Partition& mu, Rational c);
  Terms terms_;
};

/// <p_lambda, p_mu>_alpha = delta z_lambda alpha^{l(lambda)}, extended bilinearly.
Rational inner_product_alpha(const SymPoly& p, const SymPoly& q, const AlphaParam& alpha);

/// <p_mu, p_mu>_alpha.
Rational power_sum_norm(const Partition& mu, const AlphaParam& alpha);

/// An algebra homomorphism Lambda -> C, fixed by the images of p_1, p_2, ...
/// When `zero_elsewhere` is set, every p_j without an explicit value maps to 0;
/// otherwise asking for such a p_j is an error.
class Specialization {
 public:
  Specialization() = default;
  Specialization(std::map<int, Complex> values, bool zero_elsewhere)
      : values_(std::move(values)), zero_elsewhere_(zero_elsewhere) {}

  /// p_1 = sqrt(q), p_j = 0 for j >= 2.
  static Specialization plancherel(double q);

  Complex power_sum(int j) const;
  Complex evaluate(const Partition& mu) const;
  Specialization conj() const;

  const std::map<int, Complex>& values() const noexcept { return values_; }
  bool zero_elsewhere() const noexcept { return zero_elsewhere_; }

 private:
  std::map<int, Complex> values_;
  bool zero_elsewhere_ = false;
};

/// Ring-homomorphism evaluation of P at rho.
Complex specialize(const SymPoly& p, const Specialization& rho);

}  // namespace jackcbe
