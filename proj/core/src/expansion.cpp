#include "jackcbe/expansion.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace jackcbe {

namespace {

void require_beta_at_most_two(double beta, const char* who) {
  if (!(beta > 0.0) || beta > 2.0)
    throw std::invalid_argument(std::string(who) + ": requires 0 < beta <= 2");
}

// sum_lambda |lambda| |J(rho)|^2/<J,J> = alpha sum k^2 |c_k|^2 * exp(alpha sum k |c_k|^2)
// for rho: p_k = alpha k c_k.
double size_weighted_cauchy_total(const CircleFunction& f, double alpha, int sign) {
  double s1 = 0.0, s2 = 0.0;
  for (const auto& [k, c] : f.coeffs()) {
    if (sign * k <= 0) continue;
    const double kk = std::abs(k);
    s1 += kk * std::norm(c);
    s2 += kk * kk * std::norm(c);
  }
  return alpha * s2 * std::exp(alpha * s1);
}

}  // namespace

GesselResult gessel_expectation(const CircleFunction& f, const AlphaParam& alpha, int n, int max_degree) {
  if (alpha.value() < 1) throw std::invalid_argument("gessel_expectation: requires alpha >= 1 (beta <= 2)");
  if (n < 1) throw std::invalid_argument("gessel_expectation: n must be positive");
  if (max_degree < 0) throw std::invalid_argument("gessel_expectation: degree cap must be nonnegative");

  const auto table = shared_jack_table(alpha, max_degree);
  const auto rho_plus = circle_specialization(f, alpha, +1);
  const auto rho_minus = circle_specialization(f, alpha, -1);

  Complex series(0.0, 0.0);
  double partial_plus = 0.0, partial_minus = 0.0;
  for (int k = 0; k <= max_degree; ++k) {
    const auto& block = table->block(k);
    const auto jp = table->evaluate(k, rho_plus);
    const auto jm = table->evaluate(k, rho_minus);
    for (std::size_t e = 0; e < block.entries.size(); ++e) {
      const auto& entry = block.entries[e];
      partial_plus += k * std::norm(jp[e]) / entry.norm_d;
      partial_minus += k * std::norm(jm[e]) / entry.norm_d;
      if (entry.lambda.length() > n) continue;
      const double a = a_coefficient(entry.lambda, alpha, n).get_d();
      series += jp[e] * jm[e] / entry.norm_d * a;
    }
  }

  const Complex prefactor = std::exp(static_cast<double>(n) * f.coeff(0));
  const double ad = alpha.to_double();
  const double t_plus = std::max(0.0, size_weighted_cauchy_total(f, ad, +1) - partial_plus);
  const double t_minus = std::max(0.0, size_weighted_cauchy_total(f, ad, -1) - partial_minus);

  GesselResult r;
  r.value = prefactor * series;
  r.tail_estimate = std::abs(prefactor) * std::sqrt(t_plus * t_minus) / (max_degree + 1);
  return r;
}

Complex limit_laplace(const CircleFunction& f, double beta) {
  require_beta_at_most_two(beta, "limit_laplace");
  return std::exp((2.0 / beta) * sigma_circle(f));
}

double subgauss_bound(const CircleFunction& f, double beta) {
  require_beta_at_most_two(beta, "subgauss_bound");
  if (!f.is_real()) throw std::invalid_argument("subgauss_bound: f must be real-valued");
  return std::exp((2.0 / beta) * sigma_circle(f).real());
}

double cbe_error_bound(const CircleFunction& f, double beta, int n) {
  require_beta_at_most_two(beta, "cbe_error_bound");
  if (n < 1) throw std::invalid_argument("cbe_error_bound: n must be positive");
  const double h_half = sobolev_seminorm_circle(f, 0.5);
  const double h_one = sobolev_seminorm_circle(f, 1.0);
  const double expo = h_half / beta - (2.0 / beta) * sigma_circle(f).real();
  return 8.0 / (beta * beta * n) * std::exp(expo) * h_one;
}

std::map<Partition, Complex> jack_weights(const JackTable& table, const Specialization& rho1,
                                          const Specialization& rho2, int max_degree) {
  std::map<Partition, Complex> w;
  for (int k = 0; k <= max_degree; ++k) {
    const auto& block = table.block(k);
    const auto j1 = table.evaluate(k, rho1);
    const auto j2 = table.evaluate(k, rho2);
    for (std::size_t e = 0; e < block.entries.size(); ++e)
      w.emplace(block.entries[e].lambda, j1[e] * j2[e] / block.entries[e].norm_d);
  }
  return w;
}

JackMeasure::JackMeasure(AlphaParam alpha, Specialization rho1, Specialization rho2, int max_degree)
    : alpha_(std::move(alpha)), max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("JackMeasure: degree cap must be nonnegative");
  if (!rho1.zero_elsewhere() || !rho2.zero_elsewhere())
    throw std::invalid_argument("JackMeasure: specializations must be finitely supported");

  std::set<int> keys;
  for (const auto& [j, v] : rho1.values()) keys.insert(j);
  for (const auto& [j, v] : rho2.values()) keys.insert(j);
  Complex exponent(0.0, 0.0);
  for (int j : keys) exponent += rho1.power_sum(j) * rho2.power_sum(j) / static_cast<double>(j);
  z_ = std::exp(exponent / alpha_.to_double());

  const auto table = shared_jack_table(alpha_, max_degree);
  pmf_ = jack_weights(*table, rho1, rho2, max_degree);
  total_ = Complex(0.0, 0.0);
  for (auto& [lambda, w] : pmf_) {
    w /= z_;
    total_ += w;
  }
}

JackMeasure JackMeasure::from_function(const CircleFunction& f, const AlphaParam& alpha, int max_degree) {
  return JackMeasure(alpha, circle_specialization(f, alpha, +1), circle_specialization(f, alpha, -1),
                     max_degree);
}

Complex JackMeasure::pmf(const Partition& lambda) const {
  if (lambda.weight() > max_degree_)
    throw std::out_of_range("JackMeasure::pmf: |" + lambda.str() + "| exceeds degree cap " +
                            std::to_string(max_degree_));
  return pmf_.at(lambda);
}

ExpectedSize expected_partition_size(const CircleFunction& f, const AlphaParam& alpha, int max_degree) {
  if (!f.is_real()) throw std::invalid_argument("expected_partition_size: f must be real-valued");
  const auto m = JackMeasure::from_function(f, alpha, max_degree);
  ExpectedSize out;
  for (const auto& [lambda, p] : m.table()) out.value += lambda.weight() * p.real();
  out.exact_target = alpha.to_double() / 2.0 * sobolev_seminorm_circle(f, 1.0);
  return out;
}

Rational plancherel_pmf(const Partition& lambda, const AlphaParam& alpha) {
  const auto [h, hp] = hook_products(lambda, alpha.value());
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(lambda.weight()));
  Rational num(fact);
  for (int i = 0; i < lambda.weight(); ++i) num *= alpha.value();
  return num / (h * hp);
}

}  // namespace jackcbe
