#include <boost/math/special_functions/bessel.hpp>
#include <cmath>

#include "doctest.h"
#include "jackcbe/expansion.hpp"

using namespace jackcbe;

namespace {

double bessel_i(int k, double x) { return boost::math::cyl_bessel_i(k, x); }

}  // namespace

TEST_CASE("sobolev_seminorm_circle examples") {
  CHECK(sobolev_seminorm_circle(CircleFunction({{0, 3.0}}), 0.5) == 0.0);
  const auto f = CircleFunction::cosine(1, 1.0);
  CHECK(sobolev_seminorm_circle(f, 0.5) == doctest::Approx(2.0));
  CHECK(sobolev_seminorm_circle(f, 1.0) == doctest::Approx(2.0));
  CHECK(sobolev_seminorm_circle(CircleFunction::cosine(3, 0.5), 1.0) == doctest::Approx(4.5));
  CHECK_THROWS(sobolev_seminorm_circle(f, -1.0));
}

TEST_CASE("circle function basics") {
  const auto f = CircleFunction::from_triples({{1, 0.2, 0.1}, {-1, 0.2, -0.1}, {0, 0.5, 0.0}});
  CHECK(f.is_real());
  CHECK(std::abs(f(0.3).imag()) < 1e-15);
  CHECK(f(0.3).real() == doctest::Approx(0.5 + 2 * (0.2 * std::cos(0.3) - 0.1 * std::sin(0.3))));
  CHECK_FALSE(CircleFunction::from_triples({{1, 0.2, 0.0}}).is_real());
  CHECK(f.max_frequency() == 1);
  const auto g = f + 2.0 * CircleFunction::cosine(2, 0.1);
  CHECK(g.coeff(2) == Complex(0.2, 0.0));
  const auto rho = circle_specialization(CircleFunction::cosine(2, 0.1), AlphaParam(3), +1);
  CHECK(std::abs(rho.power_sum(2) - Complex(0.6, 0.0)) < 1e-15);
  CHECK(rho.power_sum(1) == Complex(0.0, 0.0));
}

TEST_CASE("gessel_expectation of the zero function") {
  for (int n : {1, 3, 10}) {
    const auto r = gessel_expectation(CircleFunction(), AlphaParam(2), n, 6);
    CHECK(r.value == Complex(1.0, 0.0));
    CHECK(r.tail_estimate == 0.0);
  }
}

TEST_CASE("gessel_expectation rejects alpha below one") {
  CHECK_THROWS_AS(gessel_expectation(CircleFunction::cosine(1, 0.1), AlphaParam(1, 2), 4, 6), std::invalid_argument);
  CHECK_THROWS_AS(gessel_expectation(CircleFunction::cosine(1, 0.1), AlphaParam(2), 0, 6), std::invalid_argument);
}

TEST_CASE("one particle is uniform for every beta") {
  for (double c : {0.1, 0.3}) {
    const auto f = CircleFunction::cosine(1, c);
    for (auto al : {AlphaParam(1), AlphaParam(2), AlphaParam(7, 2)}) {
      const auto r = gessel_expectation(f, al, 1, 10);
      CHECK(std::abs(r.value - bessel_i(0, 2 * c)) <= r.tail_estimate + 1e-13);
      CHECK(r.tail_estimate < 1e-8);
    }
  }
}

TEST_CASE("two particles at beta 2 match the Toeplitz determinant") {
  const double c = 0.25;
  const auto f = CircleFunction::cosine(1, c);
  const auto r = gessel_expectation(f, AlphaParam(1), 2, 10);
  const double det = bessel_i(0, 2 * c) * bessel_i(0, 2 * c) - bessel_i(1, 2 * c) * bessel_i(1, 2 * c);
  CHECK(std::abs(r.value - det) <= r.tail_estimate + 1e-13);
}

TEST_CASE("constant term factors out") {
  const auto f = CircleFunction({{0, Complex(0.3, 0.2)}, {1, 0.1}, {-1, 0.2}});
  const auto g = CircleFunction({{1, 0.1}, {-1, 0.2}});
  const auto a = gessel_expectation(f, AlphaParam(2), 5, 8);
  const auto b = gessel_expectation(g, AlphaParam(2), 5, 8);
  CHECK(std::abs(a.value - std::exp(5.0 * Complex(0.3, 0.2)) * b.value) < 1e-13);
}

TEST_CASE("strong Szego limit at beta 2") {
  const auto f = CircleFunction({{1, Complex(0.1, 0.05)}, {-1, Complex(0.15, 0.0)}, {2, 0.05}, {-2, 0.05}});
  const auto r = gessel_expectation(f, AlphaParam(1), 40, 10);
  CHECK(std::abs(r.value - limit_laplace(f, 2.0)) <= r.tail_estimate + 1e-12);
  CHECK(r.tail_estimate < 1e-10);
}

TEST_CASE("limit_laplace examples") {
  CHECK(limit_laplace(CircleFunction(), 2.0) == Complex(1.0, 0.0));
  const double c = 0.4;
  const auto f = CircleFunction::cosine(1, c);
  CHECK(std::abs(limit_laplace(f, 2.0) - std::exp(c * c)) < 1e-15);
  CHECK(std::abs(limit_laplace(f, 1.0) - std::exp(2 * c * c)) < 1e-15);
  CHECK_THROWS_AS(limit_laplace(f, 3.0), std::invalid_argument);
}

TEST_CASE("subgauss_bound examples") {
  CHECK(subgauss_bound(CircleFunction(), 2.0) == 1.0);
  const auto f = CircleFunction::cosine(1, 1.0);
  CHECK(subgauss_bound(f, 2.0) == doctest::Approx(std::exp(1.0)));
  CHECK(subgauss_bound(f, 1.0) == doctest::Approx(std::exp(2.0)));
  CHECK(subgauss_bound(f, 1.0) == doctest::Approx(std::exp(sobolev_seminorm_circle(f, 0.5) / 1.0)));
  CHECK_THROWS_AS(subgauss_bound(CircleFunction({{1, 0.1}}), 2.0), std::invalid_argument);
}

TEST_CASE("cbe_error_bound examples") {
  CHECK(cbe_error_bound(CircleFunction(), 2.0, 4) == 0.0);
  const auto f = CircleFunction::cosine(1, 1.0);
  CHECK(cbe_error_bound(f, 2.0, 4) == doctest::Approx(1.0));
  CHECK(cbe_error_bound(f, 1.0, 8) == doctest::Approx(0.5 * cbe_error_bound(f, 1.0, 4)));
  CHECK_THROWS(cbe_error_bound(f, 2.0, 0));
}

TEST_CASE("jack measure: empty partition and degree cap") {
  const auto f = CircleFunction::cosine(1, 0.3);
  const auto m = JackMeasure::from_function(f, AlphaParam(2), 6);
  CHECK(std::abs(m.pmf({}) - 1.0 / m.normalization()) < 1e-15);
  CHECK_THROWS_AS(m.pmf({4, 3}), std::out_of_range);
  for (const auto& [la, v] : m.table()) {
    CHECK(v.real() >= 0.0);
    CHECK(std::abs(v.imag()) < 1e-15);
  }
  CHECK(m.tail_mass() >= -1e-15);
  CHECK(m.tail_mass() < 1e-4);
}

TEST_CASE("jack measure with the Plancherel specialization") {
  const double qv = 0.8;
  for (auto al : {AlphaParam(1, 2), AlphaParam(1), AlphaParam(3)}) {
    const double a = al.to_double();
    const auto rho = Specialization::plancherel(qv);
    const JackMeasure m(al, rho, rho, 8);
    CHECK(std::abs(m.normalization() - std::exp(qv / a)) < 1e-13);
    for (int n = 0; n <= 8; ++n)
      for (const auto& la : enumerate_partitions(n)) {
        const auto [h, hp] = hook_products(la.conjugate(), al.value());
        const double expect = std::exp(-qv / a) * std::pow(qv, n) / Rational(h * hp).get_d();
        CHECK(std::abs(m.pmf(la) - expect) < 1e-14);
        // the same as the poissonized beta-Plancherel weight of the transpose
        const double pl = plancherel_pmf(la.conjugate(), al).get_d();
        CHECK(std::abs(m.pmf(la).real() - std::exp(-qv / a) * std::pow(qv / a, n) / std::tgamma(n + 1) * pl) < 1e-14);
      }
  }
}

TEST_CASE("jack measure rejects open-ended specializations") {
  CHECK_THROWS_AS(JackMeasure(AlphaParam(1), Specialization({{1, 1.0}}, false), Specialization::plancherel(1.0), 3),
                  std::invalid_argument);
}

TEST_CASE("expected_partition_size examples") {
  const auto zero = expected_partition_size(CircleFunction(), AlphaParam(2), 8);
  CHECK(zero.value == 0.0);
  CHECK(zero.exact_target == 0.0);
  const double c = 0.3;
  CHECK(expected_partition_size(CircleFunction::cosine(1, c), AlphaParam(1), 8).exact_target ==
        doctest::Approx(c * c));
  const auto r = expected_partition_size(CircleFunction::cosine(1, c), AlphaParam(2), 8);
  CHECK(std::abs(r.value - r.exact_target) < 1e-4);
  CHECK_THROWS(expected_partition_size(CircleFunction({{1, 0.1}}), AlphaParam(2), 8));
}

TEST_CASE("plancherel_pmf examples") {
  for (auto al : {AlphaParam(1, 2), AlphaParam(1), AlphaParam(2)}) {
    CHECK(plancherel_pmf({}, al) == 1);
    CHECK(plancherel_pmf({1}, al) == 1);
    Rational s = 0;
    for (const auto& la : enumerate_partitions(4)) s += plancherel_pmf(la, al);
    CHECK(s == 1);
  }
  CHECK(plancherel_pmf({2}, AlphaParam(2)) == Rational(2, 3));
}
