#include <cmath>
#include <numbers>

#include "doctest.h"
#include "jackcbe/cbe.hpp"
#include "jackcbe/expansion.hpp"
#include "jackcbe/harness.hpp"
#include "jackcbe/stats.hpp"

using namespace jackcbe;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("theta_nu draws") {
  Rng rng = make_stream(11, 0);
  CHECK_THROWS_AS(sample_theta_nu(1.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_theta_nu(0.5, rng), std::invalid_argument);
  for (double nu : {3.0, 5.0, 11.0, 1.5}) {
    RunningStats r2;
    for (int i = 0; i < 100000; ++i) {
      const auto z = sample_theta_nu(nu, rng);
      REQUIRE(std::abs(z) <= 1.0);
      r2.add(std::norm(z));
    }
    CHECK(std::abs(r2.mean() - 2.0 / (nu + 1.0)) < 3.0 * r2.stderr_mean());
  }
  // nu = 3 is uniform on the disc
  RunningStats inner;
  for (int i = 0; i < 100000; ++i) inner.add(std::abs(sample_theta_nu(3.0, rng)) < 0.5 ? 1.0 : 0.0);
  CHECK(std::abs(inner.mean() - 0.25) < 3.0 * inner.stderr_mean());
  RunningStats big;
  for (int i = 0; i < 1000; ++i) big.add(std::norm(sample_theta_nu(1e6, rng)));
  CHECK(big.mean() < 1e-4);
}

TEST_CASE("verblunsky sequences") {
  Rng rng = make_stream(12, 0);
  const auto one = sample_verblunsky(1, 2.0, rng);
  CHECK(one.alphas.empty());
  CHECK(one.n() == 1);
  CHECK(std::abs(std::abs(one.final_coefficient()) - 1.0) < 1e-15);
  CHECK_THROWS(sample_verblunsky(0, 2.0, rng));
  CHECK_THROWS(sample_verblunsky(3, 0.0, rng));
  RunningStats a0, a2;
  for (int i = 0; i < 100000; ++i) {
    const auto v = sample_verblunsky(4, 2.0, rng);
    REQUIRE(v.alphas.size() == 3);
    a0.add(std::norm(v.alphas[0]));
    a2.add(std::norm(v.alphas[2]));
  }
  CHECK(std::abs(a0.mean() - 0.5) < 3.0 * a0.stderr_mean());
  CHECK(std::abs(a2.mean() - 2.0 / 8.0) < 3.0 * a2.stderr_mean());
}

TEST_CASE("characteristic polynomial examples") {
  VerblunskySeq v;
  v.mu = 0.7;
  auto p = characteristic_polynomial(v);
  REQUIRE(p.size() == 2);
  CHECK(std::abs(p[0] + std::polar(1.0, -0.7)) < 1e-15);
  CHECK(p[1] == Complex(1.0, 0.0));
  v.alphas = {Complex(0.0, 0.0)};
  p = characteristic_polynomial(v);
  REQUIRE(p.size() == 3);
  CHECK(std::abs(p[0] + std::polar(1.0, -0.7)) < 1e-15);
  CHECK(std::abs(p[1]) < 1e-15);
  CHECK(p[2] == Complex(1.0, 0.0));
  Rng rng = make_stream(13, 0);
  for (int n : {2, 5, 17}) {
    const auto w = sample_verblunsky(n, 1.0, rng);
    const auto q = characteristic_polynomial(w);
    CHECK(q.size() == static_cast<std::size_t>(n + 1));
    CHECK(std::abs(q.back() - 1.0) < 1e-15);
    CHECK(std::abs(std::abs(q.front()) - 1.0) < 1e-12);
  }
}

TEST_CASE("Szego pair: monic and reversed conjugate") {
  Rng rng = make_stream(14, 0);
  const auto v = sample_verblunsky(9, 2.0, rng);
  const auto s = szego_recursion(v);
  REQUIRE(s.phi.size() == 9);
  CHECK(std::abs(s.phi.back() - 1.0) < 1e-15);
  for (std::size_t j = 0; j < s.phi.size(); ++j)
    CHECK(std::abs(s.phi_star[j] - std::conj(s.phi[s.phi.size() - 1 - j])) < 1e-13);
}

TEST_CASE("polynomial roots") {
  CHECK_THROWS(polynomial_roots({Complex(1.0, 0.0)}));
  CHECK_THROWS(polynomial_roots({Complex(1.0, 0.0), Complex(0.0, 0.0)}));
  const auto r = polynomial_roots({Complex(-1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)});
  for (const auto& z : r) CHECK(std::abs(z * z * z - 1.0) < 1e-13);
  const auto zero = polynomial_roots({Complex(0.0, 0.0), Complex(-1.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)});
  double smallest = 1.0;
  for (const auto& z : zero) smallest = std::min(smallest, std::abs(z));
  CHECK(smallest < 1e-14);

  // iteration agrees with the companion eigenvalues, on and inside the circle
  Rng rng = make_stream(16, 0);
  for (int n : {2, 8, 33, 64}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto v = sample_verblunsky(n, trial % 2 ? 1.0 : 2.0, rng);
      for (const auto& p : {characteristic_polynomial(v), szego_recursion(v).phi}) {
        if (p.size() < 2) continue;
        const auto a = polynomial_roots(p);
        const auto b = companion_roots(p);
        REQUIRE(a.size() == b.size());
        for (const auto& z : b) {
          double best = INFINITY;
          for (const auto& w : a) best = std::min(best, std::abs(z - w));
          CHECK(best < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("sample_cbe output") {
  Rng rng = make_stream(15, 0);
  for (int n : {1, 2, 8, 64}) {
    const auto s = sample_cbe(n, 1.0, rng);
    REQUIRE(s.angles.size() == static_cast<std::size_t>(n));
    CHECK(std::is_sorted(s.angles.begin(), s.angles.end()));
    CHECK(s.angles.front() > -kPi);
    CHECK(s.angles.back() <= kPi);
    CHECK(s.max_modulus_deviation <= 1e-8);
  }
}

TEST_CASE("rotation invariance and one-point intensity") {
  const int n = 4;
  ComplexStats first;
  RunningStats arc;
  for (int c = 0; c < 20; ++c) {
    Rng rng = make_stream(16, c);
    for (int i = 0; i < 5000; ++i) {
      const auto s = sample_cbe(n, 2.0, rng);
      Complex m(0.0, 0.0);
      int in_arc = 0;
      for (double t : s.angles) {
        m += std::polar(1.0, t);
        if (0.3 <= t && t < 1.3) ++in_arc;
      }
      first.add(m);
      arc.add(in_arc);
    }
  }
  CHECK(std::abs(first.real().mean()) < 4.0 * first.real().stderr_mean());
  CHECK(std::abs(first.imag().mean()) < 4.0 * first.imag().stderr_mean());
  CHECK(std::abs(arc.mean() - n * 1.0 / (2 * kPi)) < 3.0 * arc.stderr_mean());
}

TEST_CASE("one uniform angle for n = 1") {
  Rng rng = make_stream(17, 0);
  RunningStats s;
  for (int i = 0; i < 20000; ++i) s.add(sample_cbe(1, 2.0, rng).angles[0]);
  CHECK(std::abs(s.mean()) < 3.0 * s.stderr_mean());
  CHECK(s.variance() == doctest::Approx(kPi * kPi / 3.0).epsilon(0.03));
}

TEST_CASE("Monte Carlo against the expansion") {
  const auto f = CircleFunction::cosine(1, 0.2);
  SUBCASE("n = 2, beta = 2") {
    const auto mc = cbe_multiplicative_mc(f, 2, 2.0, 40000, 1001);
    const auto ex = gessel_expectation(f, AlphaParam(1), 2, 10);
    CHECK(std::abs(mc.mean - ex.value) <= 3.0 * mc.stderr_mean + ex.tail_estimate);
  }
  SUBCASE("n = 8, beta = 1") {
    const auto mc = cbe_multiplicative_mc(f, 8, 1.0, 100000, 1002);
    const auto ex = gessel_expectation(f, AlphaParam(2), 8, 10);
    CHECK(std::abs(mc.mean - ex.value) <= 3.0 * mc.stderr_mean + ex.tail_estimate);
  }
}

TEST_CASE("Prufer phase basics") {
  std::vector<double> grid;
  for (int i = -50; i <= 50; ++i) grid.push_back(i * 3.1 / 50);
  VerblunskySeq trivial;
  trivial.mu = 1.1;
  const auto psi0 = prufer_psi(trivial, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(psi0[i] == doctest::Approx(grid[i]).epsilon(1e-12));

  Rng rng = make_stream(18, 0);
  for (int n : {3, 10, 40}) {
    const auto v = sample_verblunsky(n, 1.0, rng);
    const auto psi = prufer_psi(v, grid);
    CHECK(psi[50] == 0.0);
    for (std::size_t i = 1; i < psi.size(); ++i) CHECK(psi[i] >= psi[i - 1]);
    const auto full = prufer_psi(v, {-kPi + 1e-12, 0.0, kPi - 1e-12});
    CHECK(full[2] - full[0] == doctest::Approx(2 * kPi * n).epsilon(1e-6));
  }
  CHECK_THROWS_AS(prufer_psi(trivial, {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("Prufer counting identity against the roots") {
  Rng rng = make_stream(19, 0);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    const auto s = sample_cbe(n, trial % 2 ? 1.0 : 2.0, rng);
    const double omega = prufer_omega(s.verblunsky);
    std::vector<double> xs;
    for (int i = 1; i <= 20; ++i) xs.push_back(i * (kPi - 1e-9) / 20);
    const auto psi = prufer_psi(s.verblunsky, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto roots = std::count_if(s.angles.begin(), s.angles.end(), [&](double t) { return t > 0 && t < xs[i]; });
      long lattice = 0;
      for (long k = 0; omega + 2 * kPi * k < psi[i]; ++k)
        if (omega + 2 * kPi * k > 0) ++lattice;
      // arc endpoints can only disagree on a measure-zero event
      CHECK(roots == lattice);
      ++checked;
    }
  }
  CHECK(checked == 4000);
}
