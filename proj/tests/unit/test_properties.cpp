#include <random>

#include "doctest.h"
#include "jackcbe/expansion.hpp"
#include "jackcbe/symcore.hpp"

using namespace jackcbe;

namespace {

const std::vector<AlphaParam>& alphas() {
  static const std::vector<AlphaParam> a{AlphaParam(1, 2), AlphaParam(1), AlphaParam(2), AlphaParam(3)};
  return a;
}

SymPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-5, 5), den(1, 4);
  SymPoly out;
  for (int t = 0; t < 3; ++t) {
    const auto parts = enumerate_partitions(deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    out += SymPoly::power_sum(parts[pick(rng)]) * Rational(coef(rng), den(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("property: jack orthogonality up to degree 6") {
  for (const auto& al : alphas()) {
    const JackTable t(al, 6);
    for (int k = 0; k <= 6; ++k) {
      const auto& es = t.block(k).entries;
      for (std::size_t i = 0; i < es.size(); ++i) {
        CHECK(inner_product_alpha(es[i].jack, es[i].jack, al) == es[i].norm);
        CHECK(es[i].norm > 0);
        for (std::size_t j = i + 1; j < es.size(); ++j) CHECK(inner_product_alpha(es[i].jack, es[j].jack, al) == 0);
      }
    }
  }
}

TEST_CASE("property: unitriangular on the Schur basis") {
  for (const auto& al : alphas())
    for (int k = 1; k <= 6; ++k)
      for (const auto& la : enumerate_partitions(k))
        for (const auto& [mu, c] : schur_coefficients(jack_in_powersums(la, al), k)) {
          if (mu == la)
            CHECK(c == 1);
          else if (c != 0)
            CHECK(strictly_dominated(mu, la));
        }
}

TEST_CASE("property: the basis does not depend on the tie break") {
  for (const auto& al : alphas()) {
    const JackTable a(al, 6, TieBreak::ReverseLex), b(al, 6, TieBreak::Lex);
    for (int k = 0; k <= 6; ++k)
      for (const auto& la : enumerate_partitions(k)) {
        CHECK(a.jack(la) == b.jack(la));
        CHECK(a.norm(la) == b.norm(la));
      }
  }
}

TEST_CASE("property: degree-wise Cauchy identity") {
  for (const auto& al : alphas()) {
    const JackTable t(al, 6);
    for (int k = 0; k <= 6; ++k) {
      const auto basis = enumerate_partitions(k);
      for (const auto& mu : basis)
        for (const auto& nu : basis) {
          Rational lhs = 0;
          for (const auto& e : t.block(k).entries) lhs += e.jack.coefficient(mu) * e.jack.coefficient(nu) / e.norm;
          const Rational rhs = mu == nu ? 1 / power_sum_norm(mu, al) : Rational(0);
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("property: Plancherel hook cross-check") {
  const Specialization pl({{1, 1.0}}, true);
  for (const auto& al : alphas())
    for (int n = 0; n <= 6; ++n) {
      Rational total = 0;
      for (const auto& la : enumerate_partitions(n)) {
        const auto j = jack_in_powersums(la, al);
        const Rational v = j.coefficient(Partition(std::vector<int>(n, 1)));
        const auto [h, hp] = hook_products(la.conjugate(), al.value());
        CHECK(v * v / jack_norm(la, al) == 1 / (h * hp));
        total += plancherel_pmf(la, al);
      }
      CHECK(total == 1);
    }
}

TEST_CASE("property: specialization is a ring homomorphism") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    const auto P = random_poly(rng, 4), Q = random_poly(rng, 4);
    std::map<int, Complex> vals;
    for (int j = 1; j <= 8; ++j) vals[j] = Complex(g(rng), g(rng));
    const Specialization rho(vals, false);
    const Complex lhs = specialize(P * Q, rho);
    const Complex rhs = specialize(P, rho) * specialize(Q, rho);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1 + std::abs(rhs)));
    CHECK(std::abs(specialize(P + Q, rho) - specialize(P, rho) - specialize(Q, rho)) <= 1e-12 * (1 + std::abs(rhs)));
  }
}

TEST_CASE("property: a_coefficient increases toward one in n") {
  for (const auto& al : {AlphaParam(1), AlphaParam(3, 2), AlphaParam(2), AlphaParam(3)})
    for (int k = 1; k <= 6; ++k)
      for (const auto& la : enumerate_partitions(k)) {
        Rational prev = a_coefficient(la, al, la.length());
        for (int n = la.length() + 1; n <= 40; ++n) {
          const Rational cur = a_coefficient(la, al, n);
          CHECK(cur <= 1);
          CHECK(cur > 0);
          if (al.value() > 1)
            CHECK(cur > prev);
          else
            CHECK(cur == prev);
          prev = cur;
        }
        CHECK(1 - prev < Rational(k * k) * (al.value() - 1) / 40 + Rational(1, 1000000));
      }
}

TEST_CASE("property: jack measure mass and expected size") {
  const std::vector<CircleFunction> battery{CircleFunction::cosine(1, 0.2),
                                            CircleFunction::cosine(2, 0.1) + CircleFunction::cosine(1, 0.1),
                                            CircleFunction::from_triples({{1, 0.3, 0.1}, {-1, 0.3, -0.1}})};
  for (const auto& f : battery)
    for (const auto& al : {AlphaParam(1), AlphaParam(2)}) {
      const auto m = JackMeasure::from_function(f, al, 10);
      // Z is the closed-form Cauchy sum, so the truncated mass is a genuine check
      CHECK(m.total_mass().real() >= 1 - 1e-6);
      CHECK(m.total_mass().real() <= 1 + 1e-13);
      CHECK(std::abs(m.total_mass().imag()) < 1e-15);
      CHECK(m.total_mass().real() + m.tail_mass() == doctest::Approx(1.0));
      const auto e = expected_partition_size(f, al, 10);
      CHECK(std::abs(e.value - e.exact_target) < 1e-3);
    }
}
