#pragma once

#include <cstdint>
#include <vector>

#include "jackcbe/rng.hpp"
#include "jackcbe/sympoly.hpp"

namespace jackcbe {

/// Draw from theta_nu, the law on the disc with density
/// (nu-1)/(2 pi) (1 - |z|^2)^{(nu-3)/2}.
Complex sample_theta_nu(double nu, Rng& rng);

struct VerblunskySeq {
  std::vector<Complex> alphas;  ///< alpha_0 .. alpha_{n-2}, inside the disc
  double mu = 0.0;              ///< alpha_{n-1} = e^{i mu}

  int n() const noexcept { return static_cast<int>(alphas.size()) + 1; }
  Complex final_coefficient() const { return std::polar(1.0, mu); }
};

/// alpha_k ~ theta_{beta(k+1)+1} for k <= n-2, and a uniform unimodular alpha_{n-1}.
VerblunskySeq sample_verblunsky(int n, double beta, Rng& rng);

/// Complex polynomial, coefficients from the constant term up.
using Poly = std::vector<Complex>;

Complex poly_eval(const Poly& p, Complex z);
/// p(z) and p'(z) in one Horner pass.
std::pair<Complex, Complex> poly_eval_derivative(const Poly& p, Complex z);

struct SzegoPair {
  Poly phi;       ///< monic, degree k
  Poly phi_star;  ///< z^k conj(phi(1/conj z))
};

/// Phi_0 = Phi*_0 = 1; Phi_{k+1} = z Phi_k - conj(a) Phi*_k, Phi*_{k+1} = Phi*_k - a z Phi_k.
SzegoPair szego_step(const SzegoPair& s, Complex a);
/// (Phi_k, Phi*_k) for k = v.n() - 1, built from alpha_0 .. alpha_{n-2}.
SzegoPair szego_recursion(const VerblunskySeq& v);

/// z Phi_{n-1}(z) - e^{-i mu} Phi*_{n-1}(z).
Poly characteristic_polynomial(const VerblunskySeq& v);

/// All roots of a polynomial with nonzero leading coefficient: Aberth-Ehrlich
/// iteration, falling back to the companion matrix, then a short Newton polish.
std::vector<Complex> polynomial_roots(const Poly& p);

/// Eigenvalues of the companion matrix.
std::vector<Complex> companion_roots(const Poly& p);

struct CBESample {
  std::vector<double> angles;  ///< sorted, in (-pi, pi]
  VerblunskySeq verblunsky;
  double beta = 0.0;
  int n = 0;
  double max_modulus_deviation = 0.0;
  int resamples = 0;
};

/// Exact draw from the circular beta ensemble with n points.
/// A root set with modulus deviation above 1e-6 is redrawn once, then rejected.
CBESample sample_cbe(int n, double beta, Rng& rng);

/// Roots of the characteristic polynomial of a given sequence, as sorted angles.
/// Throws if a root strays from the circle by more than `tolerance`.
std::vector<double> cbe_angles(const VerblunskySeq& v, double tolerance = 1e-6, double* deviation = nullptr);

/// Continuous branch of arg(B(e^{i theta}) / B(1)) with B = z Phi_{n-1} / Phi*_{n-1},
/// psi(0) = 0, at every grid point. The branch comes from the factorisation of
/// B over the zeros of Phi_{n-1}, and is checked against a direct evaluation.
std::vector<double> prufer_psi(const VerblunskySeq& v, const std::vector<double>& theta_grid);

/// omega in [0, 2 pi) such that the sample angles are exactly the theta with
/// psi(theta) in omega + 2 pi Z; read off the final coefficient.
double prufer_omega(const VerblunskySeq& v);

}  // namespace jackcbe
