#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

namespace jackcbe {

/// Welford accumulator.
class RunningStats {
 public:
  void add(double x) noexcept {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }
  void merge(const RunningStats& o) noexcept {
    if (o.n_ == 0) return;
    if (n_ == 0) {
      *this = o;
      return;
    }
    const double n = static_cast<double>(n_ + o.n_);
    const double d = o.mean_ - mean_;
    mean_ += d * static_cast<double>(o.n_) / n;
    m2_ += o.m2_ + d * d * static_cast<double>(n_) * static_cast<double>(o.n_) / n;
    n_ += o.n_;
  }
  std::size_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }
  double variance() const noexcept { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  double stderr_mean() const noexcept { return n_ > 0 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0; }

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Real and imaginary parts tracked separately; stderr is the modulus of the pair.
class ComplexStats {
 public:
  void add(std::complex<double> z) noexcept {
    re_.add(z.real());
    im_.add(z.imag());
  }
  void merge(const ComplexStats& o) noexcept {
    re_.merge(o.re_);
    im_.merge(o.im_);
  }
  std::size_t count() const noexcept { return re_.count(); }
  std::complex<double> mean() const noexcept { return {re_.mean(), im_.mean()}; }
  double stderr_mean() const noexcept { return std::hypot(re_.stderr_mean(), im_.stderr_mean()); }
  const RunningStats& real() const noexcept { return re_; }
  const RunningStats& imag() const noexcept { return im_; }

 private:
  RunningStats re_, im_;
};

}  // namespace jackcbe
