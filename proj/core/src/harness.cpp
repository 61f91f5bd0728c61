#include "jackcbe/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "jackcbe/cbe.hpp"
#include "jackcbe/parallel.hpp"
#include "jackcbe/stats.hpp"
#include "json.hpp"

namespace jackcbe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kChunk = 500;

template <class SampleFn>
ComplexStats chunked_mc(std::size_t samples, std::uint64_t seed, SampleFn&& draw) {
  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<ComplexStats> partial(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    Rng rng = make_stream(seed, c);
    const std::size_t end = std::min(samples, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) partial[c].add(draw(rng));
  });
  ComplexStats total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

McEstimate to_estimate(const ComplexStats& s) { return {s.mean(), s.stderr_mean(), s.count()}; }

nlohmann::json function_json(const LineFunction& f) {
  nlohmann::json j{{"family", f.family_name()}};
  if (f.family() == LineFunction::Family::Tabulated) {
    j["x"] = f.knots_x();
    j["y"] = f.knots_y();
  } else {
    j["amplitude"] = f.amplitude();
    j["width"] = f.width();
  }
  return j;
}

nlohmann::json estimate_json(const McEstimate& e) {
  return {{"mean_re", e.mean.real()}, {"mean_im", e.mean.imag()}, {"stderr", e.stderr_mean}, {"samples", e.samples}};
}

double integrate(const std::function<double(double)>& g, double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  if (!(b > a)) return 0.0;
  const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / 4.0)));
  double s = 0.0;
  for (int i = 0; i < pieces; ++i)
    s += gauss_kronrod<double, 31>::integrate(g, a + (b - a) * i / pieces, a + (b - a) * (i + 1) / pieces, 8, 1e-12);
  return s;
}

}  // namespace

McEstimate cbe_multiplicative_mc(const CircleFunction& f, int n, double beta, std::size_t samples, std::uint64_t seed) {
  return to_estimate(chunked_mc(samples, seed, [&](Rng& rng) {
    const auto s = sample_cbe(n, beta, rng);
    Complex sum(0.0, 0.0);
    for (double t : s.angles) sum += f(t);
    return std::exp(sum);
  }));
}

McEstimate cbe_line_mc(const LineFunction& f, int n, double beta, std::size_t samples, std::uint64_t seed) {
  return to_estimate(chunked_mc(samples, seed, [&](Rng& rng) {
    const auto s = sample_cbe(n, beta, rng);
    double sum = 0.0;
    for (double t : s.angles) sum += f(n * t);
    return Complex(std::exp(sum), 0.0);
  }));
}

McEstimate sine_exp_mc(const LineFunction& f, const SDEConfig& base, double grid_spacing, std::size_t paths,
                       std::uint64_t seed) {
  if (!f.compact()) throw std::invalid_argument("sine_exp_mc: f must have compact support");
  if (f.family() == LineFunction::Family::Zero) return {Complex(1.0, 0.0), 0.0, paths};
  const auto [lo, hi] = f.support();
  SDEConfig cfg = base;
  cfg.x_grid = anchored_grid({lo, hi}, grid_spacing);
  return to_estimate(chunked_mc(paths, seed, [&](Rng& rng) {
    const auto s = sample_sine_configuration(cfg, rng);
    double sum = 0.0;
    for (double x : s.config.points()) sum += f(x);
    return Complex(std::exp(sum), 0.0);
  }));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double ks_distance(const std::vector<double>& sorted_samples, const std::function<double(double)>& cdf) {
  if (sorted_samples.empty()) throw std::invalid_argument("ks_distance: need at least one sample");
  const double m = static_cast<double>(sorted_samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
    const double f = cdf(sorted_samples[i]);
    d = std::max({d, (i + 1) / m - f, f - i / m});
  }
  return d;
}

double feller_bound(const CharFunction& phi1, const CharFunction& phi2, double T) {
  if (!(T > 0.0)) throw std::invalid_argument("feller_bound: T must be positive");
  using boost::math::quadrature::gauss_kronrod;
  auto g = [&](double y) { return std::abs(phi1(y) - phi2(y)) / std::abs(y); };
  double err_pos = 0.0, err_neg = 0.0;
  const double pos = gauss_kronrod<double, 61>::integrate(g, 0.0, T, 15, 1e-10, &err_pos);
  const double neg = gauss_kronrod<double, 61>::integrate(g, -T, 0.0, 15, 1e-10, &err_neg);
  const double integral = pos + neg;
  if (!std::isfinite(integral) || err_pos + err_neg > 1e-6 * std::max(1.0, integral))
    throw std::runtime_error("feller_bound: quadrature did not converge");
  return 24.0 / (std::sqrt(2.0 * kPi * kPi) * T) + integral / kPi;
}

double CLTWindow::cutoff(double x) const {
  const double a = std::abs(x);
  if (a <= half_width - taper) return 1.0;
  if (a >= half_width) return 0.0;
  return 0.5 * (1.0 + std::cos(kPi * (a - (half_width - taper)) / taper));
}

CLTWindow choose_clt_window(const LineFunction& f_r, double beta, std::size_t paths, double tail_ratio) {
  CLTWindow w;
  w.total_seminorm = sobolev_seminorm_line(f_r, 0.5);
  if (f_r.compact()) {
    const auto [lo, hi] = f_r.support();
    w.half_width = std::max(std::abs(lo), std::abs(hi)) + 1.0;
    w.taper = 0.5;
    return w;
  }
  const double s = f_r.width();
  w.taper = s;
  const double budget = std::pow(0.5 / std::sqrt(static_cast<double>(paths)), 2) * beta / 2.0;
  for (double k = 2.0; k <= 40.0; k += 0.25) {
    w.half_width = k * s;
    const double start = w.half_width - w.taper;
    const double stop = w.half_width + 40.0 * s;
    auto g = [&](double x) { return f_r(x) * (1.0 - w.cutoff(x)); };
    auto dg = [&](double x) {
      const double a = x - (w.half_width - w.taper);
      double dchi = 0.0;
      if (a > 0 && x < w.half_width) dchi = -0.5 * kPi / w.taper * std::sin(kPi * a / w.taper);
      return f_r.derivative(x) * (1.0 - w.cutoff(x)) - f_r(x) * dchi;
    };
    const double l2 = 2.0 * integrate([&](double x) { return g(x) * g(x); }, start, stop);
    const double h1 = 2.0 * integrate([&](double x) { return dg(x) * dg(x); }, start, stop);
    w.tail_seminorm_bound = std::sqrt(l2 * h1) / (2.0 * kPi);
    if (w.tail_seminorm_bound < tail_ratio * w.total_seminorm && w.tail_seminorm_bound <= budget) return w;
  }
  throw std::runtime_error("choose_clt_window: no window up to 40 widths meets the tail budget");
}

ExperimentRecord run_clt_experiment(const LineFunction& f, const CLTConfig& cfg) {
  if (!(cfg.beta > 0.0 && cfg.beta <= 2.0)) throw std::invalid_argument("run_clt_experiment: requires 0 < beta <= 2");
  if (cfg.paths < 2) throw std::invalid_argument("run_clt_experiment: need at least two paths");
  const auto start = std::chrono::steady_clock::now();
  ExperimentRecord rec;
  rec.config = cfg;
  rec.f = f;

  for (std::size_t ri = 0; ri < cfg.r_list.size(); ++ri) {
    const double r = cfg.r_list[ri];
    const auto f_r = f.dilated(r);
    CLTRow row;
    row.r = r;
    row.window = choose_clt_window(f_r, cfg.beta, cfg.paths, cfg.tail_ratio);
    const double w = row.window.half_width;
    const double spacing = std::max(cfg.grid_spacing, 2.0 * w / static_cast<double>(cfg.max_grid_points));

    SDEConfig sde;
    sde.beta = cfg.beta;
    sde.t0 = cfg.t0;
    sde.steps = cfg.steps;
    sde.max_dt = cfg.max_dt;
    sde.x_grid = anchored_grid({-w, w}, spacing);
    row.grid_points = sde.x_grid.size();

    const auto& win = row.window;
    const double windowed_integral = integrate([&](double x) { return f_r(x) * win.cutoff(x); }, -w, w);
    std::vector<double> values(cfg.paths);
    std::vector<double> repair(cfg.paths);
    std::vector<std::size_t> edges(cfg.paths);
    const std::uint64_t stream_seed = cfg.seed + 0x9e3779b97f4a7c15ULL * (ri + 1);
    parallel_for(cfg.paths, [&](std::size_t i) {
      Rng rng = make_stream(stream_seed, i);
      const auto s = sample_sine_configuration(sde, rng);
      values[i] = regularized_additive(s.config, [&](double x) { return Complex(f_r(x) * win.cutoff(x), 0.0); },
                                       windowed_integral)
                      .real();
      repair[i] = s.path.repair_magnitude;
      edges[i] = s.config.edge_flags.size();
    });

    RunningStats stats, laplace;
    for (std::size_t i = 0; i < cfg.paths; ++i) {
      stats.add(values[i]);
      laplace.add(std::exp(values[i]));
      row.max_repair = std::max(row.max_repair, repair[i]);
      row.edge_points += edges[i];
    }
    row.mean = stats.mean();
    row.stderr_mean = stats.stderr_mean();
    row.variance = stats.variance();
    row.laplace = laplace.mean();
    row.laplace_stderr = laplace.stderr_mean();
    std::sort(values.begin(), values.end());
    row.ks = ks_distance(values, normal_cdf);
    row.c_hat = row.window.total_seminorm > 0 ? row.variance / row.window.total_seminorm : 0.0;
    row.bias_estimate = std::sqrt(row.c_hat * row.window.tail_seminorm_bound);
    row.truncation_flag = row.bias_estimate > row.stderr_mean;
    rec.rows.push_back(row);
  }

  double num = 0.0, den = 0.0;
  for (const auto& row : rec.rows) {
    if (row.r <= 1.0) continue;
    const double a = 1.0 / std::sqrt(std::log(row.r));
    num += row.ks * a;
    den += a * a;
  }
  rec.fitted_c = den > 0 ? num / den : 0.0;
  rec.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string ExperimentRecord::to_json(bool include_timing) const {
  nlohmann::json rows_j = nlohmann::json::array();
  for (const auto& r : rows)
    rows_j.push_back({{"R", r.r},
                      {"window_half_width", r.window.half_width},
                      {"window_taper", r.window.taper},
                      {"seminorm_half", r.window.total_seminorm},
                      {"tail_seminorm_bound", r.window.tail_seminorm_bound},
                      {"grid_points", r.grid_points},
                      {"mean", r.mean},
                      {"stderr", r.stderr_mean},
                      {"variance", r.variance},
                      {"ks", r.ks},
                      {"laplace", r.laplace},
                      {"laplace_stderr", r.laplace_stderr},
                      {"c_hat", r.c_hat},
                      {"bias_estimate", r.bias_estimate},
                      {"truncation_flag", r.truncation_flag},
                      {"max_repair", r.max_repair},
                      {"edge_points", r.edge_points}});
  nlohmann::json j{{"kind", "clt"},
                   {"config",
                    {{"beta", config.beta},
                     {"R_list", config.r_list},
                     {"paths", config.paths},
                     {"seed", config.seed},
                     {"steps", config.steps},
                     {"t0", config.t0},
                     {"max_dt", config.max_dt},
                     {"grid_spacing", config.grid_spacing},
                     {"max_grid_points", config.max_grid_points},
                     {"tail_ratio", config.tail_ratio},
                     {"sde_initial_condition", "X(t0) = x t0"},
                     {"function", function_json(f)}}},
                   {"rows", std::move(rows_j)},
                   {"fitted_C", fitted_c}};
  if (include_timing) j["wall_clock_seconds"] = wall_clock_seconds;
  return j.dump(2);
}

std::string ExperimentRecord::to_csv() const {
  std::ostringstream out;
  out.precision(12);
  out << "R,statistic,value\n";
  for (const auto& r : rows) {
    out << r.r << ",ks," << r.ks << '\n';
    out << r.r << ",mean," << r.mean << '\n';
    out << r.r << ",stderr," << r.stderr_mean << '\n';
    out << r.r << ",variance," << r.variance << '\n';
    out << r.r << ",laplace," << r.laplace << '\n';
    out << r.r << ",laplace_stderr," << r.laplace_stderr << '\n';
    out << r.r << ",bias_estimate," << r.bias_estimate << '\n';
    out << r.r << ",window_half_width," << r.window.half_width << '\n';
  }
  return out.str();
}

VerifyReport verify_cbe_convergence(const LineFunction& f, double beta, const std::vector<int>& n_list,
                                    std::size_t samples, const SDEConfig& sde, double grid_spacing,
                                    std::uint64_t seed) {
  if (!(beta > 0.0 && beta <= 2.0)) throw std::invalid_argument("verify_cbe_convergence: requires 0 < beta <= 2");
  if (!f.compact()) throw std::invalid_argument("verify_cbe_convergence: f must have compact support");
  VerifyReport rep;
  rep.beta = beta;
  rep.f = f;
  rep.samples = samples;
  rep.seed = seed;
  SDEConfig base = sde;
  base.beta = beta;
  rep.sine = sine_exp_mc(f, base, grid_spacing, samples, seed);
  rep.all_agree = true;
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    VerifyRow row;
    row.n = n_list[k];
    row.cbe = f.family() == LineFunction::Family::Zero
                  ? McEstimate{Complex(1.0, 0.0), 0.0, samples}
                  : cbe_line_mc(f, row.n, beta, samples, seed + 0x632be59bd9b4e019ULL * (k + 1));
    const double band = 3.0 * std::hypot(row.cbe.stderr_mean, rep.sine.stderr_mean);
    row.agrees = std::abs(row.cbe.mean - rep.sine.mean) <= band;
    rep.all_agree = rep.all_agree && row.agrees;
    rep.rows.push_back(row);
  }
  return rep;
}

std::string VerifyReport::to_json() const {
  nlohmann::json rows_j = nlohmann::json::array();
  for (const auto& r : rows) {
    auto e = estimate_json(r.cbe);
    e["n"] = r.n;
    e["agrees"] = r.agrees;
    rows_j.push_back(std::move(e));
  }
  nlohmann::json j{{"kind", "verify"},   {"beta", beta},           {"function", function_json(f)},
                   {"samples", samples}, {"seed", seed},           {"sine", estimate_json(sine)},
                   {"cbe", rows_j},      {"all_agree", all_agree}};
  return j.dump(2);
}

std::string VerifyReport::to_csv() const {
  std::ostringstream out;
  out.precision(12);
  out << "source,n,mean,stderr,agrees\n";
  out << "sine,," << sine.mean.real() << ',' << sine.stderr_mean << ",\n";
  for (const auto& r : rows)
    out << "cbe," << r.n << ',' << r.cbe.mean.real() << ',' << r.cbe.stderr_mean << ',' << (r.agrees ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace jackcbe
