#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "jackcbe/cbe.hpp"
#include "jackcbe/expansion.hpp"
#include "jackcbe/harness.hpp"
#include "jackcbe/parallel.hpp"
#include "jackcbe/serialize.hpp"
#include "jackcbe/stats.hpp"

using namespace jackcbe;
using namespace jackcbe::cli;

namespace {

constexpr int kGateFailed = 1;
constexpr int kBadConfig = 2;

struct Common {
  std::string config;
  std::optional<double> beta;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> csv;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-c,--config", c.config, "JSON config file")->check(CLI::ExistingFile);
  cmd->add_option("--beta", c.beta, "inverse temperature");
  cmd->add_option("--seed", c.seed, "master seed");
  cmd->add_option("-o,--out", c.out, "primary output file ('-' for stdout)");
}

template <class T>
void put(Json& cfg, const char* key, const std::optional<T>& v) {
  if (v) cfg[key] = *v;
}

Json merged(const Common& c) {
  Json cfg = load_config(c.config);
  put(cfg, "beta", c.beta);
  put(cfg, "seed", c.seed);
  put(cfg, "out", c.out);
  put(cfg, "csv", c.csv);
  return cfg;
}

Rational beta_rational(const Json& cfg) {
  if (!cfg.contains("beta")) return Rational(2);
  const auto& b = cfg["beta"];
  if (b.is_string()) return parse_rational(b.get<std::string>());
  if (b.is_number()) return Rational(b.get<double>());
  throw ConfigError("beta must be a number or a rational string");
}

Json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void report_gates(const Json& gates) {
  for (const auto& [name, ok] : gates.items())
    std::cerr << "gate " << name << ": " << (ok.get<bool>() ? "pass" : "FAIL") << '\n';
}

bool all_pass(const Json& gates) {
  for (const auto& [name, ok] : gates.items())
    if (!ok.get<bool>()) return false;
  return true;
}

// ---------------------------------------------------------------------------

int run_expand(const Json& cfg, const std::string& jack_table_path) {
  const auto f = circle_function_from(require<Json>(cfg, "function"));
  const Rational beta_q = beta_rational(cfg);
  const AlphaParam alpha = AlphaParam::from_beta(beta_q);
  const double beta = beta_q.get_d();
  const int degree = get_or(cfg, "degree", 10);
  const auto n_list = get_or<std::vector<int>>(cfg, "n_list", {4, 8, 16});

  if (!jack_table_path.empty()) {
    const auto table = shared_jack_table(alpha, degree);
    SymPolyTable out{"jack alpha=" + alpha.value().get_str(), {}};
    for (int k = 0; k <= degree; ++k)
      for (const auto& e : table->block(k).entries) out.rows.emplace_back(e.lambda, e.jack);
    write_output(jack_table_path, to_json_text(out));
  }

  const Complex limit = limit_laplace(f, beta);
  Json records = Json::array();
  bool bound_ok = true, subgauss_ok = true;
  std::ostringstream csv;
  csv.precision(15);
  csv << "n,value_re,value_im,tail_estimate,limit_re,limit_im,bound\n";
  for (int n : n_list) {
    const auto g = gessel_expectation(f, alpha, n, degree);
    const Complex scale = std::exp(-static_cast<double>(n) * f.coeff(0));
    Json r{{"n", n}, {"value", complex_json(g.value)}, {"tail_estimate", g.tail_estimate}, {"limit", complex_json(limit)}};
    r["bound"] = nullptr;
    if (n % 2 == 0) {
      const double bound = cbe_error_bound(f, beta, n / 2);
      const double rel = std::abs(g.value * scale / limit - 1.0);
      const double rel_tail = g.tail_estimate * std::abs(scale / limit);
      r["bound"] = bound;
      r["relative_deviation"] = rel;
      bound_ok = bound_ok && rel <= bound + rel_tail;
    }
    if (f.is_real()) {
      const double lhs = std::abs(g.value * scale);
      const double sb = subgauss_bound(f, beta);
      r["subgauss_bound"] = sb;
      subgauss_ok = subgauss_ok && lhs <= (sb + g.tail_estimate * std::abs(scale)) * (1 + 1e-12);
    }
    csv << n << ',' << g.value.real() << ',' << g.value.imag() << ',' << g.tail_estimate << ',' << limit.real() << ','
        << limit.imag() << ',';
    if (!r["bound"].is_null()) csv << r["bound"].get<double>();
    csv << '\n';
    records.push_back(std::move(r));
  }
  Json gates{{"error_bound", bound_ok}};
  if (f.is_real()) gates["subgaussian"] = subgauss_ok;
  Json coeffs = Json::array();
  for (const auto& [j, c] : f.coeffs()) coeffs.push_back({j, c.real(), c.imag()});
  Json out{{"kind", "expand"},      {"beta", beta}, {"alpha", alpha.value().get_str()}, {"degree", degree},
           {"function", coeffs},   {"records", records}, {"gates", gates}};
  write_output(get_or<std::string>(cfg, "out", ""), out.dump(2));
  if (cfg.contains("csv")) write_output(cfg["csv"].get<std::string>(), csv.str());
  report_gates(gates);
  return all_pass(gates) ? 0 : kGateFailed;
}

int run_sample_cbe(const Json& cfg, const std::string& format) {
  const int n = require<int>(cfg, "n");
  const double beta = beta_rational(cfg).get_d();
  const auto samples = get_or<std::size_t>(cfg, "samples", 1000);
  const auto seed = get_or<std::uint64_t>(cfg, "seed", 20261019);
  std::optional<CircleFunction> f;
  if (cfg.contains("function")) f = circle_function_from(cfg["function"]);
  if (format == "jsonl" && !f) throw ConfigError("jsonl output needs a circle 'function' in the config");

  std::vector<CBESample> draws(samples);
  parallel_for(samples, [&](std::size_t i) {
    Rng rng = make_stream(seed, i);
    draws[i] = sample_cbe(n, beta, rng);
  });

  std::ostringstream out;
  out.precision(17);
  double worst = 0.0;
  int resamples = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& s = draws[i];
    worst = std::max(worst, s.max_modulus_deviation);
    resamples += s.resamples;
    if (format == "jsonl") {
      Complex sum(0.0, 0.0);
      for (double t : s.angles) sum += (*f)(t);
      out << Json{{"sample", i}, {"seed", seed}, {"sum", complex_json(sum)}, {"exp", complex_json(std::exp(sum))}}.dump()
          << '\n';
    } else {
      for (std::size_t k = 0; k < s.angles.size(); ++k) out << (k ? "," : "") << s.angles[k];
      out << '\n';
    }
  }
  write_output(get_or<std::string>(cfg, "out", ""), out.str());
  Json gates{{"root_modulus", worst <= 1e-8}};
  std::cerr << "samples " << samples << ", n " << n << ", beta " << beta << ", seed " << seed
            << ", max root modulus deviation " << worst << ", resamples " << resamples << '\n';
  report_gates(gates);
  return all_pass(gates) ? 0 : kGateFailed;
}

SDEConfig sde_from(const Json& cfg) {
  SDEConfig sde;
  sde.beta = beta_rational(cfg).get_d();
  sde.steps = get_or(cfg, "steps", sde.steps);
  sde.t0 = get_or(cfg, "t0", sde.t0);
  sde.max_dt = get_or(cfg, "max_dt", sde.max_dt);
  sde.repair_tolerance = get_or(cfg, "repair_tolerance", sde.repair_tolerance);
  return sde;
}

int run_simulate_sine(const Json& cfg, const std::string& sidecar_path) {
  SDEConfig sde = sde_from(cfg);
  const auto window = get_or<std::vector<double>>(cfg, "window", {0.0, 20.0});
  if (window.size() != 2 || !(window[0] < window[1])) throw ConfigError("window must be [a, b] with a < b");
  const int points = get_or(cfg, "grid_points", 81);
  if (points < 2) throw ConfigError("grid_points must be at least 2");
  const auto paths = get_or<std::size_t>(cfg, "paths", 1000);
  const auto seed = get_or<std::uint64_t>(cfg, "seed", 20261019);
  for (int i = 0; i < points; ++i)
    sde.x_grid.push_back(i + 1 == points ? window[1] : window[0] + (window[1] - window[0]) * i / (points - 1));
  try {
    sde.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  std::vector<SineSample> draws(paths);
  parallel_for(paths, [&](std::size_t i) {
    Rng rng = make_stream(seed, i);
    draws[i] = sample_sine_configuration(sde, rng);
  });

  std::ostringstream out;
  out.precision(17);
  RunningStats count, repair, violations;
  double max_repair = 0.0;
  std::size_t edge_points = 0, warnings = 0;
  for (const auto& s : draws) {
    const auto& pts = s.config.points();
    for (std::size_t k = 0; k < pts.size(); ++k) out << (k ? "," : "") << pts[k];
    out << '\n';
    count.add(static_cast<double>(pts.size()));
    repair.add(s.path.repair_magnitude);
    violations.add(s.path.violation_fraction);
    max_repair = std::max(max_repair, s.path.repair_magnitude);
    edge_points += s.config.edge_flags.size();
    warnings += s.config.warnings.size();
  }
  write_output(get_or<std::string>(cfg, "out", ""), out.str());

  const double length = window[1] - window[0];
  Json gates{{"monotone_violations_below_1pct", violations.mean() < 0.01}};
  Json diag{{"kind", "simulate-sine"},
            {"beta", sde.beta},
            {"seed", seed},
            {"paths", paths},
            {"window", window},
            {"grid_points", points},
            {"steps", sde.steps},
            {"t0", sde.t0},
            {"max_dt", sde.max_dt},
            {"initial_condition", "X(t0) = x t0"},
            {"repair_magnitude", {{"max", max_repair}, {"mean", repair.mean()}}},
            {"violation_fraction_mean", violations.mean()},
            {"points_per_configuration", {{"mean", count.mean()}, {"stderr", count.stderr_mean()}}},
            {"expected_points", length / (2.0 * std::numbers::pi)},
            {"edge_points", edge_points},
            {"flat_warnings", warnings},
            {"gates", gates}};
  std::string sidecar = sidecar_path;
  if (sidecar.empty()) {
    const auto o = get_or<std::string>(cfg, "out", "");
    sidecar = o.empty() || o == "-" ? "" : o + ".json";
  }
  if (!sidecar.empty())
    write_output(sidecar, diag.dump(2));
  else
    std::cerr << diag.dump(2) << '\n';
  report_gates(gates);
  return all_pass(gates) ? 0 : kGateFailed;
}

int run_clt(const Json& cfg) {
  CLTConfig c;
  c.beta = beta_rational(cfg).get_d();
  c.r_list = get_or(cfg, "R_list", c.r_list);
  c.paths = get_or(cfg, "paths", c.paths);
  c.seed = get_or(cfg, "seed", c.seed);
  c.steps = get_or(cfg, "steps", c.steps);
  c.t0 = get_or(cfg, "t0", c.t0);
  c.max_dt = get_or(cfg, "max_dt", c.max_dt);
  c.grid_spacing = get_or(cfg, "grid_spacing", c.grid_spacing);
  c.max_grid_points = get_or(cfg, "max_grid_points", c.max_grid_points);
  c.tail_ratio = get_or(cfg, "tail_ratio", c.tail_ratio);
  auto f = line_function_from(cfg.contains("function") ? cfg["function"] : Json{{"family", "gaussian"}});
  if (get_or(cfg, "normalize", true)) f = normalize_for_unit_variance(f, c.beta);

  const auto rec = run_clt_experiment(f, c);
  int increases = 0;
  for (std::size_t i = 0; i + 1 < rec.rows.size(); ++i)
    if (rec.rows[i + 1].ks > rec.rows[i].ks) ++increases;
  const double sigma2 = limit_variance(f, c.beta);
  bool subgauss = true;
  for (const auto& r : rec.rows) subgauss = subgauss && r.laplace - r.laplace_stderr <= std::exp(sigma2 / 2.0);
  Json gates{{"ks_decreasing_up_to_one_inversion", increases <= 1}, {"subgaussian_laplace", subgauss}};

  Json out = Json::parse(rec.to_json(get_or(cfg, "timing", true)));
  out["gates"] = gates;
  write_output(get_or<std::string>(cfg, "out", ""), out.dump(2));
  if (cfg.contains("csv")) write_output(cfg["csv"].get<std::string>(), rec.to_csv());
  report_gates(gates);
  return all_pass(gates) ? 0 : kGateFailed;
}

int run_verify(const Json& cfg) {
  const double beta = beta_rational(cfg).get_d();
  const auto f =
      line_function_from(cfg.contains("function") ? cfg["function"] : Json{{"family", "triangle"}, {"width", 3.0}});
  const auto n_list = get_or<std::vector<int>>(cfg, "n_list", {16, 32, 64});
  const auto samples = get_or<std::size_t>(cfg, "samples", 10000);
  const auto seed = get_or<std::uint64_t>(cfg, "seed", 20261019);
  SDEConfig sde = sde_from(cfg);
  const double spacing = get_or(cfg, "grid_spacing", 0.25);
  const auto rep = verify_cbe_convergence(f, beta, n_list, samples, sde, spacing, seed);
  Json out = Json::parse(rep.to_json());
  Json gates{{"two_oracle_agreement", rep.all_agree}};
  out["gates"] = gates;
  write_output(get_or<std::string>(cfg, "out", ""), out.dump(2));
  if (cfg.contains("csv")) write_output(cfg["csv"].get<std::string>(), rep.to_csv());
  report_gates(gates);
  return all_pass(gates) ? 0 : kGateFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jack expansions, circular beta-ensemble sampling and sine-beta simulation"};
  app.require_subcommand(1);

  Common ex, sc, ss, clt, ver;

  auto* expand = app.add_subcommand("expand", "series for E prod e^{f(theta_j)} with bounds");
  add_common(expand, ex);
  expand->add_option("--csv", ex.csv, "CSV table of the records");
  std::optional<int> ex_degree;
  std::vector<int> ex_n;
  std::string jack_table;
  expand->add_option("--degree", ex_degree, "partition size cap D");
  expand->add_option("--n", ex_n, "particle counts");
  expand->add_option("--jack-table", jack_table, "also write the Jack table up to the degree cap as JSON");

  auto* sample = app.add_subcommand("sample-cbe", "exact circular beta-ensemble samples");
  add_common(sample, sc);
  std::optional<int> sc_n;
  std::optional<std::size_t> sc_samples;
  std::string format = "csv";
  sample->add_option("--n", sc_n, "number of points");
  sample->add_option("--samples", sc_samples, "number of samples");
  sample->add_option("--format", format, "csv (angles) or jsonl (functional statistics)")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  auto* sine = app.add_subcommand("simulate-sine", "sine-beta configurations from the coupled SDE");
  add_common(sine, ss);
  std::vector<double> window;
  std::optional<int> grid_points;
  std::optional<std::size_t> paths;
  std::string sidecar;
  sine->add_option("--window", window, "window a b")->expected(2);
  sine->add_option("--grid-points", grid_points, "x grid size");
  sine->add_option("--paths", paths, "number of configurations");
  sine->add_option("--sidecar", sidecar, "diagnostics JSON (default: <out>.json)");

  auto* cltcmd = app.add_subcommand("clt-test", "KS sweep of the sine-beta CLT over dilations");
  add_common(cltcmd, clt);
  cltcmd->add_option("--csv", clt.csv, "CSV table, one row per (R, statistic)");
  std::vector<double> r_list;
  std::optional<std::size_t> clt_paths;
  cltcmd->add_option("--R", r_list, "dilation factors");
  cltcmd->add_option("--paths", clt_paths, "paths per R");

  auto* verify = app.add_subcommand("verify", "CBE at scale n against the sine-beta limit");
  add_common(verify, ver);
  verify->add_option("--csv", ver.csv, "CSV table");
  std::vector<int> ver_n;
  std::optional<std::size_t> ver_samples;
  verify->add_option("--n", ver_n, "particle counts");
  verify->add_option("--samples", ver_samples, "samples per estimate");

  CLI11_PARSE(app, argc, argv);

  try {
    if (expand->parsed()) {
      auto cfg = merged(ex);
      put(cfg, "degree", ex_degree);
      if (!ex_n.empty()) cfg["n_list"] = ex_n;
      return run_expand(cfg, jack_table);
    }
    if (sample->parsed()) {
      auto cfg = merged(sc);
      put(cfg, "n", sc_n);
      put(cfg, "samples", sc_samples);
      return run_sample_cbe(cfg, format);
    }
    if (sine->parsed()) {
      auto cfg = merged(ss);
      if (!window.empty()) cfg["window"] = window;
      put(cfg, "grid_points", grid_points);
      put(cfg, "paths", paths);
      return run_simulate_sine(cfg, sidecar);
    }
    if (cltcmd->parsed()) {
      auto cfg = merged(clt);
      if (!r_list.empty()) cfg["R_list"] = r_list;
      put(cfg, "paths", clt_paths);
      return run_clt(cfg);
    }
    if (verify->parsed()) {
      auto cfg = merged(ver);
      if (!ver_n.empty()) cfg["n_list"] = ver_n;
      put(cfg, "samples", ver_samples);
      return run_verify(cfg);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kBadConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kGateFailed;
  }
  return 0;
}
