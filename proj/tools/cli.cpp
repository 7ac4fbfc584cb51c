#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "padepm/errors.hpp"
#include "padepm/experiments.hpp"
#include "padepm/io.hpp"

namespace padepm::cli {

namespace {

struct Options {
  std::string method = "pm2";
  int m = 0;
  int k = -1;
  std::optional<int> n;
  std::optional<double> t;
  std::vector<double> eps;
  int samples = 10;
  std::uint64_t seed = 1;
  double origin_radius = kDefaultOriginRadius;
  double mesh_spacing = 0.02;
  std::string coeffs;
  std::string out;
  std::string format = "json";
  bool serial = false;
  std::string kind = "geometric";
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InvalidArgument("cannot write to " + o.out);
  f << text;
}

void add_conformation(CLI::App* app, Options& o) {
  app->add_option("--method", o.method, "dm, svd, pm1 or pm2")
      ->check(CLI::IsMember({"dm", "svd", "pm1", "pm2"}));
  app->add_option("--m", o.m, "Denominator degree")->required();
  app->add_option("--k", o.k, "Numerator degree minus denominator degree");
  app->add_option("--t", o.t, "Accurate digits in the coefficients");
  app->add_option("--origin-radius", o.origin_radius,
                  "Eigenvalues this close to 0 are dropped (pm2)");
  app->add_option("--coeffs", o.coeffs,
                  "Coefficient file: JSON [[re, im], ...] or 're im' lines")
      ->required();
  app->add_option("--out", o.out, "Output path (default stdout)");
}

Approximation run_approximation(const Options& o) {
  const PowerSeries s(io::read_coefficients(o.coeffs), o.t);
  const auto conf = Conformation::make(o.m, o.k);
  FilterParams params;
  params.t = o.t;
  params.origin_radius = o.origin_radius;
  params.validate();
  return approximate(s, parse_method(o.method), conf, params);
}

std::string cmd_approximate(const Options& o) {
  return to_json(run_approximation(o)).dump(2) + "\n";
}

std::string cmd_poles(const Options& o) {
  const auto a = run_approximation(o);
  if (o.format == "csv") {
    std::ostringstream os;
    os.precision(17);
    os << "kind,re,im,residue_re,residue_im\n";
    const auto poles = a.poles();
    const auto weights = a.prf ? a.prf->weights() : std::vector<Complex>{};
    for (std::size_t i = 0; i < poles.size(); ++i) {
      os << "pole," << poles[i].real() << ',' << poles[i].imag() << ',';
      if (i < weights.size()) os << weights[i].real() << ',' << weights[i].imag();
      else os << ',';
      os << '\n';
    }
    for (const auto& z : a.roots.zeros) {
      os << "zero," << z.real() << ',' << z.imag() << ",,\n";
    }
    return os.str();
  }
  auto j = to_json(a);
  j.erase("numer");
  j.erase("denom");
  return j.dump(2) + "\n";
}

ExperimentConfig experiment_config(const Options& o, int default_n) {
  ExperimentConfig cfg;
  cfg.n = o.n.value_or(default_n);
  cfg.m = o.m;
  cfg.k = o.k;
  if (!o.eps.empty()) cfg.eps_list = o.eps;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.t = o.t;
  cfg.method = parse_method(o.method);
  cfg.origin_radius = o.origin_radius;
  cfg.mesh_spacing = o.mesh_spacing;
  cfg.execution = o.serial ? Execution::kSerial : Execution::kParallel;
  return cfg;
}

std::string cmd_geometric(const Options& o) {
  const auto report = run_geometric_noise(experiment_config(o, 20));
  if (o.format == "csv") return to_csv(report);
  return to_json(report).dump(2) + "\n";
}

std::string cmd_log_branch(const Options& o) {
  return to_json(run_log_branch(experiment_config(o, 41))).dump(2) + "\n";
}

std::string cmd_generate(const Options& o) {
  if (o.kind == "log") return io::format_coefficients(gen_log_series(o.n.value_or(41)).coeffs());
  if (o.kind == "quadratic") {
    return io::format_coefficients(gen_quadratic_eps(o.eps.empty() ? 0.0 : o.eps.front()).coeffs());
  }
  NoiseRng rng(o.seed);
  const double eps = o.eps.empty() ? 0.0 : o.eps.front();
  return io::format_coefficients(gen_geometric_noisy(o.n.value_or(20), eps, rng).coeffs());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Pade approximants by the matrix pencil method"};
  app.require_subcommand(1);

  auto* approx = app.add_subcommand("approximate", "Compute one approximant as JSON");
  add_conformation(approx, o);

  auto* poles = app.add_subcommand("poles", "Poles, zeros and residues only");
  add_conformation(poles, o);
  poles->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* exp = app.add_subcommand("experiment", "Run a reproducible study");
  exp->require_subcommand(1);
  auto* geo = exp->add_subcommand("geometric-noise", "Noisy geometric series sweep");
  o.m = 10;
  geo->add_option("--method", o.method)
      ->check(CLI::IsMember({"dm", "svd", "pm1", "pm2"}));
  geo->add_option("--n", o.n, "Series length (default 20)");
  geo->add_option("--m", o.m, "Denominator degree (default 10)");
  geo->add_option("--k", o.k, "Degree offset (default -1)");
  geo->add_option("--eps", o.eps, "Noise level, repeatable");
  geo->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  geo->add_option("--seed", o.seed);
  geo->add_option("--t", o.t, "Accurate digits (default -log10 eps)");
  geo->add_option("--origin-radius", o.origin_radius);
  geo->add_option("--out", o.out);
  geo->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  geo->add_flag("--serial", o.serial, "Disable OpenMP over samples");

  auto* logb = exp->add_subcommand("log-branch", "log(1.2 - z) study");
  logb->add_option("--n", o.n, "Series length (default 41)");
  logb->add_option("--t", o.t, "Accurate digits for pm2 (default 14)");
  logb->add_option("--origin-radius", o.origin_radius);
  logb->add_option("--mesh-spacing", o.mesh_spacing, "Unit-disk mesh spacing");
  logb->add_option("--out", o.out);
  logb->add_flag("--serial", o.serial, "Disable OpenMP in the error sweeps");

  auto* gen = app.add_subcommand("generate", "Write a test series as JSON");
  gen->add_option("--kind", o.kind)
      ->check(CLI::IsMember({"geometric", "log", "quadratic"}));
  gen->add_option("--n", o.n);
  gen->add_option("--eps", o.eps);
  gen->add_option("--seed", o.seed);
  gen->add_option("--out", o.out);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::string text;
    if (approx->parsed()) text = cmd_approximate(o);
    else if (poles->parsed()) text = cmd_poles(o);
    else if (geo->parsed()) text = cmd_geometric(o);
    else if (logb->parsed()) text = cmd_log_branch(o);
    else text = cmd_generate(o);
    emit(o, out, text);
    return kExitOk;
  } catch (const InvalidArgument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace padepm::cli
