#include "padepm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "padepm/errors.hpp"
#include "padepm/io.hpp"

namespace padepm {

Method parse_method(const std::string& name) {
  if (name == "dm") return Method::kDm;
  if (name == "svd") return Method::kSvd;
  if (name == "pm1") return Method::kPm1;
  if (name == "pm2") return Method::kPm2;
  throw InvalidArgument("unknown method: " + name);
}

std::string to_string(Method method) {
  switch (method) {
    case Method::kDm: return "dm";
    case Method::kSvd: return "svd";
    case Method::kPm1: return "pm1";
    case Method::kPm2: return "pm2";
  }
  return "?";
}

int Approximation::final_l() const {
  if (report) return report->final_l;
  if (prf) return static_cast<int>(prf->terms.size());
  return conformation.m;
}

std::vector<Complex> Approximation::poles() const {
  if (prf) return prf->poles();
  return roots.poles;
}

Complex Approximation::operator()(Complex z) const {
  if (prf) return eval_pole_residue(*prf, z);
  return eval_rational(rational, z);
}

namespace {

PolesAndZeros roots_of(const RationalApproximant& ra) {
  PolesAndZeros pz;
  pz.poles = numerics::polynomial_roots(ra.denom);
  try {
    pz.zeros = numerics::polynomial_roots(ra.numer);
  } catch (const AllZero&) {
    pz.zeros.clear();
  }
  return pz;
}

}  // namespace

Approximation approximate(const PowerSeries& s, Method method,
                          const Conformation& conf, const FilterParams& params) {
  Approximation a;
  a.method = method;
  a.conformation = conf;
  switch (method) {
    case Method::kDm:
      a.rational = dm(s, conf);
      break;
    case Method::kSvd:
      a.rational = svd_pade(s, conf);
      break;
    case Method::kPm1: {
      auto r = pm1(s, conf);
      a.prf = std::move(r.prf);
      a.rational = std::move(r.rational);
      break;
    }
    case Method::kPm2: {
      auto r = pm2(s, conf, params);
      a.prf = std::move(r.prf);
      a.rational = std::move(r.rational);
      a.report = std::move(r.report);
      break;
    }
  }
  a.roots = roots_of(a.rational);
  return a;
}

nlohmann::json to_json(const SpuriousPoleReport& report) {
  nlohmann::json j;
  auto iters = nlohmann::json::array();
  for (const auto& it : report.iterations) {
    iters.push_back({{"l_before", it.l_before},
                     {"singular_values", it.singular_values},
                     {"n_s_removed", it.n_s_removed},
                     {"outcome", to_string(it.outcome)}});
  }
  j["iterations"] = iters;
  j["origin_poles_removed"] = io::complex_list_to_json(report.origin_poles_removed);
  j["d_matrix_reductions"] = report.d_matrix_reductions;
  j["final_l"] = report.final_l;
  j["defect_estimate"] = report.defect_estimate;
  j["collapsed"] = report.collapsed;
  j["t"] = report.t;
  return j;
}

nlohmann::json to_json(const Approximation& a) {
  nlohmann::json j;
  j["method"] = to_string(a.method);
  j["conformation"] = {{"m", a.conformation.m},
                       {"k", a.conformation.k},
                       {"final_l", a.final_l()}};
  j["numer"] = io::complex_list_to_json(a.rational.numer);
  j["denom"] = io::complex_list_to_json(a.rational.denom);
  j["poles"] = io::complex_list_to_json(a.poles());
  j["zeros"] = io::complex_list_to_json(a.roots.zeros);
  j["residues"] = a.prf ? io::complex_list_to_json(a.prf->weights())
                        : nlohmann::json::array();
  j["report"] = a.report ? to_json(*a.report) : nlohmann::json(nullptr);
  return j;
}

void ExperimentConfig::validate() const {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (samples < 1) throw InvalidArgument("samples must be >= 1");
  if (sweep_points < 2) throw InvalidArgument("sweep points must be >= 2");
  for (double e : eps_list) {
    if (!(e >= 0.0) || !std::isfinite(e)) {
      throw InvalidArgument("eps values must be finite and >= 0");
    }
  }
  if (t && !(*t > 0.0)) throw InvalidArgument("t must be > 0");
  if (!(origin_radius >= 0.0)) throw InvalidArgument("origin radius must be >= 0");
  if (!(mesh_spacing > 0.0 && mesh_spacing <= 1.0)) {
    throw InvalidArgument("mesh spacing must lie in (0, 1]");
  }
}

namespace {

Complex geometric(Complex z) { return 1.0 / (1.0 - z); }

RangeStats range_stats(const ErrorSweep& sw) {
  RangeStats st;
  std::vector<double> finite;
  finite.reserve(sw.errors.size());
  for (std::size_t i = 0; i < sw.errors.size(); ++i) {
    if (!sw.flagged[i]) finite.push_back(sw.errors[i]);
  }
  st.flagged = sw.flagged_count();
  st.max_error = sw.finite_max();
  if (!finite.empty()) {
    const auto mid = finite.begin() + static_cast<std::ptrdiff_t>(finite.size() / 2);
    std::nth_element(finite.begin(), mid, finite.end());
    double med = *mid;
    if (finite.size() % 2 == 0) {
      med = 0.5 * (med + *std::max_element(finite.begin(), mid));
    }
    st.median_error = med;
  }
  for (std::size_t i = 0; i < sw.errors.size(); ++i) {
    if (sw.flagged[i]) continue;
    const double x = sw.points[i].real();
    if (x >= 1.0 && x <= 1.2) continue;
    if (sw.errors[i] > 100.0 * st.median_error) ++st.spikes;
  }
  return st;
}

FilterParams params_for(const ExperimentConfig& cfg, double eps) {
  FilterParams p;
  p.origin_radius = cfg.origin_radius;
  if (cfg.t) {
    p.t = cfg.t;
  } else if (eps > 0.0) {
    p.t = -std::log10(eps);
  }
  return p;
}

}  // namespace

SampleRow evaluate_geometric_sample(const Approximation& a, double eps,
                                    const ExperimentConfig& cfg) {
  SampleRow row;
  row.eps = eps;
  row.ok = true;
  const auto poles = a.poles();
  row.retained_poles = static_cast<int>(poles.size());
  row.final_l = a.final_l();
  row.system_pole_error = std::numeric_limits<double>::infinity();
  for (const auto& p : poles) {
    row.system_pole_error = std::min(row.system_pole_error, std::abs(p - 1.0));
  }
  const auto tax = classify_roots(poles, a.roots.zeros, {Complex{1.0}},
                                  std::max(eps, 1e-300), cfg.thresholds);
  row.system_poles = static_cast<int>(tax.system_poles.size());
  row.doublets = static_cast<int>(tax.doublets.size());
  row.far_poles = static_cast<int>(tax.far_poles.size());
  row.far_zeros = static_cast<int>(tax.far_zeros.size());
  row.unclassified = tax.unclassified();

  const ComplexFn f = [&a](Complex z) { return a(z); };
  const int np = cfg.sweep_points;
  // Samples already run in parallel, so sweeps stay serial here.
  row.inner = range_stats(
      error_sweep_serial(f, geometric, on_real_axis(linspace(-0.9, 0.9, np))));
  row.edge = range_stats(
      error_sweep_serial(f, geometric, on_real_axis(linspace(0.9, 0.99, np))));
  row.outer = range_stats(
      error_sweep_serial(f, geometric, on_real_axis(logspace(1.1, 100.0, np))));
  return row;
}

namespace {

SampleRow run_sample(const ExperimentConfig& cfg, const Conformation& conf,
                     int eps_index, int sample) {
  const double eps = cfg.eps_list[static_cast<std::size_t>(eps_index)];
  const auto seed = NoiseRng::derive_seed(cfg.seed, static_cast<std::uint64_t>(eps_index),
                                          static_cast<std::uint64_t>(sample));
  SampleRow row;
  try {
    NoiseRng rng(seed);
    const auto s = gen_geometric_noisy(cfg.n, eps, rng);
    const auto a = approximate(s, cfg.method, conf, params_for(cfg, eps));
    row = evaluate_geometric_sample(a, eps, cfg);
  } catch (const Error& e) {
    row = SampleRow{};
    row.ok = false;
    row.failure = e.what();
  }
  row.eps_index = eps_index;
  row.eps = eps;
  row.sample = sample;
  row.seed = seed;
  return row;
}

}  // namespace

GeometricNoiseReport run_geometric_noise(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.eps_list.empty()) throw InvalidArgument("eps list must not be empty");
  const auto conf = Conformation::make(cfg.m, cfg.k);
  if (cfg.n < conf.required_terms()) {
    throw InsufficientCoefficients("n is smaller than 2m+k+1");
  }

  GeometricNoiseReport report;
  report.config = cfg;
  const int n_eps = static_cast<int>(cfg.eps_list.size());
  const int total = n_eps * cfg.samples;
  report.rows.resize(static_cast<std::size_t>(total));

  if (cfg.execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < total; ++idx) {
      report.rows[idx] = run_sample(cfg, conf, idx / cfg.samples, idx % cfg.samples);
    }
  } else {
    for (int idx = 0; idx < total; ++idx) {
      report.rows[idx] = run_sample(cfg, conf, idx / cfg.samples, idx % cfg.samples);
    }
  }

  for (int e = 0; e < n_eps; ++e) {
    EpsSummary sum;
    sum.eps = cfg.eps_list[static_cast<std::size_t>(e)];
    sum.samples = cfg.samples;
    int ok = 0;
    for (int smp = 0; smp < cfg.samples; ++smp) {
      const auto& r = report.rows[static_cast<std::size_t>(e * cfg.samples + smp)];
      if (!r.ok) {
        ++sum.failures;
        continue;
      }
      ++ok;
      sum.mean_system_pole_error += r.system_pole_error;
      sum.mean_retained_poles += r.retained_poles;
      sum.mean_doublets += r.doublets;
      sum.mean_inner_max_error += r.inner.max_error;
      sum.mean_edge_max_error += r.edge.max_error;
      sum.mean_outer_max_error += r.outer.max_error;
      if (r.outer.spikes > 0) ++sum.samples_with_outer_spikes;
    }
    if (ok > 0) {
      sum.mean_system_pole_error /= ok;
      sum.mean_retained_poles /= ok;
      sum.mean_doublets /= ok;
      sum.mean_inner_max_error /= ok;
      sum.mean_edge_max_error /= ok;
      sum.mean_outer_max_error /= ok;
    }
    report.summary.push_back(sum);
  }
  return report;
}

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

void range_csv(std::ostringstream& os, const RangeStats& r) {
  os << ',' << fmt(r.max_error) << ',' << fmt(r.median_error) << ','
     << r.flagged << ',' << r.spikes;
}

nlohmann::json range_json(const RangeStats& r) {
  return {{"max_error", r.max_error},
          {"median_error", r.median_error},
          {"flagged", r.flagged},
          {"spikes", r.spikes}};
}

// JSON has no infinity; unbounded errors are written as null.
nlohmann::json num(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

}  // namespace

std::string to_csv(const GeometricNoiseReport& report) {
  std::ostringstream os;
  os << "eps_index,eps,sample,seed,ok,failure,retained_poles,final_l,"
        "system_pole_error,system_poles,doublets,far_poles,far_zeros,"
        "unclassified";
  for (const char* r : {"inner", "edge", "outer"}) {
    os << ',' << r << "_max_error," << r << "_median_error," << r
       << "_flagged," << r << "_spikes";
  }
  os << '\n';
  for (const auto& row : report.rows) {
    os << row.eps_index << ',' << fmt(row.eps) << ',' << row.sample << ','
       << row.seed << ',' << (row.ok ? 1 : 0) << ',' << csv_quote(row.failure)
       << ',' << row.retained_poles << ',' << row.final_l << ','
       << fmt(row.system_pole_error) << ',' << row.system_poles << ','
       << row.doublets << ',' << row.far_poles << ',' << row.far_zeros << ','
       << row.unclassified;
    range_csv(os, row.inner);
    range_csv(os, row.edge);
    range_csv(os, row.outer);
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const GeometricNoiseReport& report) {
  const auto& cfg = report.config;
  nlohmann::json j;
  j["config"] = {{"n", cfg.n},
                 {"m", cfg.m},
                 {"k", cfg.k},
                 {"eps", cfg.eps_list},
                 {"samples", cfg.samples},
                 {"seed", cfg.seed},
                 {"t", cfg.t ? nlohmann::json(*cfg.t) : nlohmann::json(nullptr)},
                 {"method", to_string(cfg.method)},
                 {"origin_radius", cfg.origin_radius}};
  auto rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json jr = {{"eps_index", r.eps_index},
                         {"eps", r.eps},
                         {"sample", r.sample},
                         {"seed", r.seed},
                         {"ok", r.ok}};
    if (!r.ok) {
      jr["failure"] = r.failure;
    } else {
      jr["retained_poles"] = r.retained_poles;
      jr["final_l"] = r.final_l;
      jr["system_pole_error"] = num(r.system_pole_error);
      jr["taxonomy"] = {{"system_poles", r.system_poles},
                        {"doublets", r.doublets},
                        {"far_poles", r.far_poles},
                        {"far_zeros", r.far_zeros},
                        {"unclassified", r.unclassified}};
      jr["inner"] = range_json(r.inner);
      jr["edge"] = range_json(r.edge);
      jr["outer"] = range_json(r.outer);
    }
    rows.push_back(jr);
  }
  j["rows"] = rows;
  auto summary = nlohmann::json::array();
  for (const auto& s : report.summary) {
    summary.push_back({{"eps", s.eps},
                       {"samples", s.samples},
                       {"failures", s.failures},
                       {"mean_system_pole_error", num(s.mean_system_pole_error)},
                       {"mean_retained_poles", s.mean_retained_poles},
                       {"mean_doublets", s.mean_doublets},
                       {"mean_inner_max_error", s.mean_inner_max_error},
                       {"mean_edge_max_error", s.mean_edge_max_error},
                       {"mean_outer_max_error", s.mean_outer_max_error},
                       {"samples_with_outer_spikes", s.samples_with_outer_spikes}});
  }
  j["summary"] = summary;
  return j;
}

bool on_log_branch_cut(Complex p) {
  return p.real() >= 1.1 && std::abs(p.imag()) <= 0.05;
}

PencilResult pm1_pruned(const PowerSeries& s, const Conformation& conf,
                        bool (*keep)(Complex), double rank_tol) {
  conf.require_terms(s);
  PoleResidueForm prf;
  prf.head = head_of(s, conf);
  prf.shift = conf.k < 0 ? 0 : conf.k + 1;
  if (conf.m > 0) {
    auto poles = pm1_poles(build_blocks(s, conf), rank_tol);
    std::erase_if(poles, [keep](Complex p) { return !keep(p); });
    if (!poles.empty()) {
      const Conformation reduced{conf.m, conf.k, static_cast<int>(poles.size())};
      const auto w =
          pm1_residues(s, poles, reduced, /*use_all_rows=*/false, rank_tol);
      for (std::size_t j = 0; j < poles.size(); ++j) {
        prf.terms.push_back({poles[j], w[j]});
      }
    }
  }
  auto rational = to_rational(prf);
  return {std::move(prf), std::move(rational)};
}

namespace {

Complex log_target(Complex z) { return std::log(1.2 - z); }

LogBranchEntry log_entry(Approximation a, const std::vector<Complex>& mesh,
                         const std::vector<Complex>& unit_interval,
                         Execution exec) {
  LogBranchEntry e;
  const ComplexFn f = [&a](Complex z) { return a(z); };
  const auto sweep = exec == Execution::kParallel ? error_sweep : error_sweep_serial;
  e.max_mesh_error = sweep(f, log_target, mesh).max_error;
  e.max_error_01 = sweep(f, log_target, unit_interval).max_error;
  for (const auto& p : a.poles()) {
    if (!on_log_branch_cut(p)) ++e.off_cut_poles;
  }
  e.approx = std::move(a);
  return e;
}

}  // namespace

LogBranchReport run_log_branch(const ExperimentConfig& cfg) {
  cfg.validate();
  LogBranchReport rep;
  rep.n = cfg.n;
  rep.t = cfg.t.value_or(kDefaultFilterDigits);
  rep.mesh_spacing = cfg.mesh_spacing;
  const auto mesh = unit_disk_mesh(cfg.mesh_spacing);
  rep.mesh_points = static_cast<int>(mesh.size());
  const auto unit_interval = on_real_axis(linspace(0.0, 1.0, cfg.sweep_points));

  const auto s = gen_log_series(cfg.n);
  const int half = (cfg.n - 1) / 2;
  const auto square = Conformation::make(half, 0);
  const auto diag = Conformation::make(half, cfg.n - 1 - 2 * half);

  rep.dm = log_entry(approximate(s, Method::kDm, square), mesh, unit_interval,
                     cfg.execution);
  Approximation raw;
  raw.method = Method::kPm1;
  raw.conformation = square;
  auto full = pm1(s, square, /*rank_tol=*/0.0);
  raw.prf = std::move(full.prf);
  raw.rational = std::move(full.rational);
  raw.roots = roots_of(raw.rational);
  rep.pm1 = log_entry(std::move(raw), mesh, unit_interval, cfg.execution);

  Approximation pruned;
  pruned.method = Method::kPm1;
  pruned.conformation = square;
  auto pr = pm1_pruned(s, square, on_log_branch_cut, /*rank_tol=*/0.0);
  pruned.prf = std::move(pr.prf);
  pruned.rational = std::move(pr.rational);
  pruned.roots = roots_of(pruned.rational);
  rep.pm1_pruned = log_entry(std::move(pruned), mesh, unit_interval, cfg.execution);

  FilterParams params;
  params.t = rep.t;
  params.origin_radius = cfg.origin_radius;
  rep.pm2 = log_entry(approximate(s, Method::kPm2, diag, params), mesh,
                      unit_interval, cfg.execution);
  return rep;
}

nlohmann::json to_json(const LogBranchReport& report) {
  auto entry = [](const LogBranchEntry& e) {
    nlohmann::json j = to_json(e.approx);
    j["max_mesh_error"] = num(e.max_mesh_error);
    j["max_error_01"] = num(e.max_error_01);
    j["off_cut_poles"] = e.off_cut_poles;
    return j;
  };
  return {{"n", report.n},
          {"t", report.t},
          {"mesh_points", report.mesh_points},
          {"mesh_spacing", report.mesh_spacing},
          {"dm", entry(report.dm)},
          {"pm1", entry(report.pm1)},
          {"pm1_pruned", entry(report.pm1_pruned)},
          {"pm2", entry(report.pm2)}};
}

}  // namespace padepm
