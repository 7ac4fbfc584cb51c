#include "padepm/classify.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "padepm/errors.hpp"

namespace padepm {

double ClassifyThresholds::system_tol_for(double eps) const {
  if (system_tol) return *system_tol;
  return std::max(1e3 * eps, 1e-2);
}

RootTaxonomy classify_roots(const std::vector<Complex>& poles,
                            const std::vector<Complex>& zeros,
                            const std::vector<Complex>& expected_system,
                            double eps, const ClassifyThresholds& th) {
  if (!(eps > 0.0)) throw InvalidArgument("classify_roots needs eps > 0");
  RootTaxonomy tax;
  std::vector<bool> pole_used(poles.size(), false);
  std::vector<bool> zero_used(zeros.size(), false);

  const double sys_tol = th.system_tol_for(eps);
  for (const Complex& e : expected_system) {
    std::size_t best = poles.size();
    double best_d = sys_tol;
    for (std::size_t i = 0; i < poles.size(); ++i) {
      if (pole_used[i]) continue;
      const double d = std::abs(poles[i] - e);
      if (d <= best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best < poles.size()) {
      pole_used[best] = true;
      tax.system_poles.push_back(poles[best]);
    }
  }

  // Greedy pairing: shortest pole/zero distance first.
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (pole_used[i]) continue;
    for (std::size_t j = 0; j < zeros.size(); ++j) {
      const double d = std::abs(poles[i] - zeros[j]);
      if (d <= th.doublet_tol) pairs.emplace_back(d, i, j);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [d, i, j] : pairs) {
    if (pole_used[i] || zero_used[j]) continue;
    pole_used[i] = true;
    zero_used[j] = true;
    tax.doublets.push_back({poles[i], zeros[j]});
  }

  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (pole_used[i]) continue;
    if (std::abs(poles[i]) >= th.far_tol) {
      tax.far_poles.push_back(poles[i]);
    } else {
      tax.unclassified_poles.push_back(poles[i]);
    }
  }
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    if (zero_used[j]) continue;
    if (std::abs(zeros[j]) >= th.far_tol) {
      tax.far_zeros.push_back(zeros[j]);
    } else {
      tax.unclassified_zeros.push_back(zeros[j]);
    }
  }
  return tax;
}

namespace {

nlohmann::json roots_json(const std::vector<Complex>& rs) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back({r.real(), r.imag()});
  return arr;
}

}  // namespace

nlohmann::json to_json(const RootTaxonomy& tax) {
  nlohmann::json j;
  j["counts"] = {
      {"system_poles", tax.system_poles.size()},
      {"doublets", tax.doublets.size()},
      {"far_poles", tax.far_poles.size()},
      {"far_zeros", tax.far_zeros.size()},
      {"unclassified", tax.unclassified()},
  };
  j["system_poles"] = roots_json(tax.system_poles);
  auto dbl = nlohmann::json::array();
  for (const auto& d : tax.doublets) {
    dbl.push_back({{"pole", {d.pole.real(), d.pole.imag()}},
                   {"zero", {d.zero.real(), d.zero.imag()}}});
  }
  j["doublets"] = dbl;
  j["far_poles"] = roots_json(tax.far_poles);
  j["far_zeros"] = roots_json(tax.far_zeros);
  j["unclassified_poles"] = roots_json(tax.unclassified_poles);
  j["unclassified_zeros"] = roots_json(tax.unclassified_zeros);
  return j;
}

}  // namespace padepm
