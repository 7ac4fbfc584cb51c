#include "padepm/pm2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "padepm/errors.hpp"

namespace padepm {

double FilterParams::digits_for(const PowerSeries& s) const {
  if (t) return *t;
  return s.declared_digits().value_or(kDefaultFilterDigits);
}

void FilterParams::validate() const {
  if (t && !(*t > 0.0)) throw InvalidArgument("t must be positive");
  if (!(origin_radius > 0.0 && origin_radius < 1.0)) {
    throw InvalidArgument("origin radius must lie in (0, 1)");
  }
  if (max_iterations && *max_iterations < 1) {
    throw InvalidArgument("max_iterations must be positive");
  }
}

std::string to_string(PassOutcome outcome) {
  switch (outcome) {
    case PassOutcome::kNoiseFiltered: return "noise_filtered";
    case PassOutcome::kRankDeficient: return "rank_deficient";
    case PassOutcome::kOriginPoles: return "origin_poles";
    case PassOutcome::kDMatrix: return "d_matrix";
    case PassOutcome::kAccepted: return "accepted";
    case PassOutcome::kZeroSeries: return "zero_series";
  }
  return "unknown";
}

int count_filtered(std::span<const double> sigma, double t) {
  if (sigma.empty()) return 0;
  if (sigma[0] == 0.0) return static_cast<int>(sigma.size()) - 1;
  const double cut = std::pow(10.0, -t) * sigma[0];
  return static_cast<int>(
      std::count_if(sigma.begin(), sigma.end(), [cut](double s) { return s < cut; }));
}

std::vector<Complex> reduced_poles(const CMatrix& combined,
                                   const numerics::SvdResult& svd) {
  const auto l = combined.cols() - 1;
  if (l < 1) throw InvalidArgument("reduced pencil needs l >= 1");
  if (svd.vh.rows() != combined.cols() || combined.rows() < l) {
    throw InvalidArgument("SVD does not match the Hankel matrix");
  }
  const CMatrix signal = svd.vh.topRows(l);
  auto poles = numerics::eigenvalues(
      numerics::qr_solve(signal.rightCols(l), signal.leftCols(l)));
  sort_poles(poles);
  return poles;
}

namespace {

PoleResidueForm head_only(const PowerSeries& s, const Conformation& conf) {
  PoleResidueForm prf;
  prf.head = head_of(s, conf);
  prf.shift = conf.k < 0 ? 0 : conf.k + 1;
  return prf;
}

CMatrix vandermonde(const std::vector<Complex>& poles, int rows) {
  CMatrix d(rows, static_cast<Eigen::Index>(poles.size()));
  for (std::size_t j = 0; j < poles.size(); ++j) {
    const Complex inv = 1.0 / poles[j];
    Complex power{1.0};
    for (int i = 0; i < rows; ++i) {
      d(i, static_cast<Eigen::Index>(j)) = power;
      power *= inv;
    }
  }
  return d;
}

}  // namespace

Pm2Result pm2(const PowerSeries& s, const Conformation& conf,
              const FilterParams& params) {
  params.validate();
  conf.require_terms(s);
  const double t = params.digits_for(s);
  const int m = conf.m;
  const int k = conf.k;
  const int max_passes = params.max_iterations.value_or(m + 1);
  const int residue_rows = conf.required_terms() - (k < 0 ? 0 : k + 1);

  Pm2Result result;
  auto& report = result.report;
  report.t = t;

  auto finish_head_only = [&](bool collapsed) {
    if (collapsed && k < 0) {
      throw Collapse("every pole was removed and k < 0 leaves no polynomial part");
    }
    result.prf = head_only(s, conf);
    result.rational = to_rational(result.prf);
    if (result.rational.numer.empty()) result.rational.numer = {Complex{}};
    report.final_l = 0;
    report.defect_estimate = 2 * m;
    report.collapsed = collapsed;
    return result;
  };

  if (m == 0) {
    report.final_l = 0;
    result.prf = head_only(s, conf);
    result.rational = to_rational(result.prf);
    return result;
  }

  int l = m;
  int passes = 0;
  while (true) {
    if (l == 0) return finish_head_only(/*collapsed=*/true);
    if (++passes > max_passes) {
      throw NonTerminating("PM2 exceeded " + std::to_string(max_passes) +
                           " passes");
    }

    IterationRecord rec;
    rec.l_before = l;
    const Conformation working{m, k, l};
    const CMatrix c = build_combined(s, working);
    const auto dec = numerics::svd(c);
    // sigma_{l+1} belongs to the denominator's null direction; only the
    // leading l values speak to the defect.
    const std::size_t signal = std::min<std::size_t>(dec.sigma.size(), l);
    rec.singular_values = dec.sigma;

    if (dec.sigma.front() == 0.0) {
      rec.outcome = PassOutcome::kZeroSeries;
      report.iterations.push_back(std::move(rec));
      return finish_head_only(/*collapsed=*/false);
    }

    if (l > 1) {
      const int ns = count_filtered(std::span(dec.sigma).first(signal), t);
      if (ns > 0) {
        rec.n_s_removed = ns;
        rec.outcome = PassOutcome::kNoiseFiltered;
        report.iterations.push_back(std::move(rec));
        l = std::max(1, l - ns);
        continue;
      }
    }

    std::vector<Complex> eig;
    try {
      eig = reduced_poles(c, dec);
    } catch (const RankDeficient&) {
      rec.outcome = PassOutcome::kRankDeficient;
      report.iterations.push_back(std::move(rec));
      --l;
      continue;
    }

    std::vector<Complex> kept;
    int dropped = 0;
    for (const auto& p : eig) {
      if (std::abs(p) <= params.origin_radius) {
        report.origin_poles_removed.push_back(p);
        ++dropped;
      } else {
        kept.push_back(p);
      }
    }
    if (dropped > 0) {
      rec.outcome = PassOutcome::kOriginPoles;
      report.iterations.push_back(std::move(rec));
      l -= params.batch_origin_removal ? dropped : 1;
      continue;
    }

    const auto dsig = numerics::singular_values(vandermonde(kept, residue_rows));
    if (dsig.back() < std::pow(10.0, -t) * dsig.front()) {
      rec.outcome = PassOutcome::kDMatrix;
      report.iterations.push_back(std::move(rec));
      ++report.d_matrix_reductions;
      --l;
      continue;
    }

    std::vector<Complex> weights;
    try {
      weights = pm1_residues(s, kept, conf, /*use_all_rows=*/true);
    } catch (const NumericalError&) {
      // SingularVandermonde or DuplicatePole slipping past the 10^-t test
      // when t exceeds the working precision.
      rec.outcome = PassOutcome::kDMatrix;
      report.iterations.push_back(std::move(rec));
      ++report.d_matrix_reductions;
      --l;
      continue;
    }
    rec.outcome = PassOutcome::kAccepted;
    report.iterations.push_back(std::move(rec));

    result.prf = head_only(s, conf);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      result.prf.terms.push_back({kept[j], weights[j]});
    }
    result.rational = to_rational(result.prf);
    report.final_l = l;
    report.defect_estimate = 2 * (m - l);
    return result;
  }
}

}  // namespace padepm
