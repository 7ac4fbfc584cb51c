#include "padepm/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "padepm/errors.hpp"
#include "padepm/numerics.hpp"

namespace padepm {

std::vector<Complex> PoleResidueForm::poles() const {
  std::vector<Complex> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.pole);
  return out;
}

std::vector<Complex> PoleResidueForm::weights() const {
  std::vector<Complex> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.weight);
  return out;
}

namespace {

bool pole_less(Complex a, Complex b) {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (ma != mb) return ma < mb;
  return std::arg(a) < std::arg(b);
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void poly_add_shifted(Coeffs& acc, const Coeffs& p, int shift) {
  const std::size_t need = p.size() + static_cast<std::size_t>(shift);
  if (acc.size() < need) acc.resize(need);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

// 1 - z/p, or -z for a pole at the origin (the p-scaled form p - z).
Coeffs pole_factor(Complex p) {
  if (p == Complex{}) return {Complex{}, Complex{-1.0}};
  return {Complex{1.0}, -1.0 / p};
}

}  // namespace

void sort_poles(std::vector<Complex>& poles) {
  std::stable_sort(poles.begin(), poles.end(), pole_less);
}

void sort_terms(std::vector<PoleTerm>& terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const PoleTerm& a, const PoleTerm& b) {
                     return pole_less(a.pole, b.pole);
                   });
}

CMatrix build_combined(const PowerSeries& s, const Conformation& conf) {
  conf.require_terms(s);
  if (conf.m < 1 || conf.l < 1 || conf.l > conf.m) {
    throw InvalidArgument("Hankel blocks need 1 <= l <= m");
  }
  const int rows = 2 * conf.m - conf.l;
  const int cols = conf.l + 1;
  CMatrix c(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) c(i, j) = s.at_or_zero(conf.k + 1 + i + j);
  }
  return c;
}

HankelBlocks build_blocks(const PowerSeries& s, const Conformation& conf) {
  const CMatrix c = build_combined(s, conf);
  const auto l = c.cols() - 1;
  return {c.leftCols(l), c.rightCols(l)};
}

std::vector<Complex> pm1_poles(const HankelBlocks& blocks, double rank_tol) {
  if (blocks.c1.rows() != blocks.c2.rows() ||
      blocks.c1.cols() != blocks.c2.cols()) {
    throw InvalidArgument("C1 and C2 must have identical dimensions");
  }
  auto poles = numerics::eigenvalues(numerics::qr_solve(blocks.c2, blocks.c1, rank_tol));
  sort_poles(poles);
  return poles;
}

std::vector<Complex> pm1_residues(const PowerSeries& s,
                                  const std::vector<Complex>& poles,
                                  const Conformation& conf, bool use_all_rows,
                                  double rank_tol) {
  conf.require_terms(s);
  if (poles.empty()) throw InvalidArgument("no poles to fit");
  const int n = conf.required_terms();
  const int offset = conf.k < 0 ? 0 : conf.k + 1;
  const int available = n - offset;
  const int npoles = static_cast<int>(poles.size());
  const int rows = use_all_rows ? available : npoles;
  if (rows < npoles || rows > available) {
    throw InsufficientCoefficients("residue system needs " +
                                   std::to_string(npoles) + " rows, have " +
                                   std::to_string(available));
  }

  for (int i = 0; i < npoles; ++i) {
    for (int j = 0; j < i; ++j) {
      const double scale = std::max(std::abs(poles[i]), std::abs(poles[j]));
      if (std::abs(poles[i] - poles[j]) <= 1e-12 * scale) {
        throw DuplicatePole("coincident poles; multiplicity > 1 unsupported");
      }
    }
  }

  CMatrix d(rows, npoles);
  for (int j = 0; j < npoles; ++j) {
    const Complex inv = poles[j] == Complex{}
                            ? Complex{std::numeric_limits<double>::infinity()}
                            : 1.0 / poles[j];
    Complex power{1.0};
    for (int i = 0; i < rows; ++i) {
      d(i, j) = power;
      if (i + 1 < rows) power *= inv;
    }
  }
  if (!d.allFinite()) {
    throw SingularVandermonde("Vandermonde matrix overflows (pole at or near 0)");
  }

  CMatrix rhs(rows, 1);
  for (int i = 0; i < rows; ++i) rhs(i, 0) = s[offset + i];

  CMatrix e;
  try {
    e = numerics::qr_solve(d, rhs, rank_tol);
  } catch (const RankDeficient&) {
    throw SingularVandermonde("Vandermonde matrix is numerically singular");
  }
  return {e.data(), e.data() + e.size()};
}

RationalApproximant to_rational(const PoleResidueForm& prf) {
  const auto& terms = prf.terms;
  Coeffs q{Complex{1.0}};
  for (const auto& t : terms) q = poly_mul(q, pole_factor(t.pole));

  // sum_j w_j prod_{i != j} f_i; a pole at the origin contributes nothing.
  Coeffs tail{Complex{}};
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (terms[j].pole == Complex{}) continue;
    Coeffs partial{terms[j].weight};
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i != j) partial = poly_mul(partial, pole_factor(terms[i].pole));
    }
    poly_add_shifted(tail, partial, 0);
  }

  Coeffs numer;
  if (!prf.head.empty()) numer = poly_mul(prf.head, q);
  poly_add_shifted(numer, tail, prf.shift);
  if (!prf.head.empty()) {
    // Degree bookkeeping: k + l + 1 coefficients.
    numer.resize(prf.head.size() + terms.size());
  } else if (!terms.empty()) {
    numer.resize(terms.size());
  }

  if (q[0] == Complex{}) {
    const auto big = *std::max_element(q.begin(), q.end(), [](Complex x, Complex y) {
      return std::abs(x) < std::abs(y);
    });
    for (auto& b : q) b /= big;
    for (auto& a : numer) a /= big;
  }
  return {std::move(numer), std::move(q)};
}

Coeffs head_of(const PowerSeries& s, const Conformation& conf) {
  if (conf.k < 0) return {};
  conf.require_terms(s);
  return {s.coeffs().begin(), s.coeffs().begin() + conf.k + 1};
}

PencilResult pm1(const PowerSeries& s, const Conformation& conf,
                 double rank_tol) {
  conf.require_terms(s);
  if (conf.l != conf.m) {
    throw InvalidArgument("PM1 uses the full pencil, l must equal m");
  }
  PoleResidueForm prf;
  prf.head = head_of(s, conf);
  prf.shift = conf.k < 0 ? 0 : conf.k + 1;
  if (conf.m > 0) {
    const auto poles = pm1_poles(build_blocks(s, conf), rank_tol);
    const auto weights =
        pm1_residues(s, poles, conf, /*use_all_rows=*/false, rank_tol);
    for (std::size_t j = 0; j < poles.size(); ++j) {
      prf.terms.push_back({poles[j], weights[j]});
    }
  }
  auto rational = to_rational(prf);
  return {std::move(prf), std::move(rational)};
}

}  // namespace padepm
