#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "padepm/errors.hpp"
#include "padepm/numerics.hpp"

using namespace padepm;
using namespace padepm::numerics;

namespace {

CMatrix random_matrix(oracle::Gen& g, int r, int c) {
  CMatrix a(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) a(i, j) = Complex(g.uniform(-1, 1), g.uniform(-1, 1));
  return a;
}

double max_abs(const CMatrix& a) { return a.cwiseAbs().maxCoeff(); }

bool same_multiset(std::vector<Complex> a, std::vector<Complex> b, double tol) {
  return oracle::max_matched_relative_error(std::move(a), std::move(b)) <= tol;
}

}  // namespace

TEST_CASE("svd examples") {
  CMatrix row(1, 2);
  row << 1.0, 0.0;
  const auto r = svd(row);
  REQUIRE(r.sigma.size() == 1);
  CHECK(r.sigma[0] == doctest::Approx(1.0));
  CHECK(std::abs(r.vh(1, 0)) < 1e-15);
  CHECK(std::abs(r.vh(1, 1)) == doctest::Approx(1.0));

  const auto id = svd(CMatrix::Identity(3, 3));
  for (double s : id.sigma) CHECK(s == doctest::Approx(1.0));

  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 3.0;
  const auto ds = svd(d).sigma;
  CHECK(ds[0] == doctest::Approx(3.0));
  CHECK(ds[1] == doctest::Approx(2.0));

  CMatrix bad = CMatrix::Identity(2, 2);
  bad(0, 1) = Complex(NAN, 0);
  CHECK_THROWS_AS(svd(bad), NonFinite);
  CHECK_THROWS_AS(svd(CMatrix(0, 0)), InvalidArgument);
}

TEST_CASE("svd reconstruction and unitarity on random matrices") {
  oracle::Gen g(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = g.integer(1, 30), cols = g.integer(1, 31);
    const CMatrix a = random_matrix(g, rows, cols);
    const auto r = svd(a);
    REQUIRE(std::is_sorted(r.sigma.rbegin(), r.sigma.rend()));
    for (double s : r.sigma) REQUIRE(s >= 0.0);
    CMatrix sig = CMatrix::Zero(rows, cols);
    for (std::size_t i = 0; i < r.sigma.size(); ++i) sig(i, i) = r.sigma[i];
    const CMatrix rec = r.u * sig * r.vh;
    CHECK(max_abs(a - rec) <= 1e-10 * r.sigma[0]);
    CHECK(max_abs(r.u.adjoint() * r.u - CMatrix::Identity(rows, rows)) <= 1e-10);
    CHECK(max_abs(r.vh * r.vh.adjoint() - CMatrix::Identity(cols, cols)) <= 1e-10);
    const auto sv = singular_values(a);
    for (std::size_t i = 0; i < sv.size(); ++i) CHECK(sv[i] == doctest::Approx(r.sigma[i]));
  }
  const auto z = svd(CMatrix::Zero(2, 3));
  CHECK(z.sigma[0] == 0.0);
}

TEST_CASE("eigenvalue examples") {
  const auto e0 = eigenvalues(CMatrix::Zero(1, 1));
  REQUIRE(e0.size() == 1);
  CHECK(e0[0] == Complex{});

  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 5.0;
  CHECK(same_multiset(eigenvalues(d), {2.0, 5.0}, 1e-14));

  CMatrix a(2, 2);
  a << 0.0, 1.0, -6.0, 5.0;
  CHECK(same_multiset(eigenvalues(a), {2.0, 3.0}, 1e-12));

  CHECK_THROWS_AS(eigenvalues(CMatrix::Zero(2, 3)), InvalidArgument);
}

TEST_CASE("eigenvalues: trace identity and similarity invariance") {
  oracle::Gen g(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = g.integer(1, 12);
    const CMatrix a = random_matrix(g, n, n);
    const auto ev = eigenvalues(a);
    REQUIRE(static_cast<int>(ev.size()) == n);
    Complex sum{};
    for (const auto& e : ev) sum += e;
    CHECK(std::abs(sum - a.trace()) <= 1e-8 * std::max(1.0, std::abs(a.trace())));

    CMatrix s = random_matrix(g, n, n) + 3.0 * CMatrix::Identity(n, n);
    const CMatrix sim = s * a * s.inverse();
    auto a1 = ev, a2 = eigenvalues(sim);
    // Absolute matching: eigenvalues near 0 make a relative test meaningless.
    for (auto& x : a1) x += 10.0;
    for (auto& x : a2) x += 10.0;
    CHECK(same_multiset(a1, a2, 1e-8));
  }
}

TEST_CASE("qr_solve examples") {
  const CMatrix i2 = CMatrix::Identity(2, 2);
  CHECK(max_abs(qr_solve(i2, i2) - i2) < 1e-15);

  CMatrix a(2, 1), b(2, 1);
  a << 1.0, 1.0;
  b << 1.0, 3.0;
  CHECK(std::abs(qr_solve(a, b)(0, 0) - 2.0) < 1e-14);

  CMatrix d(2, 2), rhs(2, 1);
  d << 2.0, 0.0, 0.0, 4.0;
  rhs << 2.0, 8.0;
  const CMatrix x = qr_solve(d, rhs);
  CHECK(std::abs(x(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(x(1, 0) - 2.0) < 1e-14);

  CMatrix sing(2, 2);
  sing << 1.0, 2.0, 2.0, 4.0;
  CHECK_THROWS_AS(qr_solve(sing, i2), RankDeficient);
  CHECK_THROWS_AS(qr_solve(CMatrix::Zero(2, 2), i2), RankDeficient);
  CHECK_THROWS_AS(qr_solve(CMatrix::Zero(1, 2), CMatrix::Zero(1, 1)), InvalidArgument);
  CHECK_THROWS_AS(qr_solve(i2, CMatrix::Zero(3, 1)), InvalidArgument);

  // Threshold is relative to the largest |R_jj|.
  CMatrix graded(2, 2);
  graded << 1.0, 0.0, 0.0, 1e-13;
  CHECK_NOTHROW(qr_solve(graded, i2));
  graded(1, 1) = 1e-15;
  CHECK_THROWS_AS(qr_solve(graded, i2), RankDeficient);
  CHECK_NOTHROW(qr_solve(graded, i2, 1e-16));
}

TEST_CASE("qr_solve recovers X0 from A X0") {
  oracle::Gen g(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int cols = g.integer(1, 10), rows = cols + g.integer(0, 10);
    const CMatrix a = random_matrix(g, rows, cols);
    const CMatrix x0 = random_matrix(g, cols, g.integer(1, 3));
    const CMatrix x = qr_solve(a, a * x0);
    CHECK(max_abs(x - x0) <= 1e-9 * max_abs(x0));
  }
}

TEST_CASE("qr_solve least squares matches normal equations") {
  oracle::Gen g(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int cols = g.integer(1, 6), rows = cols + g.integer(1, 8);
    const CMatrix a = random_matrix(g, rows, cols);
    const CMatrix b = random_matrix(g, rows, 1);
    const CMatrix normal = (a.adjoint() * a).inverse() * (a.adjoint() * b);
    CHECK(max_abs(qr_solve(a, b) - normal) <= 1e-9 * (1 + max_abs(normal)));
  }
}

TEST_CASE("polynomial roots") {
  const auto r1 = polynomial_roots({-1.0, 1.0});
  REQUIRE(r1.size() == 1);
  CHECK(std::abs(r1[0] - 1.0) < 1e-15);
  CHECK(polynomial_roots({1.0, 0.0}).empty());
  CHECK(polynomial_roots({5.0}).empty());
  CHECK(same_multiset(polynomial_roots({6.0, -5.0, 1.0}), {2.0, 3.0}, 1e-12));
  CHECK_THROWS_AS(polynomial_roots({0.0, 0.0}), AllZero);
  CHECK_THROWS_AS(polynomial_roots({}), AllZero);

  // z^2 = z * z: a root at the origin survives the companion construction.
  const auto r0 = polynomial_roots({0.0, 0.0, 1.0});
  REQUIRE(r0.size() == 2);
  for (const auto& r : r0) CHECK(std::abs(r) < 1e-15);

  oracle::Gen g(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = g.integer(1, 8);
    std::vector<Complex> roots;
    for (int i = 0; i < n; ++i) roots.push_back(g.polar(0.5, 2.0));
    // Monic expansion prod (z - r_i) computed independently.
    std::vector<Complex> p{1.0};
    for (const auto& r : roots) {
      std::vector<Complex> next(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        next[i + 1] += p[i];
        next[i] -= r * p[i];
      }
      p = next;
    }
    auto got = polynomial_roots(Coeffs(p.begin(), p.end()));
    // Clustered random roots are ill-conditioned; a loose bound suffices.
    CHECK(same_multiset(got, roots, 1e-5));
  }
}
