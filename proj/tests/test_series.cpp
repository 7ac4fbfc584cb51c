#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "padepm/errors.hpp"
#include "padepm/series.hpp"

using namespace padepm;

TEST_CASE("power series invariants") {
  CHECK_THROWS_AS(PowerSeries(Coeffs{}), InvalidArgument);
  CHECK_THROWS_AS(PowerSeries(Coeffs{Complex{NAN, 0}}), InvalidArgument);
  CHECK_THROWS_AS(PowerSeries(Coeffs{1.0}, 0.0), InvalidArgument);
  CHECK_THROWS_AS(PowerSeries(Coeffs{1.0}, -3.0), InvalidArgument);

  const PowerSeries s(Coeffs{1.0, 2.0});
  CHECK(s.accurate_digits() == doctest::Approx(15.0));
  CHECK_FALSE(s.declared_digits().has_value());
  CHECK(s.at_or_zero(-1) == Complex{});
  CHECK(s.at_or_zero(1) == Complex{2.0});
  CHECK(PowerSeries(Coeffs{1.0}, 6.0).accurate_digits() == doctest::Approx(6.0));
}

TEST_CASE("eval_truncated") {
  CHECK(eval_truncated(PowerSeries({1.0, 0.0, 1.0}), 0.0) == Complex{1.0});
  CHECK(std::abs(eval_truncated(PowerSeries({1.0, 1.0, 1.0}), 0.5) - 1.75) < 1e-15);
  CHECK(std::abs(eval_truncated(gen_log_series(41), 0.3) - std::log(0.9)) < 1e-12);

  SUBCASE("linear in the coefficients") {
    oracle::Gen g(11);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = g.integer(1, 12);
      Coeffs a, b, mix;
      const Complex alpha = g.polar(0.1, 3), beta = g.polar(0.1, 3);
      for (int i = 0; i < n; ++i) {
        a.push_back(g.polar(0, 2));
        b.push_back(g.polar(0, 2));
        mix.push_back(alpha * a.back() + beta * b.back());
      }
      const Complex z = g.polar(0, 1);
      const Complex lhs = eval_truncated(PowerSeries(mix), z);
      const Complex rhs = alpha * eval_truncated(PowerSeries(a), z) +
                          beta * eval_truncated(PowerSeries(b), z);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (1 + std::abs(rhs)));
      CHECK(std::abs(eval_truncated(PowerSeries(a), z) - oracle::poly_eval(a, z)) <
            1e-12);
    }
  }
}

TEST_CASE("noisy geometric generator") {
  NoiseRng r0(3);
  const auto exact = gen_geometric_noisy(4, 0.0, r0);
  CHECK(exact.coeffs() == Coeffs{1.0, 1.0, 1.0, 1.0});
  CHECK_FALSE(exact.declared_digits().has_value());

  for (int n : {1, 7, 33}) {
    NoiseRng r(5);
    const auto s = gen_geometric_noisy(n, 0.0, r);
    for (const auto& c : s.coeffs()) CHECK(c == Complex{1.0});
  }

  NoiseRng r7(7);
  const auto s6 = gen_geometric_noisy(20, 1e-6, r7);
  CHECK(s6.size() == 20);
  CHECK(s6.accurate_digits() == doctest::Approx(6.0));
  for (const auto& c : s6.coeffs()) {
    CHECK(std::abs(c.real() - 1.0) <= 1e-6);
    CHECK(c.imag() == 0.0);
  }

  // E|r| = 1/2 for r uniform on [-1, 1]; averaged over many seeds.
  double mean = 0.0;
  int count = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    NoiseRng r(seed);
    const auto s = gen_geometric_noisy(20, 1e-3, r);
    for (const auto& c : s.coeffs()) {
      mean += std::abs(c.real() - 1.0);
      ++count;
    }
  }
  mean /= count;
  CHECK(mean > 0.25e-3);
  CHECK(mean < 1e-3);
  CHECK(mean == doctest::Approx(0.5e-3).epsilon(0.05));

  NoiseRng a(7), b(7);
  CHECK(gen_geometric_noisy(20, 1e-3, a).coeffs() ==
        gen_geometric_noisy(20, 1e-3, b).coeffs());

  CHECK_THROWS_AS(gen_geometric_noisy(0, 1e-3, a), InvalidArgument);
  CHECK_THROWS_AS(gen_geometric_noisy(5, -1.0, a), InvalidArgument);
}

TEST_CASE("rng draws and seed derivation") {
  NoiseRng r(42);
  double lo = 1, hi = -1;
  for (int i = 0; i < 10000; ++i) {
    const double u = r.symmetric_uniform();
    REQUIRE(u >= -1.0);
    REQUIRE(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo < -0.99);
  CHECK(hi > 0.99);

  // The draw is a fixed function of the raw 64-bit engine output.
  std::mt19937_64 eng(42);
  NoiseRng r2(42);
  for (int i = 0; i < 5; ++i) {
    const double expected = 2.0 * (static_cast<double>(eng() >> 11) * 0x1.0p-53) - 1.0;
    CHECK(r2.symmetric_uniform() == expected);
  }

  CHECK(NoiseRng::derive_seed(1, 0, 0) == NoiseRng::derive_seed(1, 0, 0));
  CHECK(NoiseRng::derive_seed(1, 0, 1) != NoiseRng::derive_seed(1, 1, 0));
  CHECK(NoiseRng::derive_seed(1, 2, 3) != NoiseRng::derive_seed(2, 2, 3));
}

TEST_CASE("log series") {
  const auto s1 = gen_log_series(1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].real() == doctest::Approx(std::log(1.2)));

  const auto s3 = gen_log_series(3);
  CHECK(std::abs(s3[1] - Complex{-1.0 / 1.2}) < 1e-15);
  CHECK(std::abs(s3[2] - Complex{-1.0 / (2 * 1.44)}) < 1e-15);

  const auto s41 = gen_log_series(41);
  for (int k = 0; k < 41; ++k) {
    CHECK(std::abs(s41[k].real() - oracle::log_taylor(k)) <=
          1e-14 * std::abs(oracle::log_taylor(k)));
  }

  // Partial sums approach log(0.7) at z = 0.5 as n grows.
  double prev = INFINITY;
  for (int n : {2, 4, 8, 16, 32}) {
    const double err = std::abs(eval_truncated(gen_log_series(n), 0.5) - std::log(0.7));
    CHECK(err < prev);
    prev = err;
  }
  CHECK(std::abs(eval_truncated(gen_log_series(80), 0.5) - std::log(0.7)) < 1e-13);
  CHECK_THROWS_AS(gen_log_series(0), InvalidArgument);
}

TEST_CASE("series from poles") {
  const std::vector<Complex> one{1.0};
  CHECK(gen_from_poles(one, one, 4).coeffs() == Coeffs{1.0, 1.0, 1.0, 1.0});

  const std::vector<Complex> two{2.0};
  const auto s = gen_from_poles(two, one, 3);
  CHECK(std::abs(s[1] - 0.5) < 1e-15);
  CHECK(std::abs(s[2] - 0.25) < 1e-15);

  const std::vector<Complex> poles{2.0, -1.0}, weights{1.0, 3.0};
  const Coeffs expected{4.0, -2.5, 3.25, -2.875};
  const auto s4 = gen_from_poles(poles, weights, 4);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(s4[i] - expected[i]) < 1e-14);

  const std::vector<Complex> with_zero{0.0};
  CHECK_THROWS_AS(gen_from_poles(with_zero, one, 3), ZeroPole);
  const std::vector<Complex> dup{1.0, 1.0};
  CHECK_THROWS_AS(gen_from_poles(dup, weights, 3), InvalidArgument);
  CHECK_THROWS_AS(gen_from_poles(poles, one, 3), InvalidArgument);

  SUBCASE("matches direct expansion of random cases") {
    oracle::Gen g(99);
    for (int trial = 0; trial < 30; ++trial) {
      const auto pc = oracle::random_poles(g, g.integer(1, 6));
      const int n = g.integer(1, 16);
      const auto ref = oracle::series_of(pc, n);
      const auto got = gen_from_poles(pc.poles, pc.weights, n);
      for (int i = 0; i < n; ++i) {
        CHECK(std::abs(got[i] - ref[i]) <= 1e-12 * (1 + std::abs(ref[i])));
      }
    }
  }
}

TEST_CASE("quadratic test series") {
  CHECK(gen_quadratic_eps(0.0).coeffs() == Coeffs{1.0, 0.0, 1.0});
  CHECK(gen_quadratic_eps(1e-6).coeffs() == Coeffs{1.0, 1e-6, 1.0});
  CHECK(gen_quadratic_eps(-0.5).coeffs() == Coeffs{1.0, -0.5, 1.0});
}
