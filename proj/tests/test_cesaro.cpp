#include <doctest.h>

#include <stdexcept>

#include "oracle.hpp"
#include "vilenkin/analysis.hpp"
#include "vilenkin/cesaro.hpp"
#include "vilenkin/transform.hpp"

using namespace vilenkin;

TEST_CASE("Cesaro numbers") {
  for (double a : {-0.7, -0.3, 0.0, 0.5, 1.0, 2.5, -1.4}) {
    const auto t = cesaro_weights(a, 40);
    CHECK(t[0] == 1.0);
    CHECK(t.order() == a);
    CHECK(t.degree() == 40);
    for (std::size_t k = 1; k <= 40; ++k) {
      CAPTURE(a);
      CAPTURE(k);
      CHECK(t[k] == doctest::Approx(oracle::cesaro(a, k)).epsilon(1e-12));
      CHECK(t[k] == doctest::Approx(t[k - 1] * (a + k) / k).epsilon(1e-13));
    }
  }
  CHECK(cesaro_weights(0.5, 2)[2] == doctest::Approx(1.875));
  const auto minus_one = cesaro_weights(-1.0, 10);
  for (std::size_t k = 1; k <= 10; ++k) CHECK(minus_one[k] == 0.0);
  CHECK_THROWS_AS(cesaro_weights(-2.0, 5), std::domain_error);
  CHECK_THROWS_AS(cesaro_weights(-5.0, 5), std::domain_error);
  CHECK_THROWS_AS(cesaro_weights(std::nan(""), 5), std::domain_error);
}

TEST_CASE("negative orders give positive decreasing weights") {
  for (double a : {0.1, 0.3, 0.7, 0.95}) {
    const auto t = cesaro_weights(-a, 5000);
    for (std::size_t k = 1; k <= 5000; ++k) {
      REQUIRE(t[k] > 0.0);
      REQUIRE(t[k] < t[k - 1]);
    }
  }
}

TEST_CASE("weight identities") {
  for (double a : {-0.7, -0.3, 0.3, 0.7}) {
    const auto report = verify_weight_identities(cesaro_weights(a, 100000));
    CAPTURE(a);
    CHECK(report.max_sum_deviation < 1e-12);
    CHECK(report.max_difference_deviation < 1e-12);
    CHECK(report.min_growth_ratio > 0.0);
    // A_n^a / n^a tends to 1 / Gamma(a + 1)
    const double limit = 1.0 / std::tgamma(a + 1.0);
    CHECK(report.dyadic_ratios.back().second == doctest::Approx(limit).epsilon(1e-4));
  }
}

TEST_CASE("2D means against a pointwise weighted sum") {
  const auto b = VilenkinBase::parse("2,3,2");
  const Index side = b.size();
  const auto f = GridFunction2D(b, oracle::random_values(side * side, 21));
  const auto s = forward_2d(f);
  const double alpha = 0.3, beta = 0.6;
  for (Index n : {Index{0}, Index{3}, Index{7}, side - 1}) {
    for (Index m : {Index{1}, Index{5}}) {
      std::vector<Complex> coeff(side * side);
      for (Index i = 0; i <= n; ++i) {
        for (Index j = 0; j <= m; ++j) {
          coeff[i * side + j] = s(i, j) * oracle::cesaro(-alpha, n - i) * oracle::cesaro(-beta, m - j) /
                                (oracle::cesaro(-alpha, n) * oracle::cesaro(-beta, m));
        }
      }
      const auto expected = oracle::synthesize_2d(coeff, oracle::radices_of(b), side);
      const auto sigma = cesaro_mean_2d(s, CesaroMeanParams{alpha, beta, n, m});
      REQUIRE(oracle::max_abs(sigma.values(), expected) < 1e-12);
    }
  }
}

TEST_CASE("single coefficient propagation") {
  const auto b = VilenkinBase::parse("2,3,2,2");
  const Index a = 5, c = 9, n = 11, m = 20;
  const auto f = outer(character(a, b), character(c, b));
  const auto sigma = cesaro_mean_2d(forward_2d(f), CesaroMeanParams{0.4, 0.2, n, m});
  const double w = oracle::cesaro(-0.4, n - a) * oracle::cesaro(-0.2, m - c) /
                   (oracle::cesaro(-0.4, n) * oracle::cesaro(-0.2, m));
  for (std::size_t i = 0; i < f.size(); ++i) REQUIRE(std::abs(sigma.values()[i] - w * f.values()[i]) < 1e-12);
}

TEST_CASE("constants are reproduced exactly") {
  const auto b = VilenkinBase::parse("2x5");
  GridFunction2D f(b);
  for (auto& v : f.values()) v = {0.75, -2.0};
  const auto sigma = cesaro_mean_2d(forward_2d(f), CesaroMeanParams{0.3, 0.7, 13, 6});
  for (auto v : sigma.values()) REQUIRE(v == Complex(0.75, -2.0));

  GridFunction1D g(b);
  for (auto& v : g.values()) v = 3.0;
  const auto s1 = cesaro_mean_1d(forward_1d(g), 17, 0.5);
  for (auto v : s1.values()) REQUIRE(v == Complex(3.0));
}

TEST_CASE("order zero is a rectangular partial sum") {
  const auto b = VilenkinBase::parse("3,2,2");
  const auto f = GridFunction2D(b, oracle::random_values(b.size() * b.size(), 4));
  const auto s = forward_2d(f);
  for (Index n = 0; n < b.size(); n += 3) {
    const auto sigma = cesaro_mean_2d(s, n, n / 2, 0.0, 0.0);
    CHECK(oracle::max_abs(sigma.values(), partial_sum_2d(s, n + 1, n / 2 + 1).values()) < 1e-12);
  }
  const Index top = b.size() - 1;
  CHECK(oracle::max_abs(cesaro_mean_2d(s, top, top, 0.0, 0.0).values(), f.values()) < 1e-12);
}

TEST_CASE("linearity and translation covariance") {
  const auto b = VilenkinBase::parse("2,3,2");
  const Index side = b.size();
  const auto f = GridFunction2D(b, oracle::random_values(side * side, 1));
  const auto g = GridFunction2D(b, oracle::random_values(side * side, 2));
  const Complex a(0.5, 1.5), c(-2.0, 0.25);
  GridFunction2D h(b);
  for (std::size_t i = 0; i < h.size(); ++i) h.values()[i] = a * f.values()[i] + c * g.values()[i];
  const CesaroMeanParams params{0.3, 0.3, 7, 9};
  const auto sf = cesaro_mean_2d(forward_2d(f), params);
  const auto sg = cesaro_mean_2d(forward_2d(g), params);
  const auto sh = cesaro_mean_2d(forward_2d(h), params);
  for (std::size_t i = 0; i < h.size(); ++i) {
    REQUIRE(std::abs(sh.values()[i] - (a * sf.values()[i] + c * sg.values()[i])) < 1e-12);
  }
  for (Index u : {Index{1}, Index{5}}) {
    for (Index v : {Index{2}, Index{11}}) {
      const auto lhs = cesaro_mean_2d(forward_2d(translate(f, u, v)), params);
      const auto rhs = translate(sf, u, v);
      REQUIRE(oracle::max_abs(lhs.values(), rhs.values()) < 1e-12);
    }
  }
}

TEST_CASE("1D mean matches the 2D mean of f(x) 1(y)") {
  const auto b = VilenkinBase::parse("2,2,3");
  const auto g = GridFunction1D(b, oracle::random_values(b.size(), 8));
  GridFunction1D one(b);
  for (auto& v : one.values()) v = 1.0;
  const auto s1 = cesaro_mean_1d(forward_1d(g), 7, 0.4);
  const auto s2 = cesaro_mean_2d(forward_2d(outer(g, one)), CesaroMeanParams{0.4, 0.5, 7, 3});
  for (Index x = 0; x < b.size(); ++x) {
    for (Index y = 0; y < b.size(); ++y) REQUIRE(std::abs(s2(x, y) - s1(x)) < 1e-12);
  }
  const auto s0 = cesaro_mean_1d_order(forward_1d(g), 5, 0.0);
  Spectrum1D t(b);
  const auto gs = forward_1d(g);
  for (Index i = 0; i <= 5; ++i) t(i) = gs(i);
  CHECK(oracle::max_abs(s0.values(), inverse_1d(t).values()) < 1e-12);
}

TEST_CASE("mean argument validation") {
  const auto b = VilenkinBase::parse("2x3");
  const Spectrum2D s(b);
  CHECK_THROWS_AS(cesaro_mean_2d(s, CesaroMeanParams{0.0, 0.3, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(cesaro_mean_2d(s, CesaroMeanParams{0.3, 1.0, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(cesaro_mean_2d(s, CesaroMeanParams{0.3, 0.3, 8, 1}), std::out_of_range);
  CHECK_THROWS_AS(cesaro_mean_2d(s, CesaroMeanParams{0.3, 0.3, 1, 8}), std::out_of_range);
  CHECK_THROWS_AS(cesaro_mean_2d(s, 1, 1, -1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(cesaro_mean_1d(Spectrum1D(b), 3, 1.5), std::domain_error);
}
