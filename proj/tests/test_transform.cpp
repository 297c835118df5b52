#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "vilenkin/analysis.hpp"
#include "vilenkin/transform.hpp"

using namespace vilenkin;

namespace {

GridFunction1D random_1d(const VilenkinBase& b, std::uint64_t seed) {
  return GridFunction1D(b, oracle::random_values(b.size(), seed));
}

GridFunction2D random_2d(const VilenkinBase& b, std::uint64_t seed) {
  return GridFunction2D(b, oracle::random_values(b.size() * b.size(), seed));
}

}  // namespace

TEST_CASE("rademacher and psi") {
  const auto b = VilenkinBase::parse("2,3,4");
  const auto r = oracle::radices_of(b);
  CHECK(rademacher(0, GroupPoint{{1, 0, 0}}, b) == Complex(-1.0, 0.0));
  CHECK(rademacher(1, GroupPoint{{1, 0, 3}}, b) == Complex(1.0, 0.0));
  CHECK(rademacher(2, GroupPoint{{0, 0, 1}}, b) == Complex(0.0, 1.0));
  for (Index x = 0; x < b.size(); ++x) {
    CHECK(vilenkin_psi(0, x, b) == Complex(1.0, 0.0));
    for (std::size_t k = 0; k < 3; ++k) {
      const auto p = index_to_digits(x, b);
      CHECK(std::abs(rademacher(k, p, b)) == doctest::Approx(1.0));
      CHECK(std::abs(vilenkin_psi(b.scale(k), p, b) - rademacher(k, p, b)) < 1e-15);
    }
    for (Index n = 0; n < b.size(); ++n) {
      REQUIRE(std::abs(vilenkin_psi(n, x, b) - oracle::psi(n, x, r)) < 1e-14);
    }
  }
}

TEST_CASE("psi is a character") {
  const auto b = VilenkinBase::parse("3,5,2,4,7");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Index> pick(0, b.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const Index n = pick(rng), x = pick(rng), y = pick(rng);
    CHECK(std::abs(vilenkin_psi(n, index_add(x, y, b), b) - vilenkin_psi(n, x, b) * vilenkin_psi(n, y, b)) <
          1e-13);
  }
}

TEST_CASE("orthonormality on small bases") {
  for (const char* spec : {"2x6", "3,4", "2,3,4"}) {
    const auto b = VilenkinBase::parse(spec);
    const Index m = b.size();
    for (Index a = 0; a < m; ++a) {
      const auto pa = character(a, b);
      for (Index c = 0; c < m; ++c) {
        const auto pc = character(c, b);
        Complex s = 0.0;
        for (Index x = 0; x < m; ++x) s += pa(x) * std::conj(pc(x));
        s /= static_cast<double>(m);
        REQUIRE(std::abs(s - (a == c ? 1.0 : 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("fast transform agrees with the digit-level oracle") {
  for (const char* spec : {"2x6", "3x4", "2,3,4", "5,2,3"}) {
    const auto b = VilenkinBase::parse(spec);
    const auto f = random_1d(b, 11);
    const auto expected = oracle::dft({f.values().begin(), f.values().end()}, oracle::radices_of(b));
    CHECK(oracle::max_abs(forward_1d(f).values(), expected) < 1e-12);
    CHECK(oracle::max_abs(naive_1d(f).values(), expected) < 1e-12);
    CHECK(oracle::max_abs(inverse_1d(forward_1d(f)).values(), f.values()) < 1e-12);
  }
}

TEST_CASE("delta spectra and constants") {
  const auto b = VilenkinBase::parse("2,3,4");
  const auto s = forward_1d(character(5, b));
  for (Index n = 0; n < b.size(); ++n) CHECK(std::abs(s(n) - (n == 5 ? 1.0 : 0.0)) < 1e-13);

  GridFunction1D c(b);
  for (auto& v : c.values()) v = {2.5, -1.0};
  const auto sc = forward_1d(c);
  CHECK(std::abs(sc(0) - Complex(2.5, -1.0)) < 1e-14);
  for (Index n = 1; n < b.size(); ++n) CHECK(std::abs(sc(n)) < 1e-14);

  const auto s2 = forward_2d(outer(character(3, b), character(7, b)));
  for (Index i = 0; i < b.size(); ++i) {
    for (Index j = 0; j < b.size(); ++j) {
      REQUIRE(std::abs(s2(i, j) - ((i == 3 && j == 7) ? 1.0 : 0.0)) < 1e-13);
    }
  }
}

TEST_CASE("2D transform is separable and invertible") {
  for (const char* spec : {"2x4", "3,2,3", "2,3,4"}) {
    const auto b = VilenkinBase::parse(spec);
    const auto g = random_1d(b, 1);
    const auto h = random_1d(b, 2);
    const auto gs = forward_1d(g);
    const auto hs = forward_1d(h);
    const auto s = forward_2d(outer(g, h));
    double err = 0.0;
    for (Index i = 0; i < b.size(); ++i) {
      for (Index j = 0; j < b.size(); ++j) err = std::max(err, std::abs(s(i, j) - gs(i) * hs(j)));
    }
    CHECK(err < 1e-12);

    const auto f = random_2d(b, 5);
    const auto fs = forward_2d(f);
    CHECK(oracle::max_abs(fs.values(), naive_2d(f).values()) < 1e-12);
    CHECK(oracle::max_abs(inverse_2d(fs).values(), f.values()) < 1e-12);
    double lhs = 0.0, rhs = 0.0;
    for (auto v : f.values()) lhs += std::norm(v);
    for (auto v : fs.values()) rhs += std::norm(v);
    CHECK(lhs / static_cast<double>(f.size()) == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("Dirichlet kernels") {
  const auto b = VilenkinBase::parse("2,3,2,4");
  const auto r = oracle::radices_of(b);
  const auto d1 = dirichlet_kernel(1, b);
  for (auto v : d1.values()) CHECK(std::abs(v - 1.0) < 1e-14);
  for (Index n = 1; n <= b.size(); n += 5) {
    const auto d = dirichlet_kernel(n, b);
    for (Index x = 0; x < b.size(); ++x) {
      Complex s = 0.0;
      for (Index k = 0; k < n; ++k) s += oracle::psi(k, x, r);
      REQUIRE(std::abs(d(x) - s) < 1e-11);
    }
  }
  for (std::size_t k = 0; k <= b.resolution(); ++k) {
    const auto d = dirichlet_kernel(b.scale(k), b);
    for (Index x = 0; x < b.size(); ++x) {
      const double expected = x % b.scale(k) == 0 ? static_cast<double>(b.scale(k)) : 0.0;
      REQUIRE(std::abs(d(x) - expected) < 1e-10);
    }
    CHECK(lp_norm(d, 1.0) == doctest::Approx(1.0));
    CHECK(lp_norm(d, kInfinity) == doctest::Approx(static_cast<double>(b.scale(k))));
  }
  CHECK_THROWS_AS(dirichlet_kernel(0, b), std::out_of_range);
  CHECK_THROWS_AS(dirichlet_kernel(b.size() + 1, b), std::out_of_range);
}

TEST_CASE("partial sums") {
  const auto b = VilenkinBase::parse("2,3,2");
  const auto f = random_2d(b, 9);
  const auto s = forward_2d(f);
  const Index side = b.size();
  CHECK(oracle::max_abs(partial_sum_2d(s, side, side).values(), f.values()) < 1e-12);
  const auto s11 = partial_sum_2d(s, 1, 1);
  for (auto v : s11.values()) CHECK(std::abs(v - s(0, 0)) < 1e-13);
  CHECK_THROWS_AS(partial_sum_2d(s, side + 1, 1), std::out_of_range);

  // S_{M_k, M_l} is the average over level-(k, l) cells.
  for (std::size_t k = 0; k <= b.resolution(); ++k) {
    for (std::size_t l = 0; l <= b.resolution(); ++l) {
      const Index mk = b.scale(k), ml = b.scale(l);
      const auto p = partial_sum_2d(s, mk, ml);
      for (Index x = 0; x < side; ++x) {
        for (Index y = 0; y < side; ++y) {
          Complex avg = 0.0;
          Index count = 0;
          for (Index a = x % mk; a < side; a += mk) {
            for (Index c = y % ml; c < side; c += ml) {
              avg += f(a, c);
              ++count;
            }
          }
          avg /= static_cast<double>(count);
          REQUIRE(std::abs(p(x, y) - avg) < 1e-12);
        }
      }
    }
  }

  // Marginal sums truncate one variable only.
  const auto mx = partial_sum_marginal(s, Axis::x, 4);
  const auto my = partial_sum_marginal(f, Axis::y, 4);
  Spectrum2D tx(b), ty(b);
  for (Index i = 0; i < side; ++i) {
    for (Index j = 0; j < side; ++j) {
      if (i < 4) tx(i, j) = s(i, j);
      if (j < 4) ty(i, j) = s(i, j);
    }
  }
  CHECK(oracle::max_abs(mx.values(), inverse_2d(tx).values()) < 1e-12);
  CHECK(oracle::max_abs(my.values(), inverse_2d(ty).values()) < 1e-12);
}
