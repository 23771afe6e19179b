#include <doctest.h>

#include <cmath>

#include "hypermat/forms.hpp"
#include "hypermat/tensor.hpp"
#include "hypermat/verify.hpp"

using namespace hypermat;

namespace {

Tensor<double> k2() { return from_coo(2, {2, 2}, {{{0, 1}, 1.0}, {{1, 0}, 1.0}}); }

Tensor<double> all_ones(int r, Index n) {
  Tensor<double> t(Dims(r, n));
  t.data().setOnes();
  return t;
}

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("linear form") {
  const auto j = all_ones(3, 2);
  const Vec ones = Vec::Ones(2);
  CHECK(linear_form(j, {ones, ones, ones}) == doctest::Approx(8.0));

  CHECK(linear_form(k2(), {vec2(1, 0), vec2(0, 1)}) == doctest::Approx(1.0));

  const auto r1 = rank_one<double>({vec2(1, 2), vec2(3, 4)});
  CHECK(linear_form(r1, {vec2(1, 0), vec2(1, 1)}) == doctest::Approx(7.0));

  CHECK_THROWS_AS(linear_form(k2(), {vec2(1, 0)}), Error);
  CHECK_THROWS_AS(linear_form(k2(), {Vec::Ones(3), Vec::Ones(2)}), Error);
}

TEST_CASE("linear form is multilinear") {
  Rng rng(5);
  Tensor<double> a({2, 3, 2});
  for (Index f = 0; f < a.size(); ++f) a[f] = rng.symmetric();
  std::vector<Vec> xs;
  for (int k = 0; k < 3; ++k) {
    Vec v(a.extent(k));
    for (Index i = 0; i < v.size(); ++i) v[i] = rng.symmetric();
    xs.push_back(v);
  }
  Vec u(3), w(3);
  for (Index i = 0; i < 3; ++i) {
    u[i] = rng.symmetric();
    w[i] = rng.symmetric();
  }
  const double alpha = 0.7, beta = -1.3;
  auto with_mid = [&](const Vec& mid) {
    auto ys = xs;
    ys[1] = mid;
    return linear_form(a, ys);
  };
  CHECK(with_mid(alpha * u + beta * w) ==
        doctest::Approx(alpha * with_mid(u) + beta * with_mid(w)).epsilon(1e-12));
}

TEST_CASE("polynomial form") {
  CHECK(poly_form(k2(), vec2(1, 1)) == doctest::Approx(2.0));
  CHECK(poly_form(k2(), vec2(1, 2)) == doctest::Approx(4.0));

  // constant vector on the all-ones tensor: n^{r - r/p}
  const int r = 3;
  const Index n = 2;
  const double p = 4.0;
  Vec x = Vec::Constant(n, std::pow(double(n), -1.0 / p));
  CHECK(poly_form(all_ones(r, n), x) ==
        doctest::Approx(std::pow(double(n), r - double(r) / p)).epsilon(1e-13));

  CHECK_THROWS_AS(poly_form(Tensor<double>({2, 3}), vec2(1, 1)), Error);
}

TEST_CASE("poly_form equals linear_form on the diagonal") {
  Rng rng(17);
  const auto a = verify::random_symmetric(3, 3, rng, false);
  Vec x(3);
  for (Index i = 0; i < 3; ++i) x[i] = rng.symmetric();
  CHECK(poly_form(a, x) == doctest::Approx(linear_form(a, {x, x, x})).epsilon(1e-13));
}

TEST_CASE("poly gradient") {
  CHECK(poly_gradient(k2(), vec2(1, 2))[0] == doctest::Approx(4.0));
  CHECK(poly_gradient(k2(), vec2(1, 2))[1] == doctest::Approx(2.0));

  const Vec zero = poly_gradient(Tensor<double>({2, 2}), vec2(1, 1));
  CHECK(zero.cwiseAbs().maxCoeff() == 0.0);

  const Vec g = poly_gradient(all_ones(3, 2), vec2(1, 1));
  CHECK(g[0] == doctest::Approx(12.0));
  CHECK(g[1] == doctest::Approx(12.0));

  // refuses non-symmetric cubical input instead of symmetrizing
  const auto ns = from_coo(2, {2, 2}, {{{0, 1}, 1.0}});
  CHECK_THROWS_AS(poly_gradient(ns, vec2(1, 1)), Error);
}

TEST_CASE("gradient matches central finite differences") {
  Rng rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const int r = 2 + (trial % 2);
    const Index n = 2 + static_cast<Index>(rng.below(4));
    const auto a = verify::random_symmetric(r, n, rng, false);
    Vec x(n);
    for (Index i = 0; i < n; ++i) x[i] = rng.symmetric();
    const Vec g = poly_gradient(a, x);
    const double h = 1e-6;
    for (Index k = 0; k < n; ++k) {
      Vec xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      const double fd = (poly_form(a, xp) - poly_form(a, xm)) / (2 * h);
      CHECK(std::abs(fd - g[k]) <= 1e-5 * std::max(1.0, std::abs(g[k])));
    }
  }
}

TEST_CASE("euler residual") {
  CHECK(euler_residual(k2(), vec2(1, 2)) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(euler_residual(Tensor<double>({2, 2, 2}), vec2(1, 1)) == 0.0);

  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = verify::random_symmetric(3, 4, rng, false);
    Vec x(4);
    for (Index i = 0; i < 4; ++i) x[i] = rng.symmetric();
    const double res = euler_residual(a, x);
    CHECK(res <= 1e-12 * (1.0 + std::abs(poly_form(a, x))));
  }
}
