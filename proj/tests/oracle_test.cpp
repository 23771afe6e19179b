#include <doctest.h>

#include <cmath>

#include "hypermat/hypergraph.hpp"
#include "hypermat/oracle.hpp"
#include "hypermat/spectral.hpp"

using namespace hypermat;

TEST_CASE("norm grid oracle on tiny instances") {
  const auto k2 = adjacency_tensor(gen_star(1));
  const auto r1 = grid_max_norm(k2, 2.0, 64);
  CHECK(r1.value == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(r1.value <= 1.0 + 1e-12);  // feasible-point evaluation

  const auto star2 = adjacency_tensor(gen_star(2));
  CHECK(grid_max_norm(star2, 2.0, 64).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-3));

  CHECK(grid_max_norm(gen_all_ones(3, 2), 3.0, 48).value == doctest::Approx(4.0).epsilon(1e-3));

  CHECK(grid_max_norm(Tensor<double>({2, 2}), 2.0).value == 0.0);
  CHECK_THROWS_AS(grid_max_norm(gen_all_ones(3, 3), 3.0), Error);  // 9 variables
}

TEST_CASE("eta grid oracle on tiny instances") {
  const auto k2 = adjacency_tensor(gen_star(1));
  CHECK(grid_max_eta(k2, 4.0, 64).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-3));
  CHECK(grid_max_eta(gen_all_ones(3, 2), 4.0, 64).value ==
        doctest::Approx(std::pow(2.0, 9.0 / 4.0)).epsilon(1e-3));
  CHECK(grid_max_eta(Tensor<double>({3, 3}), 2.0).value == 0.0);
  CHECK_THROWS_AS(grid_max_eta(gen_all_ones(2, 5), 2.0), Error);
}

TEST_CASE("grid oracle catches sign-dependent maxima") {
  // P(x) = x0^2 - 4 x0 x1 + x1^2 on the 2-sphere: the magnitude peak needs
  // opposite signs
  const auto a = from_coo(2, {2, 2},
                          {{{0, 0}, 1.0}, {{0, 1}, -2.0}, {{1, 0}, -2.0}, {{1, 1}, 1.0}});
  CHECK(grid_max_eta(a, 2.0, 64).value == doctest::Approx(3.0).epsilon(1e-3));
  CHECK(eta_p(a, 2.0).value == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("closed-form catalogue") {
  CHECK(closed_form("star(9)", 2.0) == doctest::Approx(3.0));
  CHECK(closed_form("all_ones(3,2)", 3.0) == doctest::Approx(4.0));
  CHECK(closed_form("beta_star(3,8)", 3.0) == doctest::Approx(4.0));
  CHECK_THROWS_AS(closed_form("star(9)", 3.0), Error);
  CHECK_THROWS_AS(closed_form("mystery(1)", 2.0), Error);

  Vec v(3);
  v << 1, 2, 2;
  CHECK(closed_form_single_fiber(v, 2.0) == doctest::Approx(3.0));

  Vec a(2), b(2);
  a << 1, 2;
  b << 1, 1;
  CHECK(closed_form_rank_one({a, b}, 2.0) == doctest::Approx(std::sqrt(10.0)));
}

TEST_CASE("oracle, optimizer and catalogue agree") {
  SolverOptions<double> opts;
  struct Row {
    Tensor<double> a;
    double p;
    double closed;
  };
  const std::vector<Row> rows = {
      {adjacency_tensor(gen_star(2)), 2.0, closed_form("star(2)", 2.0)},
      {adjacency_tensor(gen_star(3)), 2.0, closed_form("star(3)", 2.0)},
      {gen_all_ones(2, 3), 2.0, closed_form("all_ones(2,3)", 2.0)},
      {gen_all_ones(3, 2), 3.0, closed_form("all_ones(3,2)", 3.0)},
  };
  for (const auto& row : rows) {
    const double grid = grid_max_norm(row.a, row.p, 48).value;
    const double opt = spectral_p_norm(row.a, row.p, opts).value;
    CHECK(std::abs(grid - opt) <= 1e-3 * std::max(1.0, opt));
    CHECK(std::abs(opt - row.closed) <= 1e-6 * std::max(1.0, row.closed));
    CHECK(grid <= row.closed + 1e-9);  // oracle values are feasible
  }
}
