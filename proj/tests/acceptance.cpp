// Acceptance suite: runs every release criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypermat/bounds.hpp"
#include "hypermat/hypergraph.hpp"
#include "hypermat/oracle.hpp"
#include "hypermat/spectral.hpp"
#include "hypermat/structure.hpp"
#include "hypermat/verify.hpp"

using namespace hypermat;

namespace {

struct Checker {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      detail = msg;
    }
  }
  void require_close(double got, double want, double rel_tol, const std::string& what) {
    const double gap = std::abs(got - want) / std::max(1.0, std::abs(want));
    if (gap > rel_tol && ok) {
      ok = false;
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want << " (rel gap " << gap << ")";
      detail = os.str();
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. star spectral values and the two product bounds
void criterion_star_values(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  for (Index n = 2; n <= 9; ++n) {
    const auto a = adjacency_tensor(gen_star(n));
    const double want = std::sqrt(double(n));
    const auto res = spectral_p_norm(a, 2.0);
    c.require(std::abs(res.value - want) <= 1e-8 * want,
              "star " + std::to_string(n) + " norm off");
    c.require(std::abs(upper_schur(a) - double(n)) <= 1e-12 * n,
              "schur bound should be n");
    c.require(std::abs(upper_main(a) - want) <= 1e-12 * want,
              "support product bound should be sqrt(n)");
  }
  c.require(seconds_since(t0) < 1.0, "stars exceeded 1 s");
}

// 2. eta equals the norm for nonnegative symmetric tensors, p >= r
void criterion_eta_equals_norm(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  int converged = 0, total = 0;
  for (int r : {2, 3})
    for (Index n : {3, 4, 5})
      for (int pi = 0; pi < 3; ++pi)
        for (int i = 0; i < 25; ++i) {
          const double p = std::vector<double>{double(r), double(r + 1), double(2 * r)}[pi];
          Rng rng(100000 + 10000 * r + 1000 * n + 100 * pi + i);
          const auto a = verify::random_symmetric(r, n, rng, true, 0.85);
          SolverOptions<double> opts;
          opts.seed = 7000 + i;
          const auto eta = eta_p(a, p, opts);
          const auto nrm = spectral_p_norm(a, p, opts);
          ++total;
          if (eta.converged && nrm.converged) {
            ++converged;
            c.require_close(eta.value, nrm.value, 1e-6, "eta vs norm");
          }
        }
  c.require(double(converged) >= 0.95 * double(total), "less than 95% of runs converged");
  c.require(seconds_since(t0) < 120.0, "eta-vs-norm exceeded 2 min");
}

// 3. symmetrant scaling: equality for nonnegative, upper bound for mixed
void criterion_symmetrant_scaling(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> ps{2.0, 2.5, 3.0, 4.0};
  for (int mixed = 0; mixed <= 1; ++mixed)
    for (int i = 0; i < 25; ++i) {
      Rng rng(200000 + 500 * mixed + i);
      const int r = 2 + i % 2;
      Dims dims;
      for (int k = 0; k < r; ++k) dims.push_back(1 + static_cast<Index>(rng.below(4)));
      const auto a = verify::random_tensor(dims, rng, mixed == 0, 0.9);
      const double p = ps[i % ps.size()];
      const auto [sym, part] = symmetrant(a);
      SolverOptions<double> opts;
      opts.seed = 8000 + i;
      const double eta = eta_p(sym, p, opts).value;
      const double target = factorial(r) / std::pow(double(r), double(r) / p) *
                            spectral_p_norm(a, p, opts).value;
      if (mixed == 0)
        c.require_close(eta, target, 1e-6, "symmetrant equality (nonnegative)");
      else
        c.require(eta <= target + 1e-6 * std::max(1.0, target),
                  "symmetrant upper bound (sign-mixed)");
    }
  c.require(seconds_since(t0) < 120.0, "symmetrant scaling exceeded 2 min");
}

// 4. block-diagonal combination formula
void criterion_component_formula(Checker& c) {
  for (int i = 0; i < 12; ++i) {
    Rng rng(300000 + i);
    const int r = 2 + i % 2;
    const int parts = 2 + i % 2;
    const double p = std::vector<double>{r + 0.5, double(r + 1), double(2 * r)}[i % 3];
    std::vector<Tensor<double>> comps;
    std::vector<double> values;
    SolverOptions<double> opts;
    opts.seed = 9000 + i;
    for (int k = 0; k < parts; ++k) {
      comps.push_back(verify::random_positive_symmetric(r, 2 + static_cast<Index>(rng.below(2)), rng));
      values.push_back(eta_p(comps.back(), p, opts).value);
    }
    const double direct = eta_p(verify::block_diag(comps), p, opts).value;
    c.require_close(direct, combine_components(values, p, r), 1e-6, "component formula");
  }
}

// 5. regular instances match n^{-r/p} * (entry sum)
void criterion_regular_value(Checker& c) {
  auto check = [&](const Tensor<double>& a, const std::string& name) {
    const int r = a.order();
    for (double p : {double(r), double(r + 1), double(2 * r)}) {
      const double want = std::pow(double(a.extent(0)), -double(r) / p) * entry_sum(a);
      c.require_close(eta_p(a, p).value, want, 1e-6, name + " regular value");
    }
  };
  for (Index n : {2, 3, 4}) check(gen_all_ones(2, n), "all-ones r2");
  for (Index n : {2, 3}) check(gen_all_ones(3, n), "all-ones r3");
  for (Index n : {3, 4, 5, 6}) check(adjacency_tensor(gen_cycle(n)), "cycle");
  c.require_close(eta_p(gen_all_ones(3, 2), 4.0).value, std::pow(2.0, 9.0 / 4.0), 1e-6,
                  "all-ones(3,2) at p=4 should be 2^{9/4}");
}

// 6. bound sandwich and dominance on 200 random instances
void criterion_sandwich(Checker& c) {
  for (int i = 0; i < 200; ++i) {
    Rng rng(400000 + i);
    const int r = 2 + i % 2;
    Dims dims;
    for (int k = 0; k < r; ++k) dims.push_back(2 + static_cast<Index>(rng.below(3)));
    const auto a = verify::random_tensor(dims, rng, i % 2 == 0, 0.85);
    SolverOptions<double> opts;
    opts.seed = 10000 + i;
    const auto rep = bounds_report(a, double(r), true, opts);
    const double est = *rep.estimate;
    c.require(rep.max_lower <= est + 1e-8 * std::max(1.0, est), "a lower bound beats the estimate");
    c.require(est <= rep.min_upper + 1e-12 * std::max(1.0, rep.min_upper),
              "the estimate beats an upper bound");
    c.require(*rep.main_bound <= *rep.hlp + 1e-12 * std::max(1.0, *rep.hlp),
              "support product above the per-axis product");
  }
}

// 7. beta-stars: tight support bound, loose per-axis bound
void criterion_beta_star(Checker& c) {
  for (Index k = 1; k <= 5; ++k) {
    const auto g = gen_beta_star(3, k);
    const auto a = adjacency_tensor(g);
    const double want = 2.0 * std::cbrt(double(k));
    const auto rho = rho_nonnegative(a);
    c.require(rho.converged, "radius iteration did not converge");
    c.require_close(rho.value, want, 1e-6, "beta-star radius");
    c.require_close(bound_degree_product(g), want, 1e-6, "degree product should be tight");
    c.require_close(upper_hlp(a), 2.0 * double(k), 1e-12, "per-axis product should be 2k");
    c.require_close(upper_hlp(a) / bound_degree_product(g), std::pow(double(k), 2.0 / 3.0),
                    1e-6, "looseness factor should be k^{2/3}");
  }
}

// 8. monotonicity and the Lipschitz envelope over a p-grid
void criterion_monotone(Checker& c) {
  std::vector<double> ps;
  for (double p = 1.0; p <= 4.0 + 1e-9; p += 0.25) ps.push_back(p);
  for (int i = 0; i < 10; ++i) {
    Rng rng(500000 + i);
    const int r = 2 + i % 2;
    Dims dims;
    for (int k = 0; k < r; ++k) dims.push_back(2 + static_cast<Index>(rng.below(2)));
    const auto a = verify::random_tensor(dims, rng, i % 3 == 0, 0.9);
    SolverOptions<double> opts;
    opts.seed = 11000 + i;
    const auto curve = norm_p_curve(a, ps, opts);
    const double l1 = entrywise_norm(a, 1.0);
    const double total = double(a.size());
    for (size_t j = 0; j + 1 < curve.size(); ++j) {
      c.require(curve[j + 1].second >= curve[j].second - 1e-8, "norm curve not monotone");
      c.require(curve[j + 1].second - curve[j].second <=
                    0.25 * l1 * total * std::log(total) + 1e-9,
                "Lipschitz envelope violated");
    }

    const Index n = 2 + static_cast<Index>(rng.below(2));
    const auto sym = verify::random_symmetric(r, n, rng, i % 2 == 0, 1.0);
    const auto evals = verify::eta_curve(sym, ps, opts);
    for (size_t j = 0; j + 1 < evals.size(); ++j)
      c.require(evals[j + 1] >= evals[j] - 1e-8, "eta curve not monotone");
    const double floor1 =
        entrywise_norm(sym, kInf) * factorial(r) / std::pow(double(r), double(r));
    c.require(evals.front() >= floor1 - 1e-9, "p=1 eta report below its floor");
  }
}

// 9. gradient identities
void criterion_gradient(Checker& c) {
  for (int i = 0; i < 100; ++i) {
    Rng rng(600000 + i);
    const int r = 2 + i % 2;
    const Index n = 2 + static_cast<Index>(rng.below(4));
    const auto a = verify::random_symmetric(r, n, rng, false, 1.0);
    Vec x(n);
    for (Index k = 0; k < n; ++k) x[k] = rng.symmetric();
    const Vec g = poly_gradient(a, x);
    const double h = 1e-6;
    for (Index k = 0; k < n; ++k) {
      Vec xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      const double fd = (poly_form(a, xp) - poly_form(a, xm)) / (2 * h);
      c.require(std::abs(fd - g[k]) <= 1e-5 * std::max(1.0, std::abs(g[k])),
                "finite differences disagree with the gradient");
    }
    c.require(euler_residual(a, x) <= 1e-12 * (1.0 + std::abs(poly_form(a, x))),
              "euler identity residual too large");
  }
}

// 10. grid oracle and closed-form catalogue
void criterion_oracle(Checker& c) {
  const auto suite = verify::run_suite("oracle", 10, 12345);
  for (const auto& row : suite.rows)
    c.require(row.pass, "oracle check failed: " + row.quantity);
}

// 11. symmetrant maximizer block balance
void criterion_balance(Checker& c) {
  for (int i = 0; i < 20; ++i) {
    Rng rng(700000 + i);
    const int r = 2 + i % 2;
    Dims dims;
    for (int k = 0; k < r; ++k) dims.push_back(1 + static_cast<Index>(rng.below(3)));
    Tensor<double> a = verify::random_tensor(dims, rng, true, 1.0);
    a.data() += 0.05;
    const double p = std::vector<double>{2.0, 2.5, 3.0, 4.0}[i % 4];
    const auto [sym, part] = symmetrant(a);
    SolverOptions<double> opts;
    opts.seed = 12000 + i;
    const auto res = eta_p(sym, p, opts);
    const double target = std::pow(double(r), -1.0 / p);
    for (int b = 0; b < part.block_count(); ++b) {
      Vec blockv(static_cast<Index>(part.block(b).size()));
      for (size_t j = 0; j < part.block(b).size(); ++j)
        blockv[j] = res.witness.front()[part.block(b)[j]];
      c.require(std::abs(lp_norm(blockv, p) - target) <= 1e-6,
                "maximizer block norm away from r^{-1/p}");
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    std::string name;
    std::function<void(Checker&)> fn;
  };
  const std::vector<Entry> criteria = {
      {"star spectral values and bound comparison", criterion_star_values},
      {"eta equals norm for nonnegative symmetric tensors", criterion_eta_equals_norm},
      {"symmetrant scaling identity and upper bound", criterion_symmetrant_scaling},
      {"block-diagonal component combination", criterion_component_formula},
      {"regular instances match the closed value", criterion_regular_value},
      {"bound sandwich and dominance", criterion_sandwich},
      {"beta-star tightness and looseness factor", criterion_beta_star},
      {"monotonicity and Lipschitz envelope in p", criterion_monotone},
      {"gradient and Euler identities", criterion_gradient},
      {"oracle equivalence on the tiny catalogue", criterion_oracle},
      {"maximizer block balance on symmetrants", criterion_balance},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    criteria[i].fn(c);
    const double secs = seconds_since(t0);
    std::printf("%s  %2zu. %s (%.2f s)\n", c.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), secs);
    if (!c.ok) {
      std::printf("      %s\n", c.detail.c_str());
      ++failures;
    }
  }
  return failures;
}
