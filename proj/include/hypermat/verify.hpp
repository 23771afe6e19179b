#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "hypermat/bounds.hpp"
#include "hypermat/hypergraph.hpp"
#include "hypermat/oracle.hpp"
#include "hypermat/spectral.hpp"
#include "hypermat/structure.hpp"
#include "hypermat/tensor.hpp"

namespace hypermat::verify {

struct TrialRow {
  int trial;
  std::uint64_t seed;
  std::string quantity;
  double lhs;
  double rhs;
  double gap;
  bool pass;
};

struct SuiteResult {
  std::string suite;
  std::vector<TrialRow> rows;

  int failures() const {
    int n = 0;
    for (const auto& r : rows)
      if (!r.pass) ++n;
    return n;
  }
  bool pass() const { return failures() == 0; }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "th2",   "mth1",     "pf1",    "pf0",     "monotone",
      "gradient", "sandwich", "oracle", "balance", "regular"};
  return names;
}

// ---------------------------------------------------------------------------
// random instances

inline Tensor<double> random_tensor(const Dims& dims, Rng& rng, bool nonneg,
                                    double density = 1.0) {
  Tensor<double> a(dims);
  for (Index f = 0; f < a.size(); ++f) {
    if (density < 1.0 && rng.uniform() >= density) continue;
    a[f] = nonneg ? rng.uniform() : rng.symmetric();
  }
  return a;
}

/// Random cubical symmetric tensor: one draw per index multiset, copied to
/// all permutations, so the result is bit-symmetric.
inline Tensor<double> random_symmetric(int r, Index n, Rng& rng, bool nonneg,
                                       double density = 1.0) {
  Tensor<double> a(Dims(r, n));
  for_each_index(a.dims(), [&](const MultiIndex& idx, Index) {
    if (!std::is_sorted(idx.begin(), idx.end())) return;
    double v = 0.0;
    if (density >= 1.0 || rng.uniform() < density)
      v = nonneg ? rng.uniform() : rng.symmetric();
    if (v == 0.0) return;
    MultiIndex perm = idx;
    do {
      a(perm) = v;
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return a;
}

/// Strictly positive entries, hence weakly irreducible.
inline Tensor<double> random_positive_symmetric(int r, Index n, Rng& rng) {
  Tensor<double> a(Dims(r, n));
  for_each_index(a.dims(), [&](const MultiIndex& idx, Index) {
    if (!std::is_sorted(idx.begin(), idx.end())) return;
    const double v = 0.1 + 0.9 * rng.uniform();
    MultiIndex perm = idx;
    do {
      a(perm) = v;
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return a;
}

/// Direct sum: each block occupies its own index interval, all cross
/// entries zero.
inline Tensor<double> block_diag(const std::vector<Tensor<double>>& blocks) {
  const int r = blocks.front().order();
  Index n = 0;
  for (const auto& b : blocks) n += b.extent(0);
  Tensor<double> a(Dims(r, n));
  Index off = 0;
  MultiIndex shifted(r);
  for (const auto& b : blocks) {
    for_each_index(b.dims(), [&](const MultiIndex& idx, Index f) {
      if (b[f] == 0.0) return;
      for (int k = 0; k < r; ++k) shifted[k] = idx[k] + off;
      a(shifted) = b[f];
    });
    off += b.extent(0);
  }
  return a;
}

inline bool has_zero_slice(const Tensor<double>& a) {
  for (int k = 0; k < a.order(); ++k)
    for (Index s = 0; s < a.extent(k); ++s)
      if (slice_abs_sum(a, k, s) == 0.0) return true;
  return false;
}

/// Ascending eta values over a p-grid, warm-starting each solve from the
/// previous maximizer. p = 1 entries use the finite-candidate report.
inline std::vector<double> eta_curve(const Tensor<double>& a, const std::vector<double>& ps,
                                     SolverOptions<double> opts) {
  std::vector<double> vals;
  opts.warm_vectors.clear();
  for (double p : ps) {
    SpectralResult<double> res = eta_p(a, p, opts);
    if (p > 1.0) opts.warm_vectors = {res.witness.front()};
    vals.push_back(res.value);
  }
  return vals;
}

// ---------------------------------------------------------------------------
// suites

namespace detail {

inline double rel_gap(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

inline void push(SuiteResult& out, int trial, std::uint64_t seed, const std::string& quantity,
                 double lhs, double rhs, double gap, bool pass) {
  out.rows.push_back({trial, seed, quantity, lhs, rhs, gap, pass});
}

inline SuiteResult suite_mth1(int trials, std::uint64_t seed) {
  SuiteResult out{"mth1", {}};
  int converged = 0, total = 0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + t;
    Rng rng(s * 977 + 13);
    const int r = 2 + (t % 2);
    const Index n = 3 + ((t / 2) % 3);
    const double p = std::vector<double>{double(r), double(r + 1), double(2 * r)}[t % 3];
    const Tensor<double> a = random_symmetric(r, n, rng, true, 0.85);
    SolverOptions<double> opts;
    opts.seed = s;
    const auto eta = eta_p(a, p, opts);
    const auto nrm = spectral_p_norm(a, p, opts);
    ++total;
    const bool conv = eta.converged && nrm.converged;
    if (conv) ++converged;
    const double gap = rel_gap(eta.value, nrm.value);
    push(out, t, s, "eta_vs_norm", eta.value, nrm.value, gap, !conv || gap <= 1e-6);
  }
  const double rate = total ? double(converged) / total : 1.0;
  push(out, trials, seed, "convergence_rate", rate, 0.95, 0.95 - rate, rate >= 0.95);
  return out;
}

inline SuiteResult suite_th2(int trials, std::uint64_t seed) {
  SuiteResult out{"th2", {}};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + t;
    Rng rng(s * 1009 + 7);
    const int r = 2 + (t % 2);
    Dims dims;
    for (int k = 0; k < r; ++k) dims.push_back(1 + static_cast<Index>(rng.below(4)));
    const bool nonneg = (t % 2 == 0);
    const double p = std::vector<double>{2.0, 2.5, 3.0, 4.0}[t % 4];
    const Tensor<double> a = random_tensor(dims, rng, nonneg, 0.9);
    const auto [sym, part] = symmetrant(a);
    SolverOptions<double> opts;
    opts.seed = s;
    const double eta = eta_p(sym, p, opts).value;
    const double nrm = spectral_p_norm(a, p, opts).value;
    const double factor = factorial(r) / std::pow(double(r), double(r) / p);
    const double rhs = factor * nrm;
    if (nonneg) {
      const double gap = rel_gap(eta, rhs);
      push(out, t, s, "sym_equality_nonneg", eta, rhs, gap, gap <= 1e-6);
    } else {
      const double slack = rhs - eta;
      push(out, t, s, "sym_upper_mixed", eta, rhs, slack,
           slack >= -1e-6 * std::max(1.0, rhs));
    }
  }
  return out;
}

inline SuiteResult suite_pf1(int trials, std::uint64_t seed) {
  SuiteResult out{"pf1", {}};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + t;
    Rng rng(s * 1013 + 3);
    const int r = 2 + (t % 2);
    const int parts = 2 + (t % 2);
    const double p = std::vector<double>{r + 0.5, double(r + 1), double(2 * r)}[t % 3];
    std::vector<Tensor<double>> comps;
    std::vector<double> values;
    SolverOptions<double> opts;
    opts.seed = s;
    for (int c = 0; c < parts; ++c) {
      comps.push_back(random_positive_symmetric(r, 2 + static_cast<Index>(rng.below(2)), rng));
      values.push_back(eta_p(comps.back(), p, opts).value);
    }
    const Tensor<double> a = block_diag(comps);
    const double direct = eta_p(a, p, opts).value;
    const double combined = combine_components(values, p, r);
    const double gap = rel_gap(direct, combined);
    push(out, t, s, "component_formula", direct, combined, gap, gap <= 1e-6);
  }
  return out;
}

inline SuiteResult suite_pf0(int trials, std::uint64_t seed) {
  SuiteResult out{"pf0", {}};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + t;
    Rng rng(s * 1019 + 29);
    const int r = 2 + (t % 2);
    const Index n = 2 + static_cast<Index>(rng.below(3));
    Tensor<double> a(Dims(r, n));
    std::string quantity;
    double p;
    if (t % 2 == 0) {
      a = random_positive_symmetric(r, n, rng);  // weakly irreducible
      p = (t % 4 == 0) ? r - 0.5 : double(r + 1);
      quantity = "positive_maximizer_irreducible";
    } else {
      for (int tries = 0; tries < 100; ++tries) {
        a = random_symmetric(r, n, rng, true, 0.7);
        if (!has_zero_slice(a)) break;
      }
      if (has_zero_slice(a)) a = random_positive_symmetric(r, n, rng);
      p = double(r) + 1.0;  // p > r branch
      quantity = "positive_maximizer_no_zero_slice";
    }
    SolverOptions<double> opts;
    opts.seed = s;
    const auto res = lambda_p(a, p, opts);
    const double mn = res.witness.front().minCoeff();
    push(out, t, s, quantity, mn, 1e-8, 1e-8 - mn, res.converged && mn >= 1e-8);
  }
  return out;
}

inline SuiteResult suite_monotone(int trials, std::uint64_t seed) {
  SuiteResult out{"monotone", {}};
  std::vector<double> ps;
  for (double p = 1.0; p <= 4.0 + 1e-9; p += 0.25) ps.push_back(p);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + t;
    Rng rng(s * 1021 + 11);
    const int r = 2 + (t % 2);
    Dims dims;
    for (int k = 0; k < r; ++k) dims.push_back(2 + static_cast<Index>(rng.below(2)));
    const Tensor<double> a = random_tensor(dims, rng, t % 3 == 0, 0.9);
    SolverOptions<double> opts;
    opts.seed = s;
    const auto curve = norm_p_curve(a, ps, opts);
    const double total = static_cast<double>(a.size());
    const double l1 = entrywise_norm(a, 1.0);

    double worst_mono = 0.0, worst_scaled = -kInf, worst_lip = -kInf, vmax = 0.0;
    for (size_t i = 0; i + 1 < curve.size(); ++i) {
      const auto [q, vq] = curve[i];
      const auto [p, vp] = curve[i + 1];
      worst_mono = std::min(worst_mono, vp - vq);
      worst_scaled = std::max(worst_scaled, std::pow(total, 1.0 / p) * vp -
                                                std::pow(total, 1.0 / q) * vq);
      worst_lip = std::max(worst_lip, (vp - vq) - (p - q) * l1 * total * std::log(total));
      vmax = std::max(vmax, std::max(vp, vq));
    }
    push(out, t, s, "pro2b_monotone", worst_mono, 0.0, -worst_mono, worst_mono >= -1e-8);
    push(out, t, s, "pro2c_scaled", worst_scaled, 0.0, worst_scaled, worst_scaled <= 1e-6);
    push(out, t, s, "pro2d_l1_cap", vmax, l1, vmax - l1, vmax <= l1 + 1e-12);
    push(out, t, s, "pro2e_lipschitz", worst_lip, 0.0, worst_lip, worst_lip <= 1e-9);

    // symmetric analogue
    const Index n = 2 + static_cast<Index>(rng.below(2));
    const Tensor<double> sym = random_symmetric(r, n, rng, t % 3 != 1, 1.0);
    const auto evals = eta_curve(sym, ps, opts);
    const double nsz = static_cast<double>(n);
    double eworst_mono = 0.0, eworst_scaled = -kInf, emax = 0.0;
    for (size_t i = 0; i + 1 < evals.size(); ++i) {
      eworst_mono = std::min(eworst_mono, evals[i + 1] - evals[i]);
      if (ps[i] > 1.0)  // the p = 1 entry is a lower-bound report, not eta itself
        eworst_scaled = std::max(eworst_scaled,
                                 std::pow(nsz, r / ps[i + 1]) * evals[i + 1] -
                                     std::pow(nsz, r / ps[i]) * evals[i]);
      emax = std::max(emax, evals[i + 1]);
    }
    push(out, t, s, "pro3b_monotone", eworst_mono, 0.0, -eworst_mono, eworst_mono >= -1e-8);
    push(out, t, s, "pro3c_scaled", eworst_scaled, 0.0, eworst_scaled, eworst_scaled <= 1e-6);
    const double el1 = entrywise_norm(sym, 1.0);
    push(out, t, s, "pro3d_l1_cap", emax, el1, emax - el1, emax <= el1 + 1e-12);
    const double report1 = evals.front();
    const double floor1 = entrywise_norm(sym, kInf) * factorial(r) / std::pow(double(r), r);
    push(out, t, s, "pro3a_p1_floor", report1, floor1, floor1 - report1,
         report1 >= floor1 - 1e-9);
  }
  return out;
}

inline SuiteResult suite_gradient(int trials, std::uint64_t seed) {
  SuiteResult out{"gradient", {}};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + t;
    Rng rng(s * 1031 + 17);
    const int r = 2 + (t % 2);
    const Index n = 2 + static_cast<Index>(rng.below(4));
    const Tensor<double> a = random_symmetric(r, n, rng, false, 1.0);
    Vec x(n);
    for (Index i = 0; i < n; ++i) x[i] = rng.symmetric();
    const Vec g = poly_gradient(a, x);
    const double h = 1e-6;
    double worst = 0.0;
    for (Index k = 0; k < n; ++k) {
      Vec xp = x, xm = x;
      xp[k] += h;
      xm[k] -= h;
      const double fd = (poly_form(a, xp) - poly_form(a, xm)) / (2.0 * h);
      worst = std::max(worst, std::abs(fd - g[k]) / std::max(1.0, std::abs(g[k])));
    }
    push(out, t, s, "gradient_fd", worst, 1e-5, worst - 1e-5, worst <= 1e-5);
    const double pv = poly_form(a, x);
    const double er = euler_residual(a, x);
    const double cap = 1e-12 * (1.0 + std::abs(pv));
    push(out, t, s, "euler_residual", er, cap, er - cap, er <= cap);
  }
  return out;
}

inline SuiteResult suite_sandwich(int trials, std::uint64_t seed) {
  SuiteResult out{"sandwich", {}};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + t;
    Rng rng(s * 1033 + 19);
    const int r = 2 + (t % 2);
    Dims dims;
    for (int k = 0; k < r; ++k) dims.push_back(2 + static_cast<Index>(rng.below(3)));
    const Tensor<double> a = random_tensor(dims, rng, t % 2 == 0, 0.85);
    SolverOptions<double> opts;
    opts.seed = s;
    const auto rep = bounds_report(a, double(r), true, opts);
    const double est = *rep.estimate;
    push(out, t, s, "lower_le_estimate", rep.max_lower, est, rep.max_lower - est,
         rep.max_lower <= est + 1e-8 * std::max(1.0, est));
    push(out, t, s, "estimate_le_upper", est, rep.min_upper, est - rep.min_upper,
         est <= rep.min_upper + 1e-12 * std::max(1.0, rep.min_upper));
    push(out, t, s, "main_le_hlp", *rep.main_bound, *rep.hlp, *rep.main_bound - *rep.hlp,
         *rep.main_bound <= *rep.hlp + 1e-12 * std::max(1.0, *rep.hlp));
    if (r == 2)
      push(out, t, s, "main_le_schur", *rep.main_bound, *rep.schur,
           *rep.main_bound - *rep.schur,
           *rep.main_bound <= *rep.schur + 1e-12 * std::max(1.0, *rep.schur));
  }
  return out;
}

inline SuiteResult suite_oracle(int trials, std::uint64_t seed) {
  SuiteResult out{"oracle", {}};
  SolverOptions<double> opts;
  opts.seed = seed;
  int t = 0;
  auto check_norm = [&](const std::string& name, const Tensor<double>& a, double p,
                        double closed) {
    const auto grid = grid_max_norm(a, p, 48);
    const auto opt = spectral_p_norm(a, p, opts);
    push(out, t, seed, name + "_grid_vs_opt", grid.value, opt.value,
         rel_gap(grid.value, opt.value), rel_gap(grid.value, opt.value) <= 1e-3);
    push(out, t, seed, name + "_opt_vs_closed", opt.value, closed, rel_gap(opt.value, closed),
         rel_gap(opt.value, closed) <= 1e-6);
    ++t;
  };
  check_norm("star2_p2", adjacency_tensor(gen_star(2)), 2.0, closed_form("star(2)", 2.0));
  check_norm("star3_p2", adjacency_tensor(gen_star(3)), 2.0, closed_form("star(3)", 2.0));
  check_norm("all_ones_2_2_p2", gen_all_ones(2, 2), 2.0, closed_form("all_ones(2,2)", 2.0));
  check_norm("all_ones_3_2_p3", gen_all_ones(3, 2), 3.0, closed_form("all_ones(3,2)", 3.0));

  auto check_eta = [&](const std::string& name, const Tensor<double>& a, double p,
                       double closed) {
    const auto grid = grid_max_eta(a, p, 48);
    const auto opt = eta_p(a, p, opts);
    push(out, t, seed, name + "_grid_vs_opt", grid.value, opt.value,
         rel_gap(grid.value, opt.value), rel_gap(grid.value, opt.value) <= 1e-3);
    push(out, t, seed, name + "_opt_vs_closed", opt.value, closed, rel_gap(opt.value, closed),
         rel_gap(opt.value, closed) <= 1e-6);
    ++t;
  };
  const Tensor<double> k2 = adjacency_tensor(gen_star(1));
  check_eta("k2_eta_p4", k2, 4.0, std::sqrt(2.0));
  check_eta("all_ones_2_r3_eta_p4", gen_all_ones(3, 2), 4.0, std::pow(2.0, 9.0 / 4.0));
  check_eta("beta_star_3_1_eta_p3", adjacency_tensor(gen_beta_star(3, 1)), 3.0,
            closed_form("beta_star(3,1)", 3.0));

  // rank-one and single-fiber instances against their exact values
  Rng rng(seed * 1039 + 23);
  for (int extra = 0; extra < std::max(1, trials / 5); ++extra) {
    std::vector<Vec> xs;
    for (int k = 0; k < 2; ++k) {
      Vec v(2 + static_cast<Index>(rng.below(2)));
      for (Index i = 0; i < v.size(); ++i) v[i] = rng.symmetric();
      xs.push_back(v);
    }
    const double p = std::vector<double>{2.0, 3.0}[extra % 2];
    const Tensor<double> a = rank_one(xs);
    const double closed = closed_form_rank_one(xs, p);
    const double opt = spectral_p_norm(a, p, opts).value;
    push(out, t, seed, "rank_one_opt_vs_closed", opt, closed, rel_gap(opt, closed),
         rel_gap(opt, closed) <= 1e-6);
    ++t;

    Vec fib(3);
    for (Index i = 0; i < 3; ++i) fib[i] = rng.symmetric();
    Tensor<double> single(Dims{2, 3});
    for (Index j = 0; j < 3; ++j) single({0, j}) = fib[j];
    const double fclosed = closed_form_single_fiber(fib, p);
    const double fopt = spectral_p_norm(single, p, opts).value;
    push(out, t, seed, "single_fiber_opt_vs_closed", fopt, fclosed, rel_gap(fopt, fclosed),
         rel_gap(fopt, fclosed) <= 1e-6);
    ++t;
  }
  return out;
}

inline SuiteResult suite_balance(int trials, std::uint64_t seed) {
  SuiteResult out{"balance", {}};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + t;
    Rng rng(s * 1049 + 31);
    const int r = 2 + (t % 2);
    Dims dims;
    for (int k = 0; k < r; ++k) dims.push_back(1 + static_cast<Index>(rng.below(3)));
    Tensor<double> a = random_tensor(dims, rng, true, 1.0);
    a.data() += 0.05;  // keep every slice active
    const double p = std::vector<double>{2.0, 2.5, 3.0}[t % 3];
    const auto [sym, part] = symmetrant(a);
    SolverOptions<double> opts;
    opts.seed = s;
    const auto res = eta_p(sym, p, opts);
    const Vec& x = res.witness.front();
    const double target = std::pow(double(r), -1.0 / p);
    double worst = 0.0;
    for (int b = 0; b < part.block_count(); ++b) {
      Vec blockv(static_cast<Index>(part.block(b).size()));
      for (size_t i = 0; i < part.block(b).size(); ++i) blockv[i] = x[part.block(b)[i]];
      worst = std::max(worst, std::abs(lp_norm(blockv, p) - target));
    }
    push(out, t, s, "symmetrant_block_balance", worst, 1e-6, worst - 1e-6, worst <= 1e-6);
  }
  // r-partite graphs through the graph-level entry point
  const Partition star_part(4, {{0}, {1, 2, 3}});
  const double g1 = partite_balance_check(gen_star(3), star_part, 2.0);
  push(out, trials, seed, "star_partite_balance", g1, 1e-6, g1 - 1e-6, g1 <= 1e-6);
  const Partition c4_part(4, {{0, 2}, {1, 3}});
  const double g2 = partite_balance_check(gen_cycle(4), c4_part, 3.0);
  push(out, trials + 1, seed, "cycle4_partite_balance", g2, 1e-6, g2 - 1e-6, g2 <= 1e-6);
  return out;
}

inline SuiteResult suite_regular(int trials, std::uint64_t seed) {
  SuiteResult out{"regular", {}};
  SolverOptions<double> opts;
  opts.seed = seed;
  int t = 0;
  auto check = [&](const std::string& name, const Tensor<double>& a) {
    const int r = a.order();
    for (double p : {double(r), double(r + 1), double(2 * r)}) {
      const double expect = regular_value(a, p);
      const double eta = eta_p(a, p, opts).value;
      const double gap = rel_gap(eta, expect);
      push(out, t, seed, name + "_p" + std::to_string(int(p * 10)), eta, expect, gap,
           gap <= 1e-6);
    }
    ++t;
  };
  for (Index n : {2, 3, 4}) check("all_ones_r2_n" + std::to_string(n), gen_all_ones(2, n));
  for (Index n : {2, 3}) check("all_ones_r3_n" + std::to_string(n), gen_all_ones(3, n));
  for (Index n : {3, 4, 5, 6})
    check("cycle_n" + std::to_string(n), adjacency_tensor(gen_cycle(n)));

  // converse direction: on non-regular instances the closed value must miss
  for (Index leaves : {2, 3, 4}) {
    const Tensor<double> a = adjacency_tensor(gen_star(leaves));
    const double n = static_cast<double>(a.extent(0));
    const double p = 2.0;
    const double closed = std::pow(n, -2.0 / p) * std::abs(entry_sum(a));
    const double eta = eta_p(a, p, opts).value;
    const double gap = rel_gap(eta, closed);
    push(out, t++, seed, "star_nonregular_detects", eta, closed, gap, gap > 1e-6);
  }
  (void)trials;
  return out;
}

}  // namespace detail

inline SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed) {
  require(trials >= 1, Errc::bad_parameter, "trials must be positive");
  if (name == "th2") return detail::suite_th2(trials, seed);
  if (name == "mth1") return detail::suite_mth1(trials, seed);
  if (name == "pf1") return detail::suite_pf1(trials, seed);
  if (name == "pf0") return detail::suite_pf0(trials, seed);
  if (name == "monotone") return detail::suite_monotone(trials, seed);
  if (name == "gradient") return detail::suite_gradient(trials, seed);
  if (name == "sandwich") return detail::suite_sandwich(trials, seed);
  if (name == "oracle") return detail::suite_oracle(trials, seed);
  if (name == "balance") return detail::suite_balance(trials, seed);
  if (name == "regular") return detail::suite_regular(trials, seed);
  fail(Errc::bad_parameter, "unknown suite: " + name);
}

}  // namespace hypermat::verify
