#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hypermat/common.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/forms.hpp"
#include "hypermat/spectral.hpp"
#include "hypermat/tensor.hpp"

namespace hypermat {

enum class OracleMethod { grid, random_polish, closed_form };

/// Brute-force reference value. Always a feasible-point evaluation, hence
/// a valid lower bound of the true optimum.
struct OracleResult {
  double value = 0.0;
  OracleMethod method = OracleMethod::grid;
  Index samples = 0;
};

namespace detail {

/// Dense sampling of the nonnegative part of the unit l^p sphere in R^n:
/// polar angles on the l^2 sphere mapped by u -> u^{2/p}. res points per
/// angular dimension.
template <typename F>
void for_each_grid_point(Index n, double p, int res, F&& f) {
  std::vector<double> theta(std::max<Index>(n - 1, 0), 0.0);
  VecX<double> u(n);
  const double step = (3.14159265358979323846 / 2.0) / res;
  std::vector<int> t(std::max<Index>(n - 1, 0), 0);
  while (true) {
    double sines = 1.0;
    for (Index i = 0; i < n; ++i) {
      double c = (i + 1 < n) ? std::cos((t[i] + 0.5) * step) : 1.0;
      u[i] = std::pow(sines * c, 2.0 / p);
      if (i + 1 < n) sines *= std::sin((t[i] + 0.5) * step);
    }
    f(static_cast<const VecX<double>&>(u));
    int i = static_cast<int>(t.size()) - 1;
    while (i >= 0 && t[i] == res - 1) --i;
    if (i < 0) break;
    ++t[i];
    for (size_t j = i + 1; j < t.size(); ++j) t[j] = 0;
  }
}

/// Applies one of the 2^{n-1} sign patterns (first component fixed +).
inline void apply_signs(const VecX<double>& mag, std::uint64_t bits, VecX<double>& out) {
  out = mag;
  for (Index i = 1; i < mag.size(); ++i)
    if (bits & (1ull << (i - 1))) out[i] = -out[i];
}

}  // namespace detail

/// Grid maximization of |L_A| over r unit-l^p spheres: the largest block
/// is contracted out in closed form (dual scaling), the remaining blocks
/// run over sign-enumerated angular grids, and the best grid point is
/// polished by the block-coordinate ascent. Total variable count capped
/// at 8.
inline OracleResult grid_max_norm(const Tensor<double>& a, double p, int resolution = 64) {
  require(p >= 1.0, Errc::bad_exponent, "p must be at least 1");
  const int r = a.order();
  Index total_vars = 0;
  for (int k = 0; k < r; ++k) total_vars += a.extent(k);
  require(total_vars <= 8, Errc::too_large, "grid oracle caps the variable count at 8");
  require(resolution >= 2, Errc::bad_parameter, "resolution must be at least 2");

  OracleResult out;
  if (a.data().abs().maxCoeff() == 0.0) return out;

  int pivot = 0;
  for (int k = 1; k < r; ++k)
    if (a.extent(k) > a.extent(pivot)) pivot = k;

  // enumerate grids over all blocks except the pivot
  std::vector<int> free_axes;
  for (int k = 0; k < r; ++k)
    if (k != pivot) free_axes.push_back(k);

  std::vector<VecX<double>> xs(r);
  std::vector<VecX<double>> best(r);
  double best_val = -1.0;
  Index samples = 0;

  // recursive enumeration over the free blocks
  auto recurse = [&](auto&& self, size_t level) -> void {
    if (level == free_axes.size()) {
      ++samples;
      const VecX<double> g = detail::contract_except(a, xs, pivot);
      double val;
      VecX<double> xp;
      if (p == 1.0) {
        Index arg = 0;
        g.cwiseAbs().maxCoeff(&arg);
        xp = VecX<double>::Zero(g.size());
        xp[arg] = g[arg] >= 0 ? 1.0 : -1.0;
        val = std::abs(g[arg]);
      } else {
        val = dual_scale(g, p, xp);
      }
      if (val > best_val) {
        best_val = val;
        best = xs;
        best[pivot] = (val > 0.0) ? xp : detail::constant_start<double>(a.extent(pivot), p);
      }
      return;
    }
    const int k = free_axes[level];
    const Index n = a.extent(k);
    detail::for_each_grid_point(n, p, resolution, [&](const VecX<double>& mag) {
      VecX<double> signed_vec(n);
      for (std::uint64_t bits = 0; bits < (1ull << (n - 1)); ++bits) {
        detail::apply_signs(mag, bits, signed_vec);
        xs[k] = signed_vec;
        self(self, level + 1);
      }
    });
  };
  recurse(recurse, 0);

  out.samples = samples;
  out.value = best_val;
  if (p >= kMinIterativeP) {
    SolverOptions<double> opts;
    auto run = detail::block_ascent(a, p, best, opts);
    out.value = std::max(out.value, run.value);
  }
  return out;
}

/// Grid maximization of |P_A| over the unit l^p sphere (cubical symmetric
/// input, order of the index set capped at 4), polished by the shifted
/// fixed-point ascent.
inline OracleResult grid_max_eta(const Tensor<double>& a, double p, int resolution = 64) {
  require_cubical(a);
  require_symmetric(a);
  require(p >= 1.0, Errc::bad_exponent, "p must be at least 1");
  const Index n = a.extent(0);
  require(n <= 4, Errc::too_large, "grid oracle caps the index set at 4");
  require(resolution >= 2, Errc::bad_parameter, "resolution must be at least 2");

  OracleResult out;
  if (a.data().abs().maxCoeff() == 0.0) return out;

  double best_val = -1.0;
  VecX<double> best;
  Index samples = 0;
  VecX<double> x(n);
  detail::for_each_grid_point(n, p, resolution, [&](const VecX<double>& mag) {
    for (std::uint64_t bits = 0; bits < (1ull << (n - 1)); ++bits) {
      detail::apply_signs(mag, bits, x);
      ++samples;
      const double v = std::abs(poly_form(a, x));
      if (v > best_val) {
        best_val = v;
        best = x;
      }
    }
  });

  out.samples = samples;
  out.value = best_val;
  if (p >= kMinIterativeP) {
    SolverOptions<double> opts;
    auto run = detail::symmetric_ascent(a, p, best, opts);
    out.value = std::max(out.value, std::abs(run.value));
    Tensor<double> neg = a;
    neg.data() = -neg.data();
    auto run2 = detail::symmetric_ascent(neg, p, best, opts);
    out.value = std::max(out.value, std::abs(run2.value));
  }
  return out;
}

/// Catalogue of exact reference values. Instance ids:
///   star(n)        p = 2        -> sqrt(n)
///   all_ones(r,n)  p >= r       -> n^{r - r/p}
///   beta_star(3,k) p = 3        -> 2 k^{1/3}
inline double closed_form(const std::string& name, double p) {
  auto parse = [&](const std::string& head, std::vector<long>& args) {
    if (name.size() < head.size() + 2 || name.compare(0, head.size(), head) != 0) return false;
    if (name[head.size()] != '(' || name.back() != ')') return false;
    std::string inner = name.substr(head.size() + 1, name.size() - head.size() - 2);
    size_t pos = 0;
    args.clear();
    while (pos < inner.size()) {
      size_t next = inner.find(',', pos);
      if (next == std::string::npos) next = inner.size();
      try {
        args.push_back(std::stol(inner.substr(pos, next - pos)));
      } catch (...) {
        return false;
      }
      pos = next + 1;
    }
    return true;
  };
  std::vector<long> args;
  if (parse("star", args) && args.size() == 1 && args[0] >= 1) {
    require(p == 2.0, Errc::unknown_instance, "star value catalogued at p = 2 only");
    return std::sqrt(static_cast<double>(args[0]));
  }
  if (parse("all_ones", args) && args.size() == 2 && args[0] >= 2 && args[1] >= 1) {
    const double r = static_cast<double>(args[0]);
    const double n = static_cast<double>(args[1]);
    require(p >= r, Errc::unknown_instance, "all-ones value catalogued for p >= r only");
    return std::pow(n, r - r / p);
  }
  if (parse("beta_star", args) && args.size() == 2 && args[0] == 3 && args[1] >= 1) {
    require(p == 3.0, Errc::unknown_instance, "beta-star value catalogued at p = 3 only");
    return 2.0 * std::cbrt(static_cast<double>(args[1]));
  }
  fail(Errc::unknown_instance, "not in the closed-form catalogue: " + name);
}

/// Exact norm of a tensor supported on a single fiber: |v|_{p/(p-1)}.
inline double closed_form_single_fiber(const VecX<double>& v, double p) {
  require(p > 1.0, Errc::bad_exponent, "needs p > 1");
  return lp_norm(v, dual_exponent(p));
}

/// Exact norm of an outer product: the product of the factors' dual norms.
inline double closed_form_rank_one(const std::vector<VecX<double>>& xs, double p) {
  require(p > 1.0, Errc::bad_exponent, "needs p > 1");
  require(xs.size() >= 2, Errc::bad_order, "need at least two factors");
  double prod = 1.0;
  for (const auto& x : xs) prod *= lp_norm(x, dual_exponent(p));
  return prod;
}

}  // namespace hypermat
