#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "hypermat/common.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/forms.hpp"
#include "hypermat/structure.hpp"
#include "hypermat/tensor.hpp"

namespace hypermat {

/// Iterative solvers reject exponents this close to 1: the dual exponent
/// 1/(p-1) blows up. p = 1 itself is handled in closed form.
inline constexpr double kMinIterativeP = 1.0 + 1e-3;

template <typename Scalar = double>
struct SolverOptions {
  int starts = 32;
  std::uint64_t seed = 12345;
  double tol = 1e-10;      // relative value change per iteration
  int max_iter = 10000;    // iterations (sweeps) per start
  int stall_window = 5;    // consecutive small changes before convergence
  std::vector<std::vector<VecX<Scalar>>> warm_kits;  // extra eigenkit starts
  std::vector<VecX<Scalar>> warm_vectors;            // extra single-vector starts
};

/// Outcome of a maximization run. For the multilinear norm the witness
/// holds r unit-l^p vectors; the symmetric solvers and the spectral-radius
/// iteration store a single vector. All reported values are evaluations at
/// feasible points, hence certified lower estimates of the true maxima
/// (the spectral radius reports a Collatz-Wielandt bracket midpoint, with
/// the final bracket width in `gap`).
template <typename Scalar = double>
struct SpectralResult {
  Scalar value = Scalar(0);
  std::vector<VecX<Scalar>> witness;
  double p = 0.0;
  int iterations = 0;  // iterations used by the best start
  int starts = 0;
  bool converged = false;
  int best_start = 0;
  Scalar gap = Scalar(0);
};

namespace detail {

template <typename Scalar>
void validate_iterative_p(double p) {
  require(std::isfinite(p), Errc::bad_exponent, "p must be finite");
  require(p >= 1.0, Errc::bad_exponent, "p must be at least 1");
  require(p >= kMinIterativeP, Errc::bad_exponent,
          "p in (1, 1.001) is rejected for iterative solvers");
}

template <typename Scalar>
VecX<Scalar> constant_start(Index n, double p) {
  VecX<Scalar> v = VecX<Scalar>::Ones(n);
  lp_normalize(v, p);
  return v;
}

template <typename Scalar>
VecX<Scalar> random_start(Index n, double p, Rng& rng) {
  VecX<Scalar> v(n);
  for (Index i = 0; i < n; ++i) v[i] = Scalar(rng.symmetric());
  if (lp_norm(v, p) == Scalar(0)) return constant_start<Scalar>(n, p);
  lp_normalize(v, p);
  return v;
}

/// Dual scaling of a vector, falling back to the constant start when the
/// source vanishes.
template <typename Scalar>
VecX<Scalar> dual_or_constant(const VecX<Scalar>& g, double p) {
  VecX<Scalar> x;
  if (dual_scale(g, p, x) == Scalar(0)) return constant_start<Scalar>(g.size(), p);
  return x;
}

template <typename Scalar>
VecX<Scalar> basis_vector(Index n, Index i) {
  VecX<Scalar> v = VecX<Scalar>::Zero(n);
  v[i] = Scalar(1);
  return v;
}

/// First lexicographic index tuple attaining max |a|.
template <typename Scalar>
MultiIndex argmax_abs(const Tensor<Scalar>& a) {
  MultiIndex best(a.order(), 0);
  Scalar m(-1);
  for_each_index(a.dims(), [&](const MultiIndex& idx, Index f) {
    if (std::abs(a[f]) > m) {
      m = std::abs(a[f]);
      best = idx;
    }
  });
  return best;
}

/// sign(x) |x|^{p-1}, the gradient direction of |x|_p^p up to the factor p.
template <typename Scalar>
VecX<Scalar> p_power(const VecX<Scalar>& x, double p) {
  VecX<Scalar> y(x.size());
  for (Index i = 0; i < x.size(); ++i)
    y[i] = sign_of(x[i]) * std::pow(std::abs(x[i]), Scalar(p - 1.0));
  return y;
}

template <typename Scalar>
struct AscentRun {
  Scalar value;
  std::vector<VecX<Scalar>> kit;
  int iterations;
  bool converged;
};

/// Cyclic block-coordinate ascent for |L_A| from one eigenkit. Every block
/// step is the exact maximizer over its l^p sphere, so |L_A| never
/// decreases.
template <typename Scalar>
AscentRun<Scalar> block_ascent(const Tensor<Scalar>& a, double p, std::vector<VecX<Scalar>> xs,
                               const SolverOptions<Scalar>& opts) {
  const int r = a.order();
  Scalar val = std::abs(linear_form(a, xs));
  int streak = 0;
  bool converged = false;
  int it = 0;
  for (it = 1; it <= opts.max_iter; ++it) {
    for (int k = 0; k < r; ++k) {
      const VecX<Scalar> g = contract_except(a, xs, k);
      VecX<Scalar> xk;
      if (dual_scale(g, p, xk) > Scalar(0)) xs[k] = std::move(xk);
    }
    const Scalar next = std::abs(linear_form(a, xs));
    const bool small = std::abs(next - val) <= Scalar(opts.tol) * std::max(Scalar(1), next);
    val = next;
    streak = small ? streak + 1 : 0;
    if (streak >= opts.stall_window) {
      converged = true;
      break;
    }
  }
  return {val, std::move(xs), std::min(it, opts.max_iter), converged};
}

}  // namespace detail

/// Best found value of |L_A| over r unit-l^p vectors by multi-start block
/// coordinate ascent: with all blocks but one fixed, the optimal block is
/// the l^{p/(p-1)} dual scaling of the block gradient, so every block step
/// is an exact maximization and the run is monotone in |L_A|. p = 1 is the
/// closed form |A|_max with a basis eigenkit. The result is a certified
/// lower estimate of the spectral p-norm.
template <typename Scalar>
SpectralResult<Scalar> spectral_p_norm(const Tensor<Scalar>& a, double p,
                                       const SolverOptions<Scalar>& opts = {}) {
  require(std::isfinite(p) && p >= 1.0, Errc::bad_exponent, "p must be a finite real >= 1");
  const int r = a.order();

  SpectralResult<Scalar> res;
  res.p = p;

  const bool zero_tensor = (a.data().abs().maxCoeff() == Scalar(0));
  if (p == 1.0 || zero_tensor) {
    const MultiIndex idx = detail::argmax_abs(a);
    std::vector<VecX<Scalar>> kit;
    for (int k = 0; k < r; ++k) kit.push_back(detail::basis_vector<Scalar>(a.extent(k), idx[k]));
    res.value = std::abs(linear_form(a, kit));
    res.witness = std::move(kit);
    res.converged = true;
    res.starts = 1;
    return res;
  }
  detail::validate_iterative_p<Scalar>(p);

  // Deterministic starts: constant, dual-scaled slice sums, one
  // slice-sum witness per axis (the construction behind the slice-sum
  // lower bounds), and the best-fiber witness. Ascent from these makes the
  // estimate dominate the closed-form lower bounds. Remaining starts are
  // random with signs, seeded per start index.
  std::vector<std::vector<VecX<Scalar>>> starts;
  {
    std::vector<VecX<Scalar>> kit;
    for (int k = 0; k < r; ++k) kit.push_back(detail::constant_start<Scalar>(a.extent(k), p));
    starts.push_back(kit);

    std::vector<VecX<Scalar>> abs_sums;
    for (int k = 0; k < r; ++k) {
      VecX<Scalar> s(a.extent(k));
      for (Index j = 0; j < a.extent(k); ++j) s[j] = slice_abs_sum(a, k, j);
      abs_sums.push_back(std::move(s));
    }
    std::vector<VecX<Scalar>> kit2;
    for (int k = 0; k < r; ++k) kit2.push_back(detail::dual_or_constant(abs_sums[k], p));
    starts.push_back(std::move(kit2));

    for (int k = 0; k < r; ++k) {
      VecX<Scalar> signed_sums(a.extent(k));
      for (Index j = 0; j < a.extent(k); ++j) signed_sums[j] = slice_sum(a, k, j);
      std::vector<VecX<Scalar>> kit3 = starts[0];
      kit3[k] = detail::dual_or_constant(signed_sums, p);
      starts.push_back(std::move(kit3));
    }

    // best fiber: basis vectors on the fixed axes, dual scaling along it
    double best_fiber = -1.0;
    int best_axis = 0;
    MultiIndex best_fixed(r, 0);
    for (int k = 0; k < r; ++k) {
      Dims sub = a.dims();
      sub[k] = 1;
      for_each_index(sub, [&](const MultiIndex& idx, Index) {
        const Scalar nrm = FiberRef<Scalar>(a, k, idx).lp_norm(dual_exponent(p));
        if (static_cast<double>(nrm) > best_fiber) {
          best_fiber = static_cast<double>(nrm);
          best_axis = k;
          best_fixed = idx;
        }
      });
    }
    std::vector<VecX<Scalar>> kit4;
    for (int k = 0; k < r; ++k) {
      if (k == best_axis)
        kit4.push_back(detail::dual_or_constant(
            FiberRef<Scalar>(a, k, best_fixed).to_vector(), p));
      else
        kit4.push_back(detail::basis_vector<Scalar>(a.extent(k), best_fixed[k]));
    }
    starts.push_back(std::move(kit4));
  }
  for (const auto& kit : opts.warm_kits) {
    std::vector<VecX<Scalar>> w = kit;
    bool usable = static_cast<int>(w.size()) == r;
    for (int k = 0; usable && k < r; ++k) {
      usable = (w[k].size() == a.extent(k)) && lp_norm(w[k], p) > Scalar(0);
      if (usable) lp_normalize(w[k], p);
    }
    if (usable) starts.push_back(std::move(w));
  }
  while (static_cast<int>(starts.size()) < std::max(opts.starts, 1)) {
    Rng rng(opts.seed + static_cast<std::uint64_t>(starts.size()));
    std::vector<VecX<Scalar>> kit;
    for (int k = 0; k < r; ++k) kit.push_back(detail::random_start<Scalar>(a.extent(k), p, rng));
    starts.push_back(std::move(kit));
  }

  res.starts = static_cast<int>(starts.size());
  res.value = Scalar(-1);
  for (int s = 0; s < static_cast<int>(starts.size()); ++s) {
    auto run = detail::block_ascent(a, p, starts[s], opts);
    if (run.value > res.value) {
      res.value = run.value;
      res.witness = std::move(run.kit);
      res.converged = run.converged;
      res.iterations = run.iterations;
      res.best_start = s;
    }
  }
  for (auto& x : res.witness) lp_normalize(x, p);
  res.value = std::abs(linear_form(a, res.witness));
  return res;
}

namespace detail {

/// Shifted fixed-point ascent for max P_A over the unit l^p sphere from a
/// single start. Each step dual-scales grad P_A(x) + alpha p sign(x)|x|^{p-1};
/// critical points are fixed points. The shift starts at |A|_1 (which keeps
/// the step an ascent), is halved when the value stalls, and doubled back
/// if a trial step ever decreases the value.
template <typename Scalar>
struct SymmetricRun {
  Scalar value;
  VecX<Scalar> x;
  int iterations;
  bool converged;
};

template <typename Scalar>
SymmetricRun<Scalar> symmetric_ascent(const Tensor<Scalar>& a, double p, VecX<Scalar> x,
                                      const SolverOptions<Scalar>& opts) {
  const Scalar r = Scalar(a.order());
  const Scalar scale_a = entrywise_norm(a, 1.0);
  Scalar alpha = std::max(scale_a, Scalar(1e-12));
  Scalar min_alpha = Scalar(0);  // raised when an ascent violation is seen
  const Scalar floor_alpha = alpha * std::pow(Scalar(0.5), 48);

  lp_normalize(x, p);
  Scalar val = poly_form(a, x);
  int streak = 0;
  bool converged = false;
  int it = 0;
  for (it = 1; it <= opts.max_iter; ++it) {
    const VecX<Scalar> grad = r * apply_fixing_first(a, x);
    const VecX<Scalar> f = grad + Scalar(alpha * p) * p_power(x, p);
    VecX<Scalar> xc;
    if (dual_scale(f, p, xc) == Scalar(0)) {
      converged = true;  // stationary: zero field
      break;
    }
    const Scalar vc = poly_form(a, xc);
    if (vc + Scalar(1e-14) * std::max(Scalar(1), std::abs(val)) < val) {
      min_alpha = alpha * Scalar(2);
      alpha *= Scalar(2);
      if (alpha > scale_a * Scalar(1e6)) break;  // cannot restore ascent
      continue;
    }
    const bool small = std::abs(vc - val) <= Scalar(opts.tol) * std::max(Scalar(1), std::abs(vc));
    x = std::move(xc);
    val = vc;
    streak = small ? streak + 1 : 0;
    if (streak >= opts.stall_window) {
      if (alpha > std::max(min_alpha, floor_alpha)) {
        alpha = std::max(alpha * Scalar(0.5), std::max(min_alpha, floor_alpha));
        streak = 0;
      } else {
        converged = true;
        break;
      }
    }
  }
  return {val, std::move(x), std::min(it, opts.max_iter), converged};
}

template <typename Scalar>
std::vector<VecX<Scalar>> symmetric_starts(const Tensor<Scalar>& a, double p,
                                           const SolverOptions<Scalar>& opts) {
  const Index n = a.extent(0);
  std::vector<VecX<Scalar>> starts;
  starts.push_back(constant_start<Scalar>(n, p));
  VecX<Scalar> s(n);
  for (Index j = 0; j < n; ++j) s[j] = slice_abs_sum(a, 0, j);
  starts.push_back(dual_or_constant(s, p));
  for (const auto& w : opts.warm_vectors) {
    if (w.size() == n && lp_norm(w, p) > Scalar(0)) {
      VecX<Scalar> v = w;
      lp_normalize(v, p);
      starts.push_back(std::move(v));
    }
  }
  while (static_cast<int>(starts.size()) < std::max(opts.starts, 1)) {
    Rng rng(opts.seed + static_cast<std::uint64_t>(starts.size()));
    starts.push_back(random_start<Scalar>(n, p, rng));
  }
  return starts;
}

}  // namespace detail

/// lambda^(p): best found value of P_A over the unit l^p sphere for a
/// cubical symmetric tensor, p > 1. Multi-start shifted fixed-point
/// iteration; the positive constant start is always included, so for
/// nonnegative input the nonnegative branch is explored first. Certified
/// lower estimate of the true maximum.
template <typename Scalar>
SpectralResult<Scalar> lambda_p(const Tensor<Scalar>& a, double p,
                                const SolverOptions<Scalar>& opts = {}) {
  require_cubical(a);
  require_symmetric(a);
  detail::validate_iterative_p<Scalar>(p);
  require(p > 1.0, Errc::bad_exponent, "lambda_p needs p > 1");

  SpectralResult<Scalar> res;
  res.p = p;
  const Index n = a.extent(0);
  if (a.data().abs().maxCoeff() == Scalar(0)) {
    res.witness = {detail::basis_vector<Scalar>(n, 0)};
    res.converged = true;
    res.starts = 1;
    return res;
  }

  const bool nonneg = a.data().minCoeff() >= Scalar(0);
  const auto starts = detail::symmetric_starts(a, p, opts);
  res.starts = static_cast<int>(starts.size());
  bool have = false;
  for (int s = 0; s < static_cast<int>(starts.size()); ++s) {
    auto run = detail::symmetric_ascent(a, p, starts[s], opts);
    if (nonneg) {
      // |P_A(x)| <= P_A(|x|) entrywise, so fold signs away
      VecX<Scalar> ax = run.x.cwiseAbs();
      const Scalar va = poly_form(a, ax);
      if (va >= run.value) {
        run.value = va;
        run.x = std::move(ax);
      }
    }
    if (!have || run.value > res.value) {
      have = true;
      res.value = run.value;
      res.witness = {std::move(run.x)};
      res.converged = run.converged;
      res.iterations = run.iterations;
      res.best_start = s;
    }
  }
  lp_normalize(res.witness[0], p);
  res.value = poly_form(a, res.witness[0]);
  return res;
}

/// lambda_min^(p)(A) = -lambda^(p)(-A).
template <typename Scalar>
SpectralResult<Scalar> lambda_min_p(const Tensor<Scalar>& a, double p,
                                    const SolverOptions<Scalar>& opts = {}) {
  Tensor<Scalar> neg = a;
  neg.data() = -neg.data();
  SpectralResult<Scalar> res = lambda_p(neg, p, opts);
  res.value = -res.value;
  return res;
}

/// eta^(p) = max(|lambda^(p)|, |lambda_min^(p)|). For nonnegative input
/// eta equals lambda^(p) and only that branch is solved. At p = 1 returns
/// the finite-candidate lower-bound report: |P_A| over all basis vectors
/// and all sign patterns of the scaled indicator of a maximal entry's
/// index set.
template <typename Scalar>
SpectralResult<Scalar> eta_p(const Tensor<Scalar>& a, double p,
                             const SolverOptions<Scalar>& opts = {}) {
  require_cubical(a);
  require_symmetric(a);
  require(std::isfinite(p) && p >= 1.0, Errc::bad_exponent, "p must be a finite real >= 1");
  const Index n = a.extent(0);

  if (p == 1.0) {
    SpectralResult<Scalar> res;
    res.p = p;
    res.converged = true;
    res.value = Scalar(-1);
    auto consider = [&](const VecX<Scalar>& x) {
      const Scalar v = std::abs(poly_form(a, x));
      if (v > res.value) {
        res.value = v;
        res.witness = {x};
      }
      ++res.starts;
    };
    for (Index i = 0; i < n; ++i) consider(detail::basis_vector<Scalar>(n, i));
    const MultiIndex t = detail::argmax_abs(a);
    std::vector<Index> support;
    VecX<Scalar> weight = VecX<Scalar>::Zero(n);
    for (int k = 0; k < a.order(); ++k) {
      if (weight[t[k]] == Scalar(0)) support.push_back(t[k]);
      weight[t[k]] += Scalar(1) / Scalar(a.order());
    }
    const size_t m = support.size();
    for (std::uint64_t bits = 0; bits < (1ull << (m - 1)); ++bits) {
      VecX<Scalar> x = weight;
      for (size_t j = 1; j < m; ++j)
        if (bits & (1ull << (j - 1))) x[support[j]] = -x[support[j]];
      consider(x);
    }
    return res;
  }

  SpectralResult<Scalar> hi = lambda_p(a, p, opts);
  if (a.data().minCoeff() >= Scalar(0)) {
    hi.value = std::abs(hi.value);
    return hi;
  }
  SpectralResult<Scalar> lo = lambda_min_p(a, p, opts);
  const bool both_converged = hi.converged && lo.converged;
  SpectralResult<Scalar> res = (std::abs(hi.value) >= std::abs(lo.value)) ? hi : lo;
  res.value = std::abs(res.value);
  res.converged = both_converged;
  return res;
}

/// max_k (A x^{r-1})_k / x_k^{r-1} for positive x; an upper bound on the
/// spectral radius of a nonnegative cubical tensor.
template <typename Scalar>
Scalar collatz_wielandt_upper(const Tensor<Scalar>& a, const VecX<Scalar>& x) {
  require_cubical(a);
  require(a.data().minCoeff() >= Scalar(0), Errc::negative_entries,
          "tensor must be nonnegative");
  require(x.size() == a.extent(0), Errc::dim_mismatch, "vector length vs order");
  require(x.size() > 0 && x.minCoeff() > Scalar(0), Errc::non_positive_vector,
          "vector must be entrywise positive");
  const VecX<Scalar> w = detail::apply_fixing_first(a, x);
  Scalar m(0);
  for (Index k = 0; k < x.size(); ++k)
    m = std::max(m, w[k] / std::pow(x[k], Scalar(a.order() - 1)));
  return m;
}

/// Spectral radius of a nonnegative cubical tensor by the normalized
/// power-type fixed point x <- (A x^{r-1})^{1/(r-1)}. The iteration runs on
/// the diagonally shifted tensor (one added to every a_{i..i}), which moves
/// the radius up by exactly one and removes the oscillation the bare map
/// exhibits on instances with periodic structure; the shift is subtracted
/// from the returned value. Collatz-Wielandt ratios bracket the radius and
/// the bracket midpoint is returned, with the final width in `gap`.
template <typename Scalar>
SpectralResult<Scalar> rho_nonnegative(const Tensor<Scalar>& a,
                                       const SolverOptions<Scalar>& opts = {}) {
  require_cubical(a);
  require(a.data().minCoeff() >= Scalar(0), Errc::negative_entries,
          "tensor must be nonnegative");
  const int r = a.order();
  const Index n = a.extent(0);

  SpectralResult<Scalar> res;
  res.p = static_cast<double>(r);
  res.starts = 1;
  if (a.data().maxCoeff() == Scalar(0)) {
    res.witness = {detail::constant_start<Scalar>(n, r)};
    res.converged = true;
    return res;
  }

  VecX<Scalar> x = VecX<Scalar>::Ones(n) / Scalar(n);
  Scalar lo(0), hi = std::numeric_limits<Scalar>::max();
  const Scalar inv = Scalar(1) / Scalar(r - 1);
  int it = 0;
  int last_improvement = 0;
  bool stalled = false;
  for (it = 1; it <= opts.max_iter; ++it) {
    VecX<Scalar> w = detail::apply_fixing_first(a, x);
    VecX<Scalar> xpow(n);
    for (Index k = 0; k < n; ++k) xpow[k] = std::pow(x[k], Scalar(r - 1));
    w += xpow;  // diagonal shift
    Scalar rmin = std::numeric_limits<Scalar>::max(), rmax(0);
    for (Index k = 0; k < n; ++k) {
      const Scalar ratio = w[k] / xpow[k];
      rmin = std::min(rmin, ratio);
      rmax = std::max(rmax, ratio);
    }
    const Scalar before = hi - lo;
    lo = std::max(lo, rmin);
    hi = std::min(hi, rmax);
    if (hi - lo < before * Scalar(0.999)) last_improvement = it;
    if (hi - lo <= Scalar(opts.tol) * std::max(Scalar(1), hi)) {
      res.converged = true;
      break;
    }
    if (it - last_improvement > 100) {
      stalled = true;  // bracket frozen: reducible input
      break;
    }
    for (Index k = 0; k < n; ++k) x[k] = std::pow(w[k], inv);
    x /= x.sum();
  }
  res.iterations = std::min(it, opts.max_iter);

  if (stalled && is_symmetric(a, Scalar(0))) {
    // a symmetric tensor is block diagonal over its components and the
    // radius is the largest per-component radius
    const auto comps = components(a);
    if (comps.size() > 1) {
      res.converged = true;
      res.value = Scalar(0);
      VecX<Scalar> embedded = VecX<Scalar>::Zero(n);
      for (const auto& comp : comps) {
        if (comp.zero) continue;
        const SpectralResult<Scalar> sub = rho_nonnegative(comp.sub, opts);
        res.converged = res.converged && sub.converged;
        res.iterations += sub.iterations;
        res.gap = std::max(res.gap, sub.gap);
        if (sub.value > res.value) {
          res.value = sub.value;
          embedded.setZero();
          for (size_t i = 0; i < comp.vertices.size(); ++i)
            embedded[comp.vertices[i]] = sub.witness.front()[i];
        }
      }
      res.witness = {std::move(embedded)};
      return res;
    }
  }

  res.gap = hi - lo;
  res.value = std::max(Scalar(0), (lo + hi) / Scalar(2) - Scalar(1));
  lp_normalize(x, r);
  res.witness = {std::move(x)};
  return res;
}

/// max_k | lambda x_k |x_k|^{p-2} - (1/r) dP_A/dx_k |; vanishes at critical
/// points of P_A on the unit l^p sphere.
template <typename Scalar>
Scalar eigen_residual(const Tensor<Scalar>& a, Scalar lambda, const VecX<Scalar>& x, double p) {
  require_cubical(a);
  require_symmetric(a);
  require(x.size() == a.extent(0), Errc::dim_mismatch, "vector length vs order");
  const VecX<Scalar> g = detail::apply_fixing_first(a, x);  // (1/r) grad P
  Scalar m(0);
  for (Index k = 0; k < x.size(); ++k) {
    const Scalar lhs = lambda * sign_of(x[k]) * std::pow(std::abs(x[k]), Scalar(p - 1.0));
    m = std::max(m, std::abs(lhs - g[k]));
  }
  return m;
}

/// Combines per-component maxima into the whole-tensor value for p > r:
/// (sum v_i^{p/(p-r)})^{(p-r)/p}, evaluated scale-invariantly so that
/// exponents p barely above r do not overflow.
inline double combine_components(const std::vector<double>& values, double p, int r) {
  require(p > static_cast<double>(r), Errc::bad_exponent, "combine_components needs p > r");
  const double t = p / (p - static_cast<double>(r));
  double vmax = 0.0;
  for (double v : values) {
    require(v >= 0.0, Errc::bad_parameter, "component values must be nonnegative");
    vmax = std::max(vmax, v);
  }
  if (vmax == 0.0) return 0.0;
  double acc = 0.0;
  for (double v : values) acc += std::pow(v / vmax, t);
  return vmax * std::pow(acc, 1.0 / t);
}

/// Spectral p-norm along a grid of exponents. Runs an ascending pass and a
/// descending pass, warm-starting each solve from its neighbor's eigenkit,
/// and keeps the better value per point; renormalizing a unit-q kit onto
/// the p-sphere can only raise the form for p >= q, so ascending grids come
/// out monotone.
template <typename Scalar>
std::vector<std::pair<double, Scalar>> norm_p_curve(const Tensor<Scalar>& a,
                                                    const std::vector<double>& ps,
                                                    const SolverOptions<Scalar>& opts = {}) {
  std::vector<Scalar> best(ps.size(), Scalar(-1));
  auto sweep = [&](bool forward) {
    SolverOptions<Scalar> o = opts;
    o.warm_kits.clear();
    for (size_t step = 0; step < ps.size(); ++step) {
      const size_t i = forward ? step : ps.size() - 1 - step;
      SpectralResult<Scalar> res = spectral_p_norm(a, ps[i], o);
      o.warm_kits = {res.witness};
      if (res.value > best[i]) best[i] = res.value;
    }
  };
  sweep(true);
  sweep(false);
  std::vector<std::pair<double, Scalar>> out;
  for (size_t i = 0; i < ps.size(); ++i) out.emplace_back(ps[i], best[i]);
  return out;
}

}  // namespace hypermat
