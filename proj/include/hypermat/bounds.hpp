#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "hypermat/common.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/spectral.hpp"
#include "hypermat/tensor.hpp"

namespace hypermat {

namespace detail {

/// Per-axis slice l^1 weights S[k][s] = |A_s^(k)|_1.
template <typename Scalar>
std::vector<VecX<Scalar>> all_slice_abs_sums(const Tensor<Scalar>& a) {
  std::vector<VecX<Scalar>> s;
  for (int k = 0; k < a.order(); ++k) {
    VecX<Scalar> v(a.extent(k));
    for (Index j = 0; j < a.extent(k); ++j) v[j] = slice_abs_sum(a, k, j);
    s.push_back(std::move(v));
  }
  return s;
}

}  // namespace detail

/// (S^(1) ... S^(r))^{1/r} with S^(k) the largest slice l^1 weight along
/// axis k; upper bound for the spectral r-norm.
template <typename Scalar>
Scalar upper_hlp(const Tensor<Scalar>& a) {
  Scalar prod(1);
  for (int k = 0; k < a.order(); ++k) prod *= max_slice_abs_sum(a, k);
  return std::pow(prod, Scalar(1) / Scalar(a.order()));
}

/// Support-restricted slice product: the max over nonzero entries of the
/// product of their r incident slice weights, to the 1/r. Never exceeds
/// upper_hlp and is often much smaller. Zero tensor gives 0.
template <typename Scalar>
Scalar upper_main(const Tensor<Scalar>& a) {
  const auto s = detail::all_slice_abs_sums(a);
  Scalar best(0);
  for_each_index(a.dims(), [&](const MultiIndex& idx, Index f) {
    if (a[f] == Scalar(0)) return;
    Scalar prod(1);
    for (int k = 0; k < a.order(); ++k) prod *= s[k][idx[k]];
    best = std::max(best, prod);
  });
  return std::pow(best, Scalar(1) / Scalar(a.order()));
}

/// (max row weight * max column weight)^{1/2} for 2-matrices.
template <typename Scalar>
Scalar upper_schur(const Tensor<Scalar>& a) {
  require(a.order() == 2, Errc::not_order2, "Schur bound needs a 2-matrix");
  return std::sqrt(max_slice_abs_sum(a, 0) * max_slice_abs_sum(a, 1));
}

/// Per-slice weighted neighborhood bound: for each axis k take the worst
/// slice value of sum |a| * product of the other incident slice weights,
/// then the best axis, to the 1/r.
template <typename Scalar>
Scalar upper_th3(const Tensor<Scalar>& a) {
  const int r = a.order();
  const auto s = detail::all_slice_abs_sums(a);
  std::vector<VecX<Scalar>> acc;
  for (int k = 0; k < r; ++k) acc.push_back(VecX<Scalar>::Zero(a.extent(k)));
  for_each_index(a.dims(), [&](const MultiIndex& idx, Index f) {
    if (a[f] == Scalar(0)) return;
    Scalar prod = std::abs(a[f]);
    for (int k = 0; k < r; ++k) prod *= s[k][idx[k]];
    // s[k][idx[k]] > 0 here since the slice contains this nonzero entry
    for (int k = 0; k < r; ++k) acc[k][idx[k]] += prod / s[k][idx[k]];
  });
  Scalar best = std::numeric_limits<Scalar>::max();
  for (int k = 0; k < r; ++k) best = std::min(best, acc[k].maxCoeff());
  return std::pow(best, Scalar(1) / Scalar(r));
}

/// Entrywise dual-norm bound |A|_{p/(p-1)}; tight exactly on rank-one
/// tensors.
template <typename Scalar>
Scalar upper_entry_norm(const Tensor<Scalar>& a, double p) {
  require(p > 1.0, Errc::bad_exponent, "entry-norm bound needs p > 1");
  return entrywise_norm(a, dual_exponent(p));
}

/// True iff a equals an outer product of r vectors within tol (relative).
/// Tested as: every mode unfolding of |a| has all 2x2 minors vanishing
/// against the pivot, and the entry signs factor over the axes.
template <typename Scalar>
bool is_rank_one(const Tensor<Scalar>& a, double tol = 1e-9) {
  const int r = a.order();
  const Scalar amax = a.data().abs().maxCoeff();
  if (amax == Scalar(0)) return true;
  const Scalar cut = Scalar(tol) * amax;

  const MultiIndex pivot = detail::argmax_abs(a);
  const Scalar pv = std::abs(a(pivot));
  bool ok = true;
  MultiIndex row = pivot, col = pivot;
  for_each_index(a.dims(), [&](const MultiIndex& idx, Index f) {
    if (!ok) return;
    for (int k = 0; k < r && ok; ++k) {
      // 2x2 minor of the mode-k unfolding against the pivot row/column
      row = idx;
      row[k] = pivot[k];
      col = pivot;
      col[k] = idx[k];
      const Scalar minor = std::abs(a[f]) * pv - std::abs(a(row)) * std::abs(a(col));
      if (std::abs(minor) > Scalar(tol) * amax * amax) ok = false;
    }
  });
  if (!ok) return false;

  // sign consistency: sign(a_idx) sign(a_pivot) must factor through the
  // per-axis signs measured against the pivot tuple
  std::vector<VecX<Scalar>> axis_sign;
  for (int k = 0; k < r; ++k) {
    VecX<Scalar> s(a.extent(k));
    MultiIndex probe = pivot;
    for (Index i = 0; i < a.extent(k); ++i) {
      probe[k] = i;
      s[i] = sign_of(a(probe) * a(pivot));
    }
    axis_sign.push_back(std::move(s));
  }
  for_each_index(a.dims(), [&](const MultiIndex& idx, Index f) {
    if (!ok || std::abs(a[f]) <= cut) return;
    Scalar expect(1);
    for (int k = 0; k < r; ++k) expect *= axis_sign[k][idx[k]];
    if (sign_of(a[f]) * sign_of(a(pivot)) != expect) ok = false;
  });
  return ok;
}

/// (n_1...n_r)^{-1/p} * sum_j |slice_sum(A, k, j)|; lower bound for the
/// spectral p-norm, tight on regular nonnegative tensors for p >= r.
template <typename Scalar>
Scalar lower_slice_sum(const Tensor<Scalar>& a, double p, int axis) {
  require(p >= 1.0, Errc::bad_exponent, "p must be at least 1");
  Scalar acc(0);
  for (Index j = 0; j < a.extent(axis); ++j) acc += std::abs(slice_sum(a, axis, j));
  return std::pow(Scalar(a.size()), Scalar(-1.0 / p)) * acc;
}

/// Largest fiber dual norm max_F |F|_{p/(p-1)}; tight when the support is
/// a single fiber.
template <typename Scalar>
Scalar lower_fiber(const Tensor<Scalar>& a, double p) {
  require(p > 1.0, Errc::bad_exponent, "fiber bound needs p > 1");
  const double q = dual_exponent(p);
  Scalar best(0);
  for (int k = 0; k < a.order(); ++k) {
    Dims sub = a.dims();
    sub[k] = 1;
    for_each_index(sub, [&](const MultiIndex& idx, Index) {
      best = std::max(best, FiberRef<Scalar>(a, k, idx).lp_norm(q));
    });
  }
  return best;
}

/// Power-sum slice bound along one axis:
/// ( n_k^{1/(p-1)} / (n_1...n_r)^{1/(p-1)} * sum_j |slice_sum|^{p/(p-1)} )^{(p-1)/p},
/// evaluated in the equivalent overflow-safe form
/// (n_k / (n_1...n_r))^{1/p} * |slice sums|_{p/(p-1)}.
template <typename Scalar>
Scalar lower_th5(const Tensor<Scalar>& a, double p, int axis) {
  require(p > 1.0, Errc::bad_exponent, "power-sum bound needs p > 1");
  VecX<Scalar> sums(a.extent(axis));
  for (Index j = 0; j < a.extent(axis); ++j) sums[j] = slice_sum(a, axis, j);
  const Scalar ratio = Scalar(a.extent(axis)) / Scalar(a.size());
  return std::pow(ratio, Scalar(1.0 / p)) * lp_norm(sums, dual_exponent(p));
}

/// Exact p-spectral radius n^{-r/p} * (sum of entries) of a regular
/// nonnegative symmetric tensor, p >= r.
template <typename Scalar>
Scalar regular_value(const Tensor<Scalar>& a, double p, double regular_tol = 1e-12) {
  require_cubical(a);
  require_symmetric(a);
  require(a.data().minCoeff() >= Scalar(0), Errc::negative_entries,
          "tensor must be nonnegative");
  require(p >= static_cast<double>(a.order()), Errc::bad_exponent, "needs p >= r");
  require(is_regular(a, regular_tol), Errc::not_regular, "tensor must be regular");
  const double n = static_cast<double>(a.extent(0));
  return std::pow(n, -static_cast<double>(a.order()) / p) * entry_sum(a);
}

/// Every closed-form bound applicable to (A, p), with the bracket check.
/// The r-norm uppers (hlp, main, th3; schur for 2-matrices) apply only at
/// p = r; the entrywise, fiber and power-sum bounds need p > 1; the
/// regular value needs a regular nonnegative symmetric input and p >= r.
template <typename Scalar = double>
struct BoundsReport {
  double p = 0.0;
  std::vector<Scalar> slice_sum_lower;        // per axis
  std::optional<Scalar> fiber_lower;          // p > 1
  std::vector<Scalar> th5_lower;              // per axis, p > 1
  std::optional<Scalar> regular;              // regular nonnegative symmetric, p >= r
  std::optional<Scalar> schur;                // r = 2, p = 2
  std::optional<Scalar> hlp;                  // p = r
  std::optional<Scalar> main_bound;           // p = r
  std::optional<Scalar> th3;                  // p = r
  std::optional<Scalar> entry_norm;           // p > 1
  std::optional<Scalar> estimate;             // optimizer value, on request
  Scalar max_lower = Scalar(0);
  Scalar min_upper = Scalar(0);
  bool sandwich_ok = true;
};

template <typename Scalar>
BoundsReport<Scalar> bounds_report(const Tensor<Scalar>& a, double p, bool with_estimate = false,
                                   const SolverOptions<Scalar>& opts = {}) {
  require(std::isfinite(p) && p >= 1.0, Errc::bad_exponent, "p must be a finite real >= 1");
  const int r = a.order();
  BoundsReport<Scalar> rep;
  rep.p = p;
  for (int k = 0; k < r; ++k) rep.slice_sum_lower.push_back(lower_slice_sum(a, p, k));
  if (p > 1.0) {
    rep.fiber_lower = lower_fiber(a, p);
    for (int k = 0; k < r; ++k) rep.th5_lower.push_back(lower_th5(a, p, k));
    rep.entry_norm = upper_entry_norm(a, p);
  }
  if (p == static_cast<double>(r)) {
    rep.hlp = upper_hlp(a);
    rep.main_bound = upper_main(a);
    rep.th3 = upper_th3(a);
    if (r == 2) rep.schur = upper_schur(a);
  }
  if (a.cubical() && a.data().minCoeff() >= Scalar(0) &&
      p >= static_cast<double>(r) && is_regular(a) &&
      is_symmetric(a, kSymmetryCheckTol * std::max(Scalar(1), a.data().abs().maxCoeff())))
    rep.regular = regular_value(a, p);
  if (with_estimate) rep.estimate = spectral_p_norm(a, p, opts).value;

  rep.max_lower = Scalar(0);
  for (Scalar v : rep.slice_sum_lower) rep.max_lower = std::max(rep.max_lower, v);
  for (Scalar v : rep.th5_lower) rep.max_lower = std::max(rep.max_lower, v);
  if (rep.fiber_lower) rep.max_lower = std::max(rep.max_lower, *rep.fiber_lower);
  if (rep.regular) rep.max_lower = std::max(rep.max_lower, *rep.regular);
  rep.min_upper = std::numeric_limits<Scalar>::infinity();  // no upper applies at p = 1
  for (const auto& u : {rep.schur, rep.hlp, rep.main_bound, rep.th3, rep.entry_norm})
    if (u) rep.min_upper = std::min(rep.min_upper, *u);

  const Scalar rel =
      std::isinf(rep.min_upper) ? Scalar(1) : std::max(Scalar(1), rep.min_upper);
  rep.sandwich_ok = rep.max_lower <= rep.min_upper + Scalar(1e-9) * rel;
  if (rep.estimate) {
    rep.sandwich_ok = rep.sandwich_ok &&
                      rep.max_lower <= *rep.estimate + Scalar(1e-8) * rel &&
                      *rep.estimate <= rep.min_upper + Scalar(1e-12) * rel;
  }
  return rep;
}

}  // namespace hypermat
