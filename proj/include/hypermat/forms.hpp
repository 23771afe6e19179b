#pragma once

#include <Eigen/Core>
#include <cmath>
#include <vector>

#include "hypermat/common.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/tensor.hpp"

namespace hypermat {

namespace detail {

template <typename Scalar>
using RowMajorMat =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Contracts every axis except `keep` against the given vectors, producing
/// the length-n_keep block gradient g with
///   g_s = sum_{i_keep = s} a_{i_1..i_r} prod_{j != keep} x^(j)_{i_j}.
/// Row-major layout lets each step be a single matrix-vector product:
/// trailing axes fold in from the right, leading axes from the left.
template <typename Scalar>
VecX<Scalar> contract_except(const Tensor<Scalar>& a, const std::vector<VecX<Scalar>>& xs,
                             int keep) {
  const int r = a.order();
  VecX<Scalar> buf = a.data().matrix();
  Index elems = buf.size();
  for (int axis = r - 1; axis > keep; --axis) {
    const Index len = a.extent(axis);
    const Index outer = elems / len;
    Eigen::Map<const RowMajorMat<Scalar>> m(buf.data(), outer, len);
    VecX<Scalar> next = m * xs[axis];
    buf.swap(next);
    elems = outer;
  }
  for (int axis = 0; axis < keep; ++axis) {
    const Index len = a.extent(axis);
    const Index rest = elems / len;
    Eigen::Map<const RowMajorMat<Scalar>> m(buf.data(), len, rest);
    VecX<Scalar> next = m.transpose() * xs[axis];
    buf.swap(next);
    elems = rest;
  }
  return buf;
}

template <typename Scalar>
Scalar contract_all(const Tensor<Scalar>& a, const std::vector<VecX<Scalar>>& xs) {
  VecX<Scalar> g = contract_except(a, xs, 0);
  return g.dot(xs[0]);
}

/// Block gradient of the polynomial form: fixes the first axis and feeds
/// x everywhere else. Equals (1/r) * grad P_A(x) for symmetric a.
template <typename Scalar>
VecX<Scalar> apply_fixing_first(const Tensor<Scalar>& a, const VecX<Scalar>& x) {
  std::vector<VecX<Scalar>> xs(a.order(), x);
  return contract_except(a, xs, 0);
}

}  // namespace detail

template <typename Scalar>
void require_lengths_match(const Tensor<Scalar>& a, const std::vector<VecX<Scalar>>& xs) {
  require(static_cast<int>(xs.size()) == a.order(), Errc::dim_mismatch,
          "need one vector per axis");
  for (int k = 0; k < a.order(); ++k)
    require(xs[k].size() == a.extent(k), Errc::dim_mismatch, "vector length vs extent");
}

/// L_A(x^(1),...,x^(r)) = sum a_{i_1..i_r} x^(1)_{i_1} ... x^(r)_{i_r}.
template <typename Scalar>
Scalar linear_form(const Tensor<Scalar>& a, const std::vector<VecX<Scalar>>& xs) {
  require_lengths_match(a, xs);
  return detail::contract_all(a, xs);
}

/// P_A(x) = L_A(x,...,x) for cubical a.
template <typename Scalar>
Scalar poly_form(const Tensor<Scalar>& a, const VecX<Scalar>& x) {
  require_cubical(a);
  require(x.size() == a.extent(0), Errc::dim_mismatch, "vector length vs order");
  std::vector<VecX<Scalar>> xs(a.order(), x);
  return detail::contract_all(a, xs);
}

inline constexpr double kSymmetryCheckTol = 1e-10;

template <typename Scalar>
void require_symmetric(const Tensor<Scalar>& a) {
  const Scalar scale = a.size() ? a.data().abs().maxCoeff() : Scalar(0);
  require(is_symmetric(a, kSymmetryCheckTol * std::max(Scalar(1), scale)),
          Errc::not_symmetric, "tensor must be symmetric");
}

/// Gradient of P_A at x for symmetric a; component k is
/// r * sum_{i_2..i_r} a_{k,i_2..i_r} x_{i_2} ... x_{i_r}.
template <typename Scalar>
VecX<Scalar> poly_gradient(const Tensor<Scalar>& a, const VecX<Scalar>& x) {
  require_cubical(a);
  require(x.size() == a.extent(0), Errc::dim_mismatch, "vector length vs order");
  require_symmetric(a);
  return Scalar(a.order()) * detail::apply_fixing_first(a, x);
}

/// |<grad P_A(x), x> - r P_A(x)|; identically zero in exact arithmetic.
template <typename Scalar>
Scalar euler_residual(const Tensor<Scalar>& a, const VecX<Scalar>& x) {
  require_cubical(a);
  require(x.size() == a.extent(0), Errc::dim_mismatch, "vector length vs order");
  require_symmetric(a);
  const VecX<Scalar> g = Scalar(a.order()) * detail::apply_fixing_first(a, x);
  const Scalar p = poly_form(a, x);
  return std::abs(g.dot(x) - Scalar(a.order()) * p);
}

}  // namespace hypermat
