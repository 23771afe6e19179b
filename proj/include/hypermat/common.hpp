#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "hypermat/errors.hpp"

namespace hypermat {

using Index = Eigen::Index;
using Dims = std::vector<Index>;
using MultiIndex = std::vector<Index>;

template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Vec = VecX<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Conjugate exponent q with 1/p + 1/q = 1. p must be > 1.
inline double dual_exponent(double p) { return p / (p - 1.0); }

/// Row-major strides for the given extents.
inline Dims strides_for(const Dims& dims) {
  Dims s(dims.size());
  Index acc = 1;
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    s[k] = acc;
    acc *= dims[k];
  }
  return s;
}

inline Index count_of(const Dims& dims) {
  Index n = 1;
  for (Index d : dims) n *= d;
  return n;
}

/// Visits every multi-index of `dims` in row-major order.
/// f receives (multi_index, flat_index).
template <typename F>
void for_each_index(const Dims& dims, F&& f) {
  const int r = static_cast<int>(dims.size());
  for (int k = 0; k < r; ++k)
    if (dims[k] <= 0) return;
  MultiIndex idx(r, 0);
  const Index total = count_of(dims);
  for (Index flat = 0; flat < total; ++flat) {
    f(static_cast<const MultiIndex&>(idx), flat);
    for (int k = r - 1; k >= 0; --k) {
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
    }
  }
}

template <typename Scalar>
Scalar sign_of(Scalar x) {
  return x > Scalar(0) ? Scalar(1) : (x < Scalar(0) ? Scalar(-1) : Scalar(0));
}

/// l^p norm of a vector, overflow-safe; p may be +infinity.
template <typename Derived>
typename Derived::Scalar lp_norm(const Eigen::MatrixBase<Derived>& v, double p) {
  using S = typename Derived::Scalar;
  if (v.size() == 0) return S(0);
  const S m = v.cwiseAbs().maxCoeff();
  if (m == S(0) || std::isinf(p)) return m;
  if (p == 1.0) return v.cwiseAbs().sum();
  if (p == 2.0) return v.norm();
  S acc(0);
  for (Index i = 0; i < v.size(); ++i) acc += std::pow(std::abs(v[i]) / m, S(p));
  return m * std::pow(acc, S(1) / S(p));
}

template <typename Scalar>
void lp_normalize(VecX<Scalar>& v, double p) {
  const Scalar n = lp_norm(v, p);
  if (n > Scalar(0)) v /= n;
}

/// Maximizer of <g, x> over the unit l^p sphere together with the attained
/// value |g|_q, q = p/(p-1). Entrywise x_i = sign(g_i) |g_i|^{1/(p-1)},
/// normalized. Returns value 0 and leaves x zero when g == 0.
template <typename Scalar>
Scalar dual_scale(const VecX<Scalar>& g, double p, VecX<Scalar>& x) {
  const Scalar m = g.size() ? g.cwiseAbs().maxCoeff() : Scalar(0);
  x = VecX<Scalar>::Zero(g.size());
  if (m == Scalar(0)) return Scalar(0);
  const double e = 1.0 / (p - 1.0);
  for (Index i = 0; i < g.size(); ++i)
    x[i] = sign_of(g[i]) * std::pow(std::abs(g[i]) / m, Scalar(e));
  lp_normalize(x, p);
  return lp_norm(g, dual_exponent(p));
}

/// Deterministic uniform generator; identical sequences on every platform
/// for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // splitmix-style warmup so nearby seeds decorrelate
    for (int i = 0; i < 4; ++i) next();
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace hypermat
