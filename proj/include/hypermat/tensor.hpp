#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hypermat/common.hpp"
#include "hypermat/errors.hpp"

namespace hypermat {

/// Dense real r-matrix (hypermatrix) of order n_1 x ... x n_r, stored
/// row-major by axis order. Order and extents are fixed at construction.
/// Instances are safe to share across threads once filled.
template <typename Scalar = double>
class Tensor {
 public:
  using Array = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  explicit Tensor(Dims dims) : dims_(std::move(dims)) {
    require(dims_.size() >= 2, Errc::bad_order, "tensor order must be at least 2");
    for (Index d : dims_)
      require(d >= 1, Errc::bad_order, "tensor extents must be positive");
    strides_ = strides_for(dims_);
    data_ = Array::Zero(count_of(dims_));
  }

  int order() const { return static_cast<int>(dims_.size()); }
  const Dims& dims() const { return dims_; }
  Index extent(int k) const { return dims_[k]; }
  Index size() const { return data_.size(); }
  const Dims& strides() const { return strides_; }

  bool cubical() const {
    for (Index d : dims_)
      if (d != dims_[0]) return false;
    return true;
  }

  Index flat(const MultiIndex& idx) const {
    Index f = 0;
    for (int k = 0; k < order(); ++k) f += idx[k] * strides_[k];
    return f;
  }

  Scalar operator()(const MultiIndex& idx) const { return data_[flat(idx)]; }
  Scalar& operator()(const MultiIndex& idx) { return data_[flat(idx)]; }
  Scalar operator[](Index f) const { return data_[f]; }
  Scalar& operator[](Index f) { return data_[f]; }

  const Array& data() const { return data_; }
  Array& data() { return data_; }

  bool operator==(const Tensor& other) const {
    return dims_ == other.dims_ && (data_ == other.data_).all();
  }

 private:
  Dims dims_;
  Dims strides_;
  Array data_;
};

/// Read-only view of the (r-1)-matrix obtained by fixing index `axis` to
/// `pos`. Visits exactly prod_{j != axis} n_j entries.
template <typename Scalar>
class SliceRef {
 public:
  SliceRef(const Tensor<Scalar>& t, int axis, Index pos) : t_(t), axis_(axis), pos_(pos) {
    require(axis >= 0 && axis < t.order(), Errc::index_out_of_range, "slice axis");
    require(pos >= 0 && pos < t.extent(axis), Errc::index_out_of_range, "slice position");
  }

  Index entry_count() const { return t_.size() / t_.extent(axis_); }

  /// f receives the flat offset of each entry of the slice.
  template <typename F>
  void visit(F&& f) const {
    Dims sub = t_.dims();
    sub[axis_] = 1;
    const Index base = pos_ * t_.strides()[axis_];
    for_each_index(sub, [&](const MultiIndex& idx, Index) {
      Index off = base;
      for (int k = 0; k < t_.order(); ++k)
        if (k != axis_) off += idx[k] * t_.strides()[k];
      f(off);
    });
  }

  Scalar sum() const {
    Scalar s(0);
    visit([&](Index off) { s += t_[off]; });
    return s;
  }

  Scalar abs_sum() const {
    Scalar s(0);
    visit([&](Index off) { s += std::abs(t_[off]); });
    return s;
  }

  Scalar lp_norm(double q) const {
    VecX<Scalar> v(entry_count());
    Index i = 0;
    visit([&](Index off) { v[i++] = t_[off]; });
    return hypermat::lp_norm(v, q);
  }

 private:
  const Tensor<Scalar>& t_;
  int axis_;
  Index pos_;
};

/// Read-only view of an n_k-vector obtained by fixing all indices except
/// the free axis.
template <typename Scalar>
class FiberRef {
 public:
  FiberRef(const Tensor<Scalar>& t, int free_axis, const MultiIndex& fixed)
      : t_(t), stride_(t.strides()[free_axis]), len_(t.extent(free_axis)) {
    base_ = 0;
    for (int k = 0; k < t.order(); ++k) {
      if (k == free_axis) continue;
      require(fixed[k] >= 0 && fixed[k] < t.extent(k), Errc::index_out_of_range, "fiber index");
      base_ += fixed[k] * t.strides()[k];
    }
  }

  Index length() const { return len_; }
  Scalar operator[](Index i) const { return t_[base_ + i * stride_]; }

  VecX<Scalar> to_vector() const {
    VecX<Scalar> v(len_);
    for (Index i = 0; i < len_; ++i) v[i] = (*this)[i];
    return v;
  }

  Scalar lp_norm(double q) const { return hypermat::lp_norm(to_vector(), q); }

 private:
  const Tensor<Scalar>& t_;
  Index base_;
  Index stride_;
  Index len_;
};

template <typename Scalar>
void require_cubical(const Tensor<Scalar>& a) {
  require(a.cubical(), Errc::not_cubical, "tensor must be cubical");
}

/// Builds a dense tensor from (index tuple, value) pairs; unlisted entries
/// are zero. Duplicate tuples are a hard error.
template <typename Scalar = double>
Tensor<Scalar> from_coo(int order, const Dims& dims,
                        const std::vector<std::pair<MultiIndex, Scalar>>& coo) {
  require(order >= 2, Errc::bad_order, "order must be at least 2");
  require(static_cast<int>(dims.size()) == order, Errc::bad_order,
          "dims list must have one extent per axis");
  Tensor<Scalar> t(dims);
  std::unordered_set<Index> seen;
  for (const auto& [idx, val] : coo) {
    require(static_cast<int>(idx.size()) == order, Errc::index_out_of_range,
            "index tuple arity mismatch");
    for (int k = 0; k < order; ++k)
      require(idx[k] >= 0 && idx[k] < dims[k], Errc::index_out_of_range,
              "coo index outside dims");
    require(std::isfinite(static_cast<double>(val)), Errc::bad_parameter,
            "entries must be finite");
    const Index f = t.flat(idx);
    require(seen.insert(f).second, Errc::duplicate_index, "duplicate coo index tuple");
    t[f] = val;
  }
  return t;
}

/// B with b_{i_{perm(1)},...,i_{perm(r)}} = a_{i_1,...,i_r}; extents move
/// with their axes. perm is 0-based.
template <typename Scalar>
Tensor<Scalar> transpose(const Tensor<Scalar>& a, const std::vector<int>& perm) {
  const int r = a.order();
  require(static_cast<int>(perm.size()) == r, Errc::bad_permutation, "permutation arity");
  std::vector<bool> hit(r, false);
  for (int p : perm) {
    require(p >= 0 && p < r && !hit[p], Errc::bad_permutation, "not a permutation of the axes");
    hit[p] = true;
  }
  Dims bdims(r);
  for (int s = 0; s < r; ++s) bdims[perm[s]] = a.dims()[s];
  Tensor<Scalar> b(bdims);
  MultiIndex jdx(r);
  for_each_index(a.dims(), [&](const MultiIndex& idx, Index f) {
    for (int s = 0; s < r; ++s) jdx[perm[s]] = idx[s];
    b(jdx) = a[f];
  });
  return b;
}

/// True iff all r! transposes of the cubical tensor agree entrywise
/// within tol (absolute).
template <typename Scalar>
bool is_symmetric(const Tensor<Scalar>& a, double tol = 0.0) {
  require_cubical(a);
  require(tol >= 0.0, Errc::bad_parameter, "tol must be nonnegative");
  const int r = a.order();
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  MultiIndex jdx(r);
  bool ok = true;
  while (std::next_permutation(perm.begin(), perm.end())) {
    for_each_index(a.dims(), [&](const MultiIndex& idx, Index f) {
      for (int s = 0; s < r; ++s) jdx[perm[s]] = idx[s];
      if (std::abs(a[f] - a(jdx)) > tol) ok = false;
    });
    if (!ok) return false;
  }
  return ok;
}

template <typename Scalar>
Scalar slice_abs_sum(const Tensor<Scalar>& a, int axis, Index pos) {
  return SliceRef<Scalar>(a, axis, pos).abs_sum();
}

template <typename Scalar>
Scalar slice_sum(const Tensor<Scalar>& a, int axis, Index pos) {
  return SliceRef<Scalar>(a, axis, pos).sum();
}

/// Largest slice l^1 weight along an axis: max_s |A_s^(k)|_1.
template <typename Scalar>
Scalar max_slice_abs_sum(const Tensor<Scalar>& a, int axis) {
  Scalar m(0);
  for (Index s = 0; s < a.extent(axis); ++s)
    m = std::max(m, slice_abs_sum(a, axis, s));
  return m;
}

/// Entrywise l^q norm of all entries; q = infinity gives max |a|.
template <typename Scalar>
Scalar entrywise_norm(const Tensor<Scalar>& a, double q) {
  require(q >= 1.0, Errc::bad_exponent, "entrywise norm needs q >= 1 or q = inf");
  if (std::isinf(q)) return a.data().abs().maxCoeff();
  if (q == 1.0) return a.data().abs().sum();
  const Scalar m = a.data().abs().maxCoeff();
  if (m == Scalar(0)) return Scalar(0);
  return m * std::pow((a.data().abs() / m).pow(Scalar(q)).sum(), Scalar(1) / Scalar(q));
}

/// Sum of all entries.
template <typename Scalar>
Scalar entry_sum(const Tensor<Scalar>& a) {
  return a.data().sum();
}

/// True iff along each axis all slice sums agree within a relative spread
/// of tol.
template <typename Scalar>
bool is_regular(const Tensor<Scalar>& a, double tol = 1e-12) {
  require(tol >= 0.0, Errc::bad_parameter, "tol must be nonnegative");
  for (int k = 0; k < a.order(); ++k) {
    Scalar lo = std::numeric_limits<Scalar>::max();
    Scalar hi = std::numeric_limits<Scalar>::lowest();
    Scalar mag(0);
    for (Index s = 0; s < a.extent(k); ++s) {
      const Scalar v = slice_sum(a, k, s);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      mag = std::max(mag, std::abs(v));
    }
    if (hi - lo > tol * std::max(Scalar(1), mag)) return false;
  }
  return true;
}

/// Outer product tensor a_{i_1...i_r} = x^(1)_{i_1} ... x^(r)_{i_r}.
template <typename Scalar>
Tensor<Scalar> rank_one(const std::vector<VecX<Scalar>>& vectors) {
  require(vectors.size() >= 2, Errc::bad_order, "rank_one needs at least two vectors");
  Dims dims;
  for (const auto& v : vectors) {
    require(v.size() >= 1, Errc::bad_order, "rank_one factors must be nonempty");
    dims.push_back(v.size());
  }
  Tensor<Scalar> t(dims);
  for_each_index(dims, [&](const MultiIndex& idx, Index f) {
    Scalar prod(1);
    for (size_t k = 0; k < vectors.size(); ++k) prod *= vectors[k][idx[k]];
    t[f] = prod;
  });
  return t;
}

/// Principal subtensor over the given (cubical) index set.
template <typename Scalar>
Tensor<Scalar> principal_subtensor(const Tensor<Scalar>& a, const std::vector<Index>& verts) {
  require_cubical(a);
  const int r = a.order();
  const Index m = static_cast<Index>(verts.size());
  require(m >= 1, Errc::bad_parameter, "empty vertex set");
  // order-r tensors need extent >= 1 only; cubical of order m
  Tensor<Scalar> sub(Dims(r, m));
  MultiIndex src(r);
  for_each_index(sub.dims(), [&](const MultiIndex& idx, Index f) {
    for (int k = 0; k < r; ++k) src[k] = verts[idx[k]];
    sub[f] = a(src);
  });
  return sub;
}

}  // namespace hypermat
