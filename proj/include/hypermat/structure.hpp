#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "hypermat/common.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/forms.hpp"
#include "hypermat/tensor.hpp"

namespace hypermat {

/// Split of [n] into r disjoint blocks N_1,...,N_r. selector(x) is the
/// block of x; locator(x) is x's rank within its block in the order
/// induced by [n]. All indices 0-based.
class Partition {
 public:
  Partition(Index n, std::vector<std::vector<Index>> blocks)
      : n_(n), blocks_(std::move(blocks)) {
    require(blocks_.size() >= 2, Errc::bad_order, "need at least two blocks");
    selector_.assign(n_, -1);
    locator_.assign(n_, -1);
    for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
      std::sort(blocks_[b].begin(), blocks_[b].end());
      for (Index pos = 0; pos < static_cast<Index>(blocks_[b].size()); ++pos) {
        const Index x = blocks_[b][pos];
        require(x >= 0 && x < n_, Errc::index_out_of_range, "block element outside [n]");
        require(selector_[x] < 0, Errc::bad_parameter, "blocks must be disjoint");
        selector_[x] = b;
        locator_[x] = pos;
      }
    }
    for (Index x = 0; x < n_; ++x)
      require(selector_[x] >= 0, Errc::bad_parameter, "blocks must cover [n]");
  }

  Index n() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Index>& block(int b) const { return blocks_[b]; }
  int selector(Index x) const { return static_cast<int>(selector_[x]); }
  Index locator(Index x) const { return locator_[x]; }

 private:
  Index n_;
  std::vector<std::vector<Index>> blocks_;
  std::vector<Index> selector_;
  std::vector<Index> locator_;
};

/// Partition of [n1+...+nr] into r consecutive intervals of the given sizes.
inline Partition interval_partition(const Dims& dims) {
  require(dims.size() >= 2, Errc::bad_order, "need at least two interval sizes");
  std::vector<std::vector<Index>> blocks;
  Index next = 0;
  for (Index d : dims) {
    require(d >= 1, Errc::bad_order, "interval sizes must be positive");
    std::vector<Index> b(d);
    std::iota(b.begin(), b.end(), next);
    next += d;
    blocks.push_back(std::move(b));
  }
  return Partition(next, std::move(blocks));
}

/// True iff every entry with |a| > tol has pairwise distinct block
/// selectors on its index tuple.
template <typename Scalar>
bool is_r_partite(const Tensor<Scalar>& a, const Partition& part, double tol = 0.0) {
  require_cubical(a);
  require(a.extent(0) == part.n(), Errc::dim_mismatch, "partition size vs tensor order");
  require(part.block_count() == a.order(), Errc::dim_mismatch,
          "partition must have one block per axis");
  const int r = a.order();
  bool ok = true;
  std::vector<bool> used(r);
  for_each_index(a.dims(), [&](const MultiIndex& idx, Index f) {
    if (!ok || std::abs(a[f]) <= tol) return;
    std::fill(used.begin(), used.end(), false);
    for (int s = 0; s < r; ++s) {
      const int b = part.selector(idx[s]);
      if (used[b]) {
        ok = false;
        return;
      }
      used[b] = true;
    }
  });
  return ok;
}

/// Cubical symmetric embedding of order n_1+...+n_r whose nonzero blocks
/// are exactly the r! transposes of a: an entry at (j_1,...,j_r) is zero
/// unless the j_s hit all r intervals, in which case it copies
/// a_{i_1..i_r} with i_{selector(j_s)} = locator(j_s).
template <typename Scalar>
std::pair<Tensor<Scalar>, Partition> symmetrant(const Tensor<Scalar>& a) {
  const int r = a.order();
  Partition part = interval_partition(a.dims());
  Tensor<Scalar> b(Dims(r, part.n()));
  MultiIndex src(r);
  std::vector<bool> used(r);
  for_each_index(b.dims(), [&](const MultiIndex& jdx, Index f) {
    std::fill(used.begin(), used.end(), false);
    for (int s = 0; s < r; ++s) {
      const int blk = part.selector(jdx[s]);
      if (used[blk]) return;  // selector collision: entry stays zero
      used[blk] = true;
      src[blk] = part.locator(jdx[s]);
    }
    b[f] = a(src);
  });
  return {std::move(b), std::move(part)};
}

/// Directed graph on [n]; adjacency kept as a dense boolean matrix since
/// instances are desk-scale.
class Digraph {
 public:
  explicit Digraph(Index n) : n_(n), adj_(n * n, false) {}

  Index vertex_count() const { return n_; }
  void add_edge(Index from, Index to) { adj_[from * n_ + to] = true; }
  bool has_edge(Index from, Index to) const { return adj_[from * n_ + to]; }

  bool strongly_connected() const {
    if (n_ <= 1) return true;
    return reaches_all(false) && reaches_all(true);
  }

  /// Connected components of the underlying undirected graph.
  std::vector<std::vector<Index>> undirected_components() const {
    std::vector<int> comp(n_, -1);
    int c = 0;
    for (Index s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<Index> stack{s};
      comp[s] = c;
      while (!stack.empty()) {
        const Index v = stack.back();
        stack.pop_back();
        for (Index w = 0; w < n_; ++w) {
          if (comp[w] < 0 && (has_edge(v, w) || has_edge(w, v))) {
            comp[w] = c;
            stack.push_back(w);
          }
        }
      }
      ++c;
    }
    std::vector<std::vector<Index>> out(c);
    for (Index v = 0; v < n_; ++v) out[comp[v]].push_back(v);
    return out;
  }

 private:
  bool reaches_all(bool reverse) const {
    std::vector<bool> seen(n_, false);
    std::vector<Index> stack{0};
    seen[0] = true;
    Index found = 1;
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      for (Index w = 0; w < n_; ++w) {
        const bool e = reverse ? has_edge(w, v) : has_edge(v, w);
        if (e && !seen[w]) {
          seen[w] = true;
          ++found;
          stack.push_back(w);
        }
      }
    }
    return found == n_;
  }

  Index n_;
  std::vector<bool> adj_;
};

/// D(A): edge k -> j for every nonzero entry a_{k,i_2..i_r} with j among
/// i_2,...,i_r.
template <typename Scalar>
Digraph digraph(const Tensor<Scalar>& a) {
  require_cubical(a);
  Digraph d(a.extent(0));
  for_each_index(a.dims(), [&](const MultiIndex& idx, Index f) {
    if (a[f] == Scalar(0)) return;
    for (int s = 1; s < a.order(); ++s) d.add_edge(idx[0], idx[s]);
  });
  return d;
}

template <typename Scalar>
bool is_weakly_irreducible(const Tensor<Scalar>& a) {
  return digraph(a).strongly_connected();
}

template <typename Scalar>
struct Component {
  std::vector<Index> vertices;
  Tensor<Scalar> sub;
  bool zero;  // no incident nonzeros (isolated vertex)
};

/// Connected components of D(A) for symmetric a, each with its principal
/// subtensor. Zero components are flagged.
template <typename Scalar>
std::vector<Component<Scalar>> components(const Tensor<Scalar>& a) {
  require_cubical(a);
  require_symmetric(a);
  std::vector<Component<Scalar>> out;
  for (auto& verts : digraph(a).undirected_components()) {
    Tensor<Scalar> sub = principal_subtensor(a, verts);
    const bool zero = (sub.data().abs().maxCoeff() == Scalar(0));
    out.push_back({std::move(verts), std::move(sub), zero});
  }
  return out;
}

}  // namespace hypermat
