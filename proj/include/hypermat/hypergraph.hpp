#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "hypermat/common.hpp"
#include "hypermat/errors.hpp"
#include "hypermat/spectral.hpp"
#include "hypermat/structure.hpp"
#include "hypermat/tensor.hpp"

namespace hypermat {

inline double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Weighted r-uniform hypergraph on vertex set [n]: every edge is a set of
/// exactly r distinct vertices with a positive weight, no duplicates.
class WeightedRGraph {
 public:
  struct Edge {
    std::vector<Index> verts;  // strictly increasing
    double weight;
  };

  WeightedRGraph(int r, Index n, std::vector<Edge> edges)
      : r_(r), n_(n), edges_(std::move(edges)) {
    require(r_ >= 2, Errc::bad_order, "edge size must be at least 2");
    require(n_ >= 0, Errc::bad_parameter, "vertex count must be nonnegative");
    std::set<std::vector<Index>> seen;
    for (auto& e : edges_) {
      require(static_cast<int>(e.verts.size()) == r_, Errc::bad_parameter,
              "edge must have exactly r vertices");
      std::sort(e.verts.begin(), e.verts.end());
      for (size_t i = 0; i < e.verts.size(); ++i) {
        require(e.verts[i] >= 0 && e.verts[i] < n_, Errc::vertex_out_of_range,
                "edge vertex outside [n]");
        require(i == 0 || e.verts[i] != e.verts[i - 1], Errc::bad_parameter,
                "edge vertices must be distinct");
      }
      require(e.weight > 0.0, Errc::bad_parameter, "edge weights must be positive");
      require(seen.insert(e.verts).second, Errc::bad_parameter, "duplicate edge");
    }
  }

  int r() const { return r_; }
  Index n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  double weight_sum() const {
    double s = 0.0;
    for (const auto& e : edges_) s += e.weight;
    return s;
  }

 private:
  int r_;
  Index n_;
  std::vector<Edge> edges_;
};

/// Sum of the weights of the edges containing v. Along any axis the
/// adjacency tensor's slice weight is (r-1)! times the degree.
inline double degree(const WeightedRGraph& g, Index v) {
  require(v >= 0 && v < g.n(), Errc::vertex_out_of_range, "vertex outside [n]");
  double d = 0.0;
  for (const auto& e : g.edges())
    if (std::binary_search(e.verts.begin(), e.verts.end(), v)) d += e.weight;
  return d;
}

/// Cubical symmetric nonnegative adjacency tensor: each edge contributes
/// its weight at all r! orderings of its vertices.
template <typename Scalar = double>
Tensor<Scalar> adjacency_tensor(const WeightedRGraph& g) {
  require(g.n() >= 1, Errc::bad_parameter, "graph must have at least one vertex");
  Tensor<Scalar> a(Dims(g.r(), g.n()));
  MultiIndex idx(g.r());
  for (const auto& e : g.edges()) {
    std::vector<Index> perm = e.verts;
    do {
      std::copy(perm.begin(), perm.end(), idx.begin());
      a(idx) = Scalar(e.weight);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return a;
}

/// K_{1,n}: the 2-graph star with center 0 and n leaves.
inline WeightedRGraph gen_star(Index n) {
  require(n >= 1, Errc::bad_parameter, "star needs at least one leaf");
  std::vector<WeightedRGraph::Edge> edges;
  for (Index i = 1; i <= n; ++i) edges.push_back({{0, i}, 1.0});
  return WeightedRGraph(2, n + 1, std::move(edges));
}

/// k edges through vertex 0 that pairwise share only vertex 0;
/// 1 + k(r-1) vertices.
inline WeightedRGraph gen_beta_star(int r, Index k) {
  require(r >= 2, Errc::bad_parameter, "edge size must be at least 2");
  require(k >= 1, Errc::bad_parameter, "need at least one edge");
  std::vector<WeightedRGraph::Edge> edges;
  for (Index i = 0; i < k; ++i) {
    std::vector<Index> verts{0};
    for (int j = 0; j < r - 1; ++j) verts.push_back(1 + i * (r - 1) + j);
    edges.push_back({std::move(verts), 1.0});
  }
  return WeightedRGraph(r, 1 + k * (r - 1), std::move(edges));
}

/// All-ones cubical r-tensor of order n.
template <typename Scalar = double>
Tensor<Scalar> gen_all_ones(int r, Index n) {
  require(r >= 2 && n >= 1, Errc::bad_parameter, "need r >= 2 and n >= 1");
  Tensor<Scalar> a(Dims(r, n));
  a.data().setOnes();
  return a;
}

/// Cycle 2-graph on n >= 3 vertices.
inline WeightedRGraph gen_cycle(Index n) {
  require(n >= 3, Errc::bad_parameter, "cycle needs at least three vertices");
  std::vector<WeightedRGraph::Edge> edges;
  for (Index i = 0; i < n; ++i) edges.push_back({{i, (i + 1) % n}, 1.0});
  return WeightedRGraph(2, n, std::move(edges));
}

/// Random r-graph: every r-subset of [n] is kept with probability
/// `density`; weights are 1 or, when `weighted`, drawn from [0.1, 1].
inline WeightedRGraph gen_random(int r, Index n, double density, std::uint64_t seed,
                                 bool weighted = false) {
  require(r >= 2, Errc::bad_parameter, "edge size must be at least 2");
  require(n >= r, Errc::bad_parameter, "need at least r vertices");
  require(density >= 0.0 && density <= 1.0, Errc::bad_parameter, "density must be in [0,1]");
  Rng rng(seed);
  std::vector<WeightedRGraph::Edge> edges;
  std::vector<Index> comb(r);
  for (int i = 0; i < r; ++i) comb[i] = i;
  while (true) {
    if (rng.uniform() < density) {
      const double w = weighted ? 0.1 + 0.9 * rng.uniform() : 1.0;
      edges.push_back({comb, w});
    }
    int i = r - 1;
    while (i >= 0 && comb[i] == n - r + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
  }
  return WeightedRGraph(r, n, std::move(edges));
}

/// ((r-1)!^r * max over edges of the product of their vertex degrees)^{1/r};
/// upper bound for the spectral radius, equal to upper_main at the
/// adjacency tensor.
inline double bound_degree_product(const WeightedRGraph& g) {
  std::vector<double> deg(g.n());
  for (Index v = 0; v < g.n(); ++v) deg[v] = degree(g, v);
  double best = 0.0;
  for (const auto& e : g.edges()) {
    double prod = 1.0;
    for (Index v : e.verts) prod *= deg[v];
    best = std::max(best, prod);
  }
  const int r = g.r();
  return std::pow(std::pow(factorial(r - 1), r) * best, 1.0 / r);
}

/// ((r-1)!^r * max over vertices k of sum_{e contains k} weight(e) *
/// product of the other vertices' degrees)^{1/r}; upper bound for the
/// spectral radius, equal to upper_th3 at the adjacency tensor.
inline double bound_neighbor_degree(const WeightedRGraph& g) {
  std::vector<double> deg(g.n());
  for (Index v = 0; v < g.n(); ++v) deg[v] = degree(g, v);
  double best = 0.0;
  for (Index k = 0; k < g.n(); ++k) {
    double acc = 0.0;
    for (const auto& e : g.edges()) {
      if (!std::binary_search(e.verts.begin(), e.verts.end(), k)) continue;
      double prod = e.weight;
      for (Index v : e.verts)
        if (v != k) prod *= deg[v];
      acc += prod;
    }
    best = std::max(best, acc);
  }
  const int r = g.r();
  return std::pow(std::pow(factorial(r - 1), r) * best, 1.0 / r);
}

/// Degree power-sum lower bound for the p-spectral radius, p >= r:
/// (r!/r^{r/p}) (n^{-(r-1)/(p-1)} sum_i d_i^{p/(p-1)})^{(p-1)/p}.
inline double lower_hofmeister(const WeightedRGraph& g, double p) {
  const int r = g.r();
  require(p >= static_cast<double>(r), Errc::bad_exponent, "needs p >= r");
  const double q = dual_exponent(p);
  double acc = 0.0;
  for (Index v = 0; v < g.n(); ++v) acc += std::pow(degree(g, v), q);
  const double inner = std::pow(static_cast<double>(g.n()),
                                -static_cast<double>(r - 1) / (p - 1.0)) * acc;
  return factorial(r) / std::pow(static_cast<double>(r), r / p) * std::pow(inner, 1.0 / q);
}

inline void require_partite(const WeightedRGraph& g, const Partition& part) {
  require(part.n() == g.n(), Errc::dim_mismatch, "partition size vs vertex count");
  require(part.block_count() == g.r(), Errc::not_partite,
          "partition must have one block per edge slot");
  std::vector<bool> used(g.r());
  for (const auto& e : g.edges()) {
    std::fill(used.begin(), used.end(), false);
    for (Index v : e.verts) {
      const int b = part.selector(v);
      require(!used[b], Errc::not_partite, "edge meets a block twice");
      used[b] = true;
    }
  }
}

/// Edge-weight lower bound for the p-spectral radius of an r-partite
/// graph: (r!/r^{r/p}) (n_1...n_r)^{-1/p} sum_e weight(e). Tight exactly
/// for semiregular graphs when p >= r.
inline double partite_lower(const WeightedRGraph& g, const Partition& part, double p) {
  require(p >= 1.0, Errc::bad_exponent, "p must be at least 1");
  require_partite(g, part);
  const int r = g.r();
  double sizes = 1.0;
  for (int b = 0; b < r; ++b) sizes *= static_cast<double>(part.block(b).size());
  return factorial(r) / std::pow(static_cast<double>(r), r / p) *
         std::pow(sizes, -1.0 / p) * g.weight_sum();
}

/// Block balance defect of the computed p-spectral radius maximizer of an
/// r-partite graph: max_i | |x|_{N_i}|_p - r^{-1/p} |. Near zero at a true
/// maximizer.
template <typename Scalar = double>
Scalar partite_balance_check(const WeightedRGraph& g, const Partition& part, double p,
                             const SolverOptions<Scalar>& opts = {}) {
  require(p >= 1.0, Errc::bad_exponent, "p must be at least 1");
  require_partite(g, part);
  const Tensor<Scalar> a = adjacency_tensor<Scalar>(g);
  const SpectralResult<Scalar> res = eta_p(a, p, opts);
  const VecX<Scalar>& x = res.witness.front();
  const Scalar target = std::pow(Scalar(g.r()), Scalar(-1.0 / p));
  Scalar worst(0);
  for (int b = 0; b < part.block_count(); ++b) {
    VecX<Scalar> blockv(static_cast<Index>(part.block(b).size()));
    for (size_t i = 0; i < part.block(b).size(); ++i) blockv[i] = x[part.block(b)[i]];
    worst = std::max(worst, std::abs(lp_norm(blockv, p) - target));
  }
  return worst;
}

}  // namespace hypermat
