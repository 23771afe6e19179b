#include <doctest.h>

#include <cmath>

#include "hypermat/forms.hpp"
#include "hypermat/structure.hpp"
#include "hypermat/tensor.hpp"
#include "hypermat/verify.hpp"

using namespace hypermat;

namespace {

Tensor<double> k2() { return from_coo(2, {2, 2}, {{{0, 1}, 1.0}, {{1, 0}, 1.0}}); }

Tensor<double> two_k2_blocks() {
  return from_coo(2, {4, 4}, {{{0, 1}, 1.0}, {{1, 0}, 1.0}, {{2, 3}, 1.0}, {{3, 2}, 1.0}});
}

}  // namespace

TEST_CASE("interval partition") {
  const Partition p = interval_partition({1, 2});
  CHECK(p.n() == 3);
  CHECK(p.selector(0) == 0);
  CHECK(p.selector(2) == 1);
  CHECK(p.locator(2) == 1);

  const Partition q = interval_partition({2, 2, 2});
  CHECK(q.block_count() == 3);
  for (int b = 0; b < 3; ++b) CHECK(q.block(b).size() == 2);

  CHECK_THROWS_AS(interval_partition({3}), Error);
}

TEST_CASE("r-partite verification") {
  const auto eye = from_coo(2, {2, 2}, {{{0, 0}, 1.0}, {{1, 1}, 1.0}});
  const Partition p = interval_partition({1, 1});
  CHECK_FALSE(is_r_partite(eye, p));
  CHECK(is_r_partite(Tensor<double>({2, 2}), p));
  CHECK(is_r_partite(k2(), p));
}

TEST_CASE("symmetrant of a 1x2 matrix") {
  const auto a = from_coo(2, {1, 2}, {{{0, 0}, 2.0}, {{0, 1}, 5.0}});
  const auto [b, part] = symmetrant(a);
  REQUIRE(b.dims() == Dims{3, 3});
  CHECK(b({0, 1}) == 2.0);
  CHECK(b({0, 2}) == 5.0);
  CHECK(b({1, 0}) == 2.0);
  CHECK(b({2, 0}) == 5.0);
  CHECK(b({0, 0}) == 0.0);
  CHECK(b({1, 1}) == 0.0);
  CHECK(b({1, 2}) == 0.0);
  CHECK(b({2, 1}) == 0.0);

  const auto one = from_coo(2, {1, 1}, {{{0, 0}, 3.0}});
  const auto [b1, part1] = symmetrant(one);
  CHECK(b1.dims() == Dims{2, 2});
  CHECK(b1({0, 1}) == 3.0);
  CHECK(b1({1, 0}) == 3.0);
  CHECK(b1({0, 0}) == 0.0);
}

TEST_CASE("symmetrant of a 1x1x1 tensor puts the value on six positions") {
  Tensor<double> c({1, 1, 1});
  c({0, 0, 0}) = 7.0;
  const auto [b, part] = symmetrant(c);
  REQUIRE(b.dims() == Dims{3, 3, 3});
  int hits = 0;
  for_each_index(b.dims(), [&](const MultiIndex& idx, Index f) {
    MultiIndex sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == MultiIndex{0, 1, 2}) {
      CHECK(b[f] == 7.0);
      ++hits;
    } else {
      CHECK(b[f] == 0.0);
    }
  });
  CHECK(hits == 6);
}

TEST_CASE("symmetrant is bit-symmetric and r-partite with weight r! |A|_1") {
  Rng rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    const int r = 2 + (trial % 2);
    Dims dims;
    for (int k = 0; k < r; ++k) dims.push_back(1 + static_cast<Index>(rng.below(3)));
    Tensor<double> a(dims);
    for (Index f = 0; f < a.size(); ++f) a[f] = rng.symmetric();
    const auto [b, part] = symmetrant(a);
    CHECK(is_symmetric(b, 0.0));
    CHECK(is_r_partite(b, part, 0.0));
    double rfac = 1;
    for (int k = 2; k <= r; ++k) rfac *= k;
    CHECK(entrywise_norm(b, 1.0) ==
          doctest::Approx(rfac * entrywise_norm(a, 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("symmetrant polynomial form restricts to the linear form") {
  Rng rng(37);
  for (int trial = 0; trial < 6; ++trial) {
    const int r = 2 + (trial % 2);
    Dims dims;
    for (int k = 0; k < r; ++k) dims.push_back(1 + static_cast<Index>(rng.below(3)));
    Tensor<double> a(dims);
    for (Index f = 0; f < a.size(); ++f) a[f] = rng.symmetric();
    const auto [b, part] = symmetrant(a);

    Vec x(part.n());
    for (Index i = 0; i < x.size(); ++i) x[i] = rng.symmetric();
    std::vector<Vec> blocks;
    for (int k = 0; k < r; ++k) {
      Vec v(static_cast<Index>(part.block(k).size()));
      for (size_t i = 0; i < part.block(k).size(); ++i) v[i] = x[part.block(k)[i]];
      blocks.push_back(v);
    }
    double rfac = 1;
    for (int k = 2; k <= r; ++k) rfac *= k;
    const double lhs = poly_form(b, x);
    const double rhs = rfac * linear_form(a, blocks);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("digraph edges follow nonzero entries") {
  const Digraph d = digraph(k2());
  CHECK(d.has_edge(0, 1));
  CHECK(d.has_edge(1, 0));

  const Digraph half = digraph(from_coo(2, {2, 2}, {{{0, 1}, 1.0}}));
  CHECK(half.has_edge(0, 1));
  CHECK_FALSE(half.has_edge(1, 0));

  const Digraph two = digraph(two_k2_blocks());
  CHECK(two.has_edge(0, 1));
  CHECK(two.has_edge(2, 3));
  CHECK_FALSE(two.has_edge(1, 2));
}

TEST_CASE("weak irreducibility") {
  CHECK(is_weakly_irreducible(k2()));
  CHECK_FALSE(is_weakly_irreducible(two_k2_blocks()));
  Tensor<double> j({2, 2, 2});
  j.data().setOnes();
  CHECK(is_weakly_irreducible(j));
}

TEST_CASE("components split symmetric tensors") {
  const auto comps = components(two_k2_blocks());
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].vertices == std::vector<Index>{0, 1});
  CHECK(comps[1].vertices == std::vector<Index>{2, 3});
  CHECK(comps[0].sub == k2());
  CHECK_FALSE(comps[0].zero);

  CHECK(components(k2()).size() == 1);

  const auto pair3 = from_coo(2, {3, 3}, {{{0, 1}, 1.0}, {{1, 0}, 1.0}});
  const auto c3 = components(pair3);
  REQUIRE(c3.size() == 2);
  CHECK_FALSE(c3[0].zero);
  CHECK(c3[1].zero);
  CHECK(c3[1].vertices == std::vector<Index>{2});

  CHECK_THROWS_AS(components(from_coo(2, {2, 2}, {{{0, 1}, 1.0}})), Error);
}

TEST_CASE("components cover the index set and reassemble the tensor") {
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = verify::block_diag({verify::random_symmetric(2, 2, rng, false),
                                       verify::random_symmetric(2, 3, rng, false)});
    const auto comps = components(a);
    std::vector<bool> seen(a.extent(0), false);
    Tensor<double> rebuilt(a.dims());
    for (const auto& c : comps) {
      for (size_t i = 0; i < c.vertices.size(); ++i) {
        CHECK_FALSE(seen[c.vertices[i]]);
        seen[c.vertices[i]] = true;
        for (size_t j = 0; j < c.vertices.size(); ++j)
          rebuilt({c.vertices[i], c.vertices[j]}) = c.sub({Index(i), Index(j)});
      }
    }
    for (Index v = 0; v < a.extent(0); ++v) CHECK(seen[v]);
    CHECK(rebuilt == a);
  }
}
