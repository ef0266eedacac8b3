#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sombor/canonical.hpp"
#include "sombor/enumerate.hpp"
#include "support/oracles.hpp"

using namespace sombor;

namespace {

ChemTree path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return tree_from_edge_list(n, edges);
}

}  // namespace

TEST(Canonical, SmallCodes) {
  EXPECT_EQ(canonical_code(tree_from_edge_list(1, {})).bytes(), "()");
  EXPECT_EQ(canonical_code(tree_from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})).bytes(), "(()()()())");
  EXPECT_EQ(canonical_code(tree_from_edge_list(5, {{4, 1}, {4, 2}, {4, 3}, {4, 0}})).bytes(), "(()()()())");
  // P5 rooted at its centre
  EXPECT_EQ(canonical_code(path(5)).bytes(), "((())(()))");
}

TEST(Canonical, BicentroidalPathsAgreeAcrossCentres) {
  for (int n : {2, 4, 6, 10, 32, 40}) {
    auto p = path(n);
    std::vector<int> reversed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) reversed[static_cast<std::size_t>(v)] = n - 1 - v;
    EXPECT_EQ(canonical_code(p), canonical_code(relabel(p, reversed))) << n;
    EXPECT_EQ(detail::centroids(p).size(), 2u);
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(12345);
  for (int n = 2; n <= 40; ++n) {
    auto t = oracle::random_chemical_tree(n, rng);
    const auto code = canonical_code(t);
    const auto form = canonical_form(t);
    for (int k = 0; k < 100; ++k) {
      auto moved = relabel(t, oracle::random_permutation(n, rng));
      ASSERT_EQ(canonical_code(moved), code) << "n=" << n;
      ASSERT_EQ(canonical_form(moved), form) << "n=" << n;
    }
  }
}

TEST(Canonical, PackedMatchesStringPath) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = std::uniform_int_distribution<int>(1, detail::kPackedMaxOrder)(rng);
    auto t = oracle::random_chemical_tree(n, rng);
    ASSERT_EQ(detail::unpack(detail::packed_canonical_code(t)), detail::reference_canonical_code(t));
  }
}

TEST(Canonical, DistinctClassesHaveDistinctCodes) {
  for (int n = 1; n <= 12; ++n) {
    EnumerationConfig cfg;
    cfg.n = n;
    auto trees = enumerate_chemical_trees(cfg);
    std::set<std::string> codes;
    for (const auto& t : trees) codes.insert(detail::reference_canonical_code(t));
    EXPECT_EQ(codes.size(), trees.size()) << n;
  }
}

TEST(Canonical, FormIsIdempotentAndPreservesCode) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 45)(rng);
    auto t = oracle::random_chemical_tree(n, rng);
    auto form = canonical_form(t);
    EXPECT_EQ(canonical_form(form), form);
    EXPECT_EQ(canonical_code(form), canonical_code(t));
    EXPECT_EQ(edge_type_counts(form), edge_type_counts(t));
  }
}

TEST(Canonical, RootOfFormIsACentroid) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto form = canonical_form(oracle::random_chemical_tree(25, rng));
    auto cs = detail::centroids(form);
    EXPECT_EQ(cs.front(), 0);
  }
}
