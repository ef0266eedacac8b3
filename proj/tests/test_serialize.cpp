#include <gtest/gtest.h>

#include "sombor/canonical.hpp"
#include "sombor/enumerate.hpp"
#include "sombor/serialize.hpp"
#include "support/oracles.hpp"

using namespace sombor;

namespace {

ErrorKind parse_error_kind(const std::string& text, Format f) {
  try {
    parse(text, f);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorKind::invalid_argument;
}

ChemTree path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return tree_from_edge_list(n, edges);
}

}  // namespace

TEST(Serialize, FormatNames) {
  EXPECT_EQ(format_from_name("edge-list"), Format::edge_list);
  EXPECT_EQ(format_from_name("graph6"), Format::graph6);
  EXPECT_EQ(format_name(Format::graph6), "graph6");
  try {
    format_from_name("sparse6");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_format);
  }
}

TEST(Serialize, Graph6MatchesReferenceEncoder) {
  const auto star = tree_from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const auto small = tree_from_edge_list(7, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {2, 6}});
  EXPECT_EQ(serialize(star, Format::graph6), oracle::kStarFourGraph6 + "\n");
  EXPECT_EQ(serialize(path(5), Format::graph6), oracle::kPathFiveGraph6 + "\n");
  EXPECT_EQ(serialize(small, Format::graph6), oracle::kSmallTreeGraph6 + "\n");
  EXPECT_EQ(serialize(path(63), Format::graph6), oracle::kPath63Graph6 + "\n");
  EXPECT_EQ(serialize(tree_from_edge_list(1, {}), Format::graph6), "@\n");
}

TEST(Serialize, Graph6Decodes) {
  EXPECT_EQ(parse(oracle::kStarFourGraph6, Format::graph6), tree_from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  EXPECT_EQ(parse(oracle::kPath63Graph6 + "\n", Format::graph6), path(63));
}

TEST(Serialize, EdgeListLayout) {
  EXPECT_EQ(serialize(path(3), Format::edge_list), "3\n0 1\n1 2\n");
  EXPECT_EQ(serialize(tree_from_edge_list(1, {}), Format::edge_list), "1\n");
  EXPECT_EQ(parse("3\n1 2\n0 1\n", Format::edge_list), path(3));
  EXPECT_EQ(parse("  3\r\n 1   2\r\n0 1", Format::edge_list), path(3));
}

TEST(Serialize, RoundTripsEveryClass) {
  for (int n = 1; n <= 11; ++n) {
    EnumerationConfig cfg;
    cfg.n = n;
    const auto trees = enumerate_chemical_trees(cfg);
    for (Format f : {Format::edge_list, Format::graph6}) {
      std::string stream;
      for (const auto& t : trees) {
        const auto text = serialize(t, f);
        ASSERT_EQ(parse(text, f), t);
        stream += text;
      }
      ASSERT_EQ(parse_all(stream, f), trees) << "n=" << n;
    }
  }
}

TEST(Serialize, RejectsBadInput) {
  EXPECT_EQ(parse_error_kind(oracle::kTriangleGraph6, Format::graph6), ErrorKind::not_a_tree);
  EXPECT_EQ(parse_error_kind(oracle::kStarFiveGraph6, Format::graph6), ErrorKind::degree_bound);
  EXPECT_EQ(parse_error_kind("Ds", Format::graph6), ErrorKind::parse_error);
  EXPECT_EQ(parse_error_kind("Ds_?", Format::graph6), ErrorKind::parse_error);
  EXPECT_EQ(parse_error_kind("Ds`", Format::graph6), ErrorKind::parse_error);  // nonzero padding
  EXPECT_EQ(parse_error_kind("Ds_\nDs_\n", Format::graph6), ErrorKind::parse_error);
  EXPECT_EQ(parse_error_kind("", Format::graph6), ErrorKind::parse_error);
  EXPECT_EQ(parse_error_kind("3\n0 1\n", Format::edge_list), ErrorKind::parse_error);
  EXPECT_EQ(parse_error_kind("3\n0 1 2\n1 2\n", Format::edge_list), ErrorKind::parse_error);
  EXPECT_EQ(parse_error_kind("3\n0 1\n1 x\n", Format::edge_list), ErrorKind::parse_error);
  EXPECT_EQ(parse_error_kind("3\n0 1\n1 2\n1\n", Format::edge_list), ErrorKind::parse_error);
  EXPECT_EQ(parse_error_kind("3\n0 1\n1 99999999999\n", Format::edge_list), ErrorKind::bad_label);
  EXPECT_EQ(parse_error_kind("0\n", Format::edge_list), ErrorKind::parse_error);
}
