#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sombor/error.hpp"

namespace sombor {

inline constexpr int kChemicalMaxDegree = 4;

/// Undirected edge, normalised so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// An immutable chemical tree: labels 0..n-1, every degree in {1,2,3,4}
/// (a single vertex of degree 0 is the order-1 tree).
class ChemTree {
 public:
  int order() const noexcept { return order_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const int> degrees() const noexcept { return degrees_; }
  int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }

  std::span<const int> neighbours(int v) const {
    auto first = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
    auto last = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
    return std::span<const int>(adjacency_).subspan(first, last - first);
  }

  int max_degree() const noexcept {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
  }

  friend bool operator==(const ChemTree& a, const ChemTree& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  friend ChemTree tree_from_edge_list(int n, std::span<const std::pair<int, int>> edges);

  int order_ = 1;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<int> offsets_;
  std::vector<int> adjacency_;
};

namespace detail {

inline int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    auto& p = parent[static_cast<std::size_t>(v)];
    p = parent[static_cast<std::size_t>(p)];
    v = p;
  }
  return v;
}

}  // namespace detail

/// Validates an edge list and builds the tree. Checks run in the order
/// labels, self-loops and duplicates, edge count, degree bound, connectivity.
inline ChemTree tree_from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "tree order must be positive");

  std::vector<Edge> normalised;
  normalised.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(ErrorKind::bad_label, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                            ") has a label outside 0.." + std::to_string(n - 1));
    if (a == b) throw Error(ErrorKind::not_a_tree, "self-loop at vertex " + std::to_string(a));
    normalised.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(normalised.begin(), normalised.end());
  if (auto dup = std::adjacent_find(normalised.begin(), normalised.end()); dup != normalised.end())
    throw Error(ErrorKind::duplicate_edge,
                "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") repeated");
  if (normalised.size() != static_cast<std::size_t>(n - 1))
    throw Error(ErrorKind::not_a_tree, std::to_string(normalised.size()) + " edges on " +
                                           std::to_string(n) + " vertices");

  std::vector<int> degrees(static_cast<std::size_t>(n), 0);
  for (const auto& e : normalised) {
    ++degrees[static_cast<std::size_t>(e.u)];
    ++degrees[static_cast<std::size_t>(e.v)];
  }
  for (int v = 0; v < n; ++v)
    if (degrees[static_cast<std::size_t>(v)] > kChemicalMaxDegree)
      throw Error(ErrorKind::degree_bound, "vertex " + std::to_string(v) + " has degree " +
                                               std::to_string(degrees[static_cast<std::size_t>(v)]));

  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : normalised) {
    int ru = detail::find_root(parent, e.u);
    int rv = detail::find_root(parent, e.v);
    if (ru == rv) throw Error(ErrorKind::not_a_tree, "edge set contains a cycle");
    parent[static_cast<std::size_t>(ru)] = rv;
  }

  ChemTree t;
  t.order_ = n;
  t.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v)
    t.offsets_[static_cast<std::size_t>(v) + 1] =
        t.offsets_[static_cast<std::size_t>(v)] + degrees[static_cast<std::size_t>(v)];
  t.adjacency_.resize(2 * normalised.size());
  std::vector<int> fill(t.offsets_.begin(), t.offsets_.end() - 1);
  for (const auto& e : normalised) {
    t.adjacency_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.u)]++)] = e.v;
    t.adjacency_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.v)]++)] = e.u;
  }
  t.edges_ = std::move(normalised);
  t.degrees_ = std::move(degrees);
  return t;
}

inline ChemTree tree_from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
  return tree_from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

inline ChemTree tree_from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  return tree_from_edge_list(n, std::span<const std::pair<int, int>>(edges));
}

struct DegreeCounts {
  long n1 = 0;
  long n2 = 0;
  long n3 = 0;
  long n4 = 0;

  long operator[](int degree) const {
    switch (degree) {
      case 1: return n1;
      case 2: return n2;
      case 3: return n3;
      case 4: return n4;
      default: return 0;
    }
  }

  friend bool operator==(const DegreeCounts&, const DegreeCounts&) = default;
};

/// Vertex-count and degree-sum identities for a tree of order n.
inline bool satisfies_degree_identities(const DegreeCounts& c, long n) {
  return c.n1 + c.n2 + c.n3 + c.n4 == n && c.n1 + 2 * c.n2 + 3 * c.n3 + 4 * c.n4 == 2 * (n - 1);
}

inline DegreeCounts degree_counts(const ChemTree& t) {
  DegreeCounts c;
  for (int d : t.degrees()) {
    switch (d) {
      case 1: ++c.n1; break;
      case 2: ++c.n2; break;
      case 3: ++c.n3; break;
      case 4: ++c.n4; break;
      default: break;  // order-1 tree
    }
  }
  if (t.order() >= 2 && !satisfies_degree_identities(c, t.order()))
    throw std::logic_error("degree identities violated");
  return c;
}

/// Counts m_ij of (i,j)-edges, 1 <= i <= j <= 4.
struct EdgeTypeCounts {
  long m11 = 0, m12 = 0, m13 = 0, m14 = 0;
  long m22 = 0, m23 = 0, m24 = 0;
  long m33 = 0, m34 = 0;
  long m44 = 0;

  long& at(int i, int j) {
    if (i > j) std::swap(i, j);
    switch (i * 10 + j) {
      case 11: return m11;
      case 12: return m12;
      case 13: return m13;
      case 14: return m14;
      case 22: return m22;
      case 23: return m23;
      case 24: return m24;
      case 33: return m33;
      case 34: return m34;
      case 44: return m44;
      default: throw Error(ErrorKind::invalid_argument, "edge type outside 1..4");
    }
  }
  long at(int i, int j) const { return const_cast<EdgeTypeCounts&>(*this).at(i, j); }

  long total() const { return m11 + m12 + m13 + m14 + m22 + m23 + m24 + m33 + m34 + m44; }

  friend bool operator==(const EdgeTypeCounts&, const EdgeTypeCounts&) = default;
};

/// Handshake identities tying edge-type counts to degree counts.
inline bool satisfies_edge_identities(const EdgeTypeCounts& m, const DegreeCounts& c, long n) {
  return m.total() == n - 1 &&
         2 * m.m11 + m.m12 + m.m13 + m.m14 == c.n1 &&
         m.m12 + 2 * m.m22 + m.m23 + m.m24 == 2 * c.n2 &&
         m.m13 + m.m23 + 2 * m.m33 + m.m34 == 3 * c.n3 &&
         m.m14 + m.m24 + m.m34 + 2 * m.m44 == 4 * c.n4 &&
         (n < 3 || m.m11 == 0);
}

inline EdgeTypeCounts edge_type_counts(const ChemTree& t) {
  EdgeTypeCounts m;
  for (const auto& e : t.edges()) ++m.at(t.degree(e.u), t.degree(e.v));
  if (t.order() >= 2 && !satisfies_edge_identities(m, degree_counts(t), t.order()))
    throw std::logic_error("edge-type identities violated");
  return m;
}

/// Returns the same tree with every label v replaced by perm[v].
inline ChemTree relabel(const ChemTree& t, std::span<const int> perm) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(t.edges().size());
  for (const auto& e : t.edges())
    edges.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return tree_from_edge_list(t.order(), edges);
}

}  // namespace sombor
