#pragma once

// Canonical forms for free trees: root at the centroid and apply the AHU
// encoding, in which a rooted tree becomes "(" + sorted child codes + ")".
// Bicentroidal trees take the lexicographically smaller of the two rootings.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sombor/tree.hpp"

namespace sombor {

/// Byte string over '(' and ')', ordered lexicographically.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::size_t size() const noexcept { return bytes_.size(); }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

namespace detail {

inline constexpr int kPackedMaxOrder = 32;

/// AHU code packed into the low `len` bits, '(' = 0 and ')' = 1, most
/// significant bit first. Valid for trees of order <= 32.
struct PackedCode {
  std::uint64_t bits;
  int len;

  friend bool operator==(const PackedCode&, const PackedCode&) = default;
};

/// Lexicographic order of the underlying '(' / ')' strings.
inline bool packed_less(const PackedCode& a, const PackedCode& b) noexcept {
  std::uint64_t ua = a.bits << (64 - a.len);
  std::uint64_t ub = b.bits << (64 - b.len);
  if (ua != ub) return ua < ub;
  return a.len < b.len;
}

inline std::string unpack(const PackedCode& c) {
  std::string s(static_cast<std::size_t>(c.len), '(');
  for (int i = 0; i < c.len; ++i)
    if ((c.bits >> (c.len - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = ')';
  return s;
}

template <class Graph>
PackedCode packed_rooted_code(const Graph& g, int root) {
  const int n = g.order();
  // Scratch arrays are deliberately left uninitialised: every slot is
  // written before it is read, and this runs once per Prüfer sequence.
  std::array<int, kPackedMaxOrder> order;
  std::array<int, kPackedMaxOrder> parent;
  std::array<PackedCode, kPackedMaxOrder> code;
  order[0] = root;
  parent[static_cast<std::size_t>(root)] = -1;
  int tail = 1;
  for (int head = 0; head < tail; ++head) {
    int v = order[static_cast<std::size_t>(head)];
    for (int w : g.neighbours(v)) {
      if (w == parent[static_cast<std::size_t>(v)]) continue;
      parent[static_cast<std::size_t>(w)] = v;
      order[static_cast<std::size_t>(tail++)] = w;
    }
  }
  std::array<PackedCode, kPackedMaxOrder> kids;
  for (int i = n - 1; i >= 0; --i) {
    int v = order[static_cast<std::size_t>(i)];
    int k = 0;
    for (int w : g.neighbours(v)) {
      if (w == parent[static_cast<std::size_t>(v)]) continue;
      PackedCode c = code[static_cast<std::size_t>(w)];
      int j = k++;
      while (j > 0 && packed_less(c, kids[static_cast<std::size_t>(j - 1)])) {
        kids[static_cast<std::size_t>(j)] = kids[static_cast<std::size_t>(j - 1)];
        --j;
      }
      kids[static_cast<std::size_t>(j)] = c;
    }
    PackedCode out{0, 1};
    for (int j = 0; j < k; ++j) {
      out.bits = (out.bits << kids[static_cast<std::size_t>(j)].len) | kids[static_cast<std::size_t>(j)].bits;
      out.len += kids[static_cast<std::size_t>(j)].len;
    }
    out.bits = (out.bits << 1) | 1u;
    out.len += 1;
    code[static_cast<std::size_t>(v)] = out;
  }
  return code[static_cast<std::size_t>(root)];
}

/// BFS order from `root` together with the parent of every vertex.
template <class Graph>
std::pair<std::vector<int>, std::vector<int>> bfs_tree(const Graph& g, int root) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> parent(n, -1);
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int w : g.neighbours(v)) {
      if (w == parent[static_cast<std::size_t>(v)]) continue;
      parent[static_cast<std::size_t>(w)] = v;
      order.push_back(w);
    }
  }
  return {std::move(order), std::move(parent)};
}

/// AHU codes of every subtree when the tree hangs from `root`.
template <class Graph>
std::vector<std::string> rooted_subtree_codes(const Graph& g, int root,
                                              std::vector<int>* parent_out = nullptr) {
  auto [order, parent] = bfs_tree(g, root);
  std::vector<std::string> code(order.size());
  std::vector<const std::string*> kids;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    kids.clear();
    for (int w : g.neighbours(v))
      if (w != parent[static_cast<std::size_t>(v)]) kids.push_back(&code[static_cast<std::size_t>(w)]);
    std::sort(kids.begin(), kids.end(), [](const auto* a, const auto* b) { return *a < *b; });
    std::string out = "(";
    for (const auto* k : kids) out += *k;
    out += ')';
    code[static_cast<std::size_t>(v)] = std::move(out);
  }
  if (parent_out) *parent_out = std::move(parent);
  return code;
}

template <class Graph>
std::string string_rooted_code(const Graph& g, int root) {
  return rooted_subtree_codes(g, root)[static_cast<std::size_t>(root)];
}

/// One or two centroids; two only when they are adjacent and split n evenly.
template <class Graph>
std::vector<int> centroids(const Graph& g) {
  const int n = g.order();
  auto [order, parent] = bfs_tree(g, 0);
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  std::vector<int> heaviest(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    int p = parent[static_cast<std::size_t>(v)];
    if (p >= 0) {
      size[static_cast<std::size_t>(p)] += size[static_cast<std::size_t>(v)];
      heaviest[static_cast<std::size_t>(p)] =
          std::max(heaviest[static_cast<std::size_t>(p)], size[static_cast<std::size_t>(v)]);
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    int worst = std::max(heaviest[static_cast<std::size_t>(v)], n - size[static_cast<std::size_t>(v)]);
    if (2 * worst <= n) out.push_back(v);
  }
  return out;
}

/// Canonical code through the string path only; reference for the packed path.
template <class Graph>
std::string reference_canonical_code(const Graph& g) {
  std::string best;
  for (int c : centroids(g)) {
    std::string code = string_rooted_code(g, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

/// Allocation-free centroid search for n <= kPackedMaxOrder. Returns the
/// number of centroids written to `out`.
template <class Graph>
int packed_centroids(const Graph& g, std::array<int, 2>& out) {
  const int n = g.order();
  std::array<int, kPackedMaxOrder> order;
  std::array<int, kPackedMaxOrder> parent;
  std::array<int, kPackedMaxOrder> size;
  std::array<int, kPackedMaxOrder> heaviest;
  std::fill_n(size.begin(), n, 0);
  std::fill_n(heaviest.begin(), n, 0);
  order[0] = 0;
  parent[0] = -1;
  int tail = 1;
  for (int head = 0; head < tail; ++head) {
    int v = order[static_cast<std::size_t>(head)];
    for (int w : g.neighbours(v)) {
      if (w == parent[static_cast<std::size_t>(v)]) continue;
      parent[static_cast<std::size_t>(w)] = v;
      order[static_cast<std::size_t>(tail++)] = w;
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    int v = order[static_cast<std::size_t>(i)];
    size[static_cast<std::size_t>(v)] += 1;
    int p = parent[static_cast<std::size_t>(v)];
    if (p >= 0) {
      size[static_cast<std::size_t>(p)] += size[static_cast<std::size_t>(v)];
      heaviest[static_cast<std::size_t>(p)] =
          std::max(heaviest[static_cast<std::size_t>(p)], size[static_cast<std::size_t>(v)]);
    }
  }
  int found = 0;
  for (int v = 0; v < n && found < 2; ++v) {
    int worst = std::max(heaviest[static_cast<std::size_t>(v)], n - size[static_cast<std::size_t>(v)]);
    if (2 * worst <= n) out[static_cast<std::size_t>(found++)] = v;
  }
  return found;
}

template <class Graph>
PackedCode packed_canonical_code(const Graph& g) {
  std::array<int, 2> cs{};
  const int count = packed_centroids(g, cs);
  PackedCode best = packed_rooted_code(g, cs[0]);
  if (count == 2) {
    PackedCode other = packed_rooted_code(g, cs[1]);
    if (packed_less(other, best)) best = other;
  }
  return best;
}

}  // namespace detail

/// Isomorphism-invariant code of a free tree.
template <class Graph>
CanonicalCode canonical_code(const Graph& g) {
  if (g.order() <= detail::kPackedMaxOrder)
    return CanonicalCode(detail::unpack(detail::packed_canonical_code(g)));
  return CanonicalCode(detail::reference_canonical_code(g));
}

/// Relabels the tree so that isomorphic inputs give identical outputs: the
/// canonical root becomes 0 and the remaining labels follow a preorder walk
/// that visits children in increasing code order.
inline ChemTree canonical_form(const ChemTree& t) {
  if (t.order() == 1) return t;
  int root = -1;
  std::string best;
  for (int c : detail::centroids(t)) {
    std::string code = detail::string_rooted_code(t, c);
    if (root < 0 || code < best) {
      root = c;
      best = std::move(code);
    }
  }
  std::vector<int> parent;
  auto code = detail::rooted_subtree_codes(t, root, &parent);

  std::vector<int> label(static_cast<std::size_t>(t.order()), -1);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(t.order() - 1));
  std::vector<int> stack{root};
  int next = 0;
  std::vector<int> kids;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    label[static_cast<std::size_t>(v)] = next++;
    int p = parent[static_cast<std::size_t>(v)];
    if (p >= 0) edges.emplace_back(label[static_cast<std::size_t>(p)], label[static_cast<std::size_t>(v)]);
    kids.clear();
    for (int w : t.neighbours(v))
      if (w != p) kids.push_back(w);
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
      return code[static_cast<std::size_t>(a)] > code[static_cast<std::size_t>(b)];
    });
    stack.insert(stack.end(), kids.begin(), kids.end());
  }
  return tree_from_edge_list(t.order(), edges);
}

}  // namespace sombor
