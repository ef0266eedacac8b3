#pragma once

// Exhaustive generation of non-isomorphic trees with bounded degree.
//
// The main generator is canonical augmentation: a tree of order k+1 is
// accepted from its parent of order k only if the leaf just added lies in
// the orbit of the canonical deletion leaf (the leaf whose rooted AHU code
// is smallest), and each parent is extended at one vertex per automorphism
// orbit. Every class is reached exactly once without a duplicate table.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "sombor/canonical.hpp"
#include "sombor/error.hpp"
#include "sombor/tree.hpp"

namespace sombor {

enum class EnumerationMode { canonical, oracle };

enum class CanonicalStrategy {
  augmentation,  // canonical augmentation, streaming
  growth_dedup,  // grow every tree by one leaf, deduplicate by string codes
};

enum class PruferSpace {
  all,            // every sequence in n^(n-2)
  degree_sorted,  // only labelings whose degrees are non-increasing in the label
};

struct EnumerationConfig {
  int n = 1;
  int max_degree = kChemicalMaxDegree;
  EnumerationMode mode = EnumerationMode::canonical;
  CanonicalStrategy strategy = CanonicalStrategy::augmentation;
  std::optional<std::uint64_t> max_classes;
  unsigned workers = 1;
  bool deterministic = true;
};

inline constexpr int kEnumerationMaxOrder = detail::kPackedMaxOrder;
inline constexpr int kOracleMaxOrder = 12;
inline constexpr int kOracleAllSequencesMaxOrder = 9;

namespace detail {

/// Mutable tree used during generation; leaves are appended and popped LIFO.
struct GrowthTree {
  std::vector<std::vector<int>> adj;

  GrowthTree() : adj(1) {}

  int order() const noexcept { return static_cast<int>(adj.size()); }
  const std::vector<int>& neighbours(int v) const { return adj[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }

  void add_leaf(int u) {
    int leaf = order();
    adj.push_back({u});
    adj[static_cast<std::size_t>(u)].push_back(leaf);
  }

  void remove_last_leaf() {
    int u = adj.back().front();
    adj[static_cast<std::size_t>(u)].pop_back();
    adj.pop_back();
  }

  ChemTree to_chem_tree() const {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < order(); ++v) edges.emplace_back(adj[static_cast<std::size_t>(v)].front(), v);
    return tree_from_edge_list(order(), edges);
  }
};

inline bool is_canonical_leaf(const GrowthTree& t, int leaf) {
  if (t.order() <= 2) return true;
  const PackedCode mine = packed_rooted_code(t, leaf);
  for (int v = 0; v < t.order(); ++v) {
    if (v == leaf || t.degree(v) != 1) continue;
    if (packed_less(packed_rooted_code(t, v), mine)) return false;
  }
  return true;
}

template <class Visit>
void augment(GrowthTree& t, int target, int max_degree, Visit& visit) {
  if (t.order() == target) {
    visit(static_cast<const GrowthTree&>(t));
    return;
  }
  std::vector<PackedCode> orbits;
  const int n = t.order();
  for (int u = 0; u < n; ++u) {
    if (t.degree(u) >= max_degree) continue;
    PackedCode key = packed_rooted_code(t, u);
    if (std::find(orbits.begin(), orbits.end(), key) != orbits.end()) continue;
    orbits.push_back(key);
    t.add_leaf(u);
    if (is_canonical_leaf(t, n)) augment(t, target, max_degree, visit);
    t.remove_last_leaf();
  }
}

inline void check_order(const EnumerationConfig& cfg) {
  if (cfg.n < 1) throw Error(ErrorKind::invalid_argument, "enumeration order must be >= 1");
  if (cfg.max_degree < 1) throw Error(ErrorKind::invalid_argument, "max_degree must be >= 1");
  if (cfg.n > kEnumerationMaxOrder)
    throw Error(ErrorKind::order_too_large,
                "enumeration supports n <= " + std::to_string(kEnumerationMaxOrder));
}

/// Runs canonical augmentation to order n. With several workers the search
/// is split at a fixed intermediate order and `visit` is called concurrently.
template <class Visit>
void augment_all(int n, int max_degree, unsigned workers, Visit&& visit) {
  const int effective_degree = std::min(max_degree, std::max(n - 1, 1));
  if (n == 1 || workers <= 1) {
    GrowthTree t;
    augment(t, n, effective_degree, visit);
    return;
  }
  const int split = std::min(n, 8);
  std::vector<GrowthTree> frontier;
  {
    GrowthTree t;
    auto collect = [&](const GrowthTree& g) { frontier.push_back(g); };
    augment(t, split, effective_degree, collect);
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < frontier.size(); i = next++) {
        GrowthTree t = frontier[i];
        augment(t, n, effective_degree, visit);
      }
    });
  }
  for (auto& th : pool) th.join();
}

inline std::vector<GrowthTree> growth_dedup_level(int n, int max_degree) {
  std::map<std::string, GrowthTree> level;
  level.emplace(reference_canonical_code(GrowthTree{}), GrowthTree{});
  for (int k = 1; k < n; ++k) {
    std::map<std::string, GrowthTree> next;
    for (const auto& [code, tree] : level) {
      for (int u = 0; u < tree.order(); ++u) {
        if (tree.degree(u) >= max_degree) continue;
        GrowthTree child = tree;
        child.add_leaf(u);
        auto key = reference_canonical_code(child);
        next.try_emplace(std::move(key), std::move(child));
      }
    }
    level = std::move(next);
  }
  std::vector<GrowthTree> out;
  out.reserve(level.size());
  for (auto& [code, tree] : level) out.push_back(std::move(tree));
  return out;
}

/// Fixed-capacity adjacency for Prüfer decoding (order <= 32, degree <= 4).
struct SmallTree {
  int n = 0;
  std::array<std::array<int, kChemicalMaxDegree>, kPackedMaxOrder> nb{};
  std::array<int, kPackedMaxOrder> deg{};

  int order() const noexcept { return n; }
  std::span<const int> neighbours(int v) const {
    return {nb[static_cast<std::size_t>(v)].data(), static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])};
  }
  void add_edge(int a, int b) {
    nb[static_cast<std::size_t>(a)][static_cast<std::size_t>(deg[static_cast<std::size_t>(a)]++)] = b;
    nb[static_cast<std::size_t>(b)][static_cast<std::size_t>(deg[static_cast<std::size_t>(b)]++)] = a;
  }
};

/// Standard linear-time Prüfer decoding. Requires every label to occur at
/// most three times so that the result is chemical.
inline void decode_prufer(std::span<const int> seq, int n, SmallTree& out) {
  out.n = n;
  out.deg.fill(0);
  std::array<int, kPackedMaxOrder> remaining{};
  for (int v = 0; v < n; ++v) remaining[static_cast<std::size_t>(v)] = 1;
  for (int x : seq) ++remaining[static_cast<std::size_t>(x)];
  int ptr = 0;
  while (remaining[static_cast<std::size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int x : seq) {
    out.add_edge(leaf, x);
    if (--remaining[static_cast<std::size_t>(x)] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (remaining[static_cast<std::size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  out.add_edge(leaf, n - 1);
}

inline ChemTree small_to_chem(const SmallTree& s) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < s.n; ++v)
    for (int w : s.neighbours(v))
      if (v < w) edges.emplace_back(v, w);
  return tree_from_edge_list(s.n, edges);
}

inline void sort_by_code(std::vector<ChemTree>& trees) {
  std::vector<std::pair<CanonicalCode, std::size_t>> keyed;
  keyed.reserve(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) keyed.emplace_back(canonical_code(trees[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<ChemTree> sorted;
  sorted.reserve(trees.size());
  for (auto& [code, i] : keyed) sorted.push_back(std::move(trees[i]));
  trees = std::move(sorted);
}

inline void check_cap(const EnumerationConfig& cfg, std::uint64_t count) {
  if (cfg.max_classes && count > *cfg.max_classes)
    throw Error(ErrorKind::resource_limit,
                "more than " + std::to_string(*cfg.max_classes) + " classes at n=" + std::to_string(cfg.n));
}

}  // namespace detail

struct OracleResult {
  std::vector<ChemTree> classes;  // canonical forms, sorted by canonical code
  std::uint64_t sequences = 0;    // Prüfer sequences examined
};

/// Independent oracle: decode Prüfer sequences, keep those with degree <= 4,
/// deduplicate by canonical code.
inline OracleResult enumerate_oracle(int n, PruferSpace space = PruferSpace::degree_sorted) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "oracle order must be >= 1");
  const int guard = space == PruferSpace::all ? kOracleAllSequencesMaxOrder : kOracleMaxOrder;
  if (n > guard)
    throw Error(ErrorKind::order_too_large, "Prüfer oracle is limited to n <= " + std::to_string(guard));

  OracleResult result;
  if (n <= 2) {
    result.classes.push_back(n == 1 ? tree_from_edge_list(1, {}) : tree_from_edge_list(2, {{0, 1}}));
    result.sequences = 1;
    return result;
  }

  const int len = n - 2;
  const int max_repeat = kChemicalMaxDegree - 1;
  std::unordered_map<std::uint64_t, ChemTree> seen;
  detail::SmallTree scratch;
  std::vector<int> seq(static_cast<std::size_t>(len), 0);

  auto consider = [&] {
    detail::decode_prufer(seq, n, scratch);
    auto key = detail::packed_canonical_code(scratch).bits;
    if (!seen.contains(key)) seen.emplace(key, detail::small_to_chem(scratch));
  };

  if (space == PruferSpace::all) {
    std::array<int, detail::kPackedMaxOrder> counts{};
    counts[0] = len;
    for (;;) {
      ++result.sequences;
      if (*std::max_element(counts.begin(), counts.begin() + n) <= max_repeat) consider();
      int i = len - 1;
      while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
        --counts[static_cast<std::size_t>(n - 1)];
        seq[static_cast<std::size_t>(i)] = 0;
        ++counts[0];
        --i;
      }
      if (i < 0) break;
      --counts[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])];
      ++seq[static_cast<std::size_t>(i)];
      ++counts[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])];
    }
  } else {
    // Every tree has a labeling with degrees non-increasing in the label, so
    // it suffices to visit the permutations of each sorted multiset in which
    // label v occurs c_v times with c_0 >= c_1 >= ... and c_v <= 3.
    std::vector<int> counts;
    std::function<void(int, int)> choose = [&](int remaining, int cap) {
      if (remaining == 0) {
        if (static_cast<int>(counts.size()) > n) return;
        std::size_t k = 0;
        for (std::size_t v = 0; v < counts.size(); ++v)
          for (int r = 0; r < counts[v]; ++r) seq[k++] = static_cast<int>(v);
        do {
          ++result.sequences;
          consider();
        } while (std::next_permutation(seq.begin(), seq.end()));
        return;
      }
      for (int c = std::min(cap, remaining); c >= 1; --c) {
        counts.push_back(c);
        choose(remaining - c, c);
        counts.pop_back();
      }
    };
    choose(len, max_repeat);
  }

  result.classes.reserve(seen.size());
  for (auto& [key, tree] : seen) result.classes.push_back(canonical_form(tree));
  detail::sort_by_code(result.classes);
  return result;
}

/// Streams one tree per isomorphism class in augmentation order, holding a
/// single mutable tree. Trees are yielded in their canonical labeling.
template <class Visit>
void for_each_chemical_tree(const EnumerationConfig& cfg, Visit&& visit) {
  detail::check_order(cfg);
  if (cfg.max_degree > kChemicalMaxDegree)
    throw Error(ErrorKind::invalid_argument, "chemical trees have max_degree <= 4");
  std::uint64_t count = 0;
  detail::augment_all(cfg.n, cfg.max_degree, 1, [&](const detail::GrowthTree& g) {
    detail::check_cap(cfg, ++count);
    visit(canonical_form(g.to_chem_tree()));
  });
}

/// All classes at order cfg.n. In deterministic mode the result is sorted by
/// canonical code, so every strategy and worker count gives the same list.
inline std::vector<ChemTree> enumerate_chemical_trees(const EnumerationConfig& cfg) {
  detail::check_order(cfg);
  if (cfg.max_degree > kChemicalMaxDegree)
    throw Error(ErrorKind::invalid_argument, "chemical trees have max_degree <= 4");

  std::vector<ChemTree> out;
  if (cfg.mode == EnumerationMode::oracle) {
    out = enumerate_oracle(cfg.n).classes;
    detail::check_cap(cfg, out.size());
    return out;
  }
  if (cfg.strategy == CanonicalStrategy::growth_dedup) {
    for (const auto& g : detail::growth_dedup_level(cfg.n, cfg.max_degree)) {
      out.push_back(canonical_form(g.to_chem_tree()));
      detail::check_cap(cfg, out.size());
    }
  } else {
    std::mutex guard;
    std::atomic<std::uint64_t> count{0};
    detail::augment_all(cfg.n, cfg.max_degree, cfg.workers, [&](const detail::GrowthTree& g) {
      detail::check_cap(cfg, ++count);
      ChemTree t = canonical_form(g.to_chem_tree());
      std::lock_guard lock(guard);
      out.push_back(std::move(t));
    });
  }
  if (cfg.deterministic) detail::sort_by_code(out);
  return out;
}

/// Number of classes of trees of order n with maximum degree <= max_degree.
/// Counts without materialising trees.
inline std::uint64_t count_trees(int n, int max_degree = kChemicalMaxDegree,
                                 CanonicalStrategy strategy = CanonicalStrategy::augmentation,
                                 unsigned workers = 1) {
  EnumerationConfig cfg;
  cfg.n = n;
  cfg.max_degree = max_degree;
  detail::check_order(cfg);
  if (strategy == CanonicalStrategy::growth_dedup)
    return detail::growth_dedup_level(n, max_degree).size();
  std::atomic<std::uint64_t> count{0};
  detail::augment_all(n, max_degree, workers, [&](const detail::GrowthTree&) { ++count; });
  return count.load();
}

inline std::uint64_t count_chemical_trees(int n) { return count_trees(n); }

}  // namespace sombor
