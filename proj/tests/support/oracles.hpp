#pragma once

// Independent reference data for the test suites.
//
// Counts come from a cycle-index (Polya / Otter) computation that shares no
// code with the enumerators. Decimal constants were produced with mpmath at
// 60 significant digits and are frozen here; graph6 strings were produced by
// networkx.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sombor/tree.hpp"

namespace oracle {

using Series = std::vector<std::int64_t>;

inline Series substitute_power(const Series& f, int k, int len) {
  Series out(static_cast<std::size_t>(len), 0);
  for (int i = 0; i * k < len; ++i) out[static_cast<std::size_t>(i * k)] = f[static_cast<std::size_t>(i)];
  return out;
}

inline Series multiply(const Series& a, const Series& b, int len) {
  Series out(static_cast<std::size_t>(len), 0);
  for (int i = 0; i < len; ++i)
    for (int j = 0; i + j < len; ++j)
      out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return out;
}

/// Z(S_k; f) for k = 0..kmax via k Z_k = sum_j f(x^j) Z_{k-j}.
inline std::vector<Series> symmetric_cycle_indices(const Series& f, int kmax, int len) {
  std::vector<Series> z{Series(static_cast<std::size_t>(len), 0)};
  z[0][0] = 1;
  for (int k = 1; k <= kmax; ++k) {
    Series acc(static_cast<std::size_t>(len), 0);
    for (int j = 1; j <= k; ++j) {
      auto term = multiply(substitute_power(f, j, len), z[static_cast<std::size_t>(k - j)], len);
      for (int i = 0; i < len; ++i) acc[static_cast<std::size_t>(i)] += term[static_cast<std::size_t>(i)];
    }
    for (auto& c : acc) c /= k;
    z.push_back(std::move(acc));
  }
  return z;
}

/// Number of unlabeled free trees of order n with maximum degree <= d.
inline std::int64_t count_free_trees(int n, int d) {
  const int len = n + 1;
  // a(x): planted trees whose root has at most d-1 children, a_0 = 1 standing
  // for "no branch" so that Z(S_k; a) counts multisets of at most k branches.
  Series a(static_cast<std::size_t>(len), 0);
  a[0] = 1;
  for (int round = 0; round < len; ++round) {
    auto z = symmetric_cycle_indices(a, d - 1, len).back();
    Series next(static_cast<std::size_t>(len), 0);
    next[0] = 1;
    for (int i = 1; i < len; ++i) next[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i - 1)];
    a = std::move(next);
  }
  auto zd = symmetric_cycle_indices(a, d, len).back();
  Series vertex_rooted(static_cast<std::size_t>(len), 0);
  for (int i = 1; i < len; ++i) vertex_rooted[static_cast<std::size_t>(i)] = zd[static_cast<std::size_t>(i - 1)];
  Series planted = a;
  planted[0] = 0;
  auto sq = multiply(planted, planted, len);
  auto sym = substitute_power(planted, 2, len);
  const auto i = static_cast<std::size_t>(n);
  return vertex_rooted[i] - (sq[i] - sym[i]) / 2;
}

// OEIS A000602, n = 1..18.
inline constexpr std::array<std::int64_t, 18> kChemicalTreeCounts = {
    1, 1, 1, 2, 3, 5, 9, 18, 35, 75, 159, 355, 802, 1858, 4347, 10359, 24894, 60523};

// OEIS A000055, n = 1..14.
inline constexpr std::array<std::int64_t, 14> kFreeTreeCounts = {
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};

// f(i,j) = exp(sqrt((i-1)^2 + (j-1)^2)).
inline const std::vector<std::pair<std::pair<int, int>, std::string>> kF = {
    {{1, 2}, "2.71828182845904523536028747135"},
    {{1, 3}, "7.38905609893065022723042746058"},
    {{1, 4}, "20.0855369231876677409285296546"},
    {{2, 2}, "4.11325037878292751717358181514"},
    {{2, 3}, "9.35646901660114735419043229091"},
    {{2, 4}, "23.6243429220178010924132599649"},
    {{3, 3}, "16.9188286785578966965346492826"},
    {{3, 4}, "36.8019662871682071411606434131"},
    {{4, 4}, "69.5913784706417256126946236453"},
};

inline const std::vector<std::pair<std::pair<int, int>, std::string>> kM = {
    {{1, 2}, "-0.865307912243936548312877519658"},
    {{1, 3}, "-7.19583176342878886"},
    {{2, 2}, "-32.474233726889426181"},
    {{2, 3}, "-38.232313210727663649"},
    {{2, 4}, "-29.465088366139238563"},
    {{3, 3}, "-41.671251670427371611"},
    {{3, 4}, "-27.288763122645289819"},
};

// Maximum index over chemical trees of order n, n = 5..14.
inline const std::vector<std::string> kTheoremBound = {
    "80.34214769275067096371412", "86.59923552003984955055914", "111.8366892545925108184071",
    "190.1046000097677320582658", "196.3616878370569106451108", "221.5991415716095719129588",
    "299.8670523267847931528175", "306.1241401540739717396625", "331.3615938886266330075105",
    "409.6295046438018542473692",
};

inline const std::vector<std::pair<int, std::string>> kConjectureBound = {
    {6, "17.82838121976921205398896"},  {7, "71.65082653615950890273533"},
    {9, "107.5052966135986054076121"},  {10, "181.413278853176569997287"},
    {12, "197.1822120074279987612353"}, {13, "291.1757311701936310918387"},
};

// Extremal value minus conjectured bound.
inline const std::string kGapR1 = "40.18586271843300191567176";
inline const std::vector<std::pair<int, std::string>> kGapR0 = {
    {6, "68.77085430027063749657018"}, {9, "88.85639122345830523749871"}, {12, "108.9419281466459729784272"}};

inline const std::string kPathFiveReducedSombor = "4.8284271247461900976";
inline const std::string kPathFiveIndex = "13.663064414483945505";

// networkx graph6 encodings.
inline const std::string kStarFourGraph6 = "Ds_";    // K_{1,4}, centre 0
inline const std::string kPathFiveGraph6 = "DhC";    // 0-1-2-3-4
inline const std::string kStarFiveGraph6 = "Esa?";   // K_{1,5}
inline const std::string kTriangleGraph6 = "Bw";
inline const std::string kSmallTreeGraph6 = "FiG`?";  // 0-1, 1-2, 1-3, 2-4, 2-5, 2-6
inline const std::string kPath63Graph6 =
    "~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_"
    "????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@???????"
    "?_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??"
    "????????_?????????G";

/// Random chemical tree of order n by leaf attachment.
inline sombor::ChemTree random_chemical_tree(int n, std::mt19937& rng) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int v = 1; v < n; ++v) {
    int parent;
    do {
      parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    } while (degree[static_cast<std::size_t>(parent)] == 4);
    ++degree[static_cast<std::size_t>(parent)];
    ++degree[static_cast<std::size_t>(v)];
    edges.emplace_back(parent, v);
  }
  return sombor::tree_from_edge_list(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
