#pragma once

// Maximum-index chemical trees by residue of n mod 3, their closed-form
// values, and the competing conjectured bound.

#include <string>
#include <utility>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/indices.hpp"
#include "sombor/scalar.hpp"
#include "sombor/tree.hpp"

namespace sombor {

inline constexpr int kExtremalMinOrder = 5;

enum class ResidueClass { r0 = 0, r1 = 1, r2 = 2 };

inline ResidueClass residue_class(int n) { return static_cast<ResidueClass>(n % 3); }

inline std::string to_string(ResidueClass r) { return "r" + std::to_string(static_cast<int>(r)); }

/// Closed forms, valid for any n:
///   all_degree4  = (2n+2)/3 f(1,4) + (n-5)/3 f(4,4)            (n2 = n3 = 0)
///   one_degree3  = 2 f(1,3) + f(3,4) + (2n-5)/3 f(1,4) + (n-7)/3 f(4,4)
///   one_degree2  = f(1,2) + f(2,4) + (2n-3)/3 f(1,4) + (n-6)/3 f(4,4)
namespace closed_form {

using R = LinearForm::Rational;

inline LinearForm all_degree4(long n) {
  return LinearForm::term(1, 4, R(2 * n + 2, 3)) + LinearForm::term(4, 4, R(n - 5, 3));
}

inline LinearForm one_degree3(long n) {
  return LinearForm::term(1, 3, 2) + LinearForm::term(3, 4, 1) + LinearForm::term(1, 4, R(2 * n - 5, 3)) +
         LinearForm::term(4, 4, R(n - 7, 3));
}

inline LinearForm one_degree2(long n) {
  return LinearForm::term(1, 2, 1) + LinearForm::term(2, 4, 1) + LinearForm::term(1, 4, R(2 * n - 3, 3)) +
         LinearForm::term(4, 4, R(n - 6, 3));
}

}  // namespace closed_form

/// Exact form of the maximum index over chemical trees of order n.
inline LinearForm theorem_bound_form(int n) {
  require_order_at_least(n, kExtremalMinOrder, "theorem_bound");
  switch (residue_class(n)) {
    case ResidueClass::r2: return closed_form::all_degree4(n);
    case ResidueClass::r1: return closed_form::one_degree3(n);
    case ResidueClass::r0: return closed_form::one_degree2(n);
  }
  return {};
}

inline Scalar theorem_bound(int n, int digits = kDefaultDigits) { return theorem_bound_form(n).evaluate(digits); }

/// The conjectured bound taken verbatim, including orders where some
/// coefficient is negative:
///   r2: 2(n+1)/3 e^3 + (n-5)/3 e^{3 sqrt 2}
///   r1: (2n+1)/3 e^3 + (n-13)/3 e^{3 sqrt 2} + 3 e^{sqrt 13}
///   r0: n/3 e^3 + (n-9)/3 e^{3 sqrt 2} + 2 e^{sqrt 10}
inline LinearForm conjecture_bound_form(int n) {
  require_order_at_least(n, kExtremalMinOrder, "conjecture_bound");
  using R = LinearForm::Rational;
  const long m = n;
  switch (residue_class(n)) {
    case ResidueClass::r2:
      return LinearForm::term(1, 4, R(2 * (m + 1), 3)) + LinearForm::term(4, 4, R(m - 5, 3));
    case ResidueClass::r1:
      return LinearForm::term(1, 4, R(2 * m + 1, 3)) + LinearForm::term(4, 4, R(m - 13, 3)) +
             LinearForm::term(3, 4, 3);
    case ResidueClass::r0:
      return LinearForm::term(1, 4, R(m, 3)) + LinearForm::term(4, 4, R(m - 9, 3)) + LinearForm::term(2, 4, 2);
  }
  return {};
}

inline Scalar conjecture_bound(int n, int digits = kDefaultDigits) {
  return conjecture_bound_form(n).evaluate(digits);
}

/// A caterpillar on the degree-4 vertices: a path backbone 0..k-1, one
/// special branch hung on vertex 0 for the r0 / r1 classes, and leaves
/// filling every backbone vertex up to degree 4.
inline ChemTree construct_extremal(int n) {
  require_order_at_least(n, kExtremalMinOrder, "construct_extremal");
  const ResidueClass cls = residue_class(n);
  // r2: n = 3k + 2, r1: n = 3k + 4, r0: n = 3k + 3
  const int backbone = cls == ResidueClass::r2 ? (n - 2) / 3 : cls == ResidueClass::r1 ? (n - 4) / 3 : (n - 3) / 3;

  std::vector<std::pair<int, int>> edges;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  int next = backbone;
  auto link = [&](int a, int b) {
    edges.emplace_back(a, b);
    ++degree[static_cast<std::size_t>(a)];
    ++degree[static_cast<std::size_t>(b)];
  };
  for (int v = 0; v + 1 < backbone; ++v) link(v, v + 1);

  if (cls == ResidueClass::r1) {
    int hub = next++;  // degree 3 with two pendant leaves
    link(0, hub);
    link(hub, next++);
    link(hub, next++);
  } else if (cls == ResidueClass::r0) {
    int mid = next++;  // degree 2 on a pendant path of length 2
    link(0, mid);
    link(mid, next++);
  }
  for (int v = 0; v < backbone; ++v)
    while (degree[static_cast<std::size_t>(v)] < kChemicalMaxDegree) link(v, next++);

  if (next != n) throw std::logic_error("extremal construction produced the wrong order");
  return tree_from_edge_list(n, edges);
}

/// Named boolean conditions, in a fixed order.
struct ConditionMap {
  std::vector<std::pair<std::string, bool>> conditions;

  bool all() const {
    for (const auto& [name, ok] : conditions)
      if (!ok) return false;
    return true;
  }

  bool operator[](const std::string& name) const {
    for (const auto& [key, ok] : conditions)
      if (key == name) return ok;
    throw Error(ErrorKind::invalid_argument, "unknown condition " + name);
  }
};

/// The degree / edge-type conditions under which a tree of order n attains
/// theorem_bound(n).
inline ConditionMap equality_conditions(const ChemTree& t) {
  require_order_at_least(t.order(), kExtremalMinOrder, "equality_conditions");
  const auto c = degree_counts(t);
  const auto m = edge_type_counts(t);
  ConditionMap out;
  switch (residue_class(t.order())) {
    case ResidueClass::r2:
      out.conditions = {{"n2=0", c.n2 == 0}, {"n3=0", c.n3 == 0}};
      break;
    case ResidueClass::r1:
      out.conditions = {{"n2=0", c.n2 == 0}, {"n3=1", c.n3 == 1}, {"m13=2", m.m13 == 2}, {"m34=1", m.m34 == 1}};
      break;
    case ResidueClass::r0:
      out.conditions = {{"n2=1", c.n2 == 1}, {"n3=0", c.n3 == 0}, {"m12=1", m.m12 == 1}, {"m24=1", m.m24 == 1}};
      break;
  }
  return out;
}

struct ExtremalCertificate {
  ChemTree tree;
  ResidueClass residue;
  ConditionMap conditions;
  Scalar value;
  Scalar bound;
  bool exact_match = false;  // index form equals the closed form exactly
};

inline ExtremalCertificate certify_extremal(int n, int digits = kDefaultDigits) {
  ChemTree t = construct_extremal(n);
  auto conditions = equality_conditions(t);
  auto value = exp_reduced_sombor(t, digits);
  auto bound = theorem_bound(n, digits);
  bool exact = index_form(t) == theorem_bound_form(n);
  if (!conditions.all() || !overlaps(value, bound) || !exact)
    throw std::logic_error("extremal construction does not meet its certificate at n=" + std::to_string(n));
  return ExtremalCertificate{std::move(t), residue_class(n), std::move(conditions), std::move(value), std::move(bound),
                             exact};
}

}  // namespace sombor
