#pragma once

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <boost/rational.hpp>

#include "sombor/error.hpp"
#include "sombor/scalar.hpp"
#include "sombor/tree.hpp"

namespace sombor {

/// Number of (i,j) edge types with 1 <= i <= j <= 4.
inline constexpr int kEdgeTypes = 10;

/// Position of the (i,j) edge type in the order 11,12,13,14,22,23,24,33,34,44.
constexpr int edge_type_index(int i, int j) {
  if (i > j) std::swap(i, j);
  constexpr int row_start[5] = {0, 0, 4, 7, 9};
  return row_start[i] + (j - i);
}

/// (x-1)^2 + (y-1)^2, the squared exponent of f(x,y).
constexpr int exponent_square(int x, int y) { return (x - 1) * (x - 1) + (y - 1) * (y - 1); }

inline constexpr std::array<std::pair<int, int>, kEdgeTypes> kEdgeTypeList = {{
    {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 4},
}};

inline void check_degree_pair(int x, int y) {
  if (x < 1 || x > 4 || y < 1 || y > 4)
    throw Error(ErrorKind::invalid_argument, "degrees must lie in 1..4");
}

inline void check_digits(int digits) {
  if (digits < kMinDigits)
    throw Error(ErrorKind::invalid_argument, "precision must be at least " + std::to_string(kMinDigits) + " digits");
}

/// Enclosure of f(x,y) = exp(sqrt((x-1)^2 + (y-1)^2)).
inline Scalar f(int x, int y, int digits = kDefaultDigits) {
  check_degree_pair(x, y);
  check_digits(digits);
  return exp(sqrt(Scalar::integer(exponent_square(x, y), digits)));
}

inline double f_double(int x, int y) { return std::exp(std::sqrt(static_cast<double>(exponent_square(x, y)))); }

namespace detail {

struct FValues {
  std::array<Scalar, kEdgeTypes> f;
  std::array<Scalar, kEdgeTypes> root;  // sqrt((i-1)^2 + (j-1)^2)
};

inline const FValues& f_values(int digits) {
  static std::mutex guard;
  static std::map<int, std::unique_ptr<FValues>> cache;
  std::lock_guard lock(guard);
  auto& slot = cache[digits];
  if (!slot) {
    auto values = std::make_unique<FValues>();
    for (std::size_t k = 0; k < kEdgeTypeList.size(); ++k) {
      auto [i, j] = kEdgeTypeList[k];
      values->f[k] = f(i, j, digits);
      values->root[k] = sqrt(Scalar::integer(exponent_square(i, j), digits));
    }
    slot = std::move(values);
  }
  return *slot;
}

inline const std::array<double, kEdgeTypes>& f_doubles() {
  static const std::array<double, kEdgeTypes> table = [] {
    std::array<double, kEdgeTypes> t{};
    for (int k = 0; k < kEdgeTypes; ++k) t[static_cast<std::size_t>(k)] = f_double(kEdgeTypeList[static_cast<std::size_t>(k)].first, kEdgeTypeList[static_cast<std::size_t>(k)].second);
    return t;
  }();
  return table;
}

}  // namespace detail

/// SO_red: sum over edges of sqrt((d(u)-1)^2 + (d(v)-1)^2).
inline Scalar reduced_sombor(const ChemTree& t, int digits = kDefaultDigits) {
  check_digits(digits);
  const auto& roots = detail::f_values(digits).root;
  Scalar sum = Scalar::integer(0, digits);
  for (const auto& e : t.edges())
    sum += roots[static_cast<std::size_t>(edge_type_index(t.degree(e.u), t.degree(e.v)))];
  return sum;
}

/// Exponential reduced Sombor index by direct summation over edges.
inline Scalar exp_reduced_sombor(const ChemTree& t, int digits = kDefaultDigits) {
  check_digits(digits);
  const auto& fs = detail::f_values(digits).f;
  Scalar sum = Scalar::integer(0, digits);
  for (const auto& e : t.edges())
    sum += fs[static_cast<std::size_t>(edge_type_index(t.degree(e.u), t.degree(e.v)))];
  return sum;
}

/// Double-precision fast path; not a certified value.
inline double exp_reduced_sombor_double(const ChemTree& t) {
  const auto& fs = detail::f_doubles();
  double sum = 0.0;
  for (const auto& e : t.edges()) sum += fs[static_cast<std::size_t>(edge_type_index(t.degree(e.u), t.degree(e.v)))];
  return sum;
}

/// Exact rational linear combination of the ten values f(i,j).
///
/// The exponents sqrt((i-1)^2 + (j-1)^2) are ten distinct algebraic numbers,
/// so by Lindemann-Weierstrass the values f(i,j) are linearly independent
/// over the rationals: a form is zero exactly when every coefficient is.
class LinearForm {
 public:
  using Rational = boost::rational<long long>;

  LinearForm() = default;

  static LinearForm term(int i, int j, Rational c = 1) {
    check_degree_pair(i, j);
    LinearForm out;
    out.c_[static_cast<std::size_t>(edge_type_index(i, j))] = c;
    return out;
  }

  static LinearForm from_counts(const EdgeTypeCounts& m) {
    LinearForm out;
    for (int k = 0; k < kEdgeTypes; ++k) {
      auto [i, j] = kEdgeTypeList[static_cast<std::size_t>(k)];
      out.c_[static_cast<std::size_t>(k)] = m.at(i, j);
    }
    return out;
  }

  Rational coefficient(int i, int j) const { return c_[static_cast<std::size_t>(edge_type_index(i, j))]; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (c.numerator() != 0) return false;
    return true;
  }

  LinearForm& operator+=(const LinearForm& b) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += b.c_[k];
    return *this;
  }
  LinearForm& operator-=(const LinearForm& b) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= b.c_[k];
    return *this;
  }
  LinearForm& operator*=(Rational s) {
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(Rational s, LinearForm a) { return a *= s; }
  friend LinearForm operator*(LinearForm a, Rational s) { return a *= s; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  Scalar evaluate(int digits = kDefaultDigits) const {
    check_digits(digits);
    const auto& fs = detail::f_values(digits).f;
    Scalar sum = Scalar::integer(0, digits);
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].numerator() == 0) continue;
      sum += fs[k] * c_[k].numerator() / c_[k].denominator();
    }
    return sum;
  }

  double evaluate_double() const {
    const auto& fs = detail::f_doubles();
    double sum = 0.0;
    for (std::size_t k = 0; k < c_.size(); ++k)
      sum += static_cast<double>(c_[k].numerator()) / static_cast<double>(c_[k].denominator()) * fs[k];
    return sum;
  }

  /// e.g. "4/3*f(1,4) - 1*f(4,4)"
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].numerator() == 0) continue;
      auto [i, j] = kEdgeTypeList[k];
      auto num = c_[k].numerator();
      if (!out.empty()) out += num < 0 ? " - " : " + ";
      else if (num < 0) out += "-";
      out += std::to_string(num < 0 ? -num : num);
      if (c_[k].denominator() != 1) out += "/" + std::to_string(c_[k].denominator());
      out += "*f(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::array<Rational, kEdgeTypes> c_{};
};

/// Exact form of a tree's exponential reduced Sombor index.
inline LinearForm index_form(const ChemTree& t) { return LinearForm::from_counts(edge_type_counts(t)); }

/// Forms of the seven penalty coefficients M_ij that express the index as a
/// base term in f(1,4), f(4,4) plus corrections for every other edge type.
inline LinearForm coefficient_form(int i, int j) {
  using R = LinearForm::Rational;
  auto F = [](int a, int b, R c) { return LinearForm::term(a, b, c); };
  switch (edge_type_index(i, j)) {
    case edge_type_index(1, 2): return F(1, 2, 1) + F(1, 4, R(-4, 3)) + F(4, 4, R(1, 3));
    case edge_type_index(1, 3): return F(1, 3, 1) + F(1, 4, R(-10, 9)) + F(4, 4, R(1, 9));
    case edge_type_index(2, 2): return F(2, 2, 1) + F(1, 4, R(-2, 3)) + F(4, 4, R(-1, 3));
    case edge_type_index(2, 3): return F(2, 3, 1) + F(1, 4, R(-4, 9)) + F(4, 4, R(-5, 9));
    case edge_type_index(2, 4): return F(2, 4, 1) + F(1, 4, R(-1, 3)) + F(4, 4, R(-2, 3));
    case edge_type_index(3, 3): return F(3, 3, 1) + F(1, 4, R(-2, 9)) + F(4, 4, R(-7, 9));
    case edge_type_index(3, 4): return F(3, 4, 1) + F(1, 4, R(-1, 9)) + F(4, 4, R(-8, 9));
    default: throw Error(ErrorKind::invalid_argument, "no M coefficient for this edge type");
  }
}

inline constexpr std::array<std::pair<int, int>, 7> kCoefficientTypes = {{
    {1, 2}, {1, 3}, {2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4},
}};

/// The seven M_ij coefficients plus f(1,4) and f(4,4) at one precision.
struct CoefficientTable {
  int digits = kDefaultDigits;
  Scalar m12, m13, m22, m23, m24, m33, m34;
  Scalar f14, f44;

  const Scalar& M(int i, int j) const {
    switch (edge_type_index(i, j)) {
      case edge_type_index(1, 2): return m12;
      case edge_type_index(1, 3): return m13;
      case edge_type_index(2, 2): return m22;
      case edge_type_index(2, 3): return m23;
      case edge_type_index(2, 4): return m24;
      case edge_type_index(3, 3): return m33;
      case edge_type_index(3, 4): return m34;
      default: throw Error(ErrorKind::invalid_argument, "no M coefficient for this edge type");
    }
  }

  /// Recomputes each M_ij from fresh f-values through its exact form and
  /// checks that the enclosures intersect.
  bool self_check() const {
    for (auto [i, j] : kCoefficientTypes)
      if (!overlaps(M(i, j), coefficient_form(i, j).evaluate(digits))) return false;
    return overlaps(f14, f(1, 4, digits)) && overlaps(f44, f(4, 4, digits));
  }
};

namespace detail {

/// (a * f(i,j) + b * f(1,4) + c * f(4,4)) / den with integer a, b, c.
inline Scalar combine(const Scalar& fij, long a, const Scalar& f14, long b, const Scalar& f44, long c, long den) {
  return (fij * a + f14 * b + f44 * c) / den;
}

inline CoefficientTable build_coefficient_table(int digits) {
  const auto& fs = f_values(digits).f;
  auto fv = [&](int i, int j) -> const Scalar& { return fs[static_cast<std::size_t>(edge_type_index(i, j))]; };
  const Scalar& f14 = fv(1, 4);
  const Scalar& f44 = fv(4, 4);
  return CoefficientTable{
      digits,
      combine(fv(1, 2), 3, f14, -4, f44, 1, 3),
      combine(fv(1, 3), 9, f14, -10, f44, 1, 9),
      combine(fv(2, 2), 3, f14, -2, f44, -1, 3),
      combine(fv(2, 3), 9, f14, -4, f44, -5, 9),
      combine(fv(2, 4), 3, f14, -1, f44, -2, 3),
      combine(fv(3, 3), 9, f14, -2, f44, -7, 9),
      combine(fv(3, 4), 9, f14, -1, f44, -8, 9),
      f14,
      f44,
  };
}

}  // namespace detail

/// Computed once per precision and shared read-only afterwards.
inline const CoefficientTable& coefficient_table(int digits = kDefaultDigits) {
  check_digits(digits);
  static std::mutex guard;
  static std::map<int, std::unique_ptr<CoefficientTable>> cache;
  std::lock_guard lock(guard);
  auto& slot = cache[digits];
  if (!slot) slot = std::make_unique<CoefficientTable>(detail::build_coefficient_table(digits));
  return *slot;
}

inline constexpr int kDecompositionMinOrder = 5;

/// Index evaluated as ((2n+2) f(1,4) + (n-5) f(4,4)) / 3 + sum M_ij m_ij.
/// Only valid for n >= 5; throws std::logic_error if the result fails to
/// intersect the direct edge sum.
inline Scalar exp_reduced_sombor_decomposed(const ChemTree& t, int digits = kDefaultDigits) {
  require_order_at_least(t.order(), kDecompositionMinOrder, "the M-coefficient decomposition");
  const auto& table = coefficient_table(digits);
  const long n = t.order();
  const auto m = edge_type_counts(t);
  Scalar value = (table.f14 * (2 * n + 2) + table.f44 * (n - 5)) / 3;
  for (auto [i, j] : kCoefficientTypes)
    if (long count = m.at(i, j); count != 0) value += table.M(i, j) * count;
  if (!overlaps(value, exp_reduced_sombor(t, digits)))
    throw std::logic_error("decomposed and direct index enclosures are disjoint");
  return value;
}

/// Exact checks of the identities relating vertex and edge-type counts,
/// including the two that eliminate m14 and m44 (scaled by 9 to stay integral).
struct IdentityReport {
  bool vertex_count = false;   // n1+n2+n3+n4 = n
  bool degree_sum = false;     // n1+2n2+3n3+4n4 = 2(n-1)
  bool handshake = false;      // per-degree edge incidences
  long m14_lhs = 0, m14_rhs = 0;  // 9 m14 vs its elimination
  long m44_lhs = 0, m44_rhs = 0;  // 9 m44 vs its elimination

  bool m14_identity() const { return m14_lhs == m14_rhs; }
  bool m44_identity() const { return m44_lhs == m44_rhs; }
  bool passed() const { return vertex_count && degree_sum && handshake && m14_identity() && m44_identity(); }
};

inline IdentityReport check_structural_identities(const ChemTree& t) {
  require_order_at_least(t.order(), kDecompositionMinOrder, "the structural identities");
  const long n = t.order();
  DegreeCounts c;
  for (int d : t.degrees()) {
    if (d == 1) ++c.n1;
    else if (d == 2) ++c.n2;
    else if (d == 3) ++c.n3;
    else if (d == 4) ++c.n4;
  }
  EdgeTypeCounts m;
  for (const auto& e : t.edges()) ++m.at(t.degree(e.u), t.degree(e.v));

  IdentityReport r;
  r.vertex_count = c.n1 + c.n2 + c.n3 + c.n4 == n;
  r.degree_sum = c.n1 + 2 * c.n2 + 3 * c.n3 + 4 * c.n4 == 2 * (n - 1);
  r.handshake = satisfies_edge_identities(m, c, n);
  r.m14_lhs = 9 * m.m14;
  r.m14_rhs = 3 * (2 * n + 2) - 12 * m.m12 - 10 * m.m13 - 6 * m.m22 - 4 * m.m23 - 3 * m.m24 - 2 * m.m33 - m.m34;
  r.m44_lhs = 9 * m.m44;
  r.m44_rhs = 3 * (n - 5) + 3 * m.m12 + m.m13 - 3 * m.m22 - 5 * m.m23 - 6 * m.m24 - 7 * m.m33 - 8 * m.m34;
  return r;
}

}  // namespace sombor
