#pragma once

// Certified checks of the coefficient inequalities, the extremal theorem,
// the class-restricted bounds and the conjectured bound.
//
// Strict inequalities are decided by disjoint enclosures, escalating the
// working precision along a fixed ladder. Equalities are decided exactly on
// LinearForm coefficients, so no equality claim rests on enclosure width.

#include <algorithm>
#include <array>
#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sombor/canonical.hpp"
#include "sombor/enumerate.hpp"
#include "sombor/error.hpp"
#include "sombor/extremal.hpp"
#include "sombor/indices.hpp"
#include "sombor/scalar.hpp"
#include "sombor/tree.hpp"

namespace sombor {

enum class Status { certified, refuted, inconclusive };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::certified: return "certified";
    case Status::refuted: return "refuted";
    case Status::inconclusive: return "inconclusive";
  }
  return "unknown";
}

/// Worst of two statuses: refuted > inconclusive > certified.
inline Status combine(Status a, Status b) {
  if (a == Status::refuted || b == Status::refuted) return Status::refuted;
  if (a == Status::inconclusive || b == Status::inconclusive) return Status::inconclusive;
  return Status::certified;
}

inline constexpr std::array<int, 4> kPrecisionLadder = {30, 50, 100, 200};

/// The requested precision followed by every larger ladder rung.
inline std::vector<int> precision_ladder(int digits) {
  check_digits(digits);
  std::vector<int> out{digits};
  for (int rung : kPrecisionLadder)
    if (rung > digits) out.push_back(rung);
  return out;
}

/// A certified gap. For strict entries the claim is gap > 0 and the
/// enclosure must lie strictly above zero; exact entries record an identity
/// proved on exact coefficients (gap is then exactly zero).
struct Margin {
  std::string label;
  Scalar gap;
  bool exact_equality = false;
};

struct Witness {
  std::string label;
  ChemTree tree;
  Scalar value;
};

enum class SubjectKind { lemma0, lemma_class, theorem, conjecture };

struct Subject {
  SubjectKind kind = SubjectKind::lemma0;
  int n = 0;
  std::string stratum;

  std::string to_string() const {
    switch (kind) {
      case SubjectKind::lemma0: return "lemma0";
      case SubjectKind::lemma_class: return "lemma_class(" + std::to_string(n) + ", " + stratum + ")";
      case SubjectKind::theorem: return "theorem(" + std::to_string(n) + ")";
      case SubjectKind::conjecture: return "conjecture(" + std::to_string(n) + ")";
    }
    return "unknown";
  }
};

struct TheoremRow {
  int n = 0;
  ResidueClass residue = ResidueClass::r2;
  std::size_t class_count = 0;
  Scalar max;
  Scalar bound;
  std::size_t maximizer_count = 0;
  std::size_t condition_count = 0;  // classes meeting the equality conditions
  double agreement = 0.0;           // digits shared by max and bound midpoints
  Status status = Status::certified;
};

struct StratumRow {
  std::string name;
  std::size_t class_count = 0;
  std::optional<Scalar> max;
  Scalar bound;
  std::size_t equality_count = 0;   // classes whose index equals the bound exactly
  std::size_t condition_count = 0;  // classes meeting the stratum's equality conditions
  Status status = Status::certified;
  std::string note;
};

struct VerificationReport {
  Subject subject;
  Status status = Status::certified;
  std::vector<Margin> margins;
  std::vector<Witness> witnesses;
  int precision_used = 0;
  std::chrono::milliseconds wall_time{0};
  std::vector<TheoremRow> theorem_rows;
  std::vector<StratumRow> strata;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  int cap = 16;            // largest order for exhaustive scans
  unsigned workers = 1;
  double window = 1e-6;    // absolute double-precision candidate window
};

namespace detail {

class Stopwatch {
 public:
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

enum class Sign { positive, negative, zero, unknown };

struct SignCertificate {
  Sign sign = Sign::unknown;
  Scalar value;
  int digits = 0;
};

/// Decides the sign of an exact form: zero from its coefficients, otherwise
/// by evaluating along the precision ladder until the enclosure excludes 0.
inline SignCertificate certify_sign(const LinearForm& form, int digits) {
  if (form.is_zero()) return {Sign::zero, Scalar::integer(0, digits), digits};
  SignCertificate out;
  for (int p : precision_ladder(digits)) {
    out.value = form.evaluate(p);
    out.digits = p;
    if (out.value.certainly_positive()) {
      out.sign = Sign::positive;
      return out;
    }
    if (out.value.certainly_negative()) {
      out.sign = Sign::negative;
      return out;
    }
  }
  return out;
}

inline Status status_of_strict(Sign s) {
  switch (s) {
    case Sign::positive: return Status::certified;
    case Sign::unknown: return Status::inconclusive;
    default: return Status::refuted;
  }
}

inline void check_scan_order(int n, const VerifyOptions& opt) {
  require_order_at_least(n, kExtremalMinOrder, "exhaustive verification");
  if (n > opt.cap)
    throw Error(ErrorKind::order_too_large,
                "n=" + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(opt.cap));
}

inline std::vector<ChemTree> classes_of_order(int n, const VerifyOptions& opt) {
  EnumerationConfig cfg;
  cfg.n = n;
  cfg.workers = opt.workers;
  return enumerate_chemical_trees(cfg);
}

/// Integer combination of M coefficients, e.g. {{12, 2}, {24, 2}} = 2 M12 + 2 M24.
using MCombination = std::vector<std::pair<int, long>>;

inline Scalar evaluate_combination(const MCombination& terms, const CoefficientTable& table) {
  Scalar sum = Scalar::integer(0, table.digits);
  for (auto [ij, k] : terms) sum += table.M(ij / 10, ij % 10) * k;
  return sum;
}

inline std::string combination_label(const MCombination& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (auto [ij, k] : terms) {
    if (!out.empty()) out += "+";
    if (k != 1) out += std::to_string(k);
    out += "M" + std::to_string(ij);
  }
  return out;
}

}  // namespace detail

/// Certifies the strict ordering of the seven M coefficients and the
/// three-term chain on their combinations.
inline VerificationReport verify_lemma0(int digits = kDefaultDigits) {
  detail::Stopwatch clock;
  using C = detail::MCombination;
  const std::vector<std::pair<C, C>> inequalities = {
      {{{33, 1}}, {{23, 1}}},
      {{{23, 1}}, {{22, 1}}},
      {{{22, 1}}, {{24, 1}}},
      {{{24, 1}}, {{34, 1}}},
      {{{34, 1}}, {{13, 1}}},
      {{{13, 1}}, {{12, 1}}},
      {{{12, 1}}, {}},
      {{{12, 1}, {22, 1}, {24, 1}}, {{12, 2}, {24, 2}}},
      {{{12, 2}, {24, 2}}, {{13, 2}, {34, 1}}},
      {{{13, 2}, {34, 1}}, {{12, 1}, {24, 1}}},
  };

  VerificationReport report;
  report.subject.kind = SubjectKind::lemma0;
  report.precision_used = digits;
  for (const auto& [lhs, rhs] : inequalities) {
    const std::string label = detail::combination_label(lhs) + " < " + detail::combination_label(rhs);
    Status status = Status::inconclusive;
    std::optional<Scalar> gap;
    for (int p : precision_ladder(digits)) {
      const auto& table = coefficient_table(p);
      gap = detail::evaluate_combination(rhs, table) - detail::evaluate_combination(lhs, table);
      report.precision_used = std::max(report.precision_used, p);
      if (gap->certainly_positive()) {
        status = Status::certified;
        break;
      }
      if (gap->certainly_negative()) {
        status = Status::refuted;
        break;
      }
    }
    report.status = combine(report.status, status);
    report.margins.push_back({label, std::move(*gap), false});
  }
  report.wall_time = clock.elapsed();
  return report;
}

struct BruteForceResult {
  int n = 0;
  std::vector<ChemTree> classes;     // sorted by canonical code
  Scalar max;
  std::vector<ChemTree> maximizers;  // sorted by canonical code
  std::size_t candidate_count = 0;   // classes inside the double-precision window
  std::optional<Scalar> runner_up_gap;  // max minus the largest non-maximizer enclosure
};

/// Certified maximum of the index over all classes of order n. A double
/// scan selects candidates within `window` of the best value; enclosures then
/// decide, and every non-candidate is certified to lie below the maximum.
inline BruteForceResult bruteforce_max(int n, int digits = kDefaultDigits, const VerifyOptions& opt = {}) {
  detail::check_scan_order(n, opt);
  check_digits(digits);
  BruteForceResult out;
  out.n = n;
  out.classes = detail::classes_of_order(n, opt);

  std::vector<double> approx;
  approx.reserve(out.classes.size());
  for (const auto& t : out.classes) approx.push_back(exp_reduced_sombor_double(t));
  const double best = *std::max_element(approx.begin(), approx.end());

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < approx.size(); ++i)
    if (approx[i] >= best - opt.window) candidates.push_back(i);
  out.candidate_count = candidates.size();

  std::vector<std::optional<Scalar>> value(out.classes.size());
  std::size_t top = candidates.front();
  for (auto i : candidates) {
    value[i] = exp_reduced_sombor(out.classes[i], digits);
    if (mpfr_greater_p(value[i]->midpoint(), value[top]->midpoint())) top = i;
  }
  out.max = *value[top];

  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    if (!value[i]) value[i] = exp_reduced_sombor(out.classes[i], digits);
    if (!certainly_less(*value[i], out.max)) {
      out.maximizers.push_back(out.classes[i]);
    } else {
      Scalar gap = out.max - *value[i];
      if (!out.runner_up_gap || mpfr_less_p(gap.midpoint(), out.runner_up_gap->midpoint()))
        out.runner_up_gap = std::move(gap);
    }
  }
  return out;
}

/// For every n in 5..n_max: the brute-force maximum equals the closed-form
/// bound, and the maximizers are exactly the classes meeting the equality
/// conditions. Each class is also checked exactly against the bound form.
inline VerificationReport verify_theorem(int n_max, int digits = kDefaultDigits, const VerifyOptions& opt = {}) {
  detail::Stopwatch clock;
  detail::check_scan_order(n_max, opt);
  VerificationReport report;
  report.subject = {SubjectKind::theorem, n_max, {}};
  report.precision_used = digits;
  const double required_agreement = digits - 10;

  for (int n = kExtremalMinOrder; n <= n_max; ++n) {
    auto bf = bruteforce_max(n, digits, opt);
    const auto bound_form = theorem_bound_form(n);
    TheoremRow row;
    row.n = n;
    row.residue = residue_class(n);
    row.class_count = bf.classes.size();
    row.max = bf.max;
    row.bound = bound_form.evaluate(digits);
    row.maximizer_count = bf.maximizers.size();
    row.agreement = agreement_digits(bf.max, row.bound);

    Status status = Status::certified;
    if (!overlaps(bf.max, row.bound) || row.agreement < required_agreement) status = Status::refuted;

    std::set<CanonicalCode> by_conditions, by_brute_force;
    for (const auto& t : bf.maximizers) by_brute_force.insert(canonical_code(t));

    std::optional<detail::SignCertificate> tightest;
    bool exact_equalities = true;
    for (const auto& t : bf.classes) {
      const bool meets = equality_conditions(t).all();
      if (meets) by_conditions.insert(canonical_code(t));
      auto sign = detail::certify_sign(bound_form - index_form(t), digits);
      report.precision_used = std::max(report.precision_used, sign.digits);
      if (meets) {
        if (sign.sign != detail::Sign::zero) exact_equalities = false;
      } else {
        status = combine(status, detail::status_of_strict(sign.sign));
        if (!tightest || mpfr_less_p(sign.value.midpoint(), tightest->value.midpoint())) tightest = std::move(sign);
      }
    }
    row.condition_count = by_conditions.size();
    if (!exact_equalities || by_conditions != by_brute_force) status = Status::refuted;
    row.status = status;
    report.status = combine(report.status, status);

    const std::string tag = "n=" + std::to_string(n);
    report.margins.push_back({tag + ": max == bound", Scalar::integer(0, digits), exact_equalities});
    if (tightest) report.margins.push_back({tag + ": bound - best non-maximizer", tightest->value, false});
    report.witnesses.push_back({tag + " maximizer", bf.maximizers.front(), bf.max});
    report.theorem_rows.push_back(std::move(row));
  }
  report.wall_time = clock.elapsed();
  return report;
}

/// Stratifies the classes of order n by (n2, n3) and checks each stratum
/// against its closed-form bound:
///   (0,0)        index == all_degree4(n) for every class, nonempty iff n = 2 mod 3
///   (0,1)        index <= one_degree3(n), equality iff m13 = 2 and m34 = 1
///   (1,0)        index <= one_degree2(n), equality iff m12 = m24 = 1
///   n2 + n3 >= 2 index <  one_degree3(n)
/// plus the closed-form chain one_degree3(n) < one_degree2(n) < all_degree4(n).
inline VerificationReport verify_class_lemmas(int n, int digits = kDefaultDigits, const VerifyOptions& opt = {}) {
  detail::Stopwatch clock;
  detail::check_scan_order(n, opt);
  check_digits(digits);
  VerificationReport report;
  report.subject = {SubjectKind::lemma_class, n, "all"};
  report.precision_used = digits;

  struct Stratum {
    std::string name;
    LinearForm bound;
    bool equality_allowed;
    std::optional<ResidueClass> residue;  // the only residue with a nonempty stratum, if any
    bool (*member)(const DegreeCounts&);
    bool (*condition)(const EdgeTypeCounts&);
  };
  const std::vector<Stratum> strata = {
      {"(0,0)", closed_form::all_degree4(n), true, ResidueClass::r2,
       [](const DegreeCounts& c) { return c.n2 == 0 && c.n3 == 0; }, [](const EdgeTypeCounts&) { return true; }},
      {"(0,1)", closed_form::one_degree3(n), true, ResidueClass::r1,
       [](const DegreeCounts& c) { return c.n2 == 0 && c.n3 == 1; },
       [](const EdgeTypeCounts& m) { return m.m13 == 2 && m.m34 == 1; }},
      {"(1,0)", closed_form::one_degree2(n), true, ResidueClass::r0,
       [](const DegreeCounts& c) { return c.n2 == 1 && c.n3 == 0; },
       [](const EdgeTypeCounts& m) { return m.m12 == 1 && m.m24 == 1; }},
      {"n2+n3>=2", closed_form::one_degree3(n), false, std::nullopt,
       [](const DegreeCounts& c) { return c.n2 + c.n3 >= 2; }, [](const EdgeTypeCounts&) { return false; }},
  };

  const auto classes = detail::classes_of_order(n, opt);
  for (const auto& s : strata) {
    StratumRow row;
    row.name = s.name;
    row.bound = s.bound.evaluate(digits);
    Status status = Status::certified;
    std::optional<detail::SignCertificate> tightest;
    std::optional<std::size_t> best;
    std::optional<Scalar> best_value;

    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& t = classes[i];
      if (!s.member(degree_counts(t))) continue;
      ++row.class_count;
      const bool meets = s.condition(edge_type_counts(t));
      if (meets) ++row.condition_count;
      auto sign = detail::certify_sign(s.bound - index_form(t), digits);
      report.precision_used = std::max(report.precision_used, sign.digits);
      if (sign.sign == detail::Sign::zero) {
        ++row.equality_count;
        if (!s.equality_allowed || !meets) status = Status::refuted;
      } else {
        if (meets) status = Status::refuted;
        status = combine(status, detail::status_of_strict(sign.sign));
        if (!tightest || mpfr_less_p(sign.value.midpoint(), tightest->value.midpoint())) tightest = std::move(sign);
      }
      Scalar value = exp_reduced_sombor(t, digits);
      if (!best_value || mpfr_greater_p(value.midpoint(), best_value->midpoint())) {
        best = i;
        best_value = std::move(value);
      }
    }

    if (row.class_count == 0) {
      row.note = "empty stratum";
    } else {
      row.max = best_value;
      if (s.equality_allowed) {
        // The stratum maximum must reach the bound, and is then attained
        // exactly on the classes meeting the conditions.
        if (row.equality_count == 0 || !overlaps(*best_value, row.bound)) status = Status::refuted;
        report.margins.push_back({s.name + ": max == bound", Scalar::integer(0, digits), row.equality_count > 0});
      }
      if (tightest) report.margins.push_back({s.name + ": bound - best strict class", tightest->value, false});
      report.witnesses.push_back({s.name + " maximizer", classes[*best], *best_value});
    }
    if (s.residue) {
      const bool nonempty = row.class_count > 0;
      const bool expected = residue_class(n) == *s.residue;
      if (nonempty != expected) {
        status = Status::refuted;
        row.note = "stratum occupancy does not match n mod 3";
      }
    }
    row.status = status;
    report.status = combine(report.status, status);
    report.strata.push_back(std::move(row));
  }

  const std::vector<std::pair<std::string, LinearForm>> chain = {
      {"one_degree2 - one_degree3", closed_form::one_degree2(n) - closed_form::one_degree3(n)},
      {"all_degree4 - one_degree2", closed_form::all_degree4(n) - closed_form::one_degree2(n)},
  };
  for (const auto& [label, form] : chain) {
    auto sign = detail::certify_sign(form, digits);
    report.precision_used = std::max(report.precision_used, sign.digits);
    report.status = combine(report.status, detail::status_of_strict(sign.sign));
    report.margins.push_back({label, std::move(sign.value), false});
  }
  report.wall_time = clock.elapsed();
  return report;
}

/// Compares the extremal tree of order n with the conjectured bound.
/// refuted: the tree's index certainly exceeds the bound.
/// certified: the bound holds for the tree, exactly or with certified slack.
inline VerificationReport refute_conjecture(int n, int digits = kDefaultDigits) {
  detail::Stopwatch clock;
  require_order_at_least(n, kExtremalMinOrder, "refute_conjecture");
  check_digits(digits);
  VerificationReport report;
  report.subject = {SubjectKind::conjecture, n, {}};

  ChemTree witness = construct_extremal(n);
  auto sign = detail::certify_sign(index_form(witness) - conjecture_bound_form(n), digits);
  report.precision_used = sign.digits;
  switch (sign.sign) {
    case detail::Sign::zero:
      report.status = Status::certified;
      report.margins.push_back({"witness == conjecture bound", std::move(sign.value), true});
      report.notes.push_back("bound attained with equality");
      break;
    case detail::Sign::positive:
      report.status = Status::refuted;
      report.margins.push_back({"witness - conjecture bound", std::move(sign.value), false});
      break;
    case detail::Sign::negative:
      report.status = Status::certified;
      report.margins.push_back({"conjecture bound - witness", -sign.value, false});
      break;
    case detail::Sign::unknown:
      report.status = Status::inconclusive;
      report.margins.push_back({"witness - conjecture bound", std::move(sign.value), false});
      break;
  }
  Scalar value = exp_reduced_sombor(witness, digits);
  report.witnesses.push_back({"extremal tree", std::move(witness), std::move(value)});
  report.wall_time = clock.elapsed();
  return report;
}

}  // namespace sombor
