#pragma once

// JSON, CSV and plain-text renderings of a VerificationReport.
// Scalars are written as decimal midpoint strings with an explicit radius
// that also covers the decimal conversion error.

#include <cstdio>
#include <string>

#include "json.hpp"

#include "sombor/serialize.hpp"
#include "sombor/verify.hpp"

namespace sombor {

struct RenderOptions {
  bool deterministic = false;  // zero out wall-clock fields
};

namespace detail {

inline nlohmann::ordered_json scalar_json(const Scalar& x) {
  nlohmann::ordered_json j;
  j["midpoint"] = x.midpoint_string(x.digits());
  j["radius"] = x.radius_string(x.digits());
  return j;
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string short_number(const Scalar& x, int sig = 12) { return x.midpoint_string(sig); }

}  // namespace detail

inline nlohmann::ordered_json to_json(const VerificationReport& r, const RenderOptions& opt = {}) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["subject"] = r.subject.to_string();
  j["status"] = to_string(r.status);

  ordered_json margins = ordered_json::array();
  for (const auto& m : r.margins) {
    ordered_json e;
    e["label"] = m.label;
    auto s = detail::scalar_json(m.gap);
    e["midpoint"] = s["midpoint"];
    e["radius"] = s["radius"];
    e["kind"] = m.exact_equality ? "exact" : "strict";
    margins.push_back(std::move(e));
  }
  j["margins"] = std::move(margins);

  ordered_json witnesses = ordered_json::array();
  ordered_json witness_values = ordered_json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(serialize(w.tree, Format::edge_list));
    ordered_json e;
    e["label"] = w.label;
    auto s = detail::scalar_json(w.value);
    e["midpoint"] = s["midpoint"];
    e["radius"] = s["radius"];
    witness_values.push_back(std::move(e));
  }
  j["witnesses"] = std::move(witnesses);
  j["witness_values"] = std::move(witness_values);

  if (!r.theorem_rows.empty()) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.theorem_rows) {
      ordered_json e;
      e["n"] = row.n;
      e["residue"] = to_string(row.residue);
      e["class_count"] = row.class_count;
      e["max"] = detail::scalar_json(row.max);
      e["bound"] = detail::scalar_json(row.bound);
      e["maximizer_count"] = row.maximizer_count;
      e["condition_count"] = row.condition_count;
      e["status"] = to_string(row.status);
      rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
  }
  if (!r.strata.empty()) {
    ordered_json strata = ordered_json::array();
    for (const auto& s : r.strata) {
      ordered_json e;
      e["stratum"] = s.name;
      e["class_count"] = s.class_count;
      e["max"] = s.max ? detail::scalar_json(*s.max) : ordered_json(nullptr);
      e["bound"] = detail::scalar_json(s.bound);
      e["equality_count"] = s.equality_count;
      e["condition_count"] = s.condition_count;
      e["status"] = to_string(s.status);
      if (!s.note.empty()) e["note"] = s.note;
      strata.push_back(std::move(e));
    }
    j["strata"] = std::move(strata);
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["precision_used"] = r.precision_used;
  j["wall_time_ms"] = opt.deterministic ? 0 : r.wall_time.count();
  return j;
}

/// verify-theorem rows, one per order.
inline std::string theorem_csv(const VerificationReport& r) {
  std::string out = "n,residue,class_count,max_midpoint,max_radius,bound_midpoint,maximizer_count,status\n";
  for (const auto& row : r.theorem_rows) {
    out += std::to_string(row.n) + "," + to_string(row.residue) + "," + std::to_string(row.class_count) + "," +
           row.max.midpoint_string(row.max.digits()) + "," + row.max.radius_string(row.max.digits()) + "," +
           row.bound.midpoint_string(row.bound.digits()) + "," + std::to_string(row.maximizer_count) + "," +
           to_string(row.status) + "\n";
  }
  return out;
}

/// Generic CSV: one row per margin.
inline std::string margins_csv(const VerificationReport& r) {
  std::string out = "subject,label,kind,midpoint,radius,status\n";
  for (const auto& m : r.margins) {
    out += detail::csv_field(r.subject.to_string()) + "," + detail::csv_field(m.label) + "," +
           (m.exact_equality ? "exact" : "strict") + "," + m.gap.midpoint_string(m.gap.digits()) + "," +
           m.gap.radius_string(m.gap.digits()) + "," + to_string(r.status) + "\n";
  }
  return out;
}

inline std::string to_csv(const VerificationReport& r) {
  return r.subject.kind == SubjectKind::theorem ? theorem_csv(r) : margins_csv(r);
}

inline std::string to_text(const VerificationReport& r, const RenderOptions& opt = {}) {
  using detail::pad;
  std::string out = r.subject.to_string() + ": " + to_string(r.status) + "  (precision " +
                    std::to_string(r.precision_used) + " digits";
  if (!opt.deterministic) out += ", " + std::to_string(r.wall_time.count()) + " ms";
  out += ")\n";

  if (!r.theorem_rows.empty()) {
    out += "  " + pad("n", 4) + pad("res", 5) + pad("classes", 9) + pad("max", 20) + pad("bound", 20) +
           pad("maximizers", 12) + "status\n";
    for (const auto& row : r.theorem_rows)
      out += "  " + pad(std::to_string(row.n), 4) + pad(to_string(row.residue), 5) +
             pad(std::to_string(row.class_count), 9) + pad(detail::short_number(row.max), 20) +
             pad(detail::short_number(row.bound), 20) + pad(std::to_string(row.maximizer_count), 12) +
             to_string(row.status) + "\n";
  }
  if (!r.strata.empty()) {
    out += "  " + pad("stratum", 10) + pad("classes", 9) + pad("max", 20) + pad("bound", 20) + pad("equal", 7) +
           "status\n";
    for (const auto& s : r.strata)
      out += "  " + pad(s.name, 10) + pad(std::to_string(s.class_count), 9) +
             pad(s.max ? detail::short_number(*s.max) : "-", 20) + pad(detail::short_number(s.bound), 20) +
             pad(std::to_string(s.equality_count), 7) + to_string(s.status) +
             (s.note.empty() ? "" : "  (" + s.note + ")") + "\n";
  }
  for (const auto& m : r.margins)
    out += "  " + pad(m.label, 44) +
           (m.exact_equality ? std::string("exact") : detail::short_number(m.gap) + " +/- " + m.gap.radius_string(12)) +
           "\n";
  for (const auto& w : r.witnesses) {
    out += "  witness " + w.label + ": value " + detail::short_number(w.value, 20) + ", edges";
    for (const auto& e : w.tree.edges()) out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
    out += "\n";
  }
  for (const auto& note : r.notes) out += "  note: " + note + "\n";
  return out;
}

}  // namespace sombor
