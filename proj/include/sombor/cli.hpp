#pragma once

// Command-line front end. run() never exits the process; it returns the
// exit status:
//   0  success / certified
//   1  usage or validation error
//   2  refuted (the expected outcome of `refute` at n != 2 mod 3)
//   3  inconclusive after the precision ladder

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sombor/canonical.hpp"
#include "sombor/enumerate.hpp"
#include "sombor/error.hpp"
#include "sombor/extremal.hpp"
#include "sombor/indices.hpp"
#include "sombor/report.hpp"
#include "sombor/serialize.hpp"
#include "sombor/verify.hpp"

namespace sombor::cli {

enum class ExitCode : int { success = 0, usage = 1, refuted = 2, inconclusive = 3 };

inline int exit_code(Status s) {
  switch (s) {
    case Status::certified: return static_cast<int>(ExitCode::success);
    case Status::refuted: return static_cast<int>(ExitCode::refuted);
    case Status::inconclusive: return static_cast<int>(ExitCode::inconclusive);
  }
  return static_cast<int>(ExitCode::usage);
}

struct RunConfig {
  std::string subcommand;
  int n = 0;
  int n_max = 0;
  int precision = kDefaultDigits;
  std::string format;
  std::string input_format = "edge-list";
  std::string input;
  std::string output;
  bool deterministic = false;
  bool oracle = false;
  int cap = 16;
  unsigned workers = 1;
  std::uint64_t max_classes = 0;  // 0 = unlimited
};

namespace detail {

inline constexpr const char* kPrecisionEnv = "SOMBOR_PRECISION";

/// Default precision, overridable through the environment.
inline int default_precision() {
  const char* raw = std::getenv(kPrecisionEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultDigits;
  std::string_view text(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < kMinDigits)
    throw Error(ErrorKind::invalid_argument, std::string(kPrecisionEnv) + "=" + raw + " is not an integer >= " +
                                                 std::to_string(kMinDigits));
  return value;
}

inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

inline std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot read --input " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Writes `content` to --output when given (echoing `table` to stdout), or
/// to stdout otherwise.
inline void emit(const RunConfig& cfg, const std::string& content, const std::string& table, std::ostream& out) {
  if (cfg.output.empty()) {
    out << content;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw Error(ErrorKind::invalid_argument, "cannot write --output " + cfg.output);
  file << content;
  if (!file) throw Error(ErrorKind::invalid_argument, "failed writing --output " + cfg.output);
  if (&content != &table) out << table;
}

inline std::string render(const VerificationReport& r, const RunConfig& cfg) {
  RenderOptions opt{cfg.deterministic};
  if (cfg.format == "json") return to_json(r, opt).dump(2) + "\n";
  if (cfg.format == "csv") return to_csv(r);
  return to_text(r, opt);
}

inline int emit_report(const VerificationReport& r, const RunConfig& cfg, std::ostream& out) {
  const std::string content = render(r, cfg);
  const std::string table = cfg.format == "text" ? content : to_text(r, {cfg.deterministic});
  emit(cfg, content, table, out);
  return exit_code(r.status);
}

inline VerifyOptions verify_options(const RunConfig& cfg) { return {cfg.cap, cfg.workers, VerifyOptions{}.window}; }

inline int run_enumerate(const RunConfig& cfg, std::ostream& out) {
  const Format format = format_from_name(cfg.format);
  std::string content;
  auto append = [&](const ChemTree& t) { content += serialize(t, format); };
  if (cfg.oracle) {
    auto result = enumerate_oracle(cfg.n);
    if (cfg.max_classes != 0 && result.classes.size() > cfg.max_classes)
      throw Error(ErrorKind::resource_limit, "class count exceeds --max-classes");
    for (const auto& t : result.classes) append(t);
  } else {
    EnumerationConfig ec;
    ec.n = cfg.n;
    ec.workers = cfg.workers;
    if (cfg.max_classes != 0) ec.max_classes = cfg.max_classes;
    for (const auto& t : enumerate_chemical_trees(ec)) append(t);
  }
  emit(cfg, content, content, out);
  return 0;
}

inline int run_count(const RunConfig& cfg, std::ostream& out) {
  std::uint64_t count = 0;
  std::string method;
  int n = cfg.n;
  if (!cfg.input.empty()) {
    std::set<CanonicalCode> distinct;
    for (const auto& t : parse_all(read_input(cfg.input), format_from_name(cfg.input_format))) {
      if (cfg.n != 0 && t.order() != cfg.n) continue;
      distinct.insert(canonical_code(t));
    }
    count = distinct.size();
    method = "input";
  } else if (cfg.n == 0) {
    throw Error(ErrorKind::invalid_argument, "count needs --n or --input");
  } else if (cfg.oracle) {
    count = enumerate_oracle(cfg.n).classes.size();
    method = "oracle";
  } else {
    count = count_trees(cfg.n, kChemicalMaxDegree, CanonicalStrategy::augmentation, cfg.workers);
    method = "augmentation";
  }
  std::string content;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["count"] = count;
    j["method"] = method;
    content = j.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    content = "n,count,method\n" + std::to_string(n) + "," + std::to_string(count) + "," + method + "\n";
  } else {
    content = std::to_string(count) + "\n";
  }
  emit(cfg, content, content, out);
  return 0;
}

inline int run_index(const RunConfig& cfg, std::ostream& out) {
  const auto trees = parse_all(read_input(cfg.input), format_from_name(cfg.input_format));
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::string csv = "record,n,so_red_midpoint,so_red_radius,exp_so_red_midpoint,exp_so_red_radius\n";
  std::string text;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const auto so = reduced_sombor(trees[i], cfg.precision);
    const auto e = exp_reduced_sombor(trees[i], cfg.precision);
    const int p = cfg.precision;
    nlohmann::ordered_json row;
    row["record"] = i;
    row["n"] = trees[i].order();
    row["so_red"] = {{"midpoint", so.midpoint_string(p)}, {"radius", so.radius_string(p)}};
    row["exp_so_red"] = {{"midpoint", e.midpoint_string(p)}, {"radius", e.radius_string(p)}};
    rows.push_back(std::move(row));
    csv += std::to_string(i) + "," + std::to_string(trees[i].order()) + "," + so.midpoint_string(p) + "," +
           so.radius_string(p) + "," + e.midpoint_string(p) + "," + e.radius_string(p) + "\n";
    text += "record " + std::to_string(i) + ": n=" + std::to_string(trees[i].order()) + "  SO_red=" +
            so.midpoint_string(p) + "  exp(SO_red)=" + e.midpoint_string(p) + " +/- " + e.radius_string(p) + "\n";
  }
  std::string content = cfg.format == "json" ? rows.dump(2) + "\n" : cfg.format == "csv" ? csv : text;
  emit(cfg, content, text, out);
  return 0;
}

inline int run_extremal(const RunConfig& cfg, std::ostream& out) {
  auto cert = certify_extremal(cfg.n, cfg.precision);
  const int p = cfg.precision;
  std::string text = "n=" + std::to_string(cfg.n) + " residue " + to_string(cert.residue) + "\n";
  for (const auto& [name, ok] : cert.conditions.conditions) text += "  " + name + ": " + (ok ? "yes" : "no") + "\n";
  text += "  value " + cert.value.midpoint_string(p) + " +/- " + cert.value.radius_string(p) + "\n";
  text += "  bound " + cert.bound.midpoint_string(p) + " +/- " + cert.bound.radius_string(p) + "\n";
  text += std::string("  exact match: ") + (cert.exact_match ? "yes" : "no") + "\n";
  text += "  tree:\n" + serialize(cert.tree, Format::edge_list);

  std::string content;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = cfg.n;
    j["residue"] = to_string(cert.residue);
    nlohmann::ordered_json conditions = nlohmann::ordered_json::object();
    for (const auto& [name, ok] : cert.conditions.conditions) conditions[name] = ok;
    j["conditions"] = std::move(conditions);
    j["value"] = {{"midpoint", cert.value.midpoint_string(p)}, {"radius", cert.value.radius_string(p)}};
    j["bound"] = {{"midpoint", cert.bound.midpoint_string(p)}, {"radius", cert.bound.radius_string(p)}};
    j["exact_match"] = cert.exact_match;
    j["tree"] = serialize(cert.tree, Format::edge_list);
    content = j.dump(2) + "\n";
  } else if (cfg.format == "edge-list" || cfg.format == "graph6") {
    content = serialize(cert.tree, format_from_name(cfg.format));
  } else {
    content = text;
  }
  emit(cfg, content, text, out);
  return 0;
}

/// Outcome each check in report-all is expected to reach.
struct ExpectedReport {
  VerificationReport report;
  Status expected;
};

inline int run_report_all(const RunConfig& cfg, std::ostream& out) {
  const auto opt = verify_options(cfg);
  std::vector<ExpectedReport> reports;
  reports.push_back({verify_lemma0(cfg.precision), Status::certified});
  reports.push_back({verify_theorem(cfg.n_max, cfg.precision, opt), Status::certified});
  for (int n = kExtremalMinOrder; n <= cfg.n_max; ++n)
    reports.push_back({verify_class_lemmas(n, cfg.precision, opt), Status::certified});
  for (int n = kExtremalMinOrder; n <= cfg.n_max; ++n) {
    const Status expected = residue_class(n) == ResidueClass::r2 ? Status::certified : Status::refuted;
    reports.push_back({refute_conjecture(n, cfg.precision), expected});
  }

  // certified: every check reached its expected outcome.
  Status overall = Status::certified;
  for (const auto& r : reports) {
    if (r.report.status == Status::inconclusive) overall = Status::inconclusive;
    else if (r.report.status != r.expected && overall == Status::certified) overall = Status::refuted;
  }

  const RenderOptions ropt{cfg.deterministic};
  std::string text;
  for (const auto& r : reports)
    text += to_text(r.report, ropt) + "  expected: " + to_string(r.expected) +
            (r.report.status == r.expected ? " (as expected)" : " (UNEXPECTED)") + "\n";
  text += "overall: " + to_string(overall) + "\n";

  std::string content;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["n_max"] = cfg.n_max;
    j["precision"] = cfg.precision;
    j["status"] = to_string(overall);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      auto e = to_json(r.report, ropt);
      e["expected"] = to_string(r.expected);
      arr.push_back(std::move(e));
    }
    j["reports"] = std::move(arr);
    content = j.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    content = "subject,label,kind,midpoint,radius,status\n";
    for (const auto& r : reports) {
      auto rows = margins_csv(r.report);
      content += rows.substr(rows.find('\n') + 1);
    }
  } else {
    content = text;
  }
  emit(cfg, content, text, out);
  return exit_code(overall);
}

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
  const auto& sub = cfg.subcommand;
  if (sub == "enumerate") return run_enumerate(cfg, out);
  if (sub == "count") return run_count(cfg, out);
  if (sub == "index") return run_index(cfg, out);
  if (sub == "extremal") return run_extremal(cfg, out);
  if (sub == "verify-lemma0") return emit_report(verify_lemma0(cfg.precision), cfg, out);
  if (sub == "verify-theorem")
    return emit_report(verify_theorem(cfg.n_max, cfg.precision, verify_options(cfg)), cfg, out);
  if (sub == "verify-classes")
    return emit_report(verify_class_lemmas(cfg.n, cfg.precision, verify_options(cfg)), cfg, out);
  if (sub == "refute") return emit_report(refute_conjecture(cfg.n, cfg.precision), cfg, out);
  if (sub == "report-all") return run_report_all(cfg, out);
  throw Error(ErrorKind::invalid_argument, "unknown subcommand " + sub);
}

}  // namespace detail

/// Parses `args` (without the program name) and runs the subcommand.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.workers = detail::default_workers();
  try {
    cfg.precision = detail::default_precision();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  }

  CLI::App app{"Exponential reduced Sombor index of chemical trees"};
  app.name("sombor");
  app.require_subcommand(1);

  const std::vector<std::string> report_formats = {"json", "csv", "text"};
  const std::vector<std::string> tree_formats = {"edge-list", "graph6"};

  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "Decimal digits of working precision")
        ->check(CLI::Range(kMinDigits, 100000));
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "Worker threads for enumeration")->check(CLI::Range(1u, 1024u));
  };
  auto add_output = [&](CLI::App* sub, const std::vector<std::string>& formats, const std::string& fallback) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats))->default_str(fallback);
    sub->add_option("--output", cfg.output, "Write output to this file");
    sub->add_flag("--deterministic", cfg.deterministic, "Byte-stable output (no timings)");
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.cap, "Largest order for exhaustive scans")->check(CLI::Range(5, kEnumerationMaxOrder));
  };

  auto* enumerate = app.add_subcommand("enumerate", "List chemical trees of order n, one record each");
  enumerate->add_option("--n", cfg.n, "Order")->required()->check(CLI::Range(1, kEnumerationMaxOrder));
  enumerate->add_flag("--oracle", cfg.oracle, "Use the Pruefer-sequence oracle (n <= 12)");
  enumerate->add_option("--max-classes", cfg.max_classes, "Fail if more classes would be produced");
  add_workers(enumerate);
  add_output(enumerate, tree_formats, "edge-list");

  auto* count = app.add_subcommand("count", "Count chemical trees of order n");
  count->add_option("--n", cfg.n, "Order")->check(CLI::Range(1, kEnumerationMaxOrder));
  count->add_flag("--oracle", cfg.oracle, "Use the Pruefer-sequence oracle (n <= 12)");
  count->add_option("--input", cfg.input, "Count distinct classes in this file ('-' for stdin)");
  count->add_option("--input-format", cfg.input_format)->check(CLI::IsMember(tree_formats));
  add_workers(count);
  add_output(count, report_formats, "text");

  auto* index = app.add_subcommand("index", "Evaluate SO_red and exp(SO_red) for trees read from --input");
  index->add_option("--input", cfg.input, "Tree file ('-' for stdin)")->required();
  index->add_option("--input-format", cfg.input_format)->check(CLI::IsMember(tree_formats));
  add_precision(index);
  add_output(index, report_formats, "text");

  auto* extremal = app.add_subcommand("extremal", "Construct and certify a maximum-index tree of order n");
  extremal->add_option("--n", cfg.n, "Order")->required()->check(CLI::Range(kExtremalMinOrder, 1 << 20));
  add_precision(extremal);
  add_output(extremal, {"json", "text", "edge-list", "graph6"}, "text");

  auto* lemma0 = app.add_subcommand("verify-lemma0", "Certify the coefficient inequalities");
  add_precision(lemma0);
  add_output(lemma0, report_formats, "text");

  auto* theorem = app.add_subcommand("verify-theorem", "Brute-force the maximum for n = 5..n-max");
  theorem->add_option("--n-max", cfg.n_max, "Largest order")->required()->check(CLI::Range(kExtremalMinOrder, kEnumerationMaxOrder));
  add_precision(theorem);
  add_cap(theorem);
  add_workers(theorem);
  add_output(theorem, report_formats, "text");

  auto* classes = app.add_subcommand("verify-classes", "Check the stratified bounds at order n");
  classes->add_option("--n", cfg.n, "Order")->required()->check(CLI::Range(kExtremalMinOrder, kEnumerationMaxOrder));
  add_precision(classes);
  add_cap(classes);
  add_workers(classes);
  add_output(classes, report_formats, "text");

  auto* refute = app.add_subcommand("refute", "Compare the extremal tree with the conjectured bound (exit 2 = refuted)");
  refute->add_option("--n", cfg.n, "Order")->required()->check(CLI::Range(kExtremalMinOrder, 1 << 20));
  add_precision(refute);
  add_output(refute, report_formats, "text");

  auto* all = app.add_subcommand("report-all", "Run every check up to n-max");
  all->add_option("--n-max", cfg.n_max, "Largest order")->required()->check(CLI::Range(kExtremalMinOrder, kEnumerationMaxOrder));
  add_precision(all);
  add_cap(all);
  add_workers(all);
  add_output(all, report_formats, "json");

  if (!args.empty() && !args.front().starts_with("-")) {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    if (std::none_of(subs.begin(), subs.end(), [&](const CLI::App* s) { return s->get_name() == args.front(); })) {
      err << "error: unknown subcommand '" << args.front() << "'\nRun with --help for more information.\n";
      return static_cast<int>(ExitCode::usage);
    }
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.subcommand = sub->get_name();
    if (cfg.format.empty()) cfg.format = sub->get_option("--format")->get_default_str();
  }
  try {
    return detail::dispatch(cfg, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace sombor::cli
