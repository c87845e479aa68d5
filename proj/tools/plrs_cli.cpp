// plrs: command-line front end for the completeness library.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plrs/analytic.hpp"
#include "plrs/brown.hpp"
#include "plrs/error.hpp"
#include "plrs/families.hpp"
#include "plrs/oracle.hpp"
#include "plrs/parallel.hpp"
#include "plrs/scans.hpp"
#include "plrs/verify.hpp"

namespace {

using nlohmann::json;
using namespace plrs;

enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kInput = 2,
  kIndefinite = 3,
  kCounterexample = 4,
};

enum class Format { Json, Csv, Plain };

struct Global {
  std::string format;  // empty: per-command default
  std::string out;
  unsigned jobs = 0;
  std::size_t horizon_cap = 4096;
};

struct Output {
  Format format;
  std::ostringstream text;
};

Format resolve_format(const Global& g, Format fallback) {
  if (g.format.empty()) return fallback;
  if (g.format == "json") return Format::Json;
  if (g.format == "csv") return Format::Csv;
  return Format::Plain;
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Plain: return "plain";
  }
  return "";
}

int emit(const Global& g, const Output& out) {
  if (g.out.empty()) {
    std::cout << out.text.str();
    return kOk;
  }
  std::ofstream file(g.out);
  if (!file) {
    std::cerr << "error: cannot write " << g.out << "\n";
    return kInput;
  }
  file << out.text.str();
  return kOk;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

Coefficients parse_coefficients(const std::vector<std::string>& pieces) {
  std::string joined;
  for (const auto& p : pieces) joined += p + " ";
  if (trim(joined).empty()) throw Error(Errc::EmptyVector, "no coefficients given");
  std::vector<std::int64_t> values;
  std::stringstream stream(joined);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const std::string t = trim(token);
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || end != t.data() + t.size()) {
      throw Error(Errc::InvalidArgument, "malformed coefficient list '" + trim(joined) + "'");
    }
    values.push_back(v);
  }
  return Coefficients::validate(values);
}

json coefficients_json(const Coefficients& c) {
  return json(std::vector<std::uint64_t>(c.values().begin(), c.values().end()));
}

std::string decimal(const RootBracket& b, int digits = 15) {
  std::ostringstream s;
  s << std::setprecision(digits) << b.approx();
  return s.str();
}

std::string number(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

json bracket_json(const RootBracket& b) {
  json j{{"approx", b.approx()}, {"lo", b.lo().get_str()}, {"hi", b.hi().get_str()}};
  j["exact_root"] = b.exact_root() ? json(*b.exact_root()) : json(nullptr);
  return j;
}

std::string ordering_name(std::strong_ordering o) {
  if (o < 0) return "below";
  if (o > 0) return "above";
  return "equal";
}

json base_config(const Global& g, std::string_view command, Format f) {
  return {{"command", command},
          {"format", format_name(f)},
          {"jobs", g.jobs},
          {"horizon_cap", g.horizon_cap}};
}

void csv_config(Output& out, const json& config) { out.text << "# config: " << config.dump() << "\n"; }

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::vector<std::string> coeffs;
  std::size_t n = 10;
};

int run_gen(const Global& g, const GenArgs& a) {
  const auto c = parse_coefficients(a.coeffs);
  if (a.n < 1) throw Error(Errc::InvalidArgument, "--n must be at least 1");
  const auto t = generate_terms(c, a.n);
  Output out{resolve_format(g, Format::Plain), {}};
  json config = base_config(g, "gen", out.format);
  config["n"] = a.n;
  switch (out.format) {
    case Format::Plain:
      for (std::size_t i = 1; i <= t.size(); ++i) out.text << (i > 1 ? " " : "") << t.term(i);
      out.text << "\n";
      break;
    case Format::Csv:
      csv_config(out, config);
      out.text << "n,term\n";
      for (std::size_t i = 1; i <= t.size(); ++i) out.text << i << "," << t.term(i) << "\n";
      break;
    case Format::Json: {
      json terms = json::array();
      for (const auto& h : t.terms()) terms.push_back(h.get_str());
      out.text << json{{"config", config}, {"coefficients", coefficients_json(c)}, {"terms", terms}}.dump(2)
               << "\n";
      break;
    }
  }
  return emit(g, out);
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  std::vector<std::string> coeffs;
  std::size_t horizon = 0;
  bool assume_2l1 = false;
  bool triage_first = false;
  bool require_definite = false;
  std::string verify;
};

void write_verdict(Output& out, const Verdict& v, json extra, const json& config) {
  switch (out.format) {
    case Format::Json: {
      json j = to_json(v);
      for (auto& [key, value] : extra.items()) j[key] = value;
      j["config"] = config;
      out.text << j.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      csv_config(out, config);
      const auto index = certificate_index(v.certificate);
      out.text << "coefficients,kind,certificate,index,conjectural,horizon_used\n"
               << "\"" << v.coefficients.to_string() << "\"," << to_string(v.kind) << ","
               << certificate_tag(v.certificate) << "," << (index ? std::to_string(*index) : "")
               << "," << (v.conjectural ? "true" : "false") << "," << v.horizon_used << "\n";
      break;
    }
    case Format::Plain: {
      out.text << to_string(v.kind) << " " << certificate_tag(v.certificate);
      if (const auto index = certificate_index(v.certificate)) out.text << " " << *index;
      if (v.conjectural) out.text << " (conjectural)";
      out.text << "\n";
      break;
    }
  }
}

int run_verify(const Global& g, const std::string& path) {
  json j;
  try {
    if (path == "-") {
      j = json::parse(std::cin);
    } else {
      std::ifstream file(path);
      if (!file) throw Error(Errc::InvalidArgument, "cannot read " + path);
      j = json::parse(file);
    }
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("not valid JSON: ") + e.what());
  }
  const Verdict v = verdict_from_json(j);
  const auto result = verify_verdict(v);
  Output out{resolve_format(g, Format::Json), {}};
  json config = base_config(g, "check --verify", out.format);
  config["verify"] = path;
  if (out.format == Format::Json) {
    out.text << json{{"config", config},
                     {"coefficients", coefficients_json(v.coefficients)},
                     {"certificate", certificate_tag(v.certificate)},
                     {"valid", result.valid},
                     {"reason", result.reason}}
                    .dump(2)
             << "\n";
  } else {
    if (out.format == Format::Csv) {
      csv_config(out, config);
      out.text << "coefficients,certificate,valid,reason\n\"" << v.coefficients.to_string() << "\","
               << certificate_tag(v.certificate) << "," << (result.valid ? "true" : "false")
               << ",\"" << result.reason << "\"\n";
    } else {
      out.text << (result.valid ? "valid" : "invalid") << ": " << result.reason << "\n";
    }
  }
  const int code = emit(g, out);
  return code != kOk ? code : (result.valid ? kOk : kFailure);
}

int run_check(const Global& g, const CheckArgs& a) {
  if (!a.verify.empty()) return run_verify(g, a.verify);
  const auto c = parse_coefficients(a.coeffs);
  CheckOptions options;
  options.horizon = a.horizon;
  options.horizon_cap = std::max(g.horizon_cap, a.horizon);
  options.assume_2l1 = a.assume_2l1;

  std::string path = "engine";
  std::optional<Verdict> verdict;
  if (a.triage_first) {
    Verdict t = triage(c);
    path = "triage";
    if (!t.is_unknown()) {
      verdict = std::move(t);
    } else {
      path = "triage,engine";
    }
  }
  if (!verdict) verdict = decide(c, options);

  Output out{resolve_format(g, Format::Json), {}};
  json config = base_config(g, "check", out.format);
  config["horizon"] = a.horizon == 0 ? default_horizon(c.length()) : a.horizon;
  config["assume_2l1"] = a.assume_2l1;
  config["triage_first"] = a.triage_first;
  config["require_definite"] = a.require_definite;
  json extra = json::object();
  if (a.triage_first) extra["path"] = path;
  write_verdict(out, *verdict, extra, config);
  const int code = emit(g, out);
  if (code != kOk) return code;
  return a.require_definite && !verdict->is_definite() ? kIndefinite : kOk;
}

// ---------------------------------------------------------------------------
// oracle-check

struct OracleArgs {
  std::vector<std::string> coeffs;
  std::size_t max_prefix = 0;
  std::size_t budget_bits = kDefaultBudgetBits;
};

int run_oracle(const Global& g, const OracleArgs& a) {
  const auto c = parse_coefficients(a.coeffs);
  const std::size_t prefix = a.max_prefix == 0 ? 4 * c.length() : a.max_prefix;
  const auto result = oracle_check(c, prefix, a.budget_bits);
  Output out{resolve_format(g, Format::Json), {}};
  json config = base_config(g, "oracle-check", out.format);
  config["max_prefix"] = prefix;
  config["budget_bits"] = a.budget_bits;
  const auto& r = result.report;
  auto opt = [](const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); };
  json extra{{"prefix_length", r.prefix_length},
             {"reachable_bound", r.reachable_bound},
             {"smallest_missing", opt(r.smallest_missing)},
             {"permanently_missing", opt(r.permanently_missing)}};
  if (out.format == Format::Plain) {
    write_verdict(out, result.verdict, extra, config);
    if (r.permanently_missing) out.text << "missing " << *r.permanently_missing << "\n";
  } else {
    write_verdict(out, result.verdict, extra, config);
  }
  return emit(g, out);
}

// ---------------------------------------------------------------------------
// family-table

struct Range {
  std::uint32_t lo = 0, hi = 0;
};

Range parse_range(const std::string& text, const char* name) {
  const auto dots = text.find("..");
  auto number = [&](std::string_view s) {
    std::uint32_t v = 0;
    const auto t = trim(s);
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || end != t.data() + t.size()) {
      throw Error(Errc::InvalidArgument, std::string("malformed range for ") + name + ": '" + text + "'");
    }
    return v;
  };
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(std::string_view(text).substr(0, dots));
    r.hi = number(std::string_view(text).substr(dots + 2));
  }
  if (r.lo > r.hi) throw Error(Errc::InvalidArgument, std::string("empty range for ") + name);
  return r;
}

struct FamilyArgs {
  std::string family = "one-zeros";
  std::string g = "1..6";
  std::string k = "0..6";
  std::string length = "3..12";
  std::string m = "0..4";
};

std::vector<FamilyShape> family_shapes(const FamilyArgs& a) {
  std::vector<FamilyShape> shapes;
  if (a.family == "one-zeros") {
    const auto k = parse_range(a.k, "--k");
    for (auto i = k.lo; i <= k.hi; ++i) shapes.push_back(family::OneZeros{i});
  } else if (a.family == "ones-zeros") {
    const auto g = parse_range(a.g, "--g");
    const auto k = parse_range(a.k, "--k");
    if (g.lo < 1 || k.lo < 1) throw Error(Errc::ShapeViolation, "ones-zeros needs g >= 1 and k >= 1");
    for (auto gi = g.lo; gi <= g.hi; ++gi) {
      for (auto ki = k.lo; ki <= k.hi; ++ki) shapes.push_back(family::OnesZeros{gi, ki});
    }
  } else if (a.family == "two-ones-zeros") {
    const auto k = parse_range(a.k, "--k");
    for (auto i = k.lo; i <= k.hi; ++i) shapes.push_back(family::TwoOnesZeros{i});
  } else if (a.family == "one-zeros-ones") {
    const auto L = parse_range(a.length, "--L");
    const auto m = parse_range(a.m, "--m");
    for (auto li = L.lo; li <= L.hi; ++li) {
      for (auto mi = m.lo; mi <= m.hi; ++mi) {
        if (li >= mi + 3) shapes.push_back(family::OneZerosOnes{li, mi});
      }
    }
  } else {
    throw Error(Errc::InvalidArgument, "unknown family '" + a.family + "'");
  }
  return shapes;
}

struct ShapeParams {
  std::optional<std::uint32_t> g, k, length, m;
};

ShapeParams params_of(const FamilyShape& shape) {
  ShapeParams p;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, family::OneZeros>) {
          p.k = s.k;
        } else if constexpr (std::is_same_v<T, family::OnesZeros>) {
          p.g = s.g;
          p.k = s.k;
        } else if constexpr (std::is_same_v<T, family::TwoOnesZeros>) {
          p.k = s.k;
        } else {
          p.length = s.length;
          p.m = s.m;
        }
      },
      shape);
  return p;
}

int run_family(const Global& g, const FamilyArgs& a) {
  const auto shapes = family_shapes(a);
  CheckOptions options;
  options.horizon_cap = g.horizon_cap;
  const auto rows = family_table(shapes, g.jobs, options);

  Output out{resolve_format(g, Format::Csv), {}};
  json config = base_config(g, "family-table", out.format);
  config["family"] = a.family;
  config["g"] = a.g;
  config["k"] = a.k;
  config["L"] = a.length;
  config["m"] = a.m;

  bool mismatch = false;
  auto field = [](const std::optional<std::uint32_t>& v) { return v ? std::to_string(*v) : std::string(); };
  json table = json::array();
  if (out.format == Format::Csv) {
    csv_config(out, config);
    out.text << "family,g,k,L,m,max_n_formula,max_n_search,proven,status\n";
  }
  for (const auto& row : rows) {
    mismatch = mismatch || row.status == "mismatch";
    const auto p = params_of(row.shape);
    const std::string formula = row.bound ? std::to_string(row.bound->max_n) : "";
    const std::string proven = row.bound ? (row.bound->proven ? "true" : "false") : "";
    switch (out.format) {
      case Format::Csv:
        out.text << a.family << "," << field(p.g) << "," << field(p.k) << "," << field(p.length) << ","
                 << field(p.m) << "," << formula << "," << row.search.max_n << "," << proven << ","
                 << row.status << "\n";
        break;
      case Format::Plain:
        out.text << family_name(row.shape);
        if (p.g) out.text << " g=" << *p.g;
        if (p.k) out.text << " k=" << *p.k;
        if (p.length) out.text << " L=" << *p.length;
        if (p.m) out.text << " m=" << *p.m;
        out.text << ": formula " << (formula.empty() ? "-" : formula)
                 << (row.bound && !row.bound->proven ? " (conjectural)" : "") << ", search "
                 << row.search.max_n << ", " << row.status << "\n";
        break;
      case Format::Json: {
        json j{{"family", family_name(row.shape)},
               {"max_n_search", row.search.max_n},
               {"status", row.status}};
        if (p.g) j["g"] = *p.g;
        if (p.k) j["k"] = *p.k;
        if (p.length) j["L"] = *p.length;
        if (p.m) j["m"] = *p.m;
        j["max_n_formula"] = row.bound ? json(row.bound->max_n) : json(nullptr);
        j["proven"] = row.bound ? json(row.bound->proven) : json(nullptr);
        table.push_back(j);
        break;
      }
    }
  }
  if (out.format == Format::Json) out.text << json{{"config", config}, {"rows", table}}.dump(2) << "\n";
  const int code = emit(g, out);
  if (code != kOk) return code;
  if (mismatch) std::cerr << "family-table: formula and search disagree\n";
  return mismatch ? kCounterexample : kOk;
}

// ---------------------------------------------------------------------------
// scan-2l1

struct ScanArgs {
  std::size_t length = 2;
  std::uint64_t cap = 3;
  std::size_t window = 0;
};

json scan_entry_json(const ScanEntry& e) {
  json j{{"coefficients", coefficients_json(e.coefficients)}, {"engine", to_json(e.engine)}};
  j["oracle"] = e.oracle ? to_json(*e.oracle) : json(nullptr);
  return j;
}

int run_scan(const Global& g, const ScanArgs& a) {
  if (a.length < 2) {
    throw Error(Errc::InvalidArgument, "--L must be at least 2; for L = 1 the window only sees B_1 = 0");
  }
  CheckOptions options;
  options.horizon_cap = g.horizon_cap;
  const auto r = scan_2l1(a.length, a.cap, a.window, g.jobs, options);
  const bool refutes = r.window >= 2 * a.length - 1 && !r.counterexamples.empty();

  Output out{resolve_format(g, Format::Json), {}};
  json config = base_config(g, "scan-2l1", out.format);
  config["L"] = a.length;
  config["cap"] = a.cap;
  config["window"] = r.window;
  switch (out.format) {
    case Format::Json: {
      json found = json::array();
      for (const auto& e : r.counterexamples) found.push_back(scan_entry_json(e));
      json unresolved = json::array();
      for (const auto& c : r.unresolved) unresolved.push_back(coefficients_json(c));
      out.text << json{{"config", config},
                       {"scanned", r.scanned},
                       {"passing_window", r.passing_window},
                       {"counterexamples", found},
                       {"unresolved", unresolved},
                       {"conjecture_refuted", refutes}}
                      .dump(2)
               << "\n";
      break;
    }
    case Format::Csv:
      csv_config(out, config);
      out.text << "coefficients,status,first_failure\n";
      for (const auto& e : r.counterexamples) {
        const auto index = certificate_index(e.engine.certificate);
        out.text << "\"" << e.coefficients.to_string() << "\",counterexample,"
                 << (e.engine.is_incomplete() && index ? std::to_string(*index) : "") << "\n";
      }
      for (const auto& c : r.unresolved) out.text << "\"" << c.to_string() << "\",unresolved,\n";
      break;
    case Format::Plain:
      out.text << "scanned " << r.scanned << ", passing window " << r.window << ": " << r.passing_window
               << ", counterexamples " << r.counterexamples.size() << ", unresolved "
               << r.unresolved.size() << "\n";
      for (const auto& e : r.counterexamples) {
        out.text << "  " << e.coefficients.to_string() << " " << to_string(e.engine.kind) << " "
                 << certificate_tag(e.engine.certificate);
        if (const auto index = certificate_index(e.engine.certificate)) out.text << " " << *index;
        out.text << "\n";
      }
      break;
  }
  const int code = emit(g, out);
  if (code != kOk) return code;
  if (refutes) std::cerr << "scan-2l1: counterexample to the 2L-1 rule found\n";
  return refutes ? kCounterexample : kOk;
}

// ---------------------------------------------------------------------------
// min-root

struct MinRootArgs {
  std::size_t length = 2;
  std::uint64_t sum_cap = 4;
};

int run_min_root(const Global& g, const MinRootArgs& a) {
  if (a.length < 2) throw Error(Errc::InvalidArgument, "--L must be at least 2");
  CheckOptions options;
  options.horizon_cap = g.horizon_cap;
  const auto r = min_root_frontier(a.length, a.sum_cap, g.jobs, options);

  Output out{resolve_format(g, Format::Json), {}};
  json config = base_config(g, "min-root", out.format);
  config["L"] = a.length;
  config["sum_cap"] = a.sum_cap;
  const std::string order = r.frontier_vs_lambda ? ordering_name(*r.frontier_vs_lambda) : "";
  switch (out.format) {
    case Format::Json: {
      json j{{"config", config},
             {"scanned", r.scanned},
             {"incomplete", r.incomplete},
             {"oracle_confirmed", r.oracle_confirmed},
             {"unresolved", r.unresolved},
             {"n_l", r.lambda.n_l},
             {"lambda", bracket_json(r.lambda.lambda)},
             {"counterexample", r.counterexample()}};
      j["frontier"] = r.frontier ? coefficients_json(*r.frontier) : json(nullptr);
      j["frontier_root"] = r.frontier_root ? bracket_json(*r.frontier_root) : json(nullptr);
      j["frontier_vs_lambda"] = r.frontier_vs_lambda ? json(order) : json(nullptr);
      j["margin"] = r.frontier ? json(r.margin) : json(nullptr);
      out.text << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      csv_config(out, config);
      out.text << "L,sum_cap,frontier,frontier_root,lambda,frontier_vs_lambda,margin\n"
               << a.length << "," << a.sum_cap << ",\"" << (r.frontier ? r.frontier->to_string() : "")
               << "\"," << (r.frontier_root ? decimal(*r.frontier_root) : "") << ","
               << decimal(r.lambda.lambda) << "," << order << "," << (r.frontier ? number(r.margin) : "")
               << "\n";
      break;
    case Format::Plain:
      out.text << "lambda_" << a.length << " = " << decimal(r.lambda.lambda) << "\n";
      if (r.frontier) {
        out.text << "frontier " << r.frontier->to_string() << " root " << decimal(*r.frontier_root)
                 << " (" << order << " lambda)\n";
      } else {
        out.text << "no incomplete vector in range\n";
      }
      break;
  }
  const int code = emit(g, out);
  if (code != kOk) return code;
  if (r.counterexample()) std::cerr << "min-root: incomplete vector below lambda_L found\n";
  return r.counterexample() ? kCounterexample : kOk;
}

// ---------------------------------------------------------------------------
// dense

struct DenseArgs {
  std::size_t length = 8;
  double epsilon = 0.05;
  double tol = 1e-12;
};

int run_dense(const Global& g, const DenseArgs& a) {
  if (!(a.epsilon > 0) || !(a.tol > 0)) throw Error(Errc::InvalidArgument, "--epsilon and --tol must be positive");
  const auto r = denseness_scan(a.length, a.epsilon, a.tol);
  Output out{resolve_format(g, Format::Csv), {}};
  json config = base_config(g, "dense", out.format);
  config["L"] = a.length;
  config["epsilon"] = a.epsilon;
  config["tol"] = a.tol;
  json summary{{"count", r.roots.size()},
               {"max_gap", r.max_gap},
               {"covered_lo", r.covered_lo},
               {"covered_hi", r.covered_hi},
               {"strictly_increasing", r.strictly_increasing},
               {"gaps_decreasing", r.gaps_decreasing},
               {"ends_at_two", r.ends_at_two},
               {"max_gap_below_epsilon", r.max_gap_below_epsilon}};
  switch (out.format) {
    case Format::Csv:
      csv_config(out, config);
      out.text << "# summary: " << summary.dump() << "\n";
      out.text << "k,root\n";
      for (const auto& [k, b] : r.roots) out.text << k << "," << decimal(b, 17) << "\n";
      break;
    case Format::Json: {
      json roots = json::array();
      for (const auto& [k, b] : r.roots) roots.push_back({{"k", k}, {"root", b.approx()}});
      summary["config"] = config;
      summary["roots"] = roots;
      out.text << summary.dump(2) << "\n";
      break;
    }
    case Format::Plain:
      out.text << r.roots.size() << " roots on [" << r.covered_lo << ", " << r.covered_hi << "], max gap "
               << r.max_gap << (r.max_gap_below_epsilon ? " < " : " >= ") << a.epsilon
               << (r.strictly_increasing ? ", increasing" : ", NOT increasing")
               << (r.gaps_decreasing ? ", gaps decreasing" : ", gaps NOT decreasing")
               << (r.ends_at_two ? ", ends at 2" : "") << "\n";
      break;
  }
  return emit(g, out);
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded:
    case Errc::CostCap:
      return kIndefinite;
    default:
      return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completeness of positive linear recurrence sequences"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "plrs 0.1.0");

  Global global;
  global.jobs = default_jobs();
  app.add_option("--format", global.format, "Output format (default depends on the command)")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--out", global.out, "Write output to FILE instead of stdout");
  app.add_option("--jobs", global.jobs, "Worker threads for search commands")->check(CLI::PositiveNumber);
  app.add_option("--horizon-cap", global.horizon_cap, "Largest horizon the verdict engine may reach");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print the first terms of a sequence");
  gen_cmd->add_option("coeffs", gen.coeffs, "Comma-separated coefficients c_1,...,c_L")->required();
  gen_cmd->add_option("--n", gen.n, "Number of terms");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide completeness with a certificate");
  check_cmd->add_option("coeffs", check.coeffs, "Comma-separated coefficients c_1,...,c_L");
  check_cmd->add_option("--horizon", check.horizon, "Initial horizon (default max(4L, 64))");
  check_cmd->add_flag("--assume-2l1", check.assume_2l1, "Accept the conjectural 2L-1 rule at the cap");
  check_cmd->add_flag("--triage-first", check.triage_first, "Try root triage before the gap engine");
  check_cmd->add_flag("--require-definite", check.require_definite,
                      "Exit 3 unless the verdict is definite and non-conjectural");
  check_cmd->add_option("--verify", check.verify, "Re-check a JSON verdict from FILE ('-' for stdin)");

  FamilyArgs fam;
  auto* fam_cmd = app.add_subcommand("family-table", "Compare family bounds with a search over N");
  fam_cmd->add_option("--family", fam.family, "one-zeros, ones-zeros, two-ones-zeros or one-zeros-ones")
      ->check(CLI::IsMember({"one-zeros", "ones-zeros", "two-ones-zeros", "one-zeros-ones"}));
  fam_cmd->add_option("--g", fam.g, "Range A..B of leading ones");
  fam_cmd->add_option("--k", fam.k, "Range A..B of zeros");
  fam_cmd->add_option("--L", fam.length, "Range A..B of lengths (one-zeros-ones)");
  fam_cmd->add_option("--m", fam.m, "Range A..B of trailing ones (one-zeros-ones)");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan-2l1", "Search for counterexamples to the 2L-1 rule");
  scan_cmd->add_option("--L", scan.length, "Length")->required();
  scan_cmd->add_option("--cap,--coeff-cap", scan.cap, "Largest coefficient")->required();
  scan_cmd->add_option("--window", scan.window, "Prefix checked with Brown's criterion (default 2L-1)");

  MinRootArgs minroot;
  auto* min_cmd = app.add_subcommand("min-root", "Smallest principal root among incomplete vectors");
  min_cmd->add_option("--L", minroot.length, "Length")->required();
  min_cmd->add_option("--sum-cap", minroot.sum_cap, "Largest coefficient sum")->required();

  DenseArgs dense;
  auto* dense_cmd = app.add_subcommand("dense", "Roots of [1,0,...,0,k] between lambda_L and 2");
  dense_cmd->add_option("--L", dense.length, "Length")->required();
  dense_cmd->add_option("--epsilon", dense.epsilon, "Target largest gap");
  dense_cmd->add_option("--tol", dense.tol, "Root bracket width");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "Decide completeness by subset sums");
  oracle_cmd->add_option("coeffs", oracle.coeffs, "Comma-separated coefficients c_1,...,c_L")->required();
  oracle_cmd->add_option("--max-prefix", oracle.max_prefix, "Longest prefix examined (default 4L)");
  oracle_cmd->add_option("--budget-bits", oracle.budget_bits, "Bit-vector budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }

  try {
    if (*gen_cmd) return run_gen(global, gen);
    if (*check_cmd) {
      if (check.verify.empty() && check.coeffs.empty()) {
        throw Error(Errc::EmptyVector, "check needs coefficients or --verify");
      }
      return run_check(global, check);
    }
    if (*fam_cmd) return run_family(global, fam);
    if (*scan_cmd) return run_scan(global, scan);
    if (*min_cmd) return run_min_root(global, minroot);
    if (*dense_cmd) return run_dense(global, dense);
    if (*oracle_cmd) return run_oracle(global, oracle);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
