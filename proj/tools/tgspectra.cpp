// tgspectra: spectral analysis of threshold graphs from creation strings.
//
// Subcommands: spectrum, bounds, embed, scan, parity.  Output formats: text
// (default), json, csv.  Exit codes: 0 success (conjecture counterexamples
// are flagged in the report but do not fail the run), 1 theorem violation
// found by scan, 2 usage or parse error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "threshold/analysis.hpp"
#include "threshold/embedding.hpp"
#include "threshold/enumeration.hpp"
#include "threshold/graph.hpp"
#include "threshold/spectrum.hpp"

namespace {

using nlohmann::json;
namespace tg = threshold;

constexpr int kSchemaVersion = 1;

struct Options {
  std::string format = "text";
  int precision = 6;
  std::string out;
};

std::string fmt(double v, int precision) {
  // Values below half an ulp of the printed precision collapse to zero so
  // that "-0.000000" never appears.
  double half_ulp = 0.5 * std::pow(10.0, -precision);
  if (std::fabs(v) < half_ulp) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

// Numbers in JSON reports carry exactly the digits of the text rendering.
json jnum(double v, int precision) { return json(std::stod(fmt(v, precision))); }

json graph_json(const tg::Graph& g) {
  json blocks = json::array();
  for (const tg::Block& b : g.blocks()) blocks.push_back({b.zeros, b.ones});
  return {{"expanded", g.expanded()},
          {"compact", g.compact()},
          {"n", g.order()},
          {"k", g.block_count()},
          {"blocks", blocks}};
}

void emit(const Options& opt, const std::string& rendered) {
  if (opt.out.empty()) {
    std::cout << rendered;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
  f << rendered;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void add_common_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--precision", opt.precision, "Decimal places for numeric output")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  cmd->add_option("--out", opt.out, "Write the report to a file instead of stdout");
}

int run_spectrum(const std::string& text, const Options& opt) {
  const tg::Graph g = tg::Graph::parse(text);
  const tg::Spectrum s = tg::eigenvalues(tg::adjacency(g));
  const tg::Inertia numeric = tg::inertia_numeric(s);
  const tg::Inertia formula = tg::inertia_formula(g);
  const tg::TrivialMultiplicities tm = tg::trivial_multiplicities(g);
  const auto mm = tg::mu_minus(s);
  const double mp = tg::mu_plus(s);
  const int p = opt.precision;

  if (opt.format == "json") {
    json j{{"schema_version", kSchemaVersion},
           {"command", "spectrum"},
           {"graph", graph_json(g)},
           {"eigenvalues", json::array()},
           {"inertia_numeric", {{"negatives", numeric.negatives}, {"zeros", numeric.zeros}, {"positives", numeric.positives}}},
           {"inertia_formula", {{"negatives", formula.negatives}, {"zeros", formula.zeros}, {"positives", formula.positives}}},
           {"mu_minus", mm ? jnum(*mm, p) : json(nullptr)},
           {"mu_plus", jnum(mp, p)},
           {"multiplicity_minus_one", tm.minus_one},
           {"multiplicity_zero", tm.zero}};
    for (double v : s.values) j["eigenvalues"].push_back(jnum(v, p));
    emit(opt, j.dump(2) + "\n");
  } else if (opt.format == "csv") {
    std::ostringstream os;
    os << "field,value\n";
    for (int i = 0; i < s.size(); ++i)
      os << "lambda_" << i + 1 << "," << fmt(s.values[static_cast<std::size_t>(i)], p) << "\n";
    os << "inertia_numeric," << numeric.negatives << " " << numeric.zeros << " "
       << numeric.positives << "\n";
    os << "inertia_formula," << formula.negatives << " " << formula.zeros << " "
       << formula.positives << "\n";
    os << "mu_minus," << (mm ? fmt(*mm, p) : "") << "\n";
    os << "mu_plus," << fmt(mp, p) << "\n";
    os << "multiplicity_minus_one," << tm.minus_one << "\n";
    os << "multiplicity_zero," << tm.zero << "\n";
    emit(opt, os.str());
  } else {
    std::ostringstream os;
    os << "graph " << g.compact() << "  (n=" << g.order() << ", k=" << g.block_count() << ")\n";
    os << "eigenvalues:";
    for (double v : s.values) os << " " << fmt(v, p);
    os << "\n";
    os << "inertia (numeric): (" << numeric.negatives << ", " << numeric.zeros << ", "
       << numeric.positives << ")\n";
    os << "inertia (formula): (" << formula.negatives << ", " << formula.zeros << ", "
       << formula.positives << ")\n";
    os << "mu-: " << (mm ? fmt(*mm, p) : "none") << "\n";
    os << "mu+: " << fmt(mp, p) << "\n";
    os << "multiplicity of -1: " << tm.minus_one << ", of 0: " << tm.zero << "\n";
    emit(opt, os.str());
  }
  return 0;
}

int run_bounds(const std::string& text, const Options& opt) {
  const tg::Graph g = tg::Graph::parse(text);
  const tg::BoundsReport br = tg::spectral_bounds(g);
  const int p = opt.precision;

  if (opt.format == "json") {
    json rows = json::array();
    for (const tg::BlockBound& b : br.per_block)
      rows.push_back({{"sigma", b.sigma},
                      {"tau", b.tau},
                      {"lo", jnum(b.lo, p)},
                      {"hi", jnum(b.hi, p)}});
    json j{{"schema_version", kSchemaVersion},
           {"command", "bounds"},
           {"graph", graph_json(g)},
           {"per_block", rows},
           {"lower_bound_lambda_max", jnum(br.lower_bound_lambda_max, p)},
           {"upper_bound_lambda_min", jnum(br.upper_bound_lambda_min, p)}};
    emit(opt, j.dump(2) + "\n");
  } else if (opt.format == "csv") {
    std::ostringstream os;
    os << "block,sigma,tau,lo,hi\n";
    for (std::size_t i = 0; i < br.per_block.size(); ++i) {
      const tg::BlockBound& b = br.per_block[i];
      os << i + 1 << "," << b.sigma << "," << b.tau << "," << fmt(b.lo, p) << "," << fmt(b.hi, p)
         << "\n";
    }
    os << "overall,,," << fmt(br.upper_bound_lambda_min, p) << ","
       << fmt(br.lower_bound_lambda_max, p) << "\n";
    emit(opt, os.str());
  } else {
    std::ostringstream os;
    os << "graph " << g.compact() << "  (n=" << g.order() << ", k=" << g.block_count() << ")\n";
    os << "block  sigma  tau  lambda_min(G_i)  lambda_max(G_i)\n";
    for (std::size_t i = 0; i < br.per_block.size(); ++i) {
      const tg::BlockBound& b = br.per_block[i];
      const char lo_mark = b.lo == br.upper_bound_lambda_min ? '*' : ' ';
      const char hi_mark = b.hi == br.lower_bound_lambda_max ? '*' : ' ';
      os << i + 1 << "  " << b.sigma << "  " << b.tau << "  " << fmt(b.lo, p) << lo_mark << "  "
         << fmt(b.hi, p) << hi_mark << "\n";
    }
    os << "lambda_max(G) >= " << fmt(br.lower_bound_lambda_max, p) << "\n";
    os << "lambda_min(G) <= " << fmt(br.upper_bound_lambda_min, p) << "\n";
    emit(opt, os.str());
  }
  return 0;
}

int run_embed(const std::string& text, const Options& opt) {
  const tg::Graph g = tg::Graph::parse(text);
  const tg::Embedding sub = tg::largest_antiregular_subgraph(g);
  const tg::Embedding super = tg::smallest_antiregular_supergraph(g);
  const bool sub_ok = sub.valid();
  const bool super_ok = super.valid();

  if (opt.format == "json") {
    json j{{"schema_version", kSchemaVersion},
           {"command", "embed"},
           {"graph", graph_json(g)},
           {"largest_antiregular_subgraph",
            {{"m", sub.guest.order()}, {"indices", sub.indices}, {"valid", sub_ok}}},
           {"smallest_antiregular_supergraph",
            {{"N", super.host.order()}, {"indices", super.indices}, {"valid", super_ok}}}};
    emit(opt, j.dump(2) + "\n");
  } else if (opt.format == "csv") {
    auto join = [](const std::vector<int>& v) {
      std::string s;
      for (int x : v) {
        if (!s.empty()) s += ' ';
        s += std::to_string(x);
      }
      return s;
    };
    std::ostringstream os;
    os << "field,value\n";
    os << "m," << sub.guest.order() << "\n";
    os << "subgraph_indices," << csv_escape(join(sub.indices)) << "\n";
    os << "subgraph_valid," << (sub_ok ? "true" : "false") << "\n";
    os << "N," << super.host.order() << "\n";
    os << "supergraph_indices," << csv_escape(join(super.indices)) << "\n";
    os << "supergraph_valid," << (super_ok ? "true" : "false") << "\n";
    emit(opt, os.str());
  } else {
    std::ostringstream os;
    os << "graph " << g.compact() << "  (n=" << g.order() << ", k=" << g.block_count() << ")\n";
    os << "largest anti-regular subgraph: m=" << sub.guest.order() << ", vertices";
    for (int v : sub.indices) os << " " << v;
    os << "  [" << (sub_ok ? "valid" : "INVALID") << "]\n";
    os << "smallest anti-regular supergraph: N=" << super.host.order() << ", vertices";
    for (int v : super.indices) os << " " << v;
    os << "  [" << (super_ok ? "valid" : "INVALID") << "]\n";
    emit(opt, os.str());
  }
  return (sub_ok && super_ok) ? 0 : 1;
}

int run_scan(int n, std::string checks_arg, int jobs, int cap, const Options& opt) {
  std::vector<std::string> requested;
  bool want_critical = false;
  std::stringstream ss(checks_arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "critical")
      want_critical = true;
    else
      requested.push_back(item);
  }

  const tg::ScanReport report = tg::scan(n, requested, jobs, cap);
  std::optional<tg::CriticalList> critical;
  if (want_critical) critical = tg::critical_graphs(n);
  const int p = opt.precision;
  std::cerr << "# scanned " << report.graphs_scanned << " graphs in "
            << fmt(report.wall_seconds, 3) << " s\n";

  if (opt.format == "json") {
    json j{{"schema_version", kSchemaVersion},
           {"command", "scan"},
           {"n", report.n},
           {"graphs_scanned", report.graphs_scanned},
           {"checks", report.checks_run},
           {"violations", json::array()},
           {"counterexamples", json::array()},
           {"extremal", json::object()}};
    for (const auto& v : report.violations)
      j["violations"].push_back({{"graph", v.graph}, {"check", v.check}, {"margin", jnum(v.margin, p)}});
    for (const auto& v : report.counterexamples)
      j["counterexamples"].push_back(
          {{"graph", v.graph}, {"check", v.check}, {"margin", jnum(v.margin, p)}});
    for (const auto& [key, e] : report.extremal)
      j["extremal"][key] = {{"graph", e.graph}, {"value", jnum(e.value, p)}};
    if (critical) j["critical"] = critical->strings;
    emit(opt, j.dump(2) + "\n");
  } else if (opt.format == "csv") {
    std::ostringstream os;
    os << "record,name,graph,value\n";
    os << "summary,n,," << report.n << "\n";
    os << "summary,graphs_scanned,," << report.graphs_scanned << "\n";
    for (const auto& [key, e] : report.extremal)
      os << "extremal," << key << "," << e.graph << "," << fmt(e.value, p) << "\n";
    for (const auto& v : report.violations)
      os << "violation," << v.check << "," << v.graph << "," << fmt(v.margin, p) << "\n";
    for (const auto& v : report.counterexamples)
      os << "counterexample," << v.check << "," << v.graph << "," << fmt(v.margin, p) << "\n";
    if (critical)
      for (std::size_t i = 0; i < critical->strings.size(); ++i)
        os << "critical," << i + 1 << "," << csv_escape(critical->strings[i]) << ",\n";
    emit(opt, os.str());
  } else {
    std::ostringstream os;
    os << "scan n=" << report.n << ": " << report.graphs_scanned << " graphs\n";
    os << "checks:";
    for (const auto& c : report.checks_run) os << " " << c;
    if (want_critical) os << " critical";
    os << "\n";
    os << "violations: " << report.violations.size() << "\n";
    for (const auto& v : report.violations)
      os << "  " << v.check << " " << v.graph << " margin " << fmt(v.margin, p) << "\n";
    os << "counterexamples: " << report.counterexamples.size() << "\n";
    for (const auto& v : report.counterexamples)
      os << "  " << v.check << " " << v.graph << " margin " << fmt(v.margin, p) << "\n";
    os << "extremal:\n";
    for (const auto& [key, e] : report.extremal)
      os << "  " << key << " " << fmt(e.value, p) << " at " << e.graph << "\n";
    if (critical) {
      os << "critical graphs (" << critical->strings.size() << "):\n";
      for (const auto& s : critical->strings) os << "  " << s << "\n";
    }
    emit(opt, os.str());
  }
  return report.violations.empty() ? 0 : 1;
}

int run_parity(int k_max, const Options& opt) {
  const auto rows = tg::parity_sequences(k_max);
  const auto [olo, ohi] = tg::omega();
  const int p = opt.precision;

  bool mm_even_inc = true, mm_odd_inc = true, mp_even_dec = true, mp_odd_dec = true;
  bool below = true, above = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i + 1 < rows.size()) {
      mm_even_inc &= rows[i + 1].mu_minus_even > rows[i].mu_minus_even;
      mm_odd_inc &= rows[i + 1].mu_minus_odd > rows[i].mu_minus_odd;
      mp_even_dec &= rows[i + 1].mu_plus_even < rows[i].mu_plus_even;
      mp_odd_dec &= rows[i + 1].mu_plus_odd < rows[i].mu_plus_odd;
    }
    below &= rows[i].mu_minus_even < olo && rows[i].mu_minus_odd < olo;
    above &= rows[i].mu_plus_even > ohi && rows[i].mu_plus_odd > ohi;
  }

  if (opt.format == "json") {
    json j{{"schema_version", kSchemaVersion},
           {"command", "parity"},
           {"k_max", k_max},
           {"rows", json::array()},
           {"verdicts",
            {{"mu_minus_even_increasing", mm_even_inc},
             {"mu_minus_odd_increasing", mm_odd_inc},
             {"mu_plus_even_decreasing", mp_even_dec},
             {"mu_plus_odd_decreasing", mp_odd_dec},
             {"mu_minus_below_limit", below},
             {"mu_plus_above_limit", above}}}};
    for (const auto& r : rows)
      j["rows"].push_back({{"k", r.k},
                           {"mu_minus_even", jnum(r.mu_minus_even, p)},
                           {"mu_plus_even", jnum(r.mu_plus_even, p)},
                           {"mu_minus_odd", jnum(r.mu_minus_odd, p)},
                           {"mu_plus_odd", jnum(r.mu_plus_odd, p)}});
    emit(opt, j.dump(2) + "\n");
  } else if (opt.format == "csv") {
    std::ostringstream os;
    os << "k,mu_minus_even,mu_plus_even,mu_minus_odd,mu_plus_odd\n";
    for (const auto& r : rows)
      os << r.k << "," << fmt(r.mu_minus_even, p) << "," << fmt(r.mu_plus_even, p) << ","
         << fmt(r.mu_minus_odd, p) << "," << fmt(r.mu_plus_odd, p) << "\n";
    emit(opt, os.str());
  } else {
    std::ostringstream os;
    os << "k  mu-(A_2k)  mu+(A_2k)  mu-(A_2k+1)  mu+(A_2k+1)\n";
    for (const auto& r : rows)
      os << r.k << "  " << fmt(r.mu_minus_even, p) << "  " << fmt(r.mu_plus_even, p) << "  "
         << fmt(r.mu_minus_odd, p) << "  " << fmt(r.mu_plus_odd, p) << "\n";
    auto verdict = [](bool b) { return b ? "pass" : "FAIL"; };
    os << "mu- even strictly increasing: " << verdict(mm_even_inc) << "\n";
    os << "mu- odd strictly increasing: " << verdict(mm_odd_inc) << "\n";
    os << "mu+ even strictly decreasing: " << verdict(mp_even_dec) << "\n";
    os << "mu+ odd strictly decreasing: " << verdict(mp_odd_dec) << "\n";
    os << "mu- below (-1-sqrt2)/2: " << verdict(below) << "\n";
    os << "mu+ above (-1+sqrt2)/2: " << verdict(above) << "\n";
    emit(opt, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral analysis of threshold graphs via creation strings"};
  app.require_subcommand(1);

  Options spectrum_opt, bounds_opt, embed_opt, scan_opt, parity_opt;
  std::string spectrum_graph, bounds_graph, embed_graph;
  int scan_n = 0, parity_k = 0;
  std::string scan_checks =
      "inertia,omega_free,refined_interval,multiplicities,simple_nontrivial,conjecture,bounds,"
      "sandwich";
  int scan_jobs = 1;
  int scan_cap = tg::kDefaultScanCap;

  CLI::App* c_spectrum =
      app.add_subcommand("spectrum", "Eigenvalues, inertia and trivial multiplicities");
  c_spectrum->add_option("graph", spectrum_graph, "Creation string (expanded or compact)")
      ->required();
  add_common_options(c_spectrum, spectrum_opt);

  CLI::App* c_bounds = app.add_subcommand("bounds", "Closed-form extreme-eigenvalue bounds");
  c_bounds->add_option("graph", bounds_graph, "Creation string (expanded or compact)")->required();
  add_common_options(c_bounds, bounds_opt);

  CLI::App* c_embed = app.add_subcommand("embed", "Anti-regular subgraph and supergraph witnesses");
  c_embed->add_option("graph", embed_graph, "Creation string (expanded or compact)")->required();
  add_common_options(c_embed, embed_opt);

  CLI::App* c_scan = app.add_subcommand("scan", "Exhaustive verification over all graphs of order n");
  c_scan->add_option("n", scan_n, "Graph order")->required();
  c_scan->add_option("--checks", scan_checks, "Comma-separated check list (may include critical)")
      ->capture_default_str();
  c_scan->add_option("--jobs", scan_jobs, "Worker threads")->check(CLI::Range(1, 256));
  c_scan->add_option("--cap", scan_cap, "Enumeration cap override")->check(CLI::Range(2, 62));
  add_common_options(c_scan, scan_opt);

  CLI::App* c_parity = app.add_subcommand("parity", "mu-/mu+ table of anti-regular graphs");
  c_parity->add_option("k_max", parity_k, "Last k of the table (k >= 2)")->required();
  add_common_options(c_parity, parity_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_spectrum->parsed()) return run_spectrum(spectrum_graph, spectrum_opt);
    if (c_bounds->parsed()) return run_bounds(bounds_graph, bounds_opt);
    if (c_embed->parsed()) return run_embed(embed_graph, embed_opt);
    if (c_scan->parsed()) return run_scan(scan_n, scan_checks, scan_jobs, scan_cap, scan_opt);
    if (c_parity->parsed()) return run_parity(parity_k, parity_opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
