#include "specconn/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "specconn/canonical.hpp"
#include "specconn/connectivity.hpp"
#include "specconn/enumerate.hpp"
#include "specconn/families.hpp"
#include "specconn/graph6.hpp"
#include "specconn/spectral.hpp"
#include "specconn/transforms.hpp"
#include "specconn/verify.hpp"

namespace specconn {

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  std::string s = buf;
  if (s == "-0.000000000000") s = "0.000000000000";
  while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  return s;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_set(VertexSet s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

VertexSet parse_set(const std::string& text) {
  VertexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const int v = std::stoi(item);
    if (v < 0 || v >= Graph::kMaxOrder) throw UsageError("vertex " + item + " out of range");
    out.insert(v);
  }
  return out;
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

Graph decode_arg(const std::string& text) {
  try {
    return graph6_decode(text);
  } catch (const Graph6Error& e) {
    throw UsageError(std::string("bad graph6 argument: ") + e.what());
  }
}

std::vector<Graph> graphs_from(const std::string& arg, std::istream& in, std::ostream& err) {
  if (arg != "-") return {decode_arg(arg)};
  IngestResult r = ingest_graph6(in);
  for (const auto& e : r.errors) err << "stdin line " << e.line << ": " << e.message << "\n";
  if (!r.errors.empty()) throw UsageError("malformed graph6 on stdin");
  return std::move(r.graphs);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << content;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

int default_jobs() {
  if (const char* env = std::getenv("SPECCONN_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Options {
  // rho / cut / transform graph arguments
  std::string graph;
  std::string subgraph;
  int g = 0;
  int r = 2;
  std::string mode = "full";
  // family
  std::string family;
  int n = 0;
  int k = 0;
  int delta = 0;
  std::string emit = "graph6";
  // transforms
  int u = 0;
  int v = 0;
  std::string moved;
  int core = 0;
  std::string parts;
  int p = 1;
  int trials = 1000;
  std::uint64_t seed = 1;
  int max_order = 10;
  // enum / verify
  std::string out_path;
  bool all_graphs = false;
  bool all_classes = false;
  std::optional<int> class_delta;
  std::optional<int> class_k;
  std::string input;
  std::string json_path;
  std::string csv_path;
  int jobs = 1;
  bool allow_out_of_hypothesis = false;
  bool omit_timing = false;
};

int cmd_rho(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  for (const Graph& g : graphs_from(o.graph, in, err)) {
    const auto r = spectral_radius(g);
    out << format_real(r.rho) << "\n";
    for (int i = 0; i < r.perron.size(); ++i) out << (i ? " " : "") << format_real(r.perron(i));
    out << "\n";
  }
  return kExitOk;
}

int cmd_cut(const Options& o, std::ostream& out) {
  const Graph g = decode_arg(o.graph);
  const CutQuery q{o.g, o.r, parse_cut_mode(o.mode)};
  const auto result = min_cut(g, q);
  if (!result) {
    out << "no valid cut\n";
    return kExitOk;
  }
  out << "value: " << result->value << "\n";
  out << "cut: " << format_set(result->certificate.cut) << "\n";
  out << "component_sizes:";
  for (int s : result->certificate.component_sizes) out << " " << s;
  out << "\nmin_residual_degree: " << result->certificate.min_residual_degree << "\n";
  return kExitOk;
}

int cmd_family(const Options& o, std::ostream& out) {
  const FamilyParams p{parse_family(o.family), o.n, o.k, o.delta, o.g, o.r};
  const FamilyGraph fam = construct(p);
  if (o.emit == "graph6") {
    out << graph6_encode(fam.graph) << "\n";
  } else if (o.emit == "json") {
    nlohmann::json j;
    j["family"] = to_string(p.family);
    j["params"] = {{"n", p.n}, {"k", p.k}, {"delta", p.delta}, {"g", p.g}, {"r", p.r}};
    j["graph6"] = graph6_encode(fam.graph);
    j["edges"] = fam.graph.edge_count();
    j["witness"] = fam.witness.to_vector();
    j["blocks"] = fam.blocks;
    j["rho"] = spectral_radius(fam.graph).rho;
    out << j.dump(2) << "\n";
  } else {
    throw UsageError("--emit must be graph6 or json");
  }
  return kExitOk;
}

int cmd_rotate(const Options& o, std::ostream& out) {
  const Graph g = decode_arg(o.graph);
  const RotationSpec spec{o.u, o.v, parse_set(o.moved)};
  const Graph rotated = rotate(g, spec);
  out << graph6_encode(rotated) << "\n";
  if (!g.connected()) return kExitOk;
  const RotationVerdict verdict = check_rotation(g, spec);
  out << "x(u)=" << format_real(verdict.x_u) << " x(v)=" << format_real(verdict.x_v) << "\n";
  if (!verdict.applicable) {
    out << "not applicable: x(u) < x(v)\n";
    return kExitOk;
  }
  out << "rho " << format_real(verdict.rho_before) << " -> " << format_real(verdict.rho_after)
      << (verdict.holds ? " increase" : " VIOLATION") << "\n";
  return verdict.holds ? kExitOk : kExitVerdictFailure;
}

int cmd_lemma2(const Options& o, std::ostream& out) {
  const SubgraphVerdict v = check_proper_subgraph(decode_arg(o.graph), decode_arg(o.subgraph));
  out << "rho(graph)=" << format_real(v.rho_graph) << " rho(subgraph)=" << format_real(v.rho_subgraph)
      << (v.holds ? " strict decrease" : " VIOLATION") << "\n";
  return v.holds ? kExitOk : kExitVerdictFailure;
}

int cmd_lemma4(const Options& o, std::ostream& out) {
  const JoinRebalanceVerdict v = check_join_rebalance(o.core, parse_list(o.parts), o.p);
  out << "rho(original)=" << format_real(v.rho_original)
      << " rho(rebalanced)=" << format_real(v.rho_rebalanced)
      << (v.holds ? " strict increase" : " VIOLATION") << "\n";
  return v.holds ? kExitOk : kExitVerdictFailure;
}

int report_fuzz(const FuzzSummary& s, std::ostream& out) {
  out << "trials=" << s.trials << " violations=" << s.violations
      << " disconnected_results=" << s.disconnected_results << " min_gap=" << s.min_gap << "\n";
  if (s.first_violation_seed) out << "first violating trial seed: " << *s.first_violation_seed << "\n";
  return s.violations == 0 ? kExitOk : kExitVerdictFailure;
}

int cmd_enum(const Options& o, std::ostream& out) {
  const std::vector<Graph> graphs = o.all_graphs ? enumerate_graphs(o.n) : enumerate_connected(o.n);
  std::string text;
  for (const Graph& g : graphs) text += graph6_encode(g) + "\n";
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file(o.out_path, text);
    out << graphs.size() << " graphs written to " << o.out_path << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const CutMode mode = parse_cut_mode(o.mode);
  if (mode != CutMode::full && mode != CutMode::neighbor) {
    throw UsageError("verify --mode must be full or neighbor");
  }
  if (o.all_classes == (o.class_delta.has_value() || o.class_k.has_value())) {
    throw UsageError("verify needs either --all-classes or both --delta and --k");
  }
  if (!o.all_classes && !(o.class_delta && o.class_k)) {
    throw UsageError("verify needs both --delta and --k");
  }
  const int r = mode == CutMode::neighbor ? 2 : o.r;

  std::vector<Graph> graphs;
  if (o.input.empty()) {
    graphs = enumerate_connected(o.n);
  } else {
    IngestResult ingest = ingest_graph6_file(o.input);
    for (const auto& e : ingest.errors) err << o.input << ":" << e.line << ": " << e.message << "\n";
    int skipped = 0;
    for (Graph& g : ingest.graphs) {
      if (g.order() == o.n && g.connected()) {
        graphs.push_back(std::move(g));
      } else {
        ++skipped;
      }
    }
    if (skipped) err << "skipped " << skipped << " graphs that are disconnected or not of order " << o.n << "\n";
  }

  std::vector<VerificationReport> reports;
  if (o.all_classes) {
    const auto surveys = survey(graphs, o.g, r, mode, o.jobs);
    reports = verify_all_classes(o.n, o.g, r, mode, surveys, o.allow_out_of_hypothesis);
  } else {
    const ClassSpec spec{o.n, *o.class_delta, o.g, r, *o.class_k, mode};
    if (!spec.in_hypothesis() && !o.allow_out_of_hypothesis) {
      throw UsageError("class lies outside n >= k + r(g+1); pass --allow-out-of-hypothesis");
    }
    reports.push_back(verify_theorem(spec, graphs, o.jobs));
  }

  bool ok = true;
  for (const auto& rep : reports) {
    out << "n=" << rep.spec.n << " delta=" << rep.spec.delta << " g=" << rep.spec.g
        << " r=" << rep.spec.r << " k=" << rep.spec.k << " population=" << rep.population
        << " best=" << (rep.best_rho ? format_real(*rep.best_rho) : "-")
        << " claimed=" << (rep.claimed_family.empty() ? "-" : rep.claimed_family)
        << " verdict=" << to_string(rep.verdict) << "\n";
    for (const auto& w : rep.warnings) out << "  warning: " << w << "\n";
    ok = ok && rep.acceptable();
  }
  if (!o.json_path.empty()) write_file(o.json_path, reports_to_json(reports, o.omit_timing));
  if (!o.csv_path.empty()) write_file(o.csv_path, reports_to_csv(reports, o.omit_timing));
  return ok ? kExitOk : kExitVerdictFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Conditional connectivity and spectral radius toolkit"};
  app.require_subcommand(1);
  Options o;
  o.jobs = default_jobs();

  auto* rho = app.add_subcommand("rho", "Spectral radius and Perron vector");
  rho->add_option("graph", o.graph, "graph6 record, or - to read records from stdin")->required();

  auto* cut = app.add_subcommand("cut", "Minimum cut with certificate");
  cut->add_option("graph", o.graph, "graph6 record")->required();
  cut->add_option("--g", o.g, "good-neighbour threshold")->capture_default_str();
  cut->add_option("--r", o.r, "component threshold")->capture_default_str();
  cut->add_option("--mode", o.mode, "classic, component, neighbor or full")->capture_default_str();

  auto* family = app.add_subcommand("family", "Build an extremal family member");
  family->add_option("id", o.family, "delta0, deltamg-g, km1, zero-delta or join-vi")->required();
  family->add_option("--n", o.n)->required();
  family->add_option("--k", o.k)->required();
  family->add_option("--delta", o.delta)->required();
  family->add_option("--g", o.g)->required();
  family->add_option("--r", o.r)->required();
  family->add_option("--emit", o.emit, "graph6 or json")->capture_default_str();

  auto* transform = app.add_subcommand("transform", "Spectral comparison transforms");
  transform->require_subcommand(1);
  auto* t_rotate = transform->add_subcommand("rotate", "Move edges v-w onto u-w and compare rho");
  t_rotate->add_option("graph", o.graph)->required();
  t_rotate->add_option("--u", o.u)->required();
  t_rotate->add_option("--v", o.v)->required();
  t_rotate->add_option("--moved", o.moved, "comma-separated vertices")->required();
  auto* t_lemma2 = transform->add_subcommand("lemma2", "Proper subgraph has smaller rho");
  t_lemma2->add_option("graph", o.graph)->required();
  t_lemma2->add_option("subgraph", o.subgraph)->required();
  auto* t_lemma4 = transform->add_subcommand("lemma4", "Clique-join rebalancing comparison");
  t_lemma4->add_option("--s", o.core, "join core size")->required();
  t_lemma4->add_option("--parts", o.parts, "comma-separated clique sizes")->required();
  t_lemma4->add_option("--p", o.p)->required();
  auto* t_fuzz_rot = transform->add_subcommand("fuzz-rotate", "Random rotation trials");
  auto* t_fuzz_sub = transform->add_subcommand("fuzz-lemma2", "Random edge/vertex deletion trials");
  for (auto* sub : {t_fuzz_rot, t_fuzz_sub}) {
    sub->add_option("--trials", o.trials)->capture_default_str();
    sub->add_option("--seed", o.seed)->capture_default_str();
    sub->add_option("--max-order", o.max_order)->capture_default_str();
  }

  auto* enumerate = app.add_subcommand("enum", "Connected graphs of order n, one per class");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--out", o.out_path, "write graph6 lines here instead of stdout");
  enumerate->add_flag("--all", o.all_graphs, "include disconnected graphs");

  auto* verify = app.add_subcommand("verify", "Exhaustive extremal-graph verification");
  verify->add_option("--n", o.n)->required();
  verify->add_option("--g", o.g)->required();
  verify->add_option("--r", o.r)->capture_default_str();
  verify->add_option("--delta", o.class_delta);
  verify->add_option("--k", o.class_k);
  verify->add_flag("--all-classes", o.all_classes);
  verify->add_option("--mode", o.mode, "full (g-good r-component) or neighbor (g-good neighbour)")
      ->capture_default_str();
  verify->add_option("--input", o.input, "graph6 file instead of the built-in census");
  verify->add_option("--json", o.json_path);
  verify->add_option("--csv", o.csv_path);
  verify->add_option("--jobs", o.jobs, "worker threads (default $SPECCONN_JOBS or 1)");
  verify->add_option("--seed", o.seed, "accepted for interface stability; exhaustive runs are deterministic");
  verify->add_flag("--allow-out-of-hypothesis", o.allow_out_of_hypothesis);
  verify->add_flag("--omit-timing", o.omit_timing, "write runtime_ms as 0");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*rho) return cmd_rho(o, in, out, err);
    if (*cut) return cmd_cut(o, out);
    if (*family) return cmd_family(o, out);
    if (*t_rotate) return cmd_rotate(o, out);
    if (*t_lemma2) return cmd_lemma2(o, out);
    if (*t_lemma4) return cmd_lemma4(o, out);
    if (*t_fuzz_rot) return report_fuzz(fuzz_rotation(o.trials, o.seed, o.max_order), out);
    if (*t_fuzz_sub) return report_fuzz(fuzz_proper_subgraph(o.trials, o.seed, o.max_order), out);
    if (*enumerate) return cmd_enum(o, out);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace specconn
