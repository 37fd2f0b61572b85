#include "specconn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "specconn/canonical.hpp"
#include "specconn/families.hpp"
#include "specconn/graph6.hpp"
#include "specconn/spectral.hpp"

namespace specconn {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::refuted: return "refuted";
    case Verdict::empty: return "empty";
    case Verdict::coverage_anomaly: return "coverage-anomaly";
    case Verdict::no_claim: return "no-claim";
  }
  return "unknown";
}

namespace {

CutQuery query_for(int g, int r, CutMode mode) {
  return {g, mode == CutMode::neighbor ? 2 : r, mode};
}

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

}  // namespace

std::optional<int> classify(const Graph& g, int delta, int g_param, int r, CutMode mode) {
  if (!g.connected()) throw std::invalid_argument("classify needs a connected graph");
  if (degree_profile(g).min_degree != delta) return std::nullopt;
  const auto cut = min_cut(g, query_for(g_param, r, mode));
  if (!cut) return std::nullopt;
  return cut->value;
}

std::vector<GraphSurvey> survey(std::span<const Graph> graphs, int g, int r, CutMode mode,
                                int jobs) {
  std::vector<GraphSurvey> out(graphs.size(), GraphSurvey{Graph(1), 0, std::nullopt, 0.0, {}});
  const CutQuery q = query_for(g, r, mode);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < graphs.size(); i += stride) {
      const Graph& graph = graphs[i];
      if (!graph.connected()) throw std::invalid_argument("survey expects connected graphs");
      GraphSurvey s{graph, 0, std::nullopt, 0.0, {}};
      s.min_degree = degree_profile(graph).min_degree;
      if (auto cut = min_cut(graph, q)) s.k = cut->value;
      s.rho = spectral_radius(graph).rho;
      s.canonical = canonical_form(graph).graph6;
      out[i] = std::move(s);
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1 || graphs.size() < 2) {
    work(0, 1);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failures(jobs);
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      try {
        work(static_cast<std::size_t>(j), static_cast<std::size_t>(jobs));
      } catch (...) {
        failures[j] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return out;
}

VerificationReport verify_class(const ClassSpec& spec, std::span<const GraphSurvey> surveys) {
  const auto start = Clock::now();
  VerificationReport report;
  report.spec = spec;
  if (spec.mode == CutMode::neighbor) report.spec.r = 2;
  const ClassSpec& cls = report.spec;

  std::vector<const GraphSurvey*> members;
  for (const GraphSurvey& s : surveys) {
    if (s.graph.order() == cls.n && s.min_degree == cls.delta && s.k == cls.k) {
      members.push_back(&s);
    }
  }
  report.population = static_cast<int>(members.size());

  // Highest rho wins; within kTieBand the least canonical form wins. The
  // choice depends only on the member set, not on scan order.
  const GraphSurvey* best = nullptr;
  if (!members.empty()) {
    double top = members.front()->rho;
    for (const auto* m : members) top = std::max(top, m->rho);
    for (const auto* m : members) {
      if (m->rho >= top - kTieBand && (!best || m->canonical < best->canonical)) best = m;
    }
    report.best_rho = best->rho;
    report.best_graph6 = best->canonical;
    for (const auto* m : members) {
      if (m->canonical == best->canonical) continue;
      if (!report.second_best_rho || m->rho > *report.second_best_rho) {
        report.second_best_rho = m->rho;
      }
    }
  }

  if (!cls.in_hypothesis()) report.warnings.push_back("out-of-hypothesis");

  std::optional<FamilyGraph> claimed;
  try {
    const FamilyParams params = claimed_extremal(cls.n, cls.k, cls.delta, cls.g, cls.r);
    report.claimed_family = to_string(params.family);
    claimed = construct(params);
  } catch (const std::invalid_argument& e) {
    if (cls.in_hypothesis() && report.population > 0) {
      report.warnings.push_back(std::string("claimed family unavailable: ") + e.what());
    }
  }

  if (claimed) {
    report.claimed_rho = spectral_radius(claimed->graph).rho;
    report.claimed_graph6 = graph6_encode(claimed->graph);
    const auto claimed_k = classify(claimed->graph, cls.delta, cls.g, cls.r, cls.mode);
    if (claimed_k != cls.k) report.warnings.push_back("claimed graph is not in the class");
    if (best) {
      report.isomorphic = canonical_form(claimed->graph).graph6 == best->canonical;
      if (*report.best_rho < *report.claimed_rho - kVerdictTolerance) {
        report.warnings.push_back("claimed graph exceeds every class member");
      }
    }
  }

  if (!cls.in_hypothesis()) {
    report.verdict = report.population == 0 ? Verdict::empty : Verdict::no_claim;
  } else if (report.population == 0) {
    report.verdict = Verdict::empty;
  } else if (!claimed) {
    report.verdict = Verdict::coverage_anomaly;
  } else {
    const bool close = std::abs(*report.best_rho - *report.claimed_rho) <= kVerdictTolerance;
    report.verdict = close && report.isomorphic ? Verdict::confirmed : Verdict::refuted;
  }
  report.runtime_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_theorem(const ClassSpec& spec, std::span<const Graph> graphs, int jobs) {
  const auto start = Clock::now();
  const auto surveys = survey(graphs, spec.g, spec.r, spec.mode, jobs);
  VerificationReport report = verify_class(spec, surveys);
  report.runtime_ms = elapsed_ms(start);
  return report;
}

std::vector<VerificationReport> verify_all_classes(int n, int g, int r, CutMode mode,
                                                   std::span<const GraphSurvey> surveys,
                                                   bool allow_out_of_hypothesis) {
  std::set<std::pair<int, int>> cells;
  for (const GraphSurvey& s : surveys) {
    if (s.graph.order() == n && s.k) cells.emplace(s.min_degree, *s.k);
  }
  std::vector<VerificationReport> out;
  for (auto [delta, k] : cells) {
    ClassSpec spec{n, delta, g, mode == CutMode::neighbor ? 2 : r, k, mode};
    if (!spec.in_hypothesis() && !allow_out_of_hypothesis) continue;
    out.push_back(verify_class(spec, surveys));
  }
  return out;
}

namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string csv_number(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream s;
  s.precision(17);
  s << *v;
  return s.str();
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string reports_to_json(std::span<const VerificationReport> reports, bool omit_timing) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["schema"] = 1;
    j["class"] = {{"n", r.spec.n},         {"delta", r.spec.delta}, {"g", r.spec.g},
                  {"r", r.spec.r},         {"k", r.spec.k},         {"mode", to_string(r.spec.mode)}};
    j["population"] = r.population;
    j["best"] = {{"rho", optional_number(r.best_rho)}, {"graph6", r.best_graph6}};
    j["claimed"] = {{"family", r.claimed_family},
                    {"rho", optional_number(r.claimed_rho)},
                    {"graph6", r.claimed_graph6}};
    j["isomorphic"] = r.isomorphic;
    j["second_best_rho"] = optional_number(r.second_best_rho);
    j["runtime_ms"] = omit_timing ? 0 : r.runtime_ms;
    j["warnings"] = r.warnings;
    j["verdict"] = to_string(r.verdict);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string reports_to_csv(std::span<const VerificationReport> reports, bool omit_timing) {
  std::ostringstream out;
  out << "schema,n,delta,g,r,k,population,best_rho,best_graph6,claimed_family,claimed_rho,"
         "claimed_graph6,isomorphic,second_best_rho,runtime_ms,warnings,mode,verdict\n";
  for (const auto& r : reports) {
    std::string warnings;
    for (const auto& w : r.warnings) warnings += (warnings.empty() ? "" : "; ") + w;
    out << 1 << ',' << r.spec.n << ',' << r.spec.delta << ',' << r.spec.g << ',' << r.spec.r
        << ',' << r.spec.k << ',' << r.population << ',' << csv_number(r.best_rho) << ','
        << csv_field(r.best_graph6) << ',' << r.claimed_family << ','
        << csv_number(r.claimed_rho) << ',' << csv_field(r.claimed_graph6) << ','
        << (r.isomorphic ? "true" : "false") << ',' << csv_number(r.second_best_rho) << ','
        << (omit_timing ? 0 : r.runtime_ms) << ',' << csv_field(warnings) << ','
        << to_string(r.spec.mode) << ',' << to_string(r.verdict) << '\n';
  }
  return out.str();
}

}  // namespace specconn
