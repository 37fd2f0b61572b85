#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specconn/connectivity.hpp"
#include "specconn/graph.hpp"

namespace specconn {

/// Tolerance for comparing the best spectral radius with the claimed one.
inline constexpr double kVerdictTolerance = 1e-8;
/// Spectral radii closer than this are ties; ties go to the least canonical
/// form.
inline constexpr double kTieBand = 1e-12;

/// The class of connected graphs of order n with minimum degree delta and
/// connectivity value k, for fixed (g, r). `mode` picks the connectivity:
/// full for c kappa_{g,r}, neighbor for kappa_g (r is then 2).
struct ClassSpec {
  int n = 0;
  int delta = 0;
  int g = 0;
  int r = 2;
  int k = 0;
  CutMode mode = CutMode::full;

  bool in_hypothesis() const { return n >= k + r * (g + 1); }
};

/// Per-graph invariants computed once and shared by every class.
struct GraphSurvey {
  Graph graph;
  int min_degree = 0;
  /// Connectivity value; empty when the graph has no valid cut.
  std::optional<int> k;
  double rho = 0;
  std::string canonical;
};

/// Connectivity value of g when its minimum degree is delta, else empty.
/// Throws std::invalid_argument for disconnected input.
std::optional<int> classify(const Graph& g, int delta, int g_param, int r,
                            CutMode mode = CutMode::full);

/// Surveys every graph; `jobs` worker threads, output in input order.
std::vector<GraphSurvey> survey(std::span<const Graph> graphs, int g, int r, CutMode mode,
                                int jobs = 1);

enum class Verdict {
  /// Best graph isomorphic to the claimed one with matching rho.
  confirmed,
  refuted,
  /// No graph in the class.
  empty,
  /// Nonempty class whose claimed family cannot be built.
  coverage_anomaly,
  /// Outside n >= k + r(g+1): nothing is claimed.
  no_claim,
};

std::string to_string(Verdict v);

struct VerificationReport {
  ClassSpec spec;
  int population = 0;
  std::optional<double> best_rho;
  std::string best_graph6;
  std::string claimed_family;
  std::optional<double> claimed_rho;
  std::string claimed_graph6;
  bool isomorphic = false;
  std::optional<double> second_best_rho;
  long runtime_ms = 0;
  std::vector<std::string> warnings;
  Verdict verdict = Verdict::empty;

  /// False only for refuted or coverage_anomaly.
  bool acceptable() const {
    return verdict != Verdict::refuted && verdict != Verdict::coverage_anomaly;
  }
};

/// Verifies one class against surveyed graphs. `surveys` must have been
/// produced with the same (g, r, mode).
VerificationReport verify_class(const ClassSpec& spec, std::span<const GraphSurvey> surveys);

/// Survey then verify_class.
VerificationReport verify_theorem(const ClassSpec& spec, std::span<const Graph> graphs,
                                  int jobs = 1);

/// One report per nonempty (delta, k) cell, ordered by (delta, k). Cells
/// outside the hypothesis are skipped unless `allow_out_of_hypothesis`.
std::vector<VerificationReport> verify_all_classes(int n, int g, int r, CutMode mode,
                                                   std::span<const GraphSurvey> surveys,
                                                   bool allow_out_of_hypothesis = false);

/// JSON array of reports, one object per report (schema 1). With
/// `omit_timing`, runtime_ms is written as 0 so output is reproducible.
std::string reports_to_json(std::span<const VerificationReport> reports, bool omit_timing = false);
std::string reports_to_csv(std::span<const VerificationReport> reports, bool omit_timing = false);

}  // namespace specconn
