#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "usdkit/instances.hpp"
#include "usdkit/pure_pure.hpp"

namespace usdkit {

// Sweep targets. The *_binomial / *_gaussian split only records which weight
// family feeds the instance; "gaussian" covers the poisson and squeezed kinds.
enum class SweepTarget {
  region_map,
  filtering_delta_q,
  mixed_delta_q,
  example1_binomial,
  example1_gaussian,
  example2_binomial,
  example2_gaussian,
  verify,
};

const char* sweep_target_name(SweepTarget t);  // "RegionMap", "FilteringDeltaQ", ...
SweepTarget sweep_target_from_name(const std::string& name);  // SpecError on unknown

// Full description of one sweep. Serialized as the JSON header comment of
// every CSV so a result file reproduces itself.
struct SweepSpec {
  SweepTarget target = SweepTarget::verify;

  double p1 = 0.15;

  // region_map: overlap plane grid at fixed weights (beta1, 1 - beta1).
  double beta1 = 0.1;
  int grid = 200;

  // delta-q sweeps: fixed overlaps (and phases for the filtering target),
  // first weight swept over [sweep_start, sweep_stop] in sweep_step
  // increments, remaining weight split evenly.
  std::vector<double> overlaps;
  std::vector<double> phases;
  double sweep_start = 0.0;
  double sweep_stop = 1.0;
  double sweep_step = 1e-3;

  // photon number sweeps
  std::string dist = "poisson";  // "binomial" | "poisson" | "squeezed"
  int binomial_n = 10;
  int t_index = 0;        // single overlapped index (first family)
  double overlap_value = 0.5;
  int head_count = 4;     // matched-pair family: leading components at s_head
  double s_head = 0.5;
  double s_tail = 0.2;
  double alpha_start = 0.0;
  double alpha_stop = 3.0;
  double alpha_step = 0.01;
  double tail_bound = 1e-12;

  // verify
  std::uint64_t seed = 42;
  long count = 10000;

  std::string out;  // output path, empty = stdout
};

std::string to_json(const SweepSpec& spec);

// Overwrites only the fields present in the JSON text (the --spec file
// contract: file values win over flag values). Throws SpecError on malformed
// input or unknown keys.
void apply_json_overrides(SweepSpec& spec, const std::string& text);

struct RegionPoint {
  double s1 = 0.0;
  double s2 = 0.0;
  JointCase label = JointCase::a;
};

struct BoundaryTrace {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct RegionMapResult {
  std::vector<RegionPoint> grid;      // valid grid points, row-major
  long counts[6] = {0, 0, 0, 0, 0, 0};  // indexed by JointCase
  long skipped = 0;                   // points outside the admissible disk
  std::vector<BoundaryTrace> traces;
};

// Joint classification over a grid x grid lattice of the two overlaps for a
// rank-2 mixture at equal phases, plus the analytic boundary curves of the
// case partition. SpecError unless the target describes a rank-2 scan.
RegionMapResult run_region_map(const SweepSpec& spec, std::ostream* csv);

struct CurvePoint {
  double sweep_value = 0.0;  // swept weight or amplitude alpha
  double coherence = 0.0;    // l1 for weight sweeps, rel-entropy bits for alpha sweeps
  double delta_q = 0.0;      // q_mixed - q_pure
  double q_mixed = 0.0;
  double q_pure = 0.0;
  std::string label;         // joint case or rank-N regime
  bool skipped = false;
  std::string skip_reason;
};

// Difference curves along a weight sweep (filtering_delta_q, mixed_delta_q).
// Returned in sweep order including skipped points; CSV rows are sorted by
// coherence and skipped points become trailing comments.
std::vector<CurvePoint> run_delta_q_curve(const SweepSpec& spec, std::ostream* csv);

// Difference curves along an amplitude sweep with photon number weights
// (example1_*: one overlapped index; example2_*: matched rank-N pair).
std::vector<CurvePoint> run_gaussian_examples(const SweepSpec& spec, std::ostream* csv);

struct VerifySummary {
  long total = 0;
  long failures = 0;
  double worst_gap_filtering = 0.0;
  double worst_gap_pure_pure = 0.0;
  double worst_gap_rank_n = 0.0;
  double min_equal_fidelity_delta_q = 0.0;
  double max_equal_phase_delta_q = 0.0;   // over instances outside case (b)
  double max_counterpart_excess = 0.0;    // q_pure_counterpart - q_mixed
  bool pass = false;
};

// Randomized closed-form vs oracle agreement over all instance kinds plus
// the three difference-sign suites. Writes one JSON line per check to jsonl
// when given, a human summary to summary_out when given.
VerifySummary run_verify(const SweepSpec& spec, std::ostream* jsonl,
                         std::ostream* summary_out);

}  // namespace usdkit
