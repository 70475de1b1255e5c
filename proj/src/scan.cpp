#include "usdkit/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "usdkit/coherence.hpp"
#include "usdkit/distributions.hpp"
#include "usdkit/filtering.hpp"
#include "usdkit/mixed_mixed.hpp"
#include "usdkit/oracle.hpp"
#include "usdkit/random_instances.hpp"
#include "usdkit/tolerances.hpp"

namespace usdkit {

namespace {
using nlohmann::json;

struct TargetName {
  SweepTarget target;
  const char* name;
};

constexpr TargetName TARGET_NAMES[] = {
    {SweepTarget::region_map, "RegionMap"},
    {SweepTarget::filtering_delta_q, "FilteringDeltaQ"},
    {SweepTarget::mixed_delta_q, "MixedDeltaQ"},
    {SweepTarget::example1_binomial, "Example1Binomial"},
    {SweepTarget::example1_gaussian, "Example1Gaussian"},
    {SweepTarget::example2_binomial, "Example2Binomial"},
    {SweepTarget::example2_gaussian, "Example2Gaussian"},
    {SweepTarget::verify, "Verify"},
};
}  // namespace

const char* sweep_target_name(SweepTarget t) {
  for (const auto& entry : TARGET_NAMES)
    if (entry.target == t) return entry.name;
  return "?";
}

SweepTarget sweep_target_from_name(const std::string& name) {
  for (const auto& entry : TARGET_NAMES)
    if (name == entry.name) return entry.target;
  throw SpecError("unknown sweep target: " + name);
}

std::string to_json(const SweepSpec& spec) {
  json j;
  j["target"] = sweep_target_name(spec.target);
  j["p1"] = spec.p1;
  j["beta1"] = spec.beta1;
  j["grid"] = spec.grid;
  j["overlaps"] = spec.overlaps;
  j["phases"] = spec.phases;
  j["sweep_start"] = spec.sweep_start;
  j["sweep_stop"] = spec.sweep_stop;
  j["sweep_step"] = spec.sweep_step;
  j["dist"] = spec.dist;
  j["binomial_n"] = spec.binomial_n;
  j["t_index"] = spec.t_index;
  j["overlap_value"] = spec.overlap_value;
  j["head_count"] = spec.head_count;
  j["s_head"] = spec.s_head;
  j["s_tail"] = spec.s_tail;
  j["alpha_start"] = spec.alpha_start;
  j["alpha_stop"] = spec.alpha_stop;
  j["alpha_step"] = spec.alpha_step;
  j["tail_bound"] = spec.tail_bound;
  j["seed"] = spec.seed;
  j["count"] = spec.count;
  j["out"] = spec.out;
  return j.dump();
}

void apply_json_overrides(SweepSpec& spec, const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw SpecError("sweep spec JSON must be an object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "target") spec.target = sweep_target_from_name(value.get<std::string>());
      else if (key == "p1") spec.p1 = value.get<double>();
      else if (key == "beta1") spec.beta1 = value.get<double>();
      else if (key == "grid") spec.grid = value.get<int>();
      else if (key == "overlaps") spec.overlaps = value.get<std::vector<double>>();
      else if (key == "phases") spec.phases = value.get<std::vector<double>>();
      else if (key == "sweep_start") spec.sweep_start = value.get<double>();
      else if (key == "sweep_stop") spec.sweep_stop = value.get<double>();
      else if (key == "sweep_step") spec.sweep_step = value.get<double>();
      else if (key == "dist") spec.dist = value.get<std::string>();
      else if (key == "binomial_n") spec.binomial_n = value.get<int>();
      else if (key == "t_index") spec.t_index = value.get<int>();
      else if (key == "overlap_value") spec.overlap_value = value.get<double>();
      else if (key == "head_count") spec.head_count = value.get<int>();
      else if (key == "s_head") spec.s_head = value.get<double>();
      else if (key == "s_tail") spec.s_tail = value.get<double>();
      else if (key == "alpha_start") spec.alpha_start = value.get<double>();
      else if (key == "alpha_stop") spec.alpha_stop = value.get<double>();
      else if (key == "alpha_step") spec.alpha_step = value.get<double>();
      else if (key == "tail_bound") spec.tail_bound = value.get<double>();
      else if (key == "seed") spec.seed = value.get<std::uint64_t>();
      else if (key == "count") spec.count = value.get<long>();
      else if (key == "out") spec.out = value.get<std::string>();
      else throw SpecError("unknown sweep spec key: " + key);
    }
  } catch (const json::exception& e) {
    throw SpecError(std::string("sweep spec: ") + e.what());
  }
}

namespace {

void write_spec_header(std::ostream& out, const SweepSpec& spec) {
  out << "# " << to_json(spec) << "\n";
}

std::vector<double> sweep_values(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start))
    throw SpecError("sweep needs stop >= start and step > 0");
  std::vector<double> values;
  for (long k = 0;; ++k) {
    double v = start + k * step;
    if (v > stop + 0.5 * step) break;
    values.push_back(std::min(v, stop));
  }
  return values;
}

Priors priors_from_p1(double p1) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw SpecError("p1 outside [0, 1]");
  return Priors{p1, 1.0 - p1};
}

void write_curve_csv(std::ostream& out, const SweepSpec& spec,
                     const std::vector<CurvePoint>& points,
                     const char* sweep_column) {
  write_spec_header(out, spec);
  out << sweep_column << ",coherence,delta_q,q_mixed,q_pure,label\n";
  std::vector<const CurvePoint*> rows;
  rows.reserve(points.size());
  for (const auto& p : points)
    if (!p.skipped) rows.push_back(&p);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CurvePoint* a, const CurvePoint* b) {
                     if (a->coherence != b->coherence)
                       return a->coherence < b->coherence;
                     return a->sweep_value < b->sweep_value;
                   });
  auto prev = out.precision(17);
  for (const auto* p : rows)
    out << p->sweep_value << "," << p->coherence << "," << p->delta_q << ","
        << p->q_mixed << "," << p->q_pure << "," << p->label << "\n";
  for (const auto& p : points)
    if (p.skipped)
      out << "# skipped " << sweep_column << "=" << p.sweep_value
          << " reason=" << p.skip_reason << "\n";
  out.precision(prev);
}

}  // namespace

RegionMapResult run_region_map(const SweepSpec& spec, std::ostream* csv) {
  if (spec.target != SweepTarget::region_map)
    throw SpecError("run_region_map needs the RegionMap target");
  if (spec.grid < 2) throw SpecError("region map grid must be at least 2");
  if (!(spec.beta1 >= 0.0 && spec.beta1 <= 1.0))
    throw SpecError("beta1 outside [0, 1]");

  const Priors priors = priors_from_p1(spec.p1);
  const double b1 = spec.beta1;
  const double b2 = 1.0 - b1;
  const std::vector<double> beta = {b1, b2};
  const std::vector<double> phases = {0.0, 0.0};

  RegionMapResult result;
  result.grid.reserve(static_cast<std::size_t>(spec.grid) * spec.grid);

  for (int i = 0; i < spec.grid; ++i) {
    for (int j = 0; j < spec.grid; ++j) {
      double s1 = static_cast<double>(i) / (spec.grid - 1);
      double s2 = static_cast<double>(j) / (spec.grid - 1);
      if (s1 * s1 + s2 * s2 >= 1.0 - EPS_SUM) {
        ++result.skipped;
        continue;
      }
      FilteringInstance filter{priors, beta, {s1, s2}};
      PurePairInstance pure{priors, beta, {s1, s2}, phases};
      JointCase label = classify_joint(filter, pure);
      result.grid.push_back(RegionPoint{s1, s2, label});
      ++result.counts[static_cast<int>(label)];
    }
  }

  // Analytic case boundaries, each solved for s2 at a dense set of s1.
  const double ratio = priors.p1 > 0.0
                           ? priors.p2 / priors.p1
                           : std::numeric_limits<double>::infinity();
  const double threshold_sq = priors.p2 > 0.0 ? priors.p1 / priors.p2 : 1.0;
  const int trace_points = 512;
  auto admissible = [](double s1, double s2) {
    return s2 >= 0.0 && s2 <= 1.0 && s1 * s1 + s2 * s2 < 1.0;
  };

  BoundaryTrace stationary_low{"q1star_eq_parallel_norm", {}};
  BoundaryTrace stationary_high{"q1star_eq_one", {}};
  BoundaryTrace overlap_threshold{"s_star_eq_threshold", {}};
  BoundaryTrace disk_rim{"parallel_norm_eq_one", {}};

  for (int k = 0; k <= trace_points; ++k) {
    double s1 = static_cast<double>(k) / trace_points;

    disk_rim.points.emplace_back(s1, std::sqrt(std::max(0.0, 1.0 - s1 * s1)));

    if (std::isfinite(ratio) && b2 > 0.0) {
      // ratio * (b1 s1^2 + b2 s2^2) = 1
      double u = (1.0 / ratio - b1 * s1 * s1) / b2;
      if (u >= 0.0 && admissible(s1, std::sqrt(u)))
        stationary_high.points.emplace_back(s1, std::sqrt(u));

      // ratio * (b1 s1^2 + b2 u) = (s1^2 + u)^2, quadratic in u = s2^2
      double b = 2.0 * s1 * s1 - ratio * b2;
      double c0 = s1 * s1 * s1 * s1 - ratio * b1 * s1 * s1;
      double disc = b * b - 4.0 * c0;
      if (disc >= 0.0) {
        for (double sign : {-1.0, 1.0}) {
          double root = (-b + sign * std::sqrt(disc)) / 2.0;
          if (root >= 0.0 && admissible(s1, std::sqrt(root)))
            stationary_low.points.emplace_back(s1, std::sqrt(root));
        }
      }
    }

    if (b2 > 0.0) {
      // sqrt(b1) s1 + sqrt(b2) s2 = sqrt(p1/p2)
      double s2 = (std::sqrt(threshold_sq) - std::sqrt(b1) * s1) / std::sqrt(b2);
      if (admissible(s1, s2)) overlap_threshold.points.emplace_back(s1, s2);
    }
  }

  result.traces = {stationary_low, stationary_high, overlap_threshold, disk_rim};

  if (csv) {
    write_spec_header(*csv, spec);
    *csv << "section,s11,s12,label\n";
    auto prev = csv->precision(17);
    for (const auto& p : result.grid)
      *csv << "grid," << p.s1 << "," << p.s2 << "," << joint_case_name(p.label)
           << "\n";
    for (const auto& trace : result.traces)
      for (const auto& [s1, s2] : trace.points)
        *csv << "boundary:" << trace.name << "," << s1 << "," << s2 << ",\n";
    csv->precision(prev);
    *csv << "# skipped=" << result.skipped << "\n";
  }
  return result;
}

std::vector<CurvePoint> run_delta_q_curve(const SweepSpec& spec, std::ostream* csv) {
  const bool filtering_target = spec.target == SweepTarget::filtering_delta_q;
  if (!filtering_target && spec.target != SweepTarget::mixed_delta_q)
    throw SpecError("run_delta_q_curve needs a delta-q target");
  const std::size_t n = spec.overlaps.size();
  if (n < 2) throw SpecError("delta-q sweep needs at least two components");

  std::vector<double> phases = spec.phases;
  if (filtering_target) {
    if (phases.empty()) phases.assign(n, 0.0);
    if (phases.size() != n)
      throw SpecError("phases length must match overlaps length");
  }

  const Priors priors = priors_from_p1(spec.p1);
  std::vector<CurvePoint> points;

  for (double w1 : sweep_values(spec.sweep_start, spec.sweep_stop, spec.sweep_step)) {
    CurvePoint point;
    point.sweep_value = w1;
    if (w1 < 0.0 || w1 > 1.0) {
      point.skipped = true;
      point.skip_reason = "weight outside [0, 1]";
      points.push_back(point);
      continue;
    }
    std::vector<double> weights(n, (1.0 - w1) / static_cast<double>(n - 1));
    weights[0] = w1;

    if (filtering_target) {
      FilteringInstance filter{priors, weights, spec.overlaps};
      auto violations = check(filter);
      if (!violations.empty()) {
        point.skipped = true;
        point.skip_reason = violations.front().message;
        points.push_back(point);
        continue;
      }
      PurePairInstance pure{priors, weights, spec.overlaps, phases};
      auto mixed_result = q_min_filtering(filter);
      auto pure_result = q_min_pure_pure(priors, std::abs(s_star(pure)));
      point.q_mixed = mixed_result.q_min;
      point.q_pure = pure_result.q_min;
      point.delta_q = delta_q(mixed_result, pure_result);
      point.label = joint_case_name(classify_joint(filter, pure));
    } else {
      RankNPairInstance pair{priors, weights, weights, spec.overlaps};
      auto violations = check(pair);
      if (!violations.empty()) {
        point.skipped = true;
        point.skip_reason = violations.front().message;
        points.push_back(point);
        continue;
      }
      auto mixed_result = q_min_mixed_mixed(pair);
      auto pure_result = q_min_pure_counterpart(pair);
      point.q_mixed = mixed_result.q_min;
      point.q_pure = pure_result.q_min;
      point.delta_q = mixed_result.q_min - pure_result.q_min;
      point.label = rank_n_regime_name(rank_n_regime(pair));
    }
    point.coherence = l1_coherence(weights);
    points.push_back(point);
  }

  if (csv) write_curve_csv(*csv, spec, points, "sweep_value");
  return points;
}

namespace {

PhotonDistribution::Kind dist_kind_from_string(const std::string& dist) {
  if (dist == "binomial") return PhotonDistribution::Kind::binomial;
  if (dist == "poisson") return PhotonDistribution::Kind::poisson;
  if (dist == "squeezed") return PhotonDistribution::Kind::squeezed_vacuum;
  throw SpecError("unknown distribution kind: " + dist);
}

}  // namespace

std::vector<CurvePoint> run_gaussian_examples(const SweepSpec& spec,
                                              std::ostream* csv) {
  const bool single_overlap = spec.target == SweepTarget::example1_binomial ||
                              spec.target == SweepTarget::example1_gaussian;
  const bool pair_family = spec.target == SweepTarget::example2_binomial ||
                           spec.target == SweepTarget::example2_gaussian;
  if (!single_overlap && !pair_family)
    throw SpecError("run_gaussian_examples needs an example target");

  const PhotonDistribution::Kind kind = dist_kind_from_string(spec.dist);
  const bool binomial_target = spec.target == SweepTarget::example1_binomial ||
                               spec.target == SweepTarget::example2_binomial;
  if (binomial_target != (kind == PhotonDistribution::Kind::binomial))
    throw SpecError("distribution kind does not match the sweep target");
  if (single_overlap && spec.t_index < 0)
    throw SpecError("t_index must be nonnegative");

  const Priors priors = priors_from_p1(spec.p1);
  std::vector<CurvePoint> points;

  for (double alpha : sweep_values(spec.alpha_start, spec.alpha_stop, spec.alpha_step)) {
    CurvePoint point;
    point.sweep_value = alpha;

    PhotonDistribution dist;
    try {
      switch (kind) {
        case PhotonDistribution::Kind::binomial:
          dist = binomial_weights(spec.binomial_n, alpha);
          break;
        case PhotonDistribution::Kind::poisson:
          dist = poisson_weights(alpha, spec.tail_bound);
          break;
        case PhotonDistribution::Kind::squeezed_vacuum:
          dist = squeezed_weights(alpha, spec.tail_bound);
          break;
      }
    } catch (const RangeError& e) {
      point.skipped = true;
      point.skip_reason = e.what();
      points.push_back(point);
      continue;
    } catch (const TruncationError& e) {
      point.skipped = true;
      point.skip_reason = e.what();
      points.push_back(point);
      continue;
    }

    if (single_overlap) {
      const auto t = static_cast<std::size_t>(spec.t_index);
      std::vector<double> weights = dist.weights;
      if (weights.size() <= t) weights.resize(t + 1, 0.0);
      std::vector<double> overlaps(weights.size(), 0.0);
      overlaps[t] = spec.overlap_value;
      FilteringInstance filter{priors, weights, overlaps};
      auto violations = check(filter);
      if (!violations.empty()) {
        point.skipped = true;
        point.skip_reason = violations.front().message;
        points.push_back(point);
        continue;
      }
      PurePairInstance pure{priors, weights, overlaps,
                            std::vector<double>(weights.size(), 0.0)};
      auto mixed_result = q_min_filtering(filter);
      auto pure_result = q_min_pure_pure(priors, std::abs(s_star(pure)));
      point.q_mixed = mixed_result.q_min;
      point.q_pure = pure_result.q_min;
      point.delta_q = delta_q(mixed_result, pure_result);
      point.label = joint_case_name(classify_joint(filter, pure));
      point.coherence = relative_entropy_coherence(weights);
    } else {
      std::vector<double> overlaps(dist.weights.size(), spec.s_tail);
      for (std::size_t i = 0;
           i < overlaps.size() && i < static_cast<std::size_t>(spec.head_count); ++i)
        overlaps[i] = spec.s_head;
      RankNPairInstance pair{priors, dist.weights, dist.weights, overlaps};
      auto violations = check(pair);
      if (!violations.empty()) {
        point.skipped = true;
        point.skip_reason = violations.front().message;
        points.push_back(point);
        continue;
      }
      auto mixed_result = q_min_mixed_mixed(pair);
      auto pure_result = q_min_pure_counterpart(pair);
      point.q_mixed = mixed_result.q_min;
      point.q_pure = pure_result.q_min;
      point.delta_q = mixed_result.q_min - pure_result.q_min;
      point.label = rank_n_regime_name(rank_n_regime(pair));
      point.coherence = relative_entropy_coherence(dist.weights);
    }
    points.push_back(point);
  }

  if (csv) write_curve_csv(*csv, spec, points, "alpha");
  return points;
}

VerifySummary run_verify(const SweepSpec& spec, std::ostream* jsonl,
                         std::ostream* summary_out) {
  if (spec.target != SweepTarget::verify)
    throw SpecError("run_verify needs the Verify target");
  if (spec.count < 1) throw SpecError("verify count must be positive");

  std::mt19937_64 rng(spec.seed);
  VerifySummary summary;
  const long suite_count = std::max(100L, spec.count / 10);

  auto record = [&](const VerifyReport& report, double& worst) {
    ++summary.total;
    if (!report.pass) ++summary.failures;
    worst = std::max(worst, report.gap);
    if (jsonl) *jsonl << to_json_line(report) << "\n";
  };

  for (long k = 0; k < spec.count; ++k)
    record(verify_instance(random_filtering_instance(rng)),
           summary.worst_gap_filtering);
  for (long k = 0; k < spec.count; ++k)
    record(verify_instance(random_pure_pair_instance(rng)),
           summary.worst_gap_pure_pure);
  for (long k = 0; k < spec.count; ++k)
    record(verify_instance(random_rank_n_pair_instance(rng)),
           summary.worst_gap_rank_n);

  auto suite_line = [&](const char* name, long count, const char* stat,
                        double value, bool pass) {
    ++summary.total;
    if (!pass) ++summary.failures;
    if (jsonl) {
      std::ostringstream out;
      out.precision(17);
      out << "{\"kind\":\"suite\",\"name\":\"" << name << "\",\"count\":" << count
          << ",\"" << stat << "\":" << value << ",\"pass\":"
          << (pass ? "true" : "false") << "}";
      *jsonl << out.str() << "\n";
    }
  };

  // Equal fidelity of both partners: the superposition can only help.
  summary.min_equal_fidelity_delta_q = std::numeric_limits<double>::infinity();
  for (long k = 0; k < suite_count; ++k) {
    PurePairInstance pure = random_equal_fidelity_instance(rng);
    FilteringInstance filter = filtering_view(pure);
    double dq = delta_q(q_min_filtering(filter),
                        q_min_pure_pure(pure.priors, std::abs(s_star(pure))));
    summary.min_equal_fidelity_delta_q =
        std::min(summary.min_equal_fidelity_delta_q, dq);
  }
  suite_line("equal-fidelity", suite_count, "min_delta_q",
             summary.min_equal_fidelity_delta_q,
             summary.min_equal_fidelity_delta_q >= -EPS_MATCH);

  // Equal phases: outside joint case (b) the mixture is never harder.
  summary.max_equal_phase_delta_q = -std::numeric_limits<double>::infinity();
  long outside_b = 0;
  for (long k = 0; k < suite_count; ++k) {
    PurePairInstance pure = random_equal_phase_instance(rng);
    FilteringInstance filter = filtering_view(pure);
    if (classify_joint(filter, pure) == JointCase::b) continue;
    ++outside_b;
    double dq = delta_q(q_min_filtering(filter),
                        q_min_pure_pure(pure.priors, std::abs(s_star(pure))));
    summary.max_equal_phase_delta_q =
        std::max(summary.max_equal_phase_delta_q, dq);
  }
  suite_line("equal-phase", outside_b, "max_delta_q",
             summary.max_equal_phase_delta_q,
             summary.max_equal_phase_delta_q <= EPS_MATCH);

  // Pure counterpart never loses to the matched mixed pair, and the
  // small-overlap split regime has a closed difference.
  summary.max_counterpart_excess = -std::numeric_limits<double>::infinity();
  bool identity_pass = true;
  for (long k = 0; k < suite_count; ++k) {
    RankNPairInstance pair = random_rank_n_pair_instance(rng);
    double q_mixed = q_min_mixed_mixed(pair).q_min;
    double q_pure = q_min_pure_counterpart(pair).q_min;
    summary.max_counterpart_excess =
        std::max(summary.max_counterpart_excess, q_pure - q_mixed);
    if (rank_n_regime(pair) == RankNRegime::mixed_small_s_star &&
        std::abs((q_mixed - q_pure) - neglected_pair_gap_sum(pair)) > EPS_MATCH)
      identity_pass = false;
  }
  suite_line("counterpart-bound", suite_count, "max_excess",
             summary.max_counterpart_excess,
             summary.max_counterpart_excess <= EPS_MATCH && identity_pass);

  summary.pass = summary.failures == 0;

  if (summary_out) {
    auto prev = summary_out->precision(6);
    *summary_out << "verify: total=" << summary.total
                 << " failures=" << summary.failures << "\n"
                 << "  filtering: n=" << spec.count
                 << " worst_gap=" << summary.worst_gap_filtering << "\n"
                 << "  pure-pure: n=" << spec.count
                 << " worst_gap=" << summary.worst_gap_pure_pure << "\n"
                 << "  rank-n: n=" << spec.count
                 << " worst_gap=" << summary.worst_gap_rank_n << "\n"
                 << "  equal-fidelity suite: n=" << suite_count
                 << " min_delta_q=" << summary.min_equal_fidelity_delta_q << "\n"
                 << "  equal-phase suite: n=" << outside_b
                 << " max_delta_q=" << summary.max_equal_phase_delta_q << "\n"
                 << "  counterpart suite: n=" << suite_count
                 << " max_excess=" << summary.max_counterpart_excess << "\n"
                 << (summary.pass ? "PASS" : "FAIL") << "\n";
    summary_out->precision(prev);
  }
  return summary;
}

}  // namespace usdkit
