#include "usdkit/oracle.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "usdkit/filtering.hpp"
#include "usdkit/mixed_mixed.hpp"
#include "usdkit/pure_pure.hpp"
#include "usdkit/tolerances.hpp"

namespace usdkit {

namespace {

constexpr int GRID_INTERVALS = 10000;
constexpr double REFINE_WIDTH = 1e-12;

// Minimum of w1 * q + w2 * c / q over [lo, hi] by coarse grid scan plus
// golden-section refinement of the bracketing subinterval. Deliberately
// ignorant of the closed-form case analysis. c = 0 makes the q = 0 endpoint
// admissible with value 0.
MinimizeResult grid_golden(double w1, double w2, double c, double lo, double hi) {
  auto f = [&](double q) {
    if (q <= 0.0) return c == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return w1 * q + w2 * c / q;
  };

  double best_q = lo;
  double best_val = f(lo);
  const double step = (hi - lo) / GRID_INTERVALS;
  int best_index = 0;
  for (int j = 1; j <= GRID_INTERVALS; ++j) {
    double q = j == GRID_INTERVALS ? hi : lo + j * step;
    double val = f(q);
    if (val < best_val) {
      best_val = val;
      best_q = q;
      best_index = j;
    }
  }

  double a = best_index > 0 ? lo + (best_index - 1) * step : lo;
  double b = best_index < GRID_INTERVALS ? lo + (best_index + 1) * step : hi;
  if (b > hi) b = hi;

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > REFINE_WIDTH) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  double mid = 0.5 * (a + b);
  double fmid = f(mid);
  if (fmid < best_val) {
    best_val = fmid;
    best_q = mid;
  }
  return MinimizeResult{best_q, best_val};
}

}  // namespace

MinimizeResult minimize_filtering(const FilteringInstance& inst) {
  const double c = weighted_overlap_sq(inst);
  const double lo = parallel_norm_sq(inst);
  return grid_golden(inst.priors.p1, inst.priors.p2, c, lo, 1.0);
}

MinimizeResult minimize_two_pure(double w1, double w2, double s) {
  return grid_golden(w1, w2, s * s, s * s, 1.0);
}

namespace {
VerifyReport make_report(const char* kind, double closed, double oracle) {
  VerifyReport report;
  report.kind = kind;
  report.closed_form = closed;
  report.oracle_value = oracle;
  report.gap = std::abs(closed - oracle);
  report.pass = report.gap <= EPS_MATCH;
  return report;
}
}  // namespace

VerifyReport verify_instance(const FilteringInstance& inst) {
  return make_report("filtering", q_min_filtering(inst).q_min,
                     minimize_filtering(inst).value);
}

VerifyReport verify_instance(const PurePairInstance& inst) {
  const double overlap = std::abs(s_star(inst));
  return make_report("pure-pure", q_min_pure_pure(inst.priors, overlap).q_min,
                     minimize_two_pure(inst.priors.p1, inst.priors.p2, overlap).value);
}

VerifyReport verify_instance(const RankNPairInstance& inst) {
  double oracle = 0.0;
  for (std::size_t i = 0; i < inst.alpha.size(); ++i)
    oracle += minimize_two_pure(inst.priors.p1 * inst.alpha[i],
                                inst.priors.p2 * inst.beta[i],
                                inst.diag_overlaps[i])
                  .value;
  return make_report("rank-n", q_min_mixed_mixed(inst).q_min, oracle);
}

std::string to_json_line(const VerifyReport& report) {
  std::ostringstream out;
  out.precision(17);
  out << "{\"kind\":\"" << report.kind << "\",\"closed_form\":" << report.closed_form
      << ",\"oracle_value\":" << report.oracle_value << ",\"gap\":" << report.gap
      << ",\"pass\":" << (report.pass ? "true" : "false") << "}";
  return out.str();
}

}  // namespace usdkit
