#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace usdkit {

// Optimal failure probability branches for the filtering problem.
//   case_i:   interior optimum q1 = q1_star
//   case_ii:  optimum pinned at the lower interval end (parallel norm)
//   case_iii: optimum pinned at q1 = 1
enum class FilteringCase { case_i, case_ii, case_iii };

// Pure-pure branches: case_i_prime is the interior (POVM) regime
// |s*| <= sqrt(p1/p2), case_ii_prime the projective regime.
enum class PureCase { case_i_prime, case_ii_prime };

// Per-component branch of the rank-N pair decomposition. An identified
// component contributes 2 sqrt(p1 p2 a_i b_i) s_ii', a neglected one
// p1 a_i + p2 b_i s_ii'^2.
enum class PairKind { identified, neglected };

struct PairBranch {
  int index = 0;
  PairKind kind = PairKind::identified;
  double contribution = 0.0;
};

const char* filtering_case_name(FilteringCase c);   // "CaseI", "CaseII", "CaseIII"
const char* pure_case_name(PureCase c);             // "CaseI'", "CaseII'"
const char* pair_kind_name(PairKind k);             // "Identified", "Neglected"

struct FilteringBranch {
  FilteringCase label = FilteringCase::case_i;
  double q1_star = 0.0;           // +inf recorded when p1 = 0
  double parallel_norm_sq = 0.0;  // sum of squared overlaps, lower interval end
};

struct PureBranch {
  PureCase label = PureCase::case_i_prime;
  double abs_s_star = 0.0;
};

struct MixedBranch {
  std::vector<PairBranch> pairs;
  int identified_count = 0;  // the split index m in the sorted-threshold picture
};

// Optional numerical cross check attached to closed-form results: the
// minimizer location, the objective there, and the gap to the closed form.
struct Certificate {
  double argmin = 0.0;
  double value = 0.0;
  double gap = 0.0;
  std::string note;
};

struct DiscriminationResult {
  double q_min = 0.0;
  std::variant<FilteringBranch, PureBranch, MixedBranch> branch;
  std::optional<Certificate> certificate;
};

// Short branch label for CSV rows: "CaseI".."CaseIII", "CaseI'", "CaseII'",
// or "m=<identified count>" for mixed results.
std::string branch_label(const DiscriminationResult& result);

}  // namespace usdkit
