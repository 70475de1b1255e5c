#include "usdkit/results.hpp"

namespace usdkit {

const char* filtering_case_name(FilteringCase c) {
  switch (c) {
    case FilteringCase::case_i: return "CaseI";
    case FilteringCase::case_ii: return "CaseII";
    case FilteringCase::case_iii: return "CaseIII";
  }
  return "?";
}

const char* pure_case_name(PureCase c) {
  switch (c) {
    case PureCase::case_i_prime: return "CaseI'";
    case PureCase::case_ii_prime: return "CaseII'";
  }
  return "?";
}

const char* pair_kind_name(PairKind k) {
  return k == PairKind::identified ? "Identified" : "Neglected";
}

std::string branch_label(const DiscriminationResult& result) {
  if (const auto* f = std::get_if<FilteringBranch>(&result.branch))
    return filtering_case_name(f->label);
  if (const auto* p = std::get_if<PureBranch>(&result.branch))
    return pure_case_name(p->label);
  const auto& m = std::get<MixedBranch>(result.branch);
  return "m=" + std::to_string(m.identified_count);
}

}  // namespace usdkit
