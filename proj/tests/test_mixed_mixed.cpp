#include <cmath>
#include <random>
#include <variant>

#include "doctest.h"
#include "test_util.hpp"
#include "usdkit/coherence.hpp"
#include "usdkit/errors.hpp"
#include "usdkit/mixed_mixed.hpp"
#include "usdkit/oracle.hpp"
#include "usdkit/random_instances.hpp"
#include "usdkit/results.hpp"

using namespace usdkit;
using testutil::close;
using testutil::rankn;

namespace {

const MixedBranch& mbranch(const DiscriminationResult& r) {
  return std::get<MixedBranch>(r.branch);
}

}  // namespace

TEST_CASE("split decomposition: one identified, one neglected component") {
  auto inst = rankn(0.15, {0.5, 0.5}, {0.5, 0.5}, {0.2, 0.5});
  auto r = q_min_mixed_mixed(inst);
  const auto& b = mbranch(r);
  REQUIRE(b.pairs.size() == 2);
  CHECK(b.pairs[0].kind == PairKind::identified);
  CHECK(close(b.pairs[0].contribution, 0.0714142842854285, 1e-14));
  CHECK(b.pairs[1].kind == PairKind::neglected);
  CHECK(close(b.pairs[1].contribution, 0.18125, 1e-15));
  CHECK(b.identified_count == 1);
  CHECK(close(r.q_min, 0.2526642842854285, 1e-14));
  CHECK(branch_label(r) == "m=1");

  auto c = q_min_pure_counterpart(inst);
  CHECK(close(c.q_min, 0.24994999499899972, 1e-14));
  CHECK(std::get<PureBranch>(c.branch).label == PureCase::case_i_prime);
  CHECK(close(std::get<PureBranch>(c.branch).abs_s_star, 0.35, 1e-15));

  CHECK(rank_n_regime(inst) == RankNRegime::mixed_small_s_star);

  double gap = neglected_pair_gap_sum(inst);
  CHECK(close(gap, 0.002714289286428752, 1e-14));
  CHECK(close(r.q_min - c.q_min, gap, 1e-14));
}

TEST_CASE("equal-prior matched weights identify everything") {
  auto inst = rankn(0.5, {0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5});
  auto r = q_min_mixed_mixed(inst);
  CHECK(close(r.q_min, 0.5, 1e-15));
  CHECK(mbranch(r).identified_count == 2);
  CHECK(rank_n_regime(inst) == RankNRegime::all_identified);
  // the pure counterpart coincides, the difference vanishes
  CHECK(close(q_min_pure_counterpart(inst).q_min, r.q_min, 1e-15));
  CHECK(neglected_pair_gap_sum(inst) == 0.0);
}

TEST_CASE("all components neglected") {
  auto inst = rankn(0.15, {0.5, 0.5}, {0.5, 0.5}, {0.5, 0.6});
  CHECK(rank_n_regime(inst) == RankNRegime::all_neglected);
  auto r = q_min_mixed_mixed(inst);
  CHECK(close(r.q_min, 0.40925, 1e-14));
  CHECK(mbranch(r).identified_count == 0);
  CHECK(q_min_pure_counterpart(inst).q_min <= r.q_min + 1e-12);
}

TEST_CASE("split regime with large counterpart overlap") {
  auto inst = rankn(0.15, {0.5, 0.5}, {0.5, 0.5}, {0.1, 0.8});
  CHECK(rank_n_regime(inst) == RankNRegime::mixed_large_s_star);
  CHECK(mbranch(q_min_mixed_mixed(inst)).identified_count == 1);
}

TEST_CASE("zero overlaps give zero failure probability") {
  auto r = q_min_mixed_mixed(rankn(0.3, {0.5, 0.5}, {0.5, 0.5}, {0.0, 0.0}));
  CHECK(r.q_min == 0.0);
  CHECK(mbranch(r).identified_count == 2);
}

TEST_CASE("a component with both weights zero contributes nothing") {
  auto r = q_min_mixed_mixed(rankn(0.5, {0.0, 1.0}, {0.0, 1.0}, {0.9, 0.2}));
  const auto& b = mbranch(r);
  CHECK(b.pairs[0].contribution == 0.0);
  CHECK(b.pairs[0].kind == PairKind::identified);
  CHECK(close(r.q_min, 0.2, 1e-15));
}

TEST_CASE("zero denominator with live numerator throws") {
  // dominance-violating on purpose: the solver refuses rather than divides
  auto inst = rankn(0.4, {0.5, 0.5}, {0.0, 1.0}, {0.5, 0.5});
  CHECK_THROWS_AS(q_min_mixed_mixed(inst), ZeroDenominatorError);
}

TEST_CASE("p1 = 0 keeps zero-weight second components harmless") {
  auto inst = rankn(0.0, {0.5, 0.5}, {0.0, 1.0}, {0.5, 0.5});
  CHECK(is_valid(inst));
  auto r = q_min_mixed_mixed(inst);
  CHECK(close(r.q_min, 0.25, 1e-15));
}

TEST_CASE("counterpart never exceeds the mixed value") {
  std::mt19937_64 rng(707);
  for (int k = 0; k < 500; ++k) {
    auto inst = random_rank_n_pair_instance(rng);
    CHECK(q_min_pure_counterpart(inst).q_min <=
          q_min_mixed_mixed(inst).q_min + 1e-12);
  }
}

TEST_CASE("gap sum equals the difference in the small-overlap split regime") {
  std::mt19937_64 rng(808);
  int split_seen = 0;
  for (int k = 0; k < 600; ++k) {
    auto inst = random_rank_n_pair_instance(rng);
    if (rank_n_regime(inst) != RankNRegime::mixed_small_s_star) continue;
    ++split_seen;
    double diff = q_min_mixed_mixed(inst).q_min -
                  q_min_pure_counterpart(inst).q_min;
    CHECK(close(diff, neglected_pair_gap_sum(inst), 1e-12));
  }
  CHECK(split_seen > 0);
}

TEST_CASE("counterpart overlap is the rank-N fidelity") {
  std::mt19937_64 rng(909);
  for (int k = 0; k < 200; ++k) {
    auto inst = random_rank_n_pair_instance(rng);
    auto c = q_min_pure_counterpart(inst);
    double f = fidelity_rank_n_pair(inst);
    if (f > 1.0) f = 1.0;
    CHECK(std::get<PureBranch>(c.branch).abs_s_star == f);
  }
}

TEST_CASE("per-component oracle agreement") {
  std::mt19937_64 rng(111);
  for (int k = 0; k < 300; ++k) {
    auto inst = random_rank_n_pair_instance(rng);
    CHECK(verify_instance(inst).pass);
  }
  CHECK(verify_instance(rankn(0.15, {0.5, 0.5}, {0.5, 0.5}, {0.2, 0.5})).pass);
}
