#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "usdkit/distributions.hpp"
#include "usdkit/errors.hpp"
#include "usdkit/tolerances.hpp"

using namespace usdkit;
using testutil::close;

namespace {

double sum(const std::vector<double>& w) {
  return std::accumulate(w.begin(), w.end(), 0.0);
}

double direct_binomial(int n, double p, int i) {
  double logw = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                std::lgamma(n - i + 1.0);
  logw += i * std::log(p) + (n - i) * std::log1p(-p);
  return std::exp(logw);
}

}  // namespace

TEST_CASE("binomial weights: exact support and unit sum") {
  auto d = binomial_weights(10, 1.0);
  CHECK(d.kind == PhotonDistribution::Kind::binomial);
  CHECK(d.n_max == 10);
  CHECK(d.weights.size() == 11);
  CHECK(d.tail_mass == 0.0);
  CHECK_FALSE(d.renormalized);
  CHECK(std::abs(sum(d.weights) - 1.0) <= 1e-12);
  CHECK(close(mean_index(d.weights), 1.0, 1e-12));  // n p = alpha^2

  auto big = binomial_weights(10000, 2.0);
  CHECK(std::abs(sum(big.weights) - 1.0) <= 1e-12);
  CHECK(close(mean_index(big.weights), 4.0, 1e-9));
}

TEST_CASE("binomial weights: degenerate amplitudes") {
  auto zero = binomial_weights(5, 0.0);
  CHECK(zero.weights[0] == 1.0);
  for (int i = 1; i <= 5; ++i) CHECK(zero.weights[i] == 0.0);

  auto full = binomial_weights(4, 2.0);  // alpha^2 = n exactly, p = 1
  CHECK(full.weights[4] == 1.0);
  CHECK(full.weights[0] == 0.0);

  auto half = binomial_weights(1, std::sqrt(0.5));
  CHECK(close(half.weights[0], 0.5, 1e-15));
  CHECK(close(half.weights[1], 0.5, 1e-15));
}

TEST_CASE("binomial weights match the closed form, both p regimes") {
  // p = 0.3
  auto lo = binomial_weights(20, std::sqrt(6.0));
  for (int i = 0; i <= 20; ++i) {
    double want = direct_binomial(20, 0.3, i);
    CHECK(std::abs(lo.weights[i] - want) <= 1e-12 * want + 1e-300);
  }
  // p = 0.75 exercises the reflected recurrence
  auto hi = binomial_weights(4, std::sqrt(3.0));
  for (int i = 0; i <= 4; ++i) {
    double want = direct_binomial(4, 0.75, i);
    CHECK(std::abs(hi.weights[i] - want) <= 1e-12 * want);
  }
}

TEST_CASE("binomial weights: domain errors") {
  CHECK_THROWS_AS(binomial_weights(10, 3.2), RangeError);  // alpha^2 > n
  CHECK_THROWS_AS(binomial_weights(0, 0.5), DomainError);
  CHECK_THROWS_AS(binomial_weights(10, -0.5), DomainError);
}

TEST_CASE("poisson weights: truncation, renormalization, tail bookkeeping") {
  auto d = poisson_weights(1.0);
  CHECK(d.kind == PhotonDistribution::Kind::poisson);
  CHECK(d.n_max == 14);
  CHECK(d.renormalized);
  CHECK(d.tail_mass > 0.0);
  CHECK(d.tail_mass <= 1e-12);
  CHECK(close(d.weights[0], 0.3678794411715527, 1e-15));
  // undoing the renormalization recovers exp(-1)
  CHECK(close(d.weights[0] * (1.0 - d.tail_mass), std::exp(-1.0), 1e-13));
  CHECK(std::abs(sum(d.weights) - 1.0) <= 1e-14);
  CHECK(close(mean_index(d.weights), 1.0, 1e-9));

  auto zero = poisson_weights(0.0);
  CHECK(zero.weights == std::vector<double>{1.0});
  CHECK(zero.n_max == 0);
  CHECK_FALSE(zero.renormalized);
}

TEST_CASE("poisson weights match the closed form after unrenormalizing") {
  auto d = poisson_weights(1.3);
  double lam = 1.3 * 1.3;
  for (int i = 0; i <= d.n_max; ++i) {
    double want = std::exp(-lam + i * std::log(lam) - std::lgamma(i + 1.0));
    double got = d.weights[i] * (1.0 - d.tail_mass);
    CHECK(std::abs(got - want) <= 1e-12 * want + 1e-300);
  }
}

TEST_CASE("tail bound domain and truncation cap") {
  CHECK_THROWS_AS(poisson_weights(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(poisson_weights(1.0, -1e-9), DomainError);
  CHECK_THROWS_AS(poisson_weights(1.0, 2e-6), DomainError);
  CHECK(poisson_weights(1.0, 1e-6).n_max <= 14);  // looser bound, shorter vector

  CHECK_THROWS_AS(poisson_weights(65.0), TruncationError);   // mean 4225 > cap
  CHECK_THROWS_AS(squeezed_weights(100.0), TruncationError);
  CHECK_THROWS_AS(squeezed_weights(1.0, 0.0), DomainError);
}

TEST_CASE("squeezed vacuum weights") {
  CHECK(close(squeeze_parameter(1.0), 0.881373587019543, 1e-15));

  auto d = squeezed_weights(1.0);
  CHECK(d.kind == PhotonDistribution::Kind::squeezed_vacuum);
  CHECK(d.n_max >= 34);
  CHECK(d.n_max <= 38);
  CHECK(d.tail_mass <= 1e-12);
  CHECK(std::abs(sum(d.weights) - 1.0) <= 1e-14);
  // photon number mean sinh^2 r = alpha^2, index mean is half of it
  CHECK(close(2.0 * mean_index(d.weights), 1.0, 1e-8));

  double r = squeeze_parameter(1.0);
  CHECK(close(d.weights[0] * (1.0 - d.tail_mass), 1.0 / std::cosh(r), 1e-13));

  auto zero = squeezed_weights(0.0);
  CHECK(zero.weights == std::vector<double>{1.0});
}

TEST_CASE("squeezed vacuum matches the closed form") {
  auto d = squeezed_weights(0.8);
  double r = squeeze_parameter(0.8);
  double t = std::tanh(r) * std::tanh(r);
  for (int i = 0; i <= d.n_max; ++i) {
    double logw = std::lgamma(2.0 * i + 1.0) - 2.0 * std::lgamma(i + 1.0) +
                  i * std::log(t / 4.0) - std::log(std::cosh(r));
    double want = std::exp(logw);
    double got = d.weights[i] * (1.0 - d.tail_mass);
    CHECK(std::abs(got - want) <= 1e-12 * want + 1e-300);
  }
}

TEST_CASE("truncation lengths grow with amplitude") {
  int prev = 0;
  for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
    auto d = squeezed_weights(alpha);
    CHECK(d.n_max > prev);
    CHECK(d.n_max <= MAX_TRUNCATION_INDEX);
    CHECK(d.tail_mass <= 1e-12);
    prev = d.n_max;
  }
  CHECK(squeezed_weights(3.0).n_max >= 230);
  CHECK(squeezed_weights(3.0).n_max <= 255);
}

TEST_CASE("signed amplitudes square back to the weights") {
  auto sq = squeezed_weights(1.0);
  auto amp = signed_amplitudes(sq);
  REQUIRE(amp.size() == sq.weights.size());
  CHECK(amp[0] > 0.0);
  CHECK(amp[1] < 0.0);
  CHECK(amp[2] > 0.0);
  for (std::size_t i = 0; i < amp.size(); ++i)
    CHECK(close(amp[i] * amp[i], sq.weights[i], 1e-15));

  auto po = poisson_weights(1.0);
  for (double a : signed_amplitudes(po)) CHECK(a >= 0.0);
}

TEST_CASE("large-n binomial approaches poisson in total variation") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    auto b = binomial_weights(10000, alpha);
    auto p = poisson_weights(alpha);
    double tv = total_variation(b.weights, p.weights);
    CHECK(tv > 0.0);
    CHECK(tv <= 1e-3);
  }
}

TEST_CASE("total variation pads the shorter vector") {
  CHECK(total_variation({1.0}, {1.0}) == 0.0);
  CHECK(close(total_variation({1.0}, {0.5, 0.5}), 0.5, 1e-15));
  CHECK(close(total_variation({0.2, 0.8}, {0.8, 0.2}), 0.6, 1e-15));
}

TEST_CASE("weights csv shape") {
  auto d = binomial_weights(3, 0.0);
  auto text = weights_csv(d);
  CHECK(text.rfind("index,weight\n", 0) == 0);
  CHECK(text.find("\n0,1") != std::string::npos);
  int rows = 0;
  for (char ch : text)
    if (ch == '\n') ++rows;
  CHECK(rows == 5);  // header + four indices, trailing newline
}

TEST_CASE("distribution kind names") {
  CHECK(std::string(distribution_kind_name(
            PhotonDistribution::Kind::binomial)) == "binomial");
  CHECK(std::string(distribution_kind_name(
            PhotonDistribution::Kind::poisson)) == "poisson");
  CHECK(std::string(distribution_kind_name(
            PhotonDistribution::Kind::squeezed_vacuum)) == "squeezed");
}
