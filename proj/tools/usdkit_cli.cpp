#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "usdkit/scan.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usdkit::SpecError("cannot read spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int dispatch(usdkit::SweepSpec& spec) {
  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!spec.out.empty()) {
    file_out.open(spec.out);
    if (!file_out) throw usdkit::SpecError("cannot open output file: " + spec.out);
    out = &file_out;
  }

  switch (spec.target) {
    case usdkit::SweepTarget::region_map:
      usdkit::run_region_map(spec, out);
      return 0;
    case usdkit::SweepTarget::filtering_delta_q:
    case usdkit::SweepTarget::mixed_delta_q:
      usdkit::run_delta_q_curve(spec, out);
      return 0;
    case usdkit::SweepTarget::verify: {
      // JSON lines go to --out when given; the human summary always to stdout.
      std::ostream* jsonl = spec.out.empty() ? nullptr : out;
      auto summary = usdkit::run_verify(spec, jsonl, &std::cout);
      return summary.pass ? 0 : 1;
    }
    default:
      usdkit::run_gaussian_examples(spec, out);
      return 0;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Optimal unambiguous discrimination failure probabilities for\n"
      "pure-vs-mixed, pure-vs-pure and matched rank-N state pairs,\n"
      "with coherence sweeps and a brute-force verification mode."};
  app.require_subcommand(1);

  usdkit::SweepSpec spec;
  std::string spec_file;
  std::string delta_target = "filtering";
  int example = 1;

  app.add_option("--spec", spec_file,
                 "JSON sweep spec file; its values override flags");
  app.add_option("--out", spec.out, "output path (default: stdout)");
  app.add_option("--seed", spec.seed, "random seed for verify");
  app.add_option("--tail-bound", spec.tail_bound,
                 "truncation tail bound for poisson/squeezed weights");

  auto* region = app.add_subcommand(
      "region-map", "joint case labels over the two-overlap plane");
  region->add_option("--p1", spec.p1, "prior of the pure hypothesis");
  region->add_option("--beta1", spec.beta1, "weight of the first component");
  region->add_option("--grid", spec.grid, "lattice points per axis");
  region->fallthrough();

  auto* delta = app.add_subcommand(
      "delta-q", "difference curve along a weight sweep");
  delta->add_option("--target", delta_target, "filtering | mixed");
  delta->add_option("--p1", spec.p1, "prior of the first hypothesis");
  delta->add_option("--overlaps", spec.overlaps, "fixed overlap values")
      ->delimiter(',');
  delta->add_option("--phases", spec.phases, "phases (filtering target only)")
      ->delimiter(',');
  delta->add_option("--sweep-start", spec.sweep_start, "first swept weight");
  delta->add_option("--sweep-stop", spec.sweep_stop, "last swept weight");
  delta->add_option("--sweep-step", spec.sweep_step, "weight increment");
  delta->fallthrough();

  auto* gaussian = app.add_subcommand(
      "gaussian", "difference curve along a photon amplitude sweep");
  gaussian->add_option("--example", example,
                       "1 = single overlapped index, 2 = matched rank-N pair");
  gaussian->add_option("--dist", spec.dist, "binomial | poisson | squeezed");
  gaussian->add_option("--p1", spec.p1, "prior of the first hypothesis");
  gaussian->add_option("--n", spec.binomial_n, "binomial photon cap");
  gaussian->add_option("--t", spec.t_index, "overlapped index (example 1)");
  gaussian->add_option("--s", spec.overlap_value, "overlap value (example 1)");
  gaussian->add_option("--s-head", spec.s_head, "leading overlap (example 2)");
  gaussian->add_option("--s-tail", spec.s_tail, "trailing overlap (example 2)");
  gaussian->add_option("--head-count", spec.head_count,
                       "components at s-head (example 2)");
  gaussian->add_option("--alpha-start", spec.alpha_start, "first amplitude");
  gaussian->add_option("--alpha-stop", spec.alpha_stop, "last amplitude");
  gaussian->add_option("--alpha-step", spec.alpha_step, "amplitude increment");
  gaussian->fallthrough();

  auto* verify = app.add_subcommand(
      "verify", "randomized closed-form vs brute-force agreement");
  verify->add_option("--count", spec.count, "instances per kind");
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (region->parsed()) {
      spec.target = usdkit::SweepTarget::region_map;
    } else if (delta->parsed()) {
      if (delta_target == "filtering")
        spec.target = usdkit::SweepTarget::filtering_delta_q;
      else if (delta_target == "mixed")
        spec.target = usdkit::SweepTarget::mixed_delta_q;
      else
        throw usdkit::SpecError("delta-q target must be filtering or mixed");
    } else if (gaussian->parsed()) {
      if (example != 1 && example != 2)
        throw usdkit::SpecError("--example must be 1 or 2");
      const bool binomial = spec.dist == "binomial";
      if (example == 1)
        spec.target = binomial ? usdkit::SweepTarget::example1_binomial
                               : usdkit::SweepTarget::example1_gaussian;
      else
        spec.target = binomial ? usdkit::SweepTarget::example2_binomial
                               : usdkit::SweepTarget::example2_gaussian;
    } else {
      spec.target = usdkit::SweepTarget::verify;
    }

    if (!spec_file.empty())
      usdkit::apply_json_overrides(spec, read_file(spec_file));

    return dispatch(spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
