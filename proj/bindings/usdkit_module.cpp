#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <variant>

#include "usdkit/coherence.hpp"
#include "usdkit/distributions.hpp"
#include "usdkit/errors.hpp"
#include "usdkit/filtering.hpp"
#include "usdkit/instances.hpp"
#include "usdkit/json_io.hpp"
#include "usdkit/mixed_mixed.hpp"
#include "usdkit/oracle.hpp"
#include "usdkit/pure_pure.hpp"
#include "usdkit/scan.hpp"
#include "usdkit/tolerances.hpp"

namespace py = pybind11;
using namespace usdkit;

namespace {

py::dict result_to_dict(const DiscriminationResult& r) {
  py::dict d;
  d["q_min"] = r.q_min;
  d["label"] = branch_label(r);
  if (const auto* f = std::get_if<FilteringBranch>(&r.branch)) {
    d["q1_star"] = f->q1_star;
    d["parallel_norm_sq"] = f->parallel_norm_sq;
  } else if (const auto* p = std::get_if<PureBranch>(&r.branch)) {
    d["abs_s_star"] = p->abs_s_star;
  } else if (const auto* m = std::get_if<MixedBranch>(&r.branch)) {
    d["identified_count"] = m->identified_count;
    py::list pairs;
    for (const auto& pair : m->pairs) {
      py::dict pd;
      pd["index"] = pair.index;
      pd["kind"] = pair_kind_name(pair.kind);
      pd["contribution"] = pair.contribution;
      pairs.append(pd);
    }
    d["pairs"] = pairs;
  }
  if (r.certificate) {
    py::dict c;
    c["argmin"] = r.certificate->argmin;
    c["value"] = r.certificate->value;
    c["gap"] = r.certificate->gap;
    c["note"] = r.certificate->note;
    d["certificate"] = c;
  } else {
    d["certificate"] = py::none();
  }
  return d;
}

py::dict report_to_dict(const VerifyReport& r) {
  py::dict d;
  d["kind"] = r.kind;
  d["closed_form"] = r.closed_form;
  d["oracle_value"] = r.oracle_value;
  d["gap"] = r.gap;
  d["pass"] = r.pass;
  return d;
}

py::list violations_to_list(const std::vector<Violation>& vs) {
  py::list out;
  for (const auto& v : vs)
    out.append(py::make_tuple(violation_kind_name(v.kind), v.message));
  return out;
}

std::string sweep_csv(const std::string& spec_json) {
  SweepSpec spec;
  apply_json_overrides(spec, spec_json);
  std::ostringstream out;
  switch (spec.target) {
    case SweepTarget::region_map:
      run_region_map(spec, &out);
      break;
    case SweepTarget::filtering_delta_q:
    case SweepTarget::mixed_delta_q:
      run_delta_q_curve(spec, &out);
      break;
    case SweepTarget::example1_binomial:
    case SweepTarget::example1_gaussian:
    case SweepTarget::example2_binomial:
    case SweepTarget::example2_gaussian:
      run_gaussian_examples(spec, &out);
      break;
    case SweepTarget::verify:
      throw SpecError("the Verify target reports through run_verify");
  }
  return out.str();
}

py::dict verify_json(const std::string& spec_json) {
  SweepSpec spec;
  apply_json_overrides(spec, spec_json);
  if (spec.target != SweepTarget::verify)
    throw SpecError("verify_json needs the Verify target");
  auto s = run_verify(spec, nullptr, nullptr);
  py::dict d;
  d["total"] = s.total;
  d["failures"] = s.failures;
  d["worst_gap_filtering"] = s.worst_gap_filtering;
  d["worst_gap_pure_pure"] = s.worst_gap_pure_pure;
  d["worst_gap_rank_n"] = s.worst_gap_rank_n;
  d["min_equal_fidelity_delta_q"] = s.min_equal_fidelity_delta_q;
  d["max_equal_phase_delta_q"] = s.max_equal_phase_delta_q;
  d["max_counterpart_excess"] = s.max_counterpart_excess;
  d["pass"] = s.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_usdkit, m) {
  m.doc() = "unambiguous discrimination failure probabilities: closed forms, "
            "brute-force checks, coherence measures and photon number sweeps";

  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<ZeroPriorError>(m, "ZeroPriorError");
  py::register_exception<DomainError>(m, "DomainError");
  py::register_exception<MismatchError>(m, "MismatchError");
  py::register_exception<NormalizationError>(m, "NormalizationError");
  py::register_exception<RangeError>(m, "RangeError");
  py::register_exception<TruncationError>(m, "TruncationError");
  py::register_exception<ZeroDenominatorError>(m, "ZeroDenominatorError");
  py::register_exception<SpecError>(m, "SpecError");

  m.attr("EPS_SUM") = EPS_SUM;
  m.attr("EPS_MATCH") = EPS_MATCH;
  m.attr("EPS_TIE") = EPS_TIE;
  m.attr("MAX_TRUNCATION_INDEX") = MAX_TRUNCATION_INDEX;

  py::class_<Priors>(m, "Priors")
      .def(py::init([](double p1, double p2) { return Priors{p1, p2}; }),
           py::arg("p1"), py::arg("p2"))
      .def_readonly("p1", &Priors::p1)
      .def_readonly("p2", &Priors::p2);

  py::class_<FilteringInstance>(m, "FilteringInstance")
      .def(py::init([](double p1, std::vector<double> beta,
                       std::vector<double> overlaps) {
             return FilteringInstance{Priors{p1, 1.0 - p1}, std::move(beta),
                                      std::move(overlaps)};
           }),
           py::arg("p1"), py::arg("beta"), py::arg("overlaps"))
      .def_readonly("priors", &FilteringInstance::priors)
      .def_readonly("beta", &FilteringInstance::beta)
      .def_readonly("overlaps", &FilteringInstance::overlaps)
      .def("__repr__",
           [](const FilteringInstance& inst) { return to_json(inst); });

  py::class_<PurePairInstance>(m, "PurePairInstance")
      .def(py::init([](double p1, std::vector<double> beta,
                       std::vector<double> overlaps,
                       std::vector<double> phases) {
             if (phases.empty()) phases.assign(beta.size(), 0.0);
             return PurePairInstance{Priors{p1, 1.0 - p1}, std::move(beta),
                                     std::move(overlaps), std::move(phases)};
           }),
           py::arg("p1"), py::arg("beta"), py::arg("overlaps"),
           py::arg("phases") = std::vector<double>{})
      .def_readonly("priors", &PurePairInstance::priors)
      .def_readonly("beta", &PurePairInstance::beta)
      .def_readonly("overlaps", &PurePairInstance::overlaps)
      .def_readonly("phases", &PurePairInstance::phases)
      .def("__repr__",
           [](const PurePairInstance& inst) { return to_json(inst); });

  py::class_<RankNPairInstance>(m, "RankNPairInstance")
      .def(py::init([](double p1, std::vector<double> alpha,
                       std::vector<double> beta,
                       std::vector<double> diag_overlaps) {
             return RankNPairInstance{Priors{p1, 1.0 - p1}, std::move(alpha),
                                      std::move(beta),
                                      std::move(diag_overlaps)};
           }),
           py::arg("p1"), py::arg("alpha"), py::arg("beta"),
           py::arg("diag_overlaps"))
      .def_readonly("priors", &RankNPairInstance::priors)
      .def_readonly("alpha", &RankNPairInstance::alpha)
      .def_readonly("beta", &RankNPairInstance::beta)
      .def_readonly("diag_overlaps", &RankNPairInstance::diag_overlaps)
      .def("__repr__",
           [](const RankNPairInstance& inst) { return to_json(inst); });

  // validation
  m.def("check", [](const FilteringInstance& i) { return violations_to_list(check(i)); });
  m.def("check", [](const PurePairInstance& i) { return violations_to_list(check(i)); });
  m.def("check", [](const RankNPairInstance& i) { return violations_to_list(check(i)); });
  m.def("is_valid", py::overload_cast<const FilteringInstance&>(&is_valid));
  m.def("is_valid", py::overload_cast<const PurePairInstance&>(&is_valid));
  m.def("is_valid", py::overload_cast<const RankNPairInstance&>(&is_valid));
  m.def("validate", [](const FilteringInstance& i) { return validate(i); });
  m.def("validate", [](const PurePairInstance& i) { return validate(i); });
  m.def("validate", [](const RankNPairInstance& i) { return validate(i); });
  m.def("filtering_view", &filtering_view);

  // filtering closed form
  m.def("weighted_overlap_sq", &weighted_overlap_sq);
  m.def("parallel_norm_sq", &parallel_norm_sq);
  m.def("q1_star", &q1_star);
  m.def("objective", &objective, py::arg("inst"), py::arg("q1"));
  m.def("fidelity_bound", &fidelity_bound);
  m.def("q_min_filtering",
        [](const FilteringInstance& i) { return result_to_dict(q_min_filtering(i)); });

  // two pure states
  m.def("s_star", &s_star);
  m.def("q_min_pure_pure",
        [](const Priors& priors, double abs_s_star) {
          return result_to_dict(q_min_pure_pure(priors, abs_s_star));
        },
        py::arg("priors"), py::arg("abs_s_star"));
  m.def("q_min_pure_pure",
        [](double p1, double abs_s_star) {
          return result_to_dict(q_min_pure_pure(Priors{p1, 1.0 - p1}, abs_s_star));
        },
        py::arg("p1"), py::arg("abs_s_star"));
  m.def("classify_joint",
        [](const FilteringInstance& f, const PurePairInstance& p) {
          return std::string(joint_case_name(classify_joint(f, p)));
        });
  m.def("equal_fidelity_residual", &equal_fidelity_residual);
  m.def("delta_q", [](const PurePairInstance& p) {
    auto filter = filtering_view(p);
    auto fr = q_min_filtering(filter);
    auto pr = q_min_pure_pure(p.priors, std::abs(s_star(p)));
    py::dict d;
    d["delta_q"] = delta_q(fr, pr);
    d["q_mixed"] = fr.q_min;
    d["q_pure"] = pr.q_min;
    d["label"] = joint_case_name(classify_joint(filter, p));
    return d;
  });

  // rank-N pairs
  m.def("q_min_mixed_mixed",
        [](const RankNPairInstance& i) { return result_to_dict(q_min_mixed_mixed(i)); });
  m.def("q_min_pure_counterpart",
        [](const RankNPairInstance& i) { return result_to_dict(q_min_pure_counterpart(i)); });
  m.def("rank_n_regime", [](const RankNPairInstance& i) {
    return std::string(rank_n_regime_name(rank_n_regime(i)));
  });
  m.def("neglected_pair_gap_sum", &neglected_pair_gap_sum);

  // coherence and fidelities
  m.def("l1_coherence", &l1_coherence);
  m.def("relative_entropy_coherence", &relative_entropy_coherence);
  m.def("fidelity_pure_mixed", &fidelity_pure_mixed);
  m.def("fidelity_pure_pure", &fidelity_pure_pure);
  m.def("fidelity_rank_n_pair", &fidelity_rank_n_pair);

  // photon number weights
  py::class_<PhotonDistribution>(m, "PhotonDistribution")
      .def_property_readonly("kind",
                             [](const PhotonDistribution& d) {
                               return std::string(distribution_kind_name(d.kind));
                             })
      .def_readonly("alpha", &PhotonDistribution::alpha)
      .def_readonly("binomial_n", &PhotonDistribution::binomial_n)
      .def_readonly("weights", &PhotonDistribution::weights)
      .def_readonly("n_max", &PhotonDistribution::n_max)
      .def_readonly("tail_mass", &PhotonDistribution::tail_mass)
      .def_readonly("renormalized", &PhotonDistribution::renormalized);

  m.def("binomial_weights", &binomial_weights, py::arg("n"), py::arg("alpha"));
  m.def("poisson_weights", &poisson_weights, py::arg("alpha"),
        py::arg("tail_bound") = 1e-12);
  m.def("squeezed_weights", &squeezed_weights, py::arg("alpha"),
        py::arg("tail_bound") = 1e-12);
  m.def("squeeze_parameter", &squeeze_parameter);
  m.def("mean_index", &mean_index);
  m.def("signed_amplitudes", &signed_amplitudes);
  m.def("weights_csv", &weights_csv);
  m.def("total_variation", &total_variation);

  // brute-force checks
  m.def("minimize_filtering", [](const FilteringInstance& i) {
    auto r = minimize_filtering(i);
    return py::make_tuple(r.argmin, r.value);
  });
  m.def("minimize_two_pure", [](double w1, double w2, double s) {
    auto r = minimize_two_pure(w1, w2, s);
    return py::make_tuple(r.argmin, r.value);
  });
  m.def("verify_instance", [](const FilteringInstance& i) {
    return report_to_dict(verify_instance(i));
  });
  m.def("verify_instance", [](const PurePairInstance& i) {
    return report_to_dict(verify_instance(i));
  });
  m.def("verify_instance", [](const RankNPairInstance& i) {
    return report_to_dict(verify_instance(i));
  });

  // instance json
  m.def("to_json", py::overload_cast<const FilteringInstance&>(&to_json));
  m.def("to_json", py::overload_cast<const PurePairInstance&>(&to_json));
  m.def("to_json", py::overload_cast<const RankNPairInstance&>(&to_json));
  m.def("parse_instance", [](const std::string& text) -> py::object {
    return std::visit([](auto inst) { return py::cast(std::move(inst)); },
                      parse_instance(text));
  });

  // sweeps driven by a spec json object (same contract as the CLI --spec file)
  m.def("sweep_csv", &sweep_csv, py::arg("spec_json"),
        "run the sweep described by a spec JSON object, return its CSV text");
  m.def("verify_json", &verify_json, py::arg("spec_json"),
        "run the randomized verification suite, return its summary as a dict");
}
