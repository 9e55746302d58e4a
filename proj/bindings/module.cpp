#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fpoisson/ensembles.hpp>
#include <fpoisson/freemoments.hpp>
#include <fpoisson/graphcover.hpp>
#include <fpoisson/harness.hpp>
#include <fpoisson/partitions.hpp>
#include <fpoisson/spectra.hpp>

namespace py = pybind11;
using namespace fpoisson;

namespace {

using BlockList = std::vector<std::vector<int>>;

SetPartition partition_from_blocks(const BlockList& blocks) {
    int p = 0;
    for (const auto& block : blocks) p += static_cast<int>(block.size());
    return SetPartition::from_blocks(p, blocks);
}

EnsembleSpec make_spec(const std::string& kind, const std::string& field,
                       const std::vector<double>& radii,
                       const std::vector<double>& probabilities) {
    EnsembleSpec spec;
    spec.kind = ensemble_kind_from_string(kind);
    spec.field = field_from_string(field);
    spec.radii = radii;
    spec.probabilities = probabilities;
    spec.validate();
    return spec;
}

ExperimentConfig make_config(const std::string& ensemble, const std::string& field,
                             const std::vector<double>& radii,
                             const std::vector<double>& probabilities, double lambda,
                             const std::vector<int>& n_grid, int p_max, int trials,
                             std::uint64_t seed) {
    ExperimentConfig config;
    config.ensemble = make_spec(ensemble, field, radii, probabilities);
    config.lambda = lambda;
    config.n_grid = n_grid;
    config.p_max = p_max;
    config.trials = trials;
    config.seed = seed;
    config.validate();
    return config;
}

py::dict contribution_dict(const PartitionContribution& out) {
    py::dict d;
    d["partition"] = out.partition.blocks();
    d["estimate"] = out.estimate;
    d["std_error"] = out.std_error;
    d["imag_estimate"] = out.imag_estimate;
    d["imag_std_error"] = out.imag_std_error;
    d["crossing"] = out.crossing;
    d["trials"] = out.trials;
    return d;
}

py::object big_to_int(const BigInt& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

Eigen::MatrixXcd rows_from_vectors(const std::vector<Eigen::VectorXcd>& vectors) {
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(vectors.size()), vectors.front().size());
    for (std::size_t j = 0; j < vectors.size(); ++j)
        out.row(static_cast<Eigen::Index>(j)) = vectors[j].transpose();
    return out;
}

std::vector<Eigen::VectorXcd> vectors_from_rows(const Eigen::MatrixXcd& rows) {
    std::vector<Eigen::VectorXcd> out;
    out.reserve(static_cast<std::size_t>(rows.rows()));
    for (Eigen::Index j = 0; j < rows.rows(); ++j) out.push_back(rows.row(j).transpose());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Noncrossing-partition moment predictions and sample covariance "
              "simulation for general random vector ensembles";

    py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ArityError>(m, "ArityError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<ExperimentError>(m, "ExperimentError", PyExc_RuntimeError);
    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_RuntimeError);

    // partitions
    m.def("enumerate_set_partitions", [](int p) {
        std::vector<BlockList> out;
        for (const auto& pi : enumerate_set_partitions(p)) out.push_back(pi.blocks());
        return out;
    }, py::arg("p"));
    m.def("enumerate_noncrossing", [](int p) {
        std::vector<BlockList> out;
        for (const auto& pi : enumerate_noncrossing(p)) out.push_back(pi.blocks());
        return out;
    }, py::arg("p"));
    m.def("is_noncrossing",
          [](const BlockList& blocks) { return is_noncrossing(partition_from_blocks(blocks)); },
          py::arg("blocks"));
    m.def("has_interval_block",
          [](const BlockList& blocks) { return has_interval_block(partition_from_blocks(blocks)); },
          py::arg("blocks"));
    m.def("kernel", [](const std::vector<int>& word) {
        int universe = 1;
        for (int v : word) universe = std::max(universe, v);
        return kernel(IndexWord(universe, word)).blocks();
    }, py::arg("word"));
    m.def("bell_number", [](int p) { return big_to_int(bell_number(p)); }, py::arg("p"));
    m.def("catalan_number", [](int p) { return big_to_int(catalan_number(p)); }, py::arg("p"));

    // freemoments
    m.def("free_moment",
          [](int p, const std::vector<double>& a) { return free_moment(p, CumulantSequence{a}); },
          py::arg("p"), py::arg("cumulants"));
    m.def("classical_moment",
          [](int p, const std::vector<double>& a) {
              return classical_moment(p, CumulantSequence{a});
          },
          py::arg("p"), py::arg("cumulants"));
    m.def("free_moments_up_to",
          [](int p_max, const std::vector<double>& a) {
              return free_moments_up_to(p_max, CumulantSequence{a}).values;
          },
          py::arg("p_max"), py::arg("cumulants"));
    m.def("free_cumulants_from_moments",
          [](const std::vector<double>& moments) {
              return free_cumulants_from_moments(MomentSequence{moments}).values;
          },
          py::arg("moments"));

    // graphcover
    m.def("sorted_residuals",
          [](int r, const std::vector<std::pair<int, int>>& edges) {
              return sorted_residuals(TwoCoverSystem::from_multigraph(r, edges));
          },
          py::arg("r"), py::arg("edges"));
    auto report_dict = [](const LemmaReport& report) {
        py::dict d;
        d["holds"] = report.holds;
        d["lhs"] = report.lhs;
        d["rhs"] = report.rhs;
        return d;
    };
    m.def("check_lemma21",
          [report_dict](int r, const std::vector<std::pair<int, int>>& edges, double t) {
              return report_dict(check_lemma21(TwoCoverSystem::from_multigraph(r, edges), t));
          },
          py::arg("r"), py::arg("edges"), py::arg("t"));
    m.def("check_lemma22",
          [report_dict](int r, const std::vector<std::pair<int, int>>& edges) {
              return report_dict(check_lemma22(TwoCoverSystem::from_multigraph(r, edges)));
          },
          py::arg("r"), py::arg("edges"));
    m.def("check_lemma23",
          [report_dict](int r, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<int>& lambda, int k0) {
              return report_dict(
                  check_lemma23(TwoCoverSystem::from_multigraph(r, edges), lambda, k0));
          },
          py::arg("r"), py::arg("edges"), py::arg("lambda_set"), py::arg("k0"));
    m.def("check_lemma25",
          [report_dict](int r, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<int>& lambda) {
              return report_dict(check_lemma25(TwoCoverSystem::from_multigraph(r, edges), lambda));
          },
          py::arg("r"), py::arg("edges"), py::arg("lambda_set"));
    m.def("build_matching_lemma24", &build_matching_lemma24, py::arg("m"), py::arg("lambda1"),
          py::arg("lambda2"));
    m.def("random_two_cover",
          [](int r, int count, std::uint64_t seed) {
              return random_two_cover(r, count, seed).edges();
          },
          py::arg("r"), py::arg("m"), py::arg("seed"));
    m.def("run_lemma_suite",
          [](std::uint64_t seed, int random_count, bool exhaustive) {
              return to_json_string(run_lemma_suite(seed, random_count, exhaustive));
          },
          py::arg("seed"), py::arg("random_count") = 1000, py::arg("exhaustive") = true);

    // ensembles
    m.def("sample_vectors",
          [](const std::string& ensemble, int n, int N, std::uint64_t seed,
             const std::string& field, const std::vector<double>& radii,
             const std::vector<double>& probabilities) {
              return rows_from_vectors(
                  sample_vectors(make_spec(ensemble, field, radii, probabilities), n, N, seed));
          },
          py::arg("ensemble"), py::arg("n"), py::arg("N"), py::arg("seed"),
          py::arg("field") = "complex", py::arg("radii") = std::vector<double>{},
          py::arg("probs") = std::vector<double>{});
    m.def("predicted_cumulants",
          [](const std::string& ensemble, double lambda, int k_max, const std::string& field,
             const std::vector<double>& radii, const std::vector<double>& probabilities) {
              return predicted_cumulants(make_spec(ensemble, field, radii, probabilities), lambda,
                                         k_max)
                  .values;
          },
          py::arg("ensemble"), py::arg("lambda_"), py::arg("k_max"),
          py::arg("field") = "complex", py::arg("radii") = std::vector<double>{},
          py::arg("probs") = std::vector<double>{});
    m.def("estimate_l4_constant",
          [](const std::string& ensemble, int n, int n_directions, int samples,
             std::uint64_t seed, const std::string& field, const std::vector<double>& radii,
             const std::vector<double>& probabilities) {
              return estimate_l4_constant(make_spec(ensemble, field, radii, probabilities), n,
                                          n_directions, samples, seed);
          },
          py::arg("ensemble"), py::arg("n"), py::arg("n_directions"), py::arg("samples"),
          py::arg("seed"), py::arg("field") = "complex",
          py::arg("radii") = std::vector<double>{}, py::arg("probs") = std::vector<double>{});
    m.def("estimate_norm_moments",
          [](const std::string& ensemble, int n, int k_max, int samples, std::uint64_t seed,
             const std::string& field, const std::vector<double>& radii,
             const std::vector<double>& probabilities) {
              return estimate_norm_moments(make_spec(ensemble, field, radii, probabilities), n,
                                           k_max, samples, seed);
          },
          py::arg("ensemble"), py::arg("n"), py::arg("k_max"), py::arg("samples"),
          py::arg("seed"), py::arg("field") = "complex",
          py::arg("radii") = std::vector<double>{}, py::arg("probs") = std::vector<double>{});
    m.def("estimate_cumulant_deviation",
          [](const std::string& ensemble, int n, int N, int k, int samples, std::uint64_t seed,
             const std::string& field, const std::vector<double>& radii,
             const std::vector<double>& probabilities) {
              return estimate_cumulant_deviation(make_spec(ensemble, field, radii, probabilities),
                                                 n, N, k, samples, seed);
          },
          py::arg("ensemble"), py::arg("n"), py::arg("N"), py::arg("k"), py::arg("samples"),
          py::arg("seed"), py::arg("field") = "complex",
          py::arg("radii") = std::vector<double>{}, py::arg("probs") = std::vector<double>{});

    // spectra
    m.def("assemble",
          [](const Eigen::MatrixXcd& rows) { return assemble(vectors_from_rows(rows)).matrix(); },
          py::arg("vectors"), "Sum of f f* over the rows of `vectors`");
    m.def("spectrum",
          [](const Eigen::MatrixXcd& S) { return spectrum(CovarianceMatrix::from_matrix(S)); },
          py::arg("S"));
    m.def("trace_moments",
          [](const Eigen::MatrixXcd& S, int p_max) {
              return trace_moments(CovarianceMatrix::from_matrix(S), p_max);
          },
          py::arg("S"), py::arg("p_max"));
    m.def("trace_moments_oracle",
          [](const Eigen::MatrixXcd& S, int p_max) {
              return trace_moments_oracle(CovarianceMatrix::from_matrix(S), p_max);
          },
          py::arg("S"), py::arg("p_max"));
    m.def("esd_histogram",
          [](const Eigen::MatrixXcd& S, int bins, double lo, double hi) {
              return esd_histogram(CovarianceMatrix::from_matrix(S), bins, lo, hi);
          },
          py::arg("S"), py::arg("bins"), py::arg("lo"), py::arg("hi"));
    m.def("mc_moments",
          [](const std::string& ensemble, int n, int N, int p_max, int trials,
             std::uint64_t seed, const std::string& field, const std::vector<double>& radii,
             const std::vector<double>& probabilities) {
              py::list out;
              for (const auto& est : mc_moments(make_spec(ensemble, field, radii, probabilities),
                                                n, N, p_max, trials, seed)) {
                  py::dict d;
                  d["p"] = est.p;
                  d["mean"] = est.mean;
                  d["std_error"] = est.std_error;
                  d["trials"] = est.trials;
                  out.append(d);
              }
              return out;
          },
          py::arg("ensemble"), py::arg("n"), py::arg("N"), py::arg("p_max"), py::arg("trials"),
          py::arg("seed"), py::arg("field") = "complex",
          py::arg("radii") = std::vector<double>{}, py::arg("probs") = std::vector<double>{});
    m.def("partition_contribution",
          [](const std::string& ensemble, const BlockList& blocks, int n, int N, int trials,
             std::uint64_t seed, const std::string& field, const std::vector<double>& radii,
             const std::vector<double>& probabilities) {
              return contribution_dict(
                  partition_contribution(make_spec(ensemble, field, radii, probabilities),
                                         partition_from_blocks(blocks), n, N, trials, seed));
          },
          py::arg("ensemble"), py::arg("blocks"), py::arg("n"), py::arg("N"), py::arg("trials"),
          py::arg("seed"), py::arg("field") = "complex",
          py::arg("radii") = std::vector<double>{}, py::arg("probs") = std::vector<double>{});
    m.def("set_max_threads", &set_max_threads, py::arg("threads"));

    // harness
    m.def("binomial_moment", &binomial_moment, py::arg("n"), py::arg("prob"), py::arg("p"));
    m.def("predict_table",
          [](int p_max, const std::vector<double>& cumulants) {
              return to_json_string(predict_table(p_max, CumulantSequence{cumulants}));
          },
          py::arg("p_max"), py::arg("cumulants"));
    m.def("run_convergence",
          [](const std::string& ensemble, double lambda, const std::vector<int>& n_grid,
             int p_max, int trials, std::uint64_t seed, const std::string& field,
             const std::vector<double>& radii, const std::vector<double>& probabilities) {
              return to_json_string(run_convergence(make_config(
                  ensemble, field, radii, probabilities, lambda, n_grid, p_max, trials, seed)));
          },
          py::arg("ensemble"), py::arg("lambda_"), py::arg("n_grid"), py::arg("p_max"),
          py::arg("trials"), py::arg("seed"), py::arg("field") = "complex",
          py::arg("radii") = std::vector<double>{}, py::arg("probs") = std::vector<double>{});
    m.def("run_counterexample",
          [](const std::vector<int>& n_grid, int p_max, int trials, std::uint64_t seed) {
              return to_json_string(run_counterexample(make_config(
                  "canonical-basis", "complex", {}, {}, 1.0, n_grid, p_max, trials, seed)));
          },
          py::arg("n_grid"), py::arg("p_max"), py::arg("trials"), py::arg("seed"));
    m.def("run_crossing_decay",
          [](const BlockList& blocks, const std::string& ensemble, double lambda,
             const std::vector<int>& n_grid, int trials, std::uint64_t seed,
             const std::string& field, const std::vector<double>& radii,
             const std::vector<double>& probabilities) {
              const auto config = make_config(ensemble, field, radii, probabilities, lambda,
                                              n_grid, /*p_max=*/1, trials, seed);
              return to_json_string(run_crossing_decay(config, partition_from_blocks(blocks)));
          },
          py::arg("blocks"), py::arg("ensemble"), py::arg("lambda_"), py::arg("n_grid"),
          py::arg("trials"), py::arg("seed"), py::arg("field") = "complex",
          py::arg("radii") = std::vector<double>{}, py::arg("probs") = std::vector<double>{});

    m.attr("__version__") = kVersion;
}
