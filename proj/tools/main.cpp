// Command-line harness: predict tables, convergence/counterexample runs,
// crossing-decay diagnostics, the graph-lemma suite and ensemble hypothesis
// reports. Exit codes: 0 all checks within tolerance, 1 tolerance breach or
// suite violation, 2 configuration error.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <fpoisson/freemoments.hpp>
#include <fpoisson/harness.hpp>
#include <fpoisson/rng.hpp>
#include <fpoisson/spectra.hpp>

namespace {

using namespace fpoisson;

struct CommonFlags {
    std::string ensemble = "unit-sphere";
    std::string field = "complex";
    std::vector<double> radii;
    std::vector<double> probabilities;
    double lambda = 1.0;
    std::vector<int> n_grid{128, 256, 512};
    int p_max = 5;
    int trials = 200;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
    int threads = 0;

    EnsembleSpec spec() const {
        EnsembleSpec s;
        s.kind = ensemble_kind_from_string(ensemble);
        s.field = field_from_string(field);
        if (s.kind == EnsembleKind::RadialMixture) {
            if (radii.empty())
                throw ConfigError("radial-mixture needs --radii and --probs");
            s.radii = radii;
            s.probabilities = probabilities;
        }
        s.validate();
        return s;
    }

    ExperimentConfig experiment() const {
        ExperimentConfig config;
        config.ensemble = spec();
        config.lambda = lambda;
        config.n_grid = n_grid;
        config.p_max = p_max;
        config.trials = trials;
        config.seed = seed;
        config.output_dir = out;
        config.format = format;
        config.validate();
        return config;
    }
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--ensemble", flags.ensemble,
                    "unit-sphere | canonical-basis | gaussian | radial-mixture");
    cmd->add_option("--field", flags.field, "complex | real");
    cmd->add_option("--radii", flags.radii, "radial-mixture radii")->delimiter(',');
    cmd->add_option("--probs", flags.probabilities, "radial-mixture probabilities")
        ->delimiter(',');
    cmd->add_option("--lambda", flags.lambda, "aspect ratio lim n/N");
    cmd->add_option("--n-grid", flags.n_grid, "ascending dimensions")->delimiter(',');
    cmd->add_option("--p-max", flags.p_max, "largest moment order");
    cmd->add_option("--trials", flags.trials, "Monte Carlo trials per grid point");
    cmd->add_option("--seed", flags.seed, "master seed");
    cmd->add_option("--out", flags.out, "directory for report files");
    cmd->add_option("--format", flags.format, "csv | json");
    cmd->add_option("--threads", flags.threads, "trial-level threads (0 = auto)");
    cmd->set_config("--config", "", "flat key=value config file; flags override");
}

void emit(const CommonFlags& flags, const std::string& name, const std::string& csv,
          const std::string& json_text) {
    const std::string& body = flags.format == "json" ? json_text : csv;
    std::cout << body;
    if (!flags.out.empty()) {
        const std::string ext = flags.format == "json" ? ".json" : ".csv";
        const auto path = write_report_file(flags.out, name + ext, body);
        std::cerr << "wrote " << path << '\n';
    }
}

int cmd_predict(const CommonFlags& flags, const std::vector<double>& cumulants) {
    CumulantSequence a;
    if (!cumulants.empty()) {
        a.values = cumulants;
        if (static_cast<int>(cumulants.size()) < flags.p_max)
            throw ConfigError("--cumulants needs at least p-max entries");
    } else {
        a = predicted_cumulants(flags.spec(), flags.lambda, flags.p_max);
    }
    const auto rows = predict_table(flags.p_max, a);
    emit(flags, "predict", to_csv(rows), to_json_string(rows));
    return 0;
}

int cmd_simulate(const CommonFlags& flags) {
    const auto report = run_convergence(flags.experiment());
    emit(flags, "convergence", to_csv(report), to_json_string(report));
    std::cerr << (report.within_tolerance ? "within tolerance" : "TOLERANCE BREACH") << '\n';
    return report.within_tolerance ? 0 : 1;
}

int cmd_counterexample(const CommonFlags& flags) {
    const auto report = run_counterexample(flags.experiment());
    emit(flags, "counterexample", to_csv(report), to_json_string(report));
    std::cerr << (report.within_tolerance ? "within tolerance of the finite-n oracle"
                                          : "TOLERANCE BREACH")
              << '\n';
    return report.within_tolerance ? 0 : 1;
}

int cmd_crossing(const CommonFlags& flags, const std::string& partition_text) {
    const auto parsed = nlohmann::json::parse(partition_text);
    std::vector<std::vector<int>> blocks;
    int p = 0;
    for (const auto& block : parsed) {
        std::vector<int> elements;
        for (const auto& e : block) {
            elements.push_back(e.get<int>());
            ++p;
        }
        blocks.push_back(std::move(elements));
    }
    const auto partition = SetPartition::from_blocks(p, blocks);
    const auto report = run_crossing_decay(flags.experiment(), partition);
    emit(flags, "crossing", to_csv(report), to_json_string(report));
    std::cerr << "fitted slope " << report.slope << " +- " << report.slope_std_error << '\n';
    return report.within_tolerance ? 0 : 1;
}

int cmd_lemmas(const CommonFlags& flags, int random_count, bool exhaustive) {
    const auto summary = run_lemma_suite(flags.seed, random_count, exhaustive);
    const auto body = to_json_string(summary);
    std::cout << body;
    if (!flags.out.empty())
        std::cerr << "wrote " << write_report_file(flags.out, "lemmas.json", body) << '\n';
    return summary.all_hold ? 0 : 1;
}

int cmd_hypotheses(const CommonFlags& flags, int k_max, int samples) {
    std::vector<HypothesisReport> reports;
    for (std::size_t i = 0; i < flags.n_grid.size(); ++i) {
        const int n = flags.n_grid[i];
        const int N = static_cast<int>(std::llround(n / flags.lambda));
        reports.push_back(hypothesis_report(flags.spec(), n, N, k_max, samples,
                                            derive_seed(flags.seed, 0xa1b2, i)));
    }
    const auto body = to_json_string(reports);
    std::cout << body;
    if (!flags.out.empty())
        std::cerr << "wrote " << write_report_file(flags.out, "hypotheses.json", body) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"limiting spectral moments of sample covariance matrices: exact "
                 "noncrossing-partition predictions and Monte Carlo verification"};
    app.require_subcommand(1);

    CommonFlags predict_flags, simulate_flags, counter_flags, crossing_flags, lemma_flags,
        hypo_flags;
    std::vector<double> explicit_cumulants;
    std::string partition_text = "[[1,3],[2,4]]";
    int random_count = 10000;
    bool exhaustive = true;
    int k_max = 5;
    int samples = 2000;

    auto* predict = app.add_subcommand("predict", "free vs all-partition moment table");
    add_common_flags(predict, predict_flags);
    predict->add_option("--cumulants", explicit_cumulants,
                        "explicit a_1,a_2,... (overrides the ensemble)")
        ->delimiter(',');

    auto* simulate = app.add_subcommand("simulate", "estimate moments across the n-grid");
    add_common_flags(simulate, simulate_flags);

    auto* counter = app.add_subcommand("counterexample",
                                       "basis-vector ensemble vs Bell-number growth");
    counter_flags.ensemble = "canonical-basis";
    counter_flags.p_max = 4;
    add_common_flags(counter, counter_flags);

    auto* crossing = app.add_subcommand("crossing", "decay of one crossing kernel partition");
    add_common_flags(crossing, crossing_flags);
    crossing->add_option("--partition", partition_text, "blocks as JSON, e.g. [[1,3],[2,4]]");

    auto* lemmas = app.add_subcommand("lemmas", "two-cover graph lemma suite");
    add_common_flags(lemmas, lemma_flags);
    lemmas->add_option("--random-count", random_count, "random systems to draw");
    lemmas->add_flag("--exhaustive,!--no-exhaustive", exhaustive,
                     "run the exhaustive r<=4, m<=6 sweep");

    auto* hypotheses = app.add_subcommand("hypotheses", "ensemble hypothesis estimates");
    add_common_flags(hypotheses, hypo_flags);
    hypotheses->add_option("--k-max", k_max, "largest cumulant order to check");
    hypotheses->add_option("--samples", samples, "samples per estimator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (predict->parsed()) {
            set_max_threads(predict_flags.threads);
            return cmd_predict(predict_flags, explicit_cumulants);
        }
        if (simulate->parsed()) {
            set_max_threads(simulate_flags.threads);
            return cmd_simulate(simulate_flags);
        }
        if (counter->parsed()) {
            set_max_threads(counter_flags.threads);
            return cmd_counterexample(counter_flags);
        }
        if (crossing->parsed()) {
            set_max_threads(crossing_flags.threads);
            return cmd_crossing(crossing_flags, partition_text);
        }
        if (lemmas->parsed()) {
            set_max_threads(lemma_flags.threads);
            return cmd_lemmas(lemma_flags, random_count, exhaustive);
        }
        if (hypotheses->parsed()) {
            set_max_threads(hypo_flags.threads);
            return cmd_hypotheses(hypo_flags, k_max, samples);
        }
    } catch (const HypothesisError& err) {
        std::cerr << "refused: " << err.what() << '\n';
        return 2;
    } catch (const ConfigError& err) {
        std::cerr << "configuration error: " << err.what() << '\n';
        return 2;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& err) {
        std::cerr << "bad --partition: " << err.what() << '\n';
        return 2;
    }
    return 2;
}
