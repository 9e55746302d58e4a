#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpoisson/ensembles.hpp"
#include "fpoisson/errors.hpp"
#include "fpoisson/graphcover.hpp"
#include "fpoisson/spectra.hpp"

namespace fpoisson {

inline constexpr const char* kVersion = "0.1.0";

/// Everything a simulation run needs; all seeds derive from `seed`.
struct ExperimentConfig {
    EnsembleSpec ensemble;
    double lambda = 1.0;
    std::vector<int> n_grid;
    int p_max = 5;
    int trials = 200;
    std::uint64_t seed = 1;
    std::string output_dir; // empty: no files written
    std::string format = "csv";

    // Throws ConfigError when invariants fail (grid ascending, p_max in
    // [1,8], trials >= 2, N >= p_max at every grid point, known format).
    void validate() const;

    // N paired with dimension n: round(n / lambda).
    int count_for(int n) const;
};

struct ConvergenceRow {
    int n = 0;
    int N = 0;
    int p = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    double predicted = 0.0; // free prediction
    double abs_gap = 0.0;   // |estimate - reference| (reference: free
    double rel_gap = 0.0;   // prediction, or binomial oracle when present)
    // Counterexample references; NaN in plain convergence runs.
    double classical_predicted = 0.0;
    double binomial_oracle = 0.0;
};

struct ConvergenceReport {
    std::string kind; // "convergence" or "counterexample"
    ExperimentConfig config;
    CumulantSequence cumulants;
    std::vector<ConvergenceRow> rows;
    bool within_tolerance = true;
    double wall_seconds = 0.0;
};

struct CrossingRow {
    int n = 0;
    int N = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    double imag_estimate = 0.0;
    double imag_std_error = 0.0;
};

struct CrossingReport {
    ExperimentConfig config;
    SetPartition partition;
    std::vector<CrossingRow> rows;
    double slope = 0.0; // log|estimate| vs log n regression
    double slope_std_error = 0.0;
    bool within_tolerance = true; // slope <= -1/2
    double wall_seconds = 0.0;
};

struct LemmaCounts {
    long long checked = 0;
    long long violations = 0;
    double min_slack = 0.0;
};

struct LemmaSuiteSummary {
    bool exhaustive = false;
    int random_count = 0;
    std::uint64_t seed = 0;
    LemmaCounts lemma21, lemma22, lemma23, lemma24, lemma25;
    long long systems_checked = 0;
    long long matching_refusals = 0; // lemma 2.4 precondition failures observed
    bool all_hold = false;
    std::string first_violation; // serialized instance, empty when none
    double wall_seconds = 0.0;
};

struct PredictRow {
    int p = 0;
    double predicted_free = 0.0;
    double predicted_classical = 0.0;
};

// Estimated moments against the predicted limits over the n-grid. Refuses
// ensembles that fail the marginal-L4 gate (HypothesisError carries the
// growth diagnostic); use run_counterexample for the basis ensemble.
ConvergenceReport run_convergence(const ExperimentConfig& config);

// The basis-vector ensemble at lambda = 1, compared against the free
// prediction, the all-partition prediction and the exact finite-n
// binomial-count oracle.
ConvergenceReport run_counterexample(const ExperimentConfig& config);

// Contribution of one crossing kernel partition across the n-grid, with a
// log-log decay slope.
CrossingReport run_crossing_decay(const ExperimentConfig& config, const SetPartition& partition);

// Exhaustive (r <= 4, m <= 6) and randomized graph-lemma checks.
LemmaSuiteSummary run_lemma_suite(std::uint64_t seed, int random_count, bool exhaustive);

// Free and all-partition predicted moments for p = 1..p_max.
std::vector<PredictRow> predict_table(int p_max, const CumulantSequence& cumulants);

// E[K^p] for K ~ Binomial(n, prob), exact (Stirling expansion of factorial
// moments).
double binomial_moment(int n, double prob, int p);

// Marginal-L4 growth gate used by run_convergence: measures the constant at
// two dimensions and throws HypothesisError when it scales with n.
void require_l4_hypothesis(const EnsembleSpec& spec, std::uint64_t seed);

// Report serialization. CSV bodies are deterministic given the config; the
// generated_at metadata line is the only non-reproducible content.
std::string to_csv(const ConvergenceReport& report);
std::string to_csv(const CrossingReport& report);
std::string to_csv(const std::vector<PredictRow>& rows);
std::string to_json_string(const ConvergenceReport& report);
std::string to_json_string(const CrossingReport& report);
std::string to_json_string(const LemmaSuiteSummary& summary);
std::string to_json_string(const std::vector<PredictRow>& rows);
std::string to_json_string(const HypothesisReport& report);
std::string to_json_string(const std::vector<HypothesisReport>& reports);

// Writes content to dir/name, creating dir if needed; returns the full path.
std::string write_report_file(const std::string& dir, const std::string& name,
                              const std::string& content);

} // namespace fpoisson
