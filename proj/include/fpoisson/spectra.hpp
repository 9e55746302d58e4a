#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "fpoisson/ensembles.hpp"
#include "fpoisson/errors.hpp"
#include "fpoisson/partitions.hpp"

namespace fpoisson {

/// Hermitian positive-semidefinite n x n matrix S = sum_j f_j f_j*.
class CovarianceMatrix {
public:
    // Validates Hermitian symmetry to 1e-12 entrywise (relative to the
    // largest entry). Positive semidefiniteness is checked when the spectrum
    // is computed.
    static CovarianceMatrix from_matrix(Eigen::MatrixXcd matrix);

    int n() const { return static_cast<int>(matrix_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }

private:
    explicit CovarianceMatrix(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {}
    Eigen::MatrixXcd matrix_;
};

/// Monte Carlo estimate of E tr S^p (normalized trace).
struct MomentEstimate {
    int p = 0;
    double mean = 0.0;
    double std_error = 0.0;
    int trials = 0;
};

/// Estimated contribution of the words with a fixed kernel partition.
struct PartitionContribution {
    SetPartition partition;
    double estimate = 0.0;      // real part of the scaled chain mean
    double std_error = 0.0;
    double imag_estimate = 0.0; // imaginary part; should be noise around 0
    double imag_std_error = 0.0;
    bool crossing = false;
    int trials = 0;
};

// Trial-level parallelism for the Monte Carlo estimators. 0 restores the
// hardware default (also overridable via FPOISSON_THREADS). Results are
// independent of the thread count: every trial writes its own slot and the
// reduction runs in trial order.
void set_max_threads(int threads);
int max_threads();

// Runs body(t) for t = 0..count-1 on the configured number of threads.
void parallel_for_trials(int count, const std::function<void(int)>& body);

// N(N-1)...(N-k+1) as a double.
double falling_factorial(int N, int k);

// S = sum_j f_j f_j*. All vectors must share one dimension.
CovarianceMatrix assemble(const std::vector<Eigen::VectorXcd>& vectors);

// Real eigenvalues, ascending. Throws NumericalError if the solver fails or
// the matrix is not PSD within tolerance.
std::vector<double> spectrum(const CovarianceMatrix& S);

// Normalized trace moments (1/n) sum_i lambda_i^p for p = 1..p_max, from one
// eigendecomposition.
std::vector<double> trace_moments(const CovarianceMatrix& S, int p_max);

// Same values by repeated matrix multiplication; the independent route.
std::vector<double> trace_moments_oracle(const CovarianceMatrix& S, int p_max);

// Per-p sample mean and standard error of trace_moments over independent
// trials. Trials that fail numerically are dropped; more than 1% dropped
// trials raises ExperimentError.
std::vector<MomentEstimate> mc_moments(const EnsembleSpec& spec, int n, int N, int p_max,
                                       int trials, std::uint64_t seed);

// Estimates sum over words j with ker j = pi of E tr prod_i f_{j(i)} x f_{j(i)}:
// (N)_{|pi|} times the mean of the cyclic inner-product chain over |pi| fresh
// vectors per trial.
PartitionContribution partition_contribution(const EnsembleSpec& spec, const SetPartition& pi,
                                             int n, int N, int trials, std::uint64_t seed);

// Eigenvalue counts over `bins` equal-width bins on [lo, hi]; eigenvalues
// outside the range are dropped, the top edge lands in the last bin.
std::vector<int> esd_histogram(const CovarianceMatrix& S, int bins, double lo, double hi);

} // namespace fpoisson
