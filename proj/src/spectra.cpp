#include "fpoisson/spectra.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "fpoisson/rng.hpp"

namespace fpoisson {

namespace {

constexpr std::uint64_t kTrialTag = 0x7261a150ULL;

std::atomic<int> g_max_threads{0};

int resolve_threads() {
    const int configured = g_max_threads.load();
    if (configured > 0) return configured;
    if (const char* env = std::getenv("FPOISSON_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Pairwise summation; order-fixed so results do not depend on threading.
double stable_sum(const double* data, std::size_t count) {
    if (count <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < count; ++i) s += data[i];
        return s;
    }
    const std::size_t half = count / 2;
    return stable_sum(data, half) + stable_sum(data + half, count - half);
}

struct MeanAndError {
    double mean = 0.0;
    double std_error = 0.0;
};

MeanAndError reduce_trials(const std::vector<double>& values) {
    const auto count = values.size();
    MeanAndError out;
    out.mean = stable_sum(values.data(), count) / static_cast<double>(count);
    if (count > 1) {
        std::vector<double> sq(count);
        for (std::size_t i = 0; i < count; ++i) {
            const double d = values[i] - out.mean;
            sq[i] = d * d;
        }
        const double var =
            stable_sum(sq.data(), count) / static_cast<double>(count - 1);
        out.std_error = std::sqrt(var / static_cast<double>(count));
    }
    return out;
}

// <u,v> linear in the first argument, conjugate-linear in the second, the
// convention under which u (x) v acts as x -> <x,v> u.
std::complex<double> inner(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
    return v.dot(u);
}

} // namespace

void set_max_threads(int threads) { g_max_threads.store(threads > 0 ? threads : 0); }

int max_threads() { return resolve_threads(); }

void parallel_for_trials(int count, const std::function<void(int)>& body) {
    const int threads = std::min(count, resolve_threads());
    if (threads <= 1) {
        for (int t = 0; t < count; ++t) body(t);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            const int t = next.fetch_add(1);
            if (t >= count) return;
            try {
                body(t);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

double falling_factorial(int N, int k) {
    double prod = 1.0;
    for (int i = 0; i < k; ++i) prod *= static_cast<double>(N - i);
    return prod;
}

CovarianceMatrix CovarianceMatrix::from_matrix(Eigen::MatrixXcd matrix) {
    if (matrix.rows() != matrix.cols() || matrix.rows() < 1)
        throw ValidationError("covariance matrix must be square and nonempty");
    const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
    const double asym = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale)
        throw ValidationError("matrix is not Hermitian to tolerance");
    return CovarianceMatrix(std::move(matrix));
}

CovarianceMatrix assemble(const std::vector<Eigen::VectorXcd>& vectors) {
    if (vectors.empty()) throw ValidationError("assemble needs at least one vector");
    const Eigen::Index n = vectors.front().size();
    for (const auto& f : vectors)
        if (f.size() != n) throw ValidationError("assemble: mixed vector dimensions");
    Eigen::MatrixXcd stacked(n, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j)
        stacked.col(static_cast<Eigen::Index>(j)) = vectors[j];
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(n, n);
    S.selfadjointView<Eigen::Lower>().rankUpdate(stacked, 1.0);
    S = S.selfadjointView<Eigen::Lower>(); // mirror the upper triangle
    S.diagonal() = S.diagonal().real().cast<std::complex<double>>();
    return CovarianceMatrix::from_matrix(std::move(S));
}

std::vector<double> spectrum(const CovarianceMatrix& S) {
    const auto& M = S.matrix();
    Eigen::VectorXd eigenvalues;
    if (M.imag().cwiseAbs().maxCoeff() == 0.0) {
        // Real matrices take the cheaper symmetric path.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M.real(), Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) throw NumericalError("eigensolver failed");
        eigenvalues = solver.eigenvalues();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(M, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) throw NumericalError("eigensolver failed");
        eigenvalues = solver.eigenvalues();
    }
    const double largest = std::max(0.0, eigenvalues[eigenvalues.size() - 1]);
    if (eigenvalues[0] < -1e-10 * std::max(1.0, largest))
        throw NumericalError("matrix is not positive semidefinite within tolerance");
    return {eigenvalues.data(), eigenvalues.data() + eigenvalues.size()};
}

std::vector<double> trace_moments(const CovarianceMatrix& S, int p_max) {
    if (p_max < 1) throw ValidationError("p_max must be >= 1");
    const auto eigenvalues = spectrum(S);
    std::vector<double> moments(static_cast<std::size_t>(p_max), 0.0);
    for (double lambda : eigenvalues) {
        double power = 1.0;
        const double clamped = std::max(lambda, 0.0);
        for (int p = 1; p <= p_max; ++p) {
            power *= clamped;
            moments[static_cast<std::size_t>(p - 1)] += power;
        }
    }
    for (double& m : moments) m /= static_cast<double>(S.n());
    return moments;
}

std::vector<double> trace_moments_oracle(const CovarianceMatrix& S, int p_max) {
    if (p_max < 1) throw ValidationError("p_max must be >= 1");
    std::vector<double> moments;
    moments.reserve(static_cast<std::size_t>(p_max));
    Eigen::MatrixXcd power = S.matrix();
    for (int p = 1; p <= p_max; ++p) {
        moments.push_back(power.trace().real() / static_cast<double>(S.n()));
        if (p < p_max) power = power * S.matrix();
    }
    return moments;
}

std::vector<MomentEstimate> mc_moments(const EnsembleSpec& spec, int n, int N, int p_max,
                                       int trials, std::uint64_t seed) {
    if (trials < 2) throw ValidationError("mc_moments requires at least 2 trials");
    spec.validate();
    std::vector<std::vector<double>> per_trial(static_cast<std::size_t>(trials));
    std::vector<char> aborted(static_cast<std::size_t>(trials), 0);

    parallel_for_trials(trials, [&](int t) {
        const std::uint64_t trial_seed =
            derive_seed(seed, kTrialTag, static_cast<std::uint64_t>(t));
        try {
            const auto vectors = sample_vectors(spec, n, N, trial_seed);
            per_trial[static_cast<std::size_t>(t)] = trace_moments(assemble(vectors), p_max);
        } catch (const NumericalError&) {
            aborted[static_cast<std::size_t>(t)] = 1;
        }
    });

    int aborted_count = 0;
    for (char a : aborted) aborted_count += a;
    if (aborted_count > trials / 100)
        throw ExperimentError(std::to_string(aborted_count) + " of " + std::to_string(trials) +
                              " trials aborted");
    const int kept = trials - aborted_count;
    if (kept < 2) throw ExperimentError("fewer than 2 usable trials");

    std::vector<MomentEstimate> estimates;
    estimates.reserve(static_cast<std::size_t>(p_max));
    std::vector<double> column(static_cast<std::size_t>(kept));
    for (int p = 1; p <= p_max; ++p) {
        std::size_t row = 0;
        for (int t = 0; t < trials; ++t) {
            if (aborted[static_cast<std::size_t>(t)]) continue;
            column[row++] = per_trial[static_cast<std::size_t>(t)][static_cast<std::size_t>(p - 1)];
        }
        const auto reduced = reduce_trials(column);
        estimates.push_back({p, reduced.mean, reduced.std_error, kept});
    }
    return estimates;
}

PartitionContribution partition_contribution(const EnsembleSpec& spec, const SetPartition& pi,
                                             int n, int N, int trials, std::uint64_t seed) {
    if (trials < 2) throw ValidationError("partition_contribution requires at least 2 trials");
    const int blocks = pi.block_count();
    if (blocks > N)
        throw ValidationError("partition has more blocks than available vector indices");
    spec.validate();

    const int p = pi.size();
    const double scale = falling_factorial(N, blocks);
    std::vector<double> real_part(static_cast<std::size_t>(trials));
    std::vector<double> imag_part(static_cast<std::size_t>(trials));

    parallel_for_trials(trials, [&](int t) {
        const std::uint64_t trial_seed =
            derive_seed(seed, kTrialTag, static_cast<std::uint64_t>(t));
        const auto fresh = sample_vectors(spec, n, blocks, trial_seed);
        // tr prod_i g_{b(i)} (x) g_{b(i)} = prod_i <g_{b(i+1)}, g_{b(i)}>
        // with i+1 cyclic; one inner product per chain step.
        std::complex<double> chain{1.0, 0.0};
        for (int i = 1; i <= p; ++i) {
            const int b_here = pi.block_of(i);
            const int b_next = pi.block_of(i == p ? 1 : i + 1);
            chain *= inner(fresh[static_cast<std::size_t>(b_next)],
                           fresh[static_cast<std::size_t>(b_here)]);
        }
        const std::complex<double> value = scale * chain / static_cast<double>(n);
        real_part[static_cast<std::size_t>(t)] = value.real();
        imag_part[static_cast<std::size_t>(t)] = value.imag();
    });

    const auto real_reduced = reduce_trials(real_part);
    const auto imag_reduced = reduce_trials(imag_part);
    PartitionContribution out{pi};
    out.estimate = real_reduced.mean;
    out.std_error = real_reduced.std_error;
    out.imag_estimate = imag_reduced.mean;
    out.imag_std_error = imag_reduced.std_error;
    out.crossing = !is_noncrossing(pi);
    out.trials = trials;
    return out;
}

std::vector<int> esd_histogram(const CovarianceMatrix& S, int bins, double lo, double hi) {
    if (bins < 1) throw ValidationError("histogram needs at least one bin");
    if (!(hi > lo)) throw ValidationError("degenerate histogram range");
    const auto eigenvalues = spectrum(S);
    std::vector<int> counts(static_cast<std::size_t>(bins), 0);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (double lambda : eigenvalues) {
        if (lambda < lo || lambda > hi) continue;
        int idx = static_cast<int>((lambda - lo) / width);
        if (idx >= bins) idx = bins - 1;
        ++counts[static_cast<std::size_t>(idx)];
    }
    return counts;
}

} // namespace fpoisson
