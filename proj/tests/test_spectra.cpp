#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <fpoisson/ensembles.hpp>
#include <fpoisson/rng.hpp>
#include <fpoisson/spectra.hpp>

using namespace fpoisson;

namespace {

Eigen::MatrixXcd diag2(double a, double b) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

Eigen::VectorXcd basis2(int i) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(2);
    e[i] = 1.0;
    return e;
}

// Roots of the characteristic polynomial of a 3x3 Hermitian matrix, by the
// trigonometric cubic formula. Test-only second route for `spectrum`.
std::vector<double> cubic_eigenvalues(const Eigen::MatrixXcd& S) {
    const double e1 = S.trace().real();
    const double tr2 = (S * S).trace().real();
    const double e2 = (e1 * e1 - tr2) / 2.0;
    const double e3 = S.determinant().real();
    // x^3 - e1 x^2 + e2 x - e3; substitute x = y + e1/3.
    const double p = e2 - e1 * e1 / 3.0;
    const double q = -2.0 * e1 * e1 * e1 / 27.0 + e1 * e2 / 3.0 - e3;
    const double shift = e1 / 3.0;
    std::vector<double> roots;
    const double m = 2.0 * std::sqrt(std::max(-p / 3.0, 0.0));
    if (m < 1e-300) return {shift, shift, shift};
    double arg = 3.0 * q / (p * m);
    arg = std::clamp(arg, -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
        roots.push_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) + shift);
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

TEST_CASE("assemble spot values") {
    const auto single = assemble({basis2(0)});
    CHECK(single.matrix() == diag2(1, 0));
    const auto repeated = assemble({basis2(0), basis2(0), basis2(1)});
    CHECK(repeated.matrix() == diag2(2, 1));
    CHECK_THROWS_AS(assemble({}), ValidationError);
    CHECK_THROWS_AS(assemble({basis2(0), Eigen::VectorXcd::Zero(3)}), ValidationError);
}

TEST_CASE("assemble matches the Gram oracle F F*") {
    for (const auto seed : {1u, 2u, 3u}) {
        const auto vectors = sample_vectors(EnsembleSpec::gaussian_scaled(), 24, 40, seed);
        const auto S = assemble(vectors);
        Eigen::MatrixXcd stacked(24, 40);
        for (int j = 0; j < 40; ++j) stacked.col(j) = vectors[static_cast<std::size_t>(j)];
        const Eigen::MatrixXcd oracle = stacked * stacked.adjoint();
        CHECK((S.matrix() - oracle).cwiseAbs().maxCoeff() <= 1e-12 * oracle.cwiseAbs().maxCoeff());
        // Hermitian and PSD by construction.
        CHECK((S.matrix() - S.matrix().adjoint()).cwiseAbs().maxCoeff() == 0.0);
        const auto eigenvalues = spectrum(S);
        CHECK(eigenvalues.front() >= -1e-10 * eigenvalues.back());
    }
}

TEST_CASE("covariance validation rejects non-Hermitian input") {
    Eigen::MatrixXcd bad = diag2(1, 1);
    bad(0, 1) = 0.5;
    CHECK_THROWS_AS(CovarianceMatrix::from_matrix(bad), ValidationError);
}

TEST_CASE("spectrum spot values") {
    const auto diag = CovarianceMatrix::from_matrix(diag2(2, 1));
    CHECK(spectrum(diag) == std::vector<double>{1, 2});

    // Rank one: eigenvalues (0, ..., 0, ||f||^2).
    Eigen::VectorXcd f(3);
    f << std::complex<double>(0.6, 0.3), std::complex<double>(0.0, -0.5),
        std::complex<double>(0.4, 0.0);
    const auto rank_one = assemble({f});
    const auto eigenvalues = spectrum(rank_one);
    CHECK(eigenvalues[0] == doctest::Approx(0.0).scale(1.0));
    CHECK(eigenvalues[1] == doctest::Approx(0.0).scale(1.0));
    CHECK(eigenvalues[2] == doctest::Approx(f.squaredNorm()));

    // Sum of eigenvalues equals the trace.
    const auto S = assemble(sample_vectors(EnsembleSpec::unit_sphere(), 40, 40, 6));
    double total = 0.0;
    for (double v : spectrum(S)) total += v;
    CHECK(total == doctest::Approx(S.matrix().trace().real()).epsilon(1e-10));
}

TEST_CASE("spectrum matches the cubic-roots oracle at n=3") {
    Rng rng(64);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<Eigen::VectorXcd> vectors;
        for (int j = 0; j < 5; ++j) {
            Eigen::VectorXcd v(3);
            for (int i = 0; i < 3; ++i)
                v[i] = std::complex<double>(rng.normal(), rng.normal()) * 0.5;
            vectors.push_back(v);
        }
        const auto S = assemble(vectors);
        const auto mine = spectrum(S);
        const auto reference = cubic_eigenvalues(S.matrix());
        const double scale = std::max(1.0, std::abs(mine.back()));
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(mine[static_cast<std::size_t>(i)] -
                           reference[static_cast<std::size_t>(i)]) <= 1e-8 * scale);
    }
}

TEST_CASE("spectrum rejects matrices with negative eigenvalues") {
    CHECK_THROWS_AS(spectrum(CovarianceMatrix::from_matrix(diag2(1, -1))), NumericalError);
}

TEST_CASE("trace moments spot values") {
    const auto diag = CovarianceMatrix::from_matrix(diag2(2, 1));
    CHECK(trace_moments(diag, 3) == std::vector<double>{1.5, 2.5, 4.5});
    CHECK(trace_moments_oracle(diag, 3) == std::vector<double>{1.5, 2.5, 4.5});

    const auto identity =
        CovarianceMatrix::from_matrix(Eigen::MatrixXcd::Identity(7, 7));
    for (double m : trace_moments(identity, 5)) CHECK(m == doctest::Approx(1.0));
    for (double m : trace_moments_oracle(identity, 5)) CHECK(m == doctest::Approx(1.0));

    // Rank one with ||f||^2 = c: moment p is c^p / n.
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(4);
    f[0] = std::complex<double>(std::sqrt(2.0), 0.0);
    f[2] = std::complex<double>(1.0, 1.0);
    const double c = f.squaredNorm();
    const auto rank_one = assemble({f});
    const auto moments = trace_moments_oracle(rank_one, 4);
    for (int p = 1; p <= 4; ++p)
        CHECK(moments[static_cast<std::size_t>(p - 1)] ==
              doctest::Approx(std::pow(c, p) / 4.0).epsilon(1e-12));
}

TEST_CASE("trace moments agree with the matrix-power oracle") {
    Rng rng(1234);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 8 + static_cast<int>(rng.below(120));
        const int N = std::max(2, n / 2 + static_cast<int>(rng.below(64)));
        const auto S =
            assemble(sample_vectors(EnsembleSpec::unit_sphere(), n, N, rng.next()));
        const auto fast = trace_moments(S, 6);
        const auto slow = trace_moments_oracle(S, 6);
        for (int p = 0; p < 6; ++p)
            CHECK(std::abs(fast[static_cast<std::size_t>(p)] - slow[static_cast<std::size_t>(p)]) <=
                  1e-8 * std::abs(slow[static_cast<std::size_t>(p)]));
    }
}

TEST_CASE("mc_moments: first moment is N/n exactly per trial") {
    const auto estimates = mc_moments(EnsembleSpec::unit_sphere(), 32, 64, 1, 50, 77);
    REQUIRE(estimates.size() == 1);
    CHECK(estimates[0].p == 1);
    CHECK(estimates[0].trials == 50);
    CHECK(estimates[0].mean == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(estimates[0].std_error <= 1e-12);
    CHECK_THROWS_AS(mc_moments(EnsembleSpec::unit_sphere(), 8, 8, 2, 1, 1), ValidationError);
}

TEST_CASE("mc_moments: scaling all vectors by c multiplies moment p by c^2p") {
    const double c = std::sqrt(2.0);
    const auto base = mc_moments(EnsembleSpec::unit_sphere(), 24, 24, 3, 40, 31);
    const auto scaled =
        mc_moments(EnsembleSpec::radial_mixture({c}, {1.0}), 24, 24, 3, 40, 31);
    for (int p = 1; p <= 3; ++p) {
        const double factor = std::pow(c, 2 * p);
        CHECK(scaled[p - 1].mean == doctest::Approx(factor * base[p - 1].mean).epsilon(1e-10));
        CHECK(scaled[p - 1].mean >= 0.0);
    }
}

TEST_CASE("mc_moments is independent of the thread count") {
    const auto spec = EnsembleSpec::unit_sphere();
    set_max_threads(1);
    const auto serial = mc_moments(spec, 16, 16, 3, 20, 5);
    set_max_threads(2);
    const auto parallel = mc_moments(spec, 16, 16, 3, 20, 5);
    set_max_threads(0);
    for (int p = 0; p < 3; ++p) {
        CHECK(serial[p].mean == parallel[p].mean);
        CHECK(serial[p].std_error == parallel[p].std_error);
    }
}

TEST_CASE("trace chain identity: cyclic inner products equal the matrix product") {
    Rng rng(862);
    for (int rep = 0; rep < 30; ++rep) {
        const int p = 2 + static_cast<int>(rng.below(5));
        const auto pi = kernel(IndexWord(
            3, [&] {
                std::vector<int> w;
                for (int i = 0; i < p; ++i) w.push_back(1 + static_cast<int>(rng.below(3)));
                return w;
            }()));
        const int blocks = pi.block_count();
        const auto vectors = sample_vectors(EnsembleSpec::unit_sphere(), 6, blocks, rng.next());
        Eigen::MatrixXcd product = Eigen::MatrixXcd::Identity(6, 6);
        for (int i = 1; i <= p; ++i) {
            const auto& g = vectors[static_cast<std::size_t>(pi.block_of(i))];
            product = product * (g * g.adjoint());
        }
        const std::complex<double> via_matrices = product.trace() / 6.0;
        std::complex<double> chain{1.0, 0.0};
        for (int i = 1; i <= p; ++i) {
            const auto& here = vectors[static_cast<std::size_t>(pi.block_of(i))];
            const auto& next = vectors[static_cast<std::size_t>(pi.block_of(i == p ? 1 : i + 1))];
            chain *= here.dot(next); // <next, here> with <u,v> linear in u
        }
        chain /= 6.0;
        CHECK(std::abs(via_matrices - chain) <= 1e-12);
    }
}

TEST_CASE("partition contribution: one-block chain is N/n exactly for the sphere") {
    const auto pi = SetPartition::from_blocks(3, {{1, 2, 3}});
    const auto out = partition_contribution(EnsembleSpec::unit_sphere(), pi, 16, 48, 10, 3);
    CHECK_FALSE(out.crossing);
    CHECK(out.estimate == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(out.std_error <= 1e-9);
    CHECK(out.imag_estimate == doctest::Approx(0.0).scale(1e-9));
}

TEST_CASE("partition contribution: singleton pair matches the closed form") {
    // p=2 singletons: (N)_2 E|<g1,g2>|^2 / n = N(N-1)/n^2 for the complex sphere.
    const int n = 64, N = 64;
    const auto pi = SetPartition::from_blocks(2, {{1}, {2}});
    const auto out = partition_contribution(EnsembleSpec::unit_sphere(), pi, n, N, 4000, 2027);
    const double closed_form = static_cast<double>(N) * (N - 1) / (static_cast<double>(n) * n);
    CHECK_FALSE(out.crossing);
    CHECK(std::abs(out.estimate - closed_form) <= 4.0 * out.std_error);
    CHECK(out.std_error < 0.05 * closed_form);
}

TEST_CASE("partition contribution: crossing partition is flagged and decays") {
    const auto pi = SetPartition::from_blocks(4, {{1, 3}, {2, 4}});
    const auto small = partition_contribution(EnsembleSpec::unit_sphere(), pi, 64, 64, 4000, 5);
    CHECK(small.crossing);
    // Complex sphere: (N)_2 E|<g1,g2>|^4 / n = N(N-1)/n * 2/(n(n+1)).
    const double closed_form = 64.0 * 63.0 / 64.0 * 2.0 / (64.0 * 65.0);
    CHECK(std::abs(small.estimate - closed_form) <= 4.0 * small.std_error);
    CHECK(std::abs(small.imag_estimate) <= 4.0 * small.imag_std_error);

    CHECK_THROWS_AS(
        partition_contribution(EnsembleSpec::unit_sphere(),
                               SetPartition::from_blocks(3, {{1}, {2}, {3}}), 8, 2, 10, 1),
        ValidationError);
}

TEST_CASE("decomposition: kernel contributions sum to the moment at p=3") {
    const int n = 32, N = 32, trials = 4000;
    double total = 0.0, variance = 0.0;
    for (const auto& pi : enumerate_set_partitions(3)) {
        const auto out =
            partition_contribution(EnsembleSpec::unit_sphere(), pi, n, N, trials, 1009);
        total += out.estimate;
        variance += out.std_error * out.std_error;
    }
    const auto direct = mc_moments(EnsembleSpec::unit_sphere(), n, N, 3, trials, 1010);
    variance += direct[2].std_error * direct[2].std_error;
    CHECK(std::abs(total - direct[2].mean) <= 4.0 * std::sqrt(variance));
}

TEST_CASE("esd histogram") {
    const auto identity = CovarianceMatrix::from_matrix(Eigen::MatrixXcd::Identity(9, 9));
    CHECK(esd_histogram(identity, 2, 0.0, 2.0) == std::vector<int>{0, 9});
    const auto diag = CovarianceMatrix::from_matrix(diag2(2, 1));
    CHECK(esd_histogram(diag, 4, 0.0, 4.0) == std::vector<int>{0, 1, 1, 0});
    CHECK_THROWS_AS(esd_histogram(diag, 0, 0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(esd_histogram(diag, 4, 1.0, 1.0), ValidationError);

    // Marchenko-Pastur support at aspect ratio 1 is [0, 4]: nearly all mass
    // lands inside.
    const int n = 512;
    const auto S = assemble(sample_vectors(EnsembleSpec::unit_sphere(), n, n, 2));
    const auto counts = esd_histogram(S, 8, 0.0, 4.0);
    int inside = 0;
    for (int c : counts) inside += c;
    CHECK(inside >= static_cast<int>(0.98 * n));
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(10, 0) == 1.0);
    CHECK(falling_factorial(10, 1) == 10.0);
    CHECK(falling_factorial(10, 3) == 720.0);
    CHECK(falling_factorial(3, 3) == 6.0);
}
