#include "fpoisson/ensembles.hpp"

#include <cmath>

#include "fpoisson/rng.hpp"

namespace fpoisson {

namespace {

constexpr std::uint64_t kDirectionTag = 0xd14ec710ULL;
constexpr std::uint64_t kSampleTag = 0x5a3b1e00ULL;

Eigen::VectorXcd gaussian_vector(Rng& rng, int n, Field field) {
    Eigen::VectorXcd v(n);
    if (field == Field::Complex) {
        for (int i = 0; i < n; ++i) v[i] = rng.complex_normal();
    } else {
        for (int i = 0; i < n; ++i) v[i] = std::complex<double>(rng.normal(), 0.0);
    }
    return v;
}

Eigen::VectorXcd sphere_vector(Rng& rng, int n, Field field) {
    Eigen::VectorXcd v = gaussian_vector(rng, n, field);
    v /= v.norm();
    return v;
}

Eigen::VectorXcd sample_one(const EnsembleSpec& spec, int n, Rng& rng) {
    switch (spec.kind) {
        case EnsembleKind::UnitSphere:
            return sphere_vector(rng, n, spec.field);
        case EnsembleKind::CanonicalBasis: {
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
            v[static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(n)))] = 1.0;
            return v;
        }
        case EnsembleKind::GaussianScaled:
            return gaussian_vector(rng, n, spec.field) / std::sqrt(static_cast<double>(n));
        case EnsembleKind::RadialMixture: {
            double radius = spec.radii.front();
            if (spec.radii.size() > 1) {
                // Single-radius mixtures skip the draw, so they share streams
                // with the sphere ensemble they coincide with.
                const double u = rng.uniform01();
                double cumulative = 0.0;
                for (std::size_t i = 0; i < spec.radii.size(); ++i) {
                    cumulative += spec.probabilities[i];
                    if (u < cumulative) {
                        radius = spec.radii[i];
                        break;
                    }
                    radius = spec.radii[i];
                }
            }
            return radius * sphere_vector(rng, n, spec.field);
        }
    }
    throw ValidationError("unknown ensemble kind");
}

double radial_power_moment(const EnsembleSpec& spec, int two_k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < spec.radii.size(); ++i)
        sum += spec.probabilities[i] * std::pow(spec.radii[i], two_k);
    return sum;
}

void require_samples(int samples, int minimum, const char* what) {
    if (samples < minimum)
        throw ValidationError(std::string(what) + " needs at least " + std::to_string(minimum) +
                              " samples");
}

} // namespace

EnsembleSpec EnsembleSpec::unit_sphere(Field field) { return {EnsembleKind::UnitSphere, field}; }

EnsembleSpec EnsembleSpec::canonical_basis() {
    return {EnsembleKind::CanonicalBasis, Field::Complex};
}

EnsembleSpec EnsembleSpec::gaussian_scaled(Field field) {
    return {EnsembleKind::GaussianScaled, field};
}

EnsembleSpec EnsembleSpec::radial_mixture(std::vector<double> radii,
                                          std::vector<double> probabilities, Field field) {
    EnsembleSpec spec{EnsembleKind::RadialMixture, field, std::move(radii),
                      std::move(probabilities)};
    spec.validate();
    return spec;
}

void EnsembleSpec::validate() const {
    if (kind != EnsembleKind::RadialMixture) return;
    if (radii.empty() || radii.size() != probabilities.size())
        throw ValidationError("radial mixture needs matching radii and probabilities");
    double total = 0.0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] <= 0.0) throw ValidationError("radial mixture radii must be positive");
        if (probabilities[i] < 0.0)
            throw ValidationError("radial mixture probabilities must be nonnegative");
        total += probabilities[i];
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw ValidationError("radial mixture probabilities must sum to 1");
}

std::string EnsembleSpec::name() const {
    std::string out = to_string(kind);
    if (field == Field::Real) out += "(real)";
    return out;
}

std::string to_string(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::UnitSphere: return "unit-sphere";
        case EnsembleKind::CanonicalBasis: return "canonical-basis";
        case EnsembleKind::GaussianScaled: return "gaussian";
        case EnsembleKind::RadialMixture: return "radial-mixture";
    }
    return "?";
}

std::string to_string(Field field) { return field == Field::Real ? "real" : "complex"; }

EnsembleKind ensemble_kind_from_string(const std::string& name) {
    if (name == "unit-sphere") return EnsembleKind::UnitSphere;
    if (name == "canonical-basis") return EnsembleKind::CanonicalBasis;
    if (name == "gaussian") return EnsembleKind::GaussianScaled;
    if (name == "radial-mixture") return EnsembleKind::RadialMixture;
    throw ConfigError("unknown ensemble '" + name + "'");
}

Field field_from_string(const std::string& name) {
    if (name == "real") return Field::Real;
    if (name == "complex") return Field::Complex;
    throw ConfigError("unknown field '" + name + "'");
}

std::vector<Eigen::VectorXcd> sample_vectors(const EnsembleSpec& spec, int n, int N,
                                             std::uint64_t seed) {
    if (n < 1 || N < 1) throw ValidationError("sample_vectors requires n >= 1 and N >= 1");
    spec.validate();
    std::vector<Eigen::VectorXcd> vectors;
    vectors.reserve(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(j)));
        vectors.push_back(sample_one(spec, n, rng));
    }
    return vectors;
}

CumulantSequence predicted_cumulants(const EnsembleSpec& spec, double lambda, int k_max) {
    if (lambda <= 0.0) throw ValidationError("lambda must be positive");
    if (k_max < 1) throw ValidationError("k_max must be >= 1");
    spec.validate();
    CumulantSequence out;
    out.values.reserve(static_cast<std::size_t>(k_max));
    switch (spec.kind) {
        case EnsembleKind::UnitSphere:
        case EnsembleKind::GaussianScaled:
            out.values.assign(static_cast<std::size_t>(k_max), 1.0 / lambda);
            break;
        case EnsembleKind::CanonicalBasis:
            if (std::abs(lambda - 1.0) > 1e-9)
                throw ConfigError("canonical-basis ensemble is only defined at lambda = 1");
            out.values.assign(static_cast<std::size_t>(k_max), 1.0);
            break;
        case EnsembleKind::RadialMixture:
            for (int k = 1; k <= k_max; ++k)
                out.values.push_back(radial_power_moment(spec, 2 * k) / lambda);
            break;
    }
    return out;
}

double estimate_l4_constant(const EnsembleSpec& spec, int n, int n_directions, int samples,
                            std::uint64_t seed) {
    require_samples(samples, 100, "estimate_l4_constant");
    if (n < 1 || n_directions < 0) throw ValidationError("bad l4 estimator arguments");
    spec.validate();

    // Random probe directions on the unit sphere (complex so both fields are
    // covered); canonical directions are handled below without materializing.
    Eigen::MatrixXcd probes(n, n_directions);
    {
        Rng rng(derive_seed(seed, kDirectionTag));
        for (int d = 0; d < n_directions; ++d) probes.col(d) = sphere_vector(rng, n, Field::Complex);
    }

    Eigen::VectorXd canonical_acc = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd probe_acc = Eigen::VectorXd::Zero(n_directions);
    for (int s = 0; s < samples; ++s) {
        Rng rng(derive_seed(seed, kSampleTag, static_cast<std::uint64_t>(s)));
        const Eigen::VectorXcd f = sample_one(spec, n, rng);
        canonical_acc += f.cwiseAbs2().cwiseAbs2();
        if (n_directions > 0) {
            const Eigen::VectorXcd inner = probes.adjoint() * f;
            probe_acc += inner.cwiseAbs2().cwiseAbs2();
        }
    }
    double max_mean = canonical_acc.maxCoeff();
    if (n_directions > 0) max_mean = std::max(max_mean, probe_acc.maxCoeff());
    return static_cast<double>(n) * static_cast<double>(n) * max_mean /
           static_cast<double>(samples);
}

std::vector<double> estimate_norm_moments(const EnsembleSpec& spec, int n, int k_max, int samples,
                                          std::uint64_t seed) {
    require_samples(samples, 100, "estimate_norm_moments");
    if (k_max < 1) throw ValidationError("k_max must be >= 1");
    spec.validate();
    std::vector<double> acc(static_cast<std::size_t>(k_max), 0.0);
    for (int s = 0; s < samples; ++s) {
        Rng rng(derive_seed(seed, kSampleTag, static_cast<std::uint64_t>(s)));
        const double norm = sample_one(spec, n, rng).norm();
        double power = 1.0;
        for (int k = 1; k <= k_max; ++k) {
            power *= norm;
            acc[static_cast<std::size_t>(k - 1)] += power;
        }
    }
    for (double& v : acc) v /= static_cast<double>(samples);
    return acc;
}

double estimate_cumulant_deviation(const EnsembleSpec& spec, int n, int N, int k, int samples,
                                   std::uint64_t seed) {
    require_samples(samples, 50, "estimate_cumulant_deviation");
    if (k < 1) throw ValidationError("cumulant order must be >= 1");
    spec.validate();
    const double lambda = static_cast<double>(n) / static_cast<double>(N);
    const double a_k = predicted_cumulants(spec, lambda, k).at(k);

    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
    for (int s = 0; s < samples; ++s) {
        const auto vectors =
            sample_vectors(spec, n, N, derive_seed(seed, static_cast<std::uint64_t>(s)));
        for (const auto& f : vectors) {
            const double weight = std::pow(f.squaredNorm(), k - 1);
            acc.selfadjointView<Eigen::Lower>().rankUpdate(f, weight);
        }
    }
    Eigen::MatrixXcd mean = acc.selfadjointView<Eigen::Lower>();
    mean /= static_cast<double>(samples);
    mean -= a_k * Eigen::MatrixXcd::Identity(n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mean, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigensolver failed in cumulant deviation estimate");
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

HypothesisReport hypothesis_report(const EnsembleSpec& spec, int n, int N, int k_max, int samples,
                                   std::uint64_t seed) {
    HypothesisReport report;
    report.n = n;
    report.N = N;
    report.samples = samples;
    report.seed = seed;
    report.l4_constant = estimate_l4_constant(spec, n, /*n_directions=*/std::min(n, 64), samples,
                                              derive_seed(seed, 1));
    report.norm_moment_bounds =
        estimate_norm_moments(spec, n, k_max, samples, derive_seed(seed, 2));
    const int deviation_samples = std::max(50, samples / 8);
    for (int k = 1; k <= k_max; ++k)
        report.cumulant_deviations.push_back(estimate_cumulant_deviation(
            spec, n, N, k, deviation_samples, derive_seed(seed, 3, static_cast<std::uint64_t>(k))));
    return report;
}

} // namespace fpoisson
