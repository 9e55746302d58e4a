#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fpoisson/errors.hpp"
#include "fpoisson/freemoments.hpp"

namespace fpoisson {

enum class Field { Real, Complex };

enum class EnsembleKind { UnitSphere, CanonicalBasis, GaussianScaled, RadialMixture };

/// Generative description of the observation vectors f_1,...,f_N.
struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::UnitSphere;
    Field field = Field::Complex;
    std::vector<double> radii;         // RadialMixture only
    std::vector<double> probabilities; // RadialMixture only

    static EnsembleSpec unit_sphere(Field field = Field::Complex);
    static EnsembleSpec canonical_basis();
    static EnsembleSpec gaussian_scaled(Field field = Field::Complex);
    static EnsembleSpec radial_mixture(std::vector<double> radii,
                                       std::vector<double> probabilities,
                                       Field field = Field::Complex);

    void validate() const;
    std::string name() const;
};

std::string to_string(EnsembleKind kind);
std::string to_string(Field field);
EnsembleKind ensemble_kind_from_string(const std::string& name);
Field field_from_string(const std::string& name);

/// Estimated hypothesis constants for one (n, N) configuration.
struct HypothesisReport {
    int n = 0;
    int N = 0;
    double l4_constant = 0.0;                // n^2 * max_x mean |<f,x>|^4
    std::vector<double> norm_moment_bounds;  // mean ||f||^k, k = 1..k_max
    std::vector<double> cumulant_deviations; // ||mean sum_j ||f||^{2(k-1)} f f* - a_k I||
    int samples = 0;
    std::uint64_t seed = 0;
};

// N independent vectors in C^n (real field: zero imaginary parts).
// Vector j draws from its own stream derived from (seed, j), so output is
// identical regardless of evaluation order.
std::vector<Eigen::VectorXcd> sample_vectors(const EnsembleSpec& spec, int n, int N,
                                             std::uint64_t seed);

// Limiting free cumulants a_1..a_k_max of the ensemble at aspect ratio
// lambda = lim n/N. CanonicalBasis only supports lambda = 1.
CumulantSequence predicted_cumulants(const EnsembleSpec& spec, double lambda, int k_max);

// n^2 times the max over probe directions (all canonical e_i plus
// n_directions random unit vectors) of the sample mean of |<f,x>|^4.
// A lower bound on n^2 sup_x E|<f,x>|^4.
double estimate_l4_constant(const EnsembleSpec& spec, int n, int n_directions, int samples,
                            std::uint64_t seed);

// Sample means of ||f||^k for k = 1..k_max.
std::vector<double> estimate_norm_moments(const EnsembleSpec& spec, int n, int k_max, int samples,
                                          std::uint64_t seed);

// Operator norm of the Monte Carlo mean of
// sum_{j=1}^N ||f_j||^{2(k-1)} f_j f_j* - a_k I, with a_k taken at
// lambda = n/N.
double estimate_cumulant_deviation(const EnsembleSpec& spec, int n, int N, int k, int samples,
                                   std::uint64_t seed);

// Full report at one (n, N): l4 constant, norm moments and deviations for
// k = 1..k_max.
HypothesisReport hypothesis_report(const EnsembleSpec& spec, int n, int N, int k_max, int samples,
                                   std::uint64_t seed);

} // namespace fpoisson
