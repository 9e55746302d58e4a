#pragma once

#include <complex>
#include <vector>

#include "fpoisson/errors.hpp"
#include "fpoisson/partitions.hpp"

namespace fpoisson {

/// Cumulant sequence a_1,...,a_K. Index k is 1-based: values[k-1] = a_k.
struct CumulantSequence {
    std::vector<double> values;
    int max_order() const { return static_cast<int>(values.size()); }
    double at(int k) const { return values[static_cast<std::size_t>(k - 1)]; }
};

/// Moment sequence m_1,...,m_P, same 1-based indexing.
struct MomentSequence {
    std::vector<double> values;
    int max_order() const { return static_cast<int>(values.size()); }
    double at(int p) const { return values[static_cast<std::size_t>(p - 1)]; }
};

inline constexpr int kMaxFreeMomentOrder = 16;
inline constexpr int kMaxClassicalMomentOrder = 14;

// sum over pi in NC(p) of prod_{B in pi} a_{|B|}.
double free_moment(int p, const CumulantSequence& cumulants);
std::complex<double> free_moment(int p, const std::vector<std::complex<double>>& cumulants);

// Same sum over all partitions of {1,...,p}.
double classical_moment(int p, const CumulantSequence& cumulants);
std::complex<double> classical_moment(int p, const std::vector<std::complex<double>>& cumulants);

MomentSequence free_moments_up_to(int max_order, const CumulantSequence& cumulants);
std::vector<std::complex<double>> free_moments_up_to(
    int max_order, const std::vector<std::complex<double>>& cumulants);

// Inverse of free_moments_up_to: a_p = m_p - sum over NC(p) minus the
// one-block partition. The relation is unitriangular, so always solvable.
CumulantSequence free_cumulants_from_moments(const MomentSequence& moments);
std::vector<std::complex<double>> free_cumulants_from_moments(
    const std::vector<std::complex<double>>& moments);

} // namespace fpoisson
