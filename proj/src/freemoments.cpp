#include "fpoisson/freemoments.hpp"

#include <span>
#include <string>

namespace fpoisson {

namespace {

template <typename Scalar>
void require_order(int p, std::span<const Scalar> cumulants, int cap, const char* what) {
    if (p < 1) throw ValidationError(std::string(what) + ": order must be >= 1");
    if (p > cap)
        throw SizeLimitError(std::string(what) + ": order must be <= " + std::to_string(cap));
    if (static_cast<int>(cumulants.size()) < p)
        throw ArityError(std::string(what) + ": need cumulants up to order " + std::to_string(p) +
                         ", got " + std::to_string(cumulants.size()));
}

// prod_{B in pi} a_{|B|} read off the restricted growth string in one pass.
template <typename Scalar>
Scalar block_product(const SetPartition& pi, std::span<const Scalar> cumulants) {
    const auto sizes = pi.block_sizes();
    Scalar prod{1};
    for (int s : sizes) prod *= cumulants[static_cast<std::size_t>(s - 1)];
    return prod;
}

template <typename Scalar>
Scalar free_moment_impl(int p, std::span<const Scalar> cumulants) {
    require_order(p, cumulants, kMaxFreeMomentOrder, "free_moment");
    Scalar sum{0};
    for_each_noncrossing(p, [&](const SetPartition& pi) { sum += block_product(pi, cumulants); });
    return sum;
}

template <typename Scalar>
Scalar classical_moment_impl(int p, std::span<const Scalar> cumulants) {
    require_order(p, cumulants, kMaxClassicalMomentOrder, "classical_moment");
    Scalar sum{0};
    for_each_set_partition(p,
                           [&](const SetPartition& pi) { sum += block_product(pi, cumulants); });
    return sum;
}

template <typename Scalar>
std::vector<Scalar> free_cumulants_impl(std::span<const Scalar> moments) {
    if (moments.empty()) throw ValidationError("free_cumulants_from_moments: empty sequence");
    const int max_order = static_cast<int>(moments.size());
    if (max_order > kMaxFreeMomentOrder)
        throw SizeLimitError("free_cumulants_from_moments: order must be <= " +
                             std::to_string(kMaxFreeMomentOrder));
    std::vector<Scalar> cumulants;
    cumulants.reserve(moments.size());
    cumulants.push_back(moments[0]);
    for (int p = 2; p <= max_order; ++p) {
        // Every partition other than the one-block one only uses a_1..a_{p-1},
        // which are already known.
        Scalar lower{0};
        for_each_noncrossing(p, [&](const SetPartition& pi) {
            if (pi.block_count() == 1) return;
            lower += block_product(pi, std::span<const Scalar>(cumulants));
        });
        cumulants.push_back(moments[static_cast<std::size_t>(p - 1)] - lower);
    }
    return cumulants;
}

} // namespace

double free_moment(int p, const CumulantSequence& cumulants) {
    return free_moment_impl(p, std::span<const double>(cumulants.values));
}

std::complex<double> free_moment(int p, const std::vector<std::complex<double>>& cumulants) {
    return free_moment_impl(p, std::span<const std::complex<double>>(cumulants));
}

double classical_moment(int p, const CumulantSequence& cumulants) {
    return classical_moment_impl(p, std::span<const double>(cumulants.values));
}

std::complex<double> classical_moment(int p, const std::vector<std::complex<double>>& cumulants) {
    return classical_moment_impl(p, std::span<const std::complex<double>>(cumulants));
}

MomentSequence free_moments_up_to(int max_order, const CumulantSequence& cumulants) {
    MomentSequence out;
    out.values.reserve(static_cast<std::size_t>(max_order));
    for (int p = 1; p <= max_order; ++p) out.values.push_back(free_moment(p, cumulants));
    return out;
}

std::vector<std::complex<double>> free_moments_up_to(
    int max_order, const std::vector<std::complex<double>>& cumulants) {
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(max_order));
    for (int p = 1; p <= max_order; ++p) out.push_back(free_moment(p, cumulants));
    return out;
}

CumulantSequence free_cumulants_from_moments(const MomentSequence& moments) {
    return {free_cumulants_impl(std::span<const double>(moments.values))};
}

std::vector<std::complex<double>> free_cumulants_from_moments(
    const std::vector<std::complex<double>>& moments) {
    return free_cumulants_impl(std::span<const std::complex<double>>(moments));
}

} // namespace fpoisson
