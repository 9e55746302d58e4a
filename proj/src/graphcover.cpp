#include "fpoisson/graphcover.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "fpoisson/rng.hpp"

namespace fpoisson {

namespace {

void require_subset_of_range(const std::vector<int>& lambda, int r, const char* what) {
    std::vector<char> seen(static_cast<std::size_t>(r) + 1, 0);
    for (int k : lambda) {
        if (k < 1 || k > r) throw ValidationError(std::string(what) + ": index out of range");
        if (seen[static_cast<std::size_t>(k)])
            throw ValidationError(std::string(what) + ": repeated index");
        seen[static_cast<std::size_t>(k)] = 1;
    }
}

} // namespace

TwoCoverSystem TwoCoverSystem::from_multigraph(int r,
                                               const std::vector<std::pair<int, int>>& edges) {
    if (r < 1) throw ValidationError("multigraph needs at least one vertex");
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(r));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [u, v] = edges[e];
        if (u == v) throw ValidationError("loop edge {" + std::to_string(u) + "," +
                                          std::to_string(v) + "} not allowed");
        if (u < 1 || u > r || v < 1 || v > r)
            throw ValidationError("edge endpoint out of range");
        sets[static_cast<std::size_t>(u - 1)].push_back(static_cast<int>(e) + 1);
        sets[static_cast<std::size_t>(v - 1)].push_back(static_cast<int>(e) + 1);
    }
    return TwoCoverSystem(r, edges, std::move(sets));
}

std::string TwoCoverSystem::to_string() const {
    std::ostringstream os;
    os << "r=" << r_ << " edges=[";
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (e) os << ',';
        os << '{' << edges_[e].first << ',' << edges_[e].second << '}';
    }
    os << ']';
    return os.str();
}

std::vector<int> size_order(const TwoCoverSystem& sys) {
    std::vector<int> order(static_cast<std::size_t>(sys.set_count()));
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sys.set_size(a) < sys.set_size(b); });
    return order;
}

std::vector<int> sorted_residuals(const TwoCoverSystem& sys) {
    const auto order = size_order(sys);
    std::vector<char> covered(static_cast<std::size_t>(sys.ground_size()) + 1, 0);
    std::vector<int> residuals;
    residuals.reserve(order.size());
    for (int k : order) {
        int fresh = 0;
        for (int e : sys.set(k)) {
            if (!covered[static_cast<std::size_t>(e)]) {
                covered[static_cast<std::size_t>(e)] = 1;
                ++fresh;
            }
        }
        residuals.push_back(fresh);
    }
    return residuals;
}

LemmaReport check_lemma21(const TwoCoverSystem& sys, double t) {
    if (t < 0) throw ValidationError("lemma 2.1 requires t >= 0");
    const auto order = size_order(sys);
    const auto residuals = sorted_residuals(sys);
    double lhs = 0.0;
    for (int res : residuals) lhs += std::min(t, static_cast<double>(res));
    const double smallest = static_cast<double>(sys.set_size(order.front()));
    const double rhs = std::min(t, smallest) / 2.0 * static_cast<double>(sys.set_count());
    LemmaReport report;
    report.lhs = lhs;
    report.rhs = rhs;
    report.holds = lhs >= rhs - 1e-12;
    report.witness = sys.to_string() + " t=" + std::to_string(t);
    return report;
}

LemmaReport check_lemma22(const TwoCoverSystem& sys) {
    long long degree_sum = 0;
    for (int k = 1; k <= sys.set_count(); ++k) degree_sum += sys.set_size(k);
    LemmaReport report;
    report.lhs = static_cast<double>(sys.ground_size());
    report.rhs = static_cast<double>(degree_sum) / 2.0;
    report.holds = 2LL * sys.ground_size() == degree_sum;
    report.witness = sys.to_string();
    return report;
}

LemmaReport check_lemma23(const TwoCoverSystem& sys, const std::vector<int>& lambda, int k0) {
    const int r = sys.set_count();
    require_subset_of_range(lambda, r, "lemma 2.3 lambda");
    if (k0 < 1 || k0 > r) throw ValidationError("lemma 2.3 requires 1 <= k0 <= r");
    const auto order = size_order(sys);
    const auto residuals = sorted_residuals(sys);
    std::vector<char> in_lambda(static_cast<std::size_t>(r) + 1, 0);
    for (int k : lambda) in_lambda[static_cast<std::size_t>(k)] = 1;

    long long lhs2 = 0; // doubled to stay integral
    long long rhs2 = 0;
    for (int k = 1; k <= r; ++k) {
        const int size_k = sys.set_size(order[static_cast<std::size_t>(k - 1)]);
        if (in_lambda[static_cast<std::size_t>(k)]) {
            lhs2 += 2LL * residuals[static_cast<std::size_t>(k - 1)];
            if (k < k0) rhs2 += size_k;
        } else if (k < k0) {
            rhs2 -= size_k;
        }
    }
    LemmaReport report;
    report.lhs = static_cast<double>(lhs2) / 2.0;
    report.rhs = static_cast<double>(rhs2) / 2.0;
    report.holds = lhs2 >= rhs2;
    report.witness = sys.to_string() + " k0=" + std::to_string(k0);
    return report;
}

LemmaReport check_lemma25(const TwoCoverSystem& sys, const std::vector<int>& lambda) {
    const int r = sys.set_count();
    require_subset_of_range(lambda, r, "lemma 2.5 lambda");
    const auto order = size_order(sys);
    const auto residuals = sorted_residuals(sys);
    std::vector<char> in_lambda(static_cast<std::size_t>(r) + 1, 0);
    for (int k : lambda) in_lambda[static_cast<std::size_t>(k)] = 1;

    long long lhs2 = 0;
    for (int k = 1; k <= r; ++k)
        if (in_lambda[static_cast<std::size_t>(k)])
            lhs2 += 2LL * residuals[static_cast<std::size_t>(k - 1)];
    const long long smallest = sys.set_size(order.front());
    const long long signed_count =
        2LL * static_cast<long long>(lambda.size()) - static_cast<long long>(r);
    const long long rhs2 = smallest * signed_count;
    LemmaReport report;
    report.lhs = static_cast<double>(lhs2) / 2.0;
    report.rhs = static_cast<double>(rhs2) / 2.0;
    report.holds = lhs2 >= rhs2;
    report.witness = sys.to_string();
    return report;
}

std::vector<std::pair<int, int>> build_matching_lemma24(int m, const std::vector<int>& lambda1,
                                                        const std::vector<int>& lambda2) {
    if (m < 1) throw ValidationError("lemma 2.4 requires m >= 1");
    require_subset_of_range(lambda1, m, "lemma 2.4 lambda1");
    require_subset_of_range(lambda2, m, "lemma 2.4 lambda2");
    // Precondition: |[l,m] ^ lambda1| <= |[l,m] ^ lambda2| for every l.
    std::vector<int> tail1(static_cast<std::size_t>(m) + 2, 0);
    std::vector<int> tail2(static_cast<std::size_t>(m) + 2, 0);
    for (int k : lambda1) tail1[static_cast<std::size_t>(k)] = 1;
    for (int k : lambda2) tail2[static_cast<std::size_t>(k)] = 1;
    for (int l = m; l >= 1; --l) {
        tail1[static_cast<std::size_t>(l)] += tail1[static_cast<std::size_t>(l) + 1];
        tail2[static_cast<std::size_t>(l)] += tail2[static_cast<std::size_t>(l) + 1];
        if (tail1[static_cast<std::size_t>(l)] > tail2[static_cast<std::size_t>(l)])
            throw PreconditionError("lemma 2.4 precondition fails at l=" + std::to_string(l));
    }
    std::vector<int> sorted1(lambda1);
    std::vector<int> sorted2(lambda2);
    std::sort(sorted1.begin(), sorted1.end(), std::greater<int>());
    std::sort(sorted2.begin(), sorted2.end(), std::greater<int>());
    std::vector<std::pair<int, int>> mapping;
    mapping.reserve(sorted1.size());
    for (std::size_t i = 0; i < sorted1.size(); ++i)
        mapping.emplace_back(sorted1[i], sorted2[i]);
    std::reverse(mapping.begin(), mapping.end());
    return mapping;
}

TwoCoverSystem random_two_cover(int r, int m, std::uint64_t seed) {
    if (r < 2) throw ValidationError("random_two_cover requires r >= 2");
    if (m < 1) throw ValidationError("random_two_cover requires m >= 1");
    Rng rng(derive_seed(seed, 0x2c07e700ULL, static_cast<std::uint64_t>(r)));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(r))) + 1;
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(r - 1))) + 1;
        if (v >= u) ++v;
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return TwoCoverSystem::from_multigraph(r, edges);
}

std::vector<TwoCoverSystem> enumerate_small_multigraphs(int r_max, int m_max) {
    if (r_max < 2 || r_max > kMaxExhaustiveVertices || m_max < 1 ||
        m_max > kMaxExhaustiveEdges) {
        throw SizeLimitError("exhaustive multigraph enumeration limited to r <= " +
                             std::to_string(kMaxExhaustiveVertices) + ", m <= " +
                             std::to_string(kMaxExhaustiveEdges));
    }
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= r_max; ++u)
        for (int v = u + 1; v <= r_max; ++v) pairs.emplace_back(u, v);

    std::vector<TwoCoverSystem> out;
    std::vector<std::pair<int, int>> edges;
    // Multisets of edges as nondecreasing pair-index sequences.
    std::function<void(std::size_t)> extend = [&](std::size_t min_pair) {
        if (!edges.empty()) out.push_back(TwoCoverSystem::from_multigraph(r_max, edges));
        if (static_cast<int>(edges.size()) == m_max) return;
        for (std::size_t i = min_pair; i < pairs.size(); ++i) {
            edges.push_back(pairs[i]);
            extend(i);
            edges.pop_back();
        }
    };
    extend(0);
    return out;
}

} // namespace fpoisson
