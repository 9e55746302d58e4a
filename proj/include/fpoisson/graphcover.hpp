#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fpoisson/errors.hpp"

namespace fpoisson {

/// Sets S_1,...,S_r over a ground set {1,...,m} with every element in exactly
/// two sets; equivalently a loopless multigraph on vertices {1,...,r} with
/// S_k the edges incident to vertex k.
class TwoCoverSystem {
public:
    // Builds from an edge list; ground element i is the i-th edge (1-based).
    // Throws ValidationError on loops or out-of-range endpoints.
    static TwoCoverSystem from_multigraph(int r, const std::vector<std::pair<int, int>>& edges);

    int set_count() const { return r_; }
    int ground_size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // S_k as sorted ground elements, k 1-based.
    const std::vector<int>& set(int k) const { return sets_[static_cast<std::size_t>(k - 1)]; }
    int set_size(int k) const { return static_cast<int>(set(k).size()); }

    std::string to_string() const;

private:
    TwoCoverSystem(int r, std::vector<std::pair<int, int>> edges,
                   std::vector<std::vector<int>> sets)
        : r_(r), edges_(std::move(edges)), sets_(std::move(sets)) {}

    int r_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> sets_;
};

/// Outcome of one lemma check: lhs >= rhs for the inequalities, lhs == rhs
/// for the handshake identity.
struct LemmaReport {
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string witness;

    double slack() const { return lhs - rhs; }
};

// Relabels the sets ascending by size (stable on ties) and returns
// |S_k \ (S_1 u ... u S_{k-1})| for k = 1..r; the k=1 term is |S_1|.
std::vector<int> sorted_residuals(const TwoCoverSystem& sys);

// The permutation used by sorted_residuals: position k holds the original
// index (1-based) of the k-th smallest set.
std::vector<int> size_order(const TwoCoverSystem& sys);

// sum_k min(t, residual_k) >= (min(t, |S_1|) / 2) * r, sets sorted by size.
LemmaReport check_lemma21(const TwoCoverSystem& sys, double t);

// |E| = (1/2) sum_k |S_k|.
LemmaReport check_lemma22(const TwoCoverSystem& sys);

// sum_{k in lambda} residual_k >=
//   (1/2)(sum_{k<k0, k in lambda} |S_k| - sum_{k<k0, k not in lambda} |S_k|),
// indices refer to the size-sorted arrangement. lambda holds 1-based indices.
LemmaReport check_lemma23(const TwoCoverSystem& sys, const std::vector<int>& lambda, int k0);

// sum_{k in lambda} residual_k >= (1/2)|S_1|(|lambda| - |lambda^c|).
LemmaReport check_lemma25(const TwoCoverSystem& sys, const std::vector<int>& lambda);

// The strictly increasing map sending the i-th largest element of lambda1 to
// the i-th largest element of lambda2; requires
// |[l,m] ^ lambda1| <= |[l,m] ^ lambda2| for all l, else PreconditionError.
// Returned pairs (k, f(k)) are sorted ascending and satisfy f(k) >= k.
std::vector<std::pair<int, int>> build_matching_lemma24(int m, const std::vector<int>& lambda1,
                                                        const std::vector<int>& lambda2);

// Random loopless multigraph with r vertices and m edges; deterministic in
// the seed.
TwoCoverSystem random_two_cover(int r, int m, std::uint64_t seed);

inline constexpr int kMaxExhaustiveVertices = 4;
inline constexpr int kMaxExhaustiveEdges = 6;

// Every multiset of 1..m_max loopless edges on r_max labeled vertices.
std::vector<TwoCoverSystem> enumerate_small_multigraphs(int r_max, int m_max);

} // namespace fpoisson
