#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fpoisson/errors.hpp"

namespace fpoisson {

using BigInt = boost::multiprecision::cpp_int;

/// A partition of {1,...,p} in canonical form.
///
/// Stored as a restricted growth string: element i (0-based) carries the label
/// of its block, blocks numbered 0,1,2,... in order of first appearance. This
/// makes the canonical form (blocks ordered by smallest element, elements
/// ascending) structural, so equality is plain vector equality.
class SetPartition {
public:
    // Builds from explicit blocks with 1-based elements. Validates that the
    // blocks are nonempty, pairwise disjoint and cover {1,...,p}.
    static SetPartition from_blocks(int p, const std::vector<std::vector<int>>& blocks);

    // Builds from a restricted growth string (0-based block labels in order of
    // first appearance). Validates the growth property.
    static SetPartition from_rgs(std::vector<std::uint8_t> rgs);

    int size() const { return static_cast<int>(rgs_.size()); }
    int block_count() const { return block_count_; }

    // 0-based label of the block containing element i (1-based).
    int block_of(int i) const { return rgs_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<std::uint8_t>& rgs() const { return rgs_; }

    // Blocks ordered by smallest element, elements ascending, 1-based.
    std::vector<std::vector<int>> blocks() const;
    std::vector<int> block_sizes() const;

    // Sorted block list rendering, e.g. "[[1,3],[2,4]]".
    std::string to_string() const;

    bool operator==(const SetPartition& other) const = default;
    auto operator<=>(const SetPartition& other) const = default;

private:
    SetPartition(std::vector<std::uint8_t> rgs, int block_count)
        : rgs_(std::move(rgs)), block_count_(block_count) {}

    std::vector<std::uint8_t> rgs_;
    int block_count_ = 0;
};

/// A word j(1),...,j(p) of labels from {1,...,universe}.
class IndexWord {
public:
    IndexWord(int universe, std::vector<int> letters);

    int size() const { return static_cast<int>(letters_.size()); }
    int universe() const { return universe_; }
    const std::vector<int>& letters() const { return letters_; }

private:
    int universe_;
    std::vector<int> letters_;
};

inline constexpr int kMaxSetPartitionOrder = 14;
inline constexpr int kMaxNoncrossingOrder = 16;
inline constexpr int kMaxCountingOrder = 40;

// All partitions of {1,...,p} in restricted-growth-string lexicographic order.
// Throws SizeLimitError outside 1 <= p <= 14.
std::vector<SetPartition> enumerate_set_partitions(int p);

// All noncrossing partitions of {1,...,p} in the same order, by pruned
// enumeration. Throws SizeLimitError outside 1 <= p <= 16.
std::vector<SetPartition> enumerate_noncrossing(int p);

// Visitor forms used by the moment transforms to avoid materializing large
// lists; same order as the enumerating versions.
void for_each_set_partition(int p, const std::function<void(const SetPartition&)>& visit);
void for_each_noncrossing(int p, const std::function<void(const SetPartition&)>& visit);

// False iff some a<b<c<d has a,c in one block and b,d in another.
bool is_noncrossing(const SetPartition& partition);

// True iff some block is a set of consecutive integers.
bool has_interval_block(const SetPartition& partition);

// Positions i,i' share a block iff the word has equal letters there.
SetPartition kernel(const IndexWord& word);

// Bell and Catalan numbers, exact; p <= 40.
BigInt bell_number(int p);
BigInt catalan_number(int p);

} // namespace fpoisson
