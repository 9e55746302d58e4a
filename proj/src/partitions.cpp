#include "fpoisson/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace fpoisson {

namespace {

int max_label(const std::vector<std::uint8_t>& rgs) {
    int m = -1;
    for (auto v : rgs) m = std::max(m, static_cast<int>(v));
    return m;
}

void check_counting_order(int p) {
    if (p < 0 || p > kMaxCountingOrder) {
        throw SizeLimitError("counting order must be in [0, " +
                             std::to_string(kMaxCountingOrder) + "], got " + std::to_string(p));
    }
}

} // namespace

SetPartition SetPartition::from_blocks(int p, const std::vector<std::vector<int>>& blocks) {
    if (p < 1) throw ValidationError("partition ground-set size must be >= 1");
    std::vector<std::uint8_t> rgs(static_cast<std::size_t>(p), 255);
    if (p > 255) throw SizeLimitError("partition ground-set size must be <= 255");
    std::size_t covered = 0;
    // Temporary per-block ids; relabeled to first-appearance order below.
    std::vector<int> raw(static_cast<std::size_t>(p), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw ValidationError("empty block");
        for (int e : blocks[b]) {
            if (e < 1 || e > p) throw ValidationError("block element out of range");
            if (raw[static_cast<std::size_t>(e - 1)] != -1)
                throw ValidationError("blocks not disjoint");
            raw[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
            ++covered;
        }
    }
    if (covered != static_cast<std::size_t>(p))
        throw ValidationError("blocks do not cover {1,...,p}");
    std::vector<int> relabel(blocks.size(), -1);
    int next = 0;
    for (int i = 0; i < p; ++i) {
        int& lab = relabel[static_cast<std::size_t>(raw[static_cast<std::size_t>(i)])];
        if (lab == -1) lab = next++;
        rgs[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(lab);
    }
    return SetPartition(std::move(rgs), next);
}

SetPartition SetPartition::from_rgs(std::vector<std::uint8_t> rgs) {
    if (rgs.empty()) throw ValidationError("partition ground-set size must be >= 1");
    int high = -1;
    for (auto v : rgs) {
        if (static_cast<int>(v) > high + 1) throw ValidationError("not a restricted growth string");
        high = std::max(high, static_cast<int>(v));
    }
    return SetPartition(std::move(rgs), high + 1);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count_));
    for (int i = 0; i < size(); ++i)
        out[static_cast<std::size_t>(rgs_[static_cast<std::size_t>(i)])].push_back(i + 1);
    return out;
}

std::vector<int> SetPartition::block_sizes() const {
    std::vector<int> out(static_cast<std::size_t>(block_count_), 0);
    for (auto v : rgs_) ++out[v];
    return out;
}

std::string SetPartition::to_string() const {
    std::ostringstream os;
    os << '[';
    auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
        if (b) os << ',';
        os << '[';
        for (std::size_t i = 0; i < bs[b].size(); ++i) {
            if (i) os << ',';
            os << bs[b][i];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

IndexWord::IndexWord(int universe, std::vector<int> letters)
    : universe_(universe), letters_(std::move(letters)) {
    if (letters_.empty()) throw ValidationError("index word must have length >= 1");
    if (universe_ < 1) throw ValidationError("index universe must be >= 1");
    for (int v : letters_)
        if (v < 1 || v > universe_) throw ValidationError("index word letter out of range");
}

void for_each_set_partition(int p, const std::function<void(const SetPartition&)>& visit) {
    if (p < 1 || p > kMaxSetPartitionOrder) {
        throw SizeLimitError("set-partition enumeration requires 1 <= p <= " +
                             std::to_string(kMaxSetPartitionOrder) + ", got " + std::to_string(p));
    }
    std::vector<std::uint8_t> rgs(static_cast<std::size_t>(p), 0);
    // Lexicographic over restricted growth strings: rgs[pos] in 0..high+1.
    std::function<void(int, int)> walk = [&](int pos, int high) {
        if (pos == p) {
            visit(SetPartition::from_rgs(rgs));
            return;
        }
        for (int lab = 0; lab <= high + 1; ++lab) {
            rgs[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(lab);
            walk(pos + 1, std::max(high, lab));
        }
    };
    walk(0, -1);
}

void for_each_noncrossing(int p, const std::function<void(const SetPartition&)>& visit) {
    if (p < 1 || p > kMaxNoncrossingOrder) {
        throw SizeLimitError("noncrossing enumeration requires 1 <= p <= " +
                             std::to_string(kMaxNoncrossingOrder) + ", got " + std::to_string(p));
    }
    // Scanning left to right, the blocks that may still receive elements form
    // a stack: appending to block y closes every block opened after y's last
    // use. A string is noncrossing iff it never appends to a closed block.
    std::vector<std::uint8_t> rgs(static_cast<std::size_t>(p), 0);
    std::vector<int> stack;
    std::vector<int> stack_pos(static_cast<std::size_t>(p), -1);
    std::vector<char> open(static_cast<std::size_t>(p), 0);
    stack.reserve(static_cast<std::size_t>(p));

    std::function<void(int, int)> walk = [&](int pos, int high) {
        if (pos == p) {
            visit(SetPartition::from_rgs(rgs));
            return;
        }
        for (int lab = 0; lab <= high + 1; ++lab) {
            if (lab == high + 1) {
                rgs[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(lab);
                open[static_cast<std::size_t>(lab)] = 1;
                stack_pos[static_cast<std::size_t>(lab)] = static_cast<int>(stack.size());
                stack.push_back(lab);
                walk(pos + 1, high + 1);
                stack.pop_back();
                open[static_cast<std::size_t>(lab)] = 0;
            } else if (open[static_cast<std::size_t>(lab)]) {
                const int keep = stack_pos[static_cast<std::size_t>(lab)] + 1;
                std::vector<int> closed(stack.begin() + keep, stack.end());
                for (int c : closed) open[static_cast<std::size_t>(c)] = 0;
                stack.resize(static_cast<std::size_t>(keep));
                rgs[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(lab);
                walk(pos + 1, high);
                for (int c : closed) {
                    open[static_cast<std::size_t>(c)] = 1;
                    stack.push_back(c);
                }
            }
        }
    };
    walk(0, -1);
}

std::vector<SetPartition> enumerate_set_partitions(int p) {
    std::vector<SetPartition> out;
    for_each_set_partition(p, [&](const SetPartition& pi) { out.push_back(pi); });
    return out;
}

std::vector<SetPartition> enumerate_noncrossing(int p) {
    std::vector<SetPartition> out;
    for_each_noncrossing(p, [&](const SetPartition& pi) { out.push_back(pi); });
    return out;
}

bool is_noncrossing(const SetPartition& partition) {
    // Blocks X != Y cross iff the merged label sequence of their elements has
    // at least four runs (an x..y..x..y alternation).
    const auto& rgs = partition.rgs();
    const int p = partition.size();
    const int nb = partition.block_count();
    for (int x = 0; x < nb; ++x) {
        for (int y = x + 1; y < nb; ++y) {
            int runs = 0;
            int last = -1;
            for (int i = 0; i < p; ++i) {
                const int lab = rgs[static_cast<std::size_t>(i)];
                if (lab != x && lab != y) continue;
                if (lab != last) {
                    ++runs;
                    last = lab;
                }
            }
            if (runs >= 4) return false;
        }
    }
    return true;
}

bool has_interval_block(const SetPartition& partition) {
    for (const auto& block : partition.blocks()) {
        if (block.back() - block.front() + 1 == static_cast<int>(block.size())) return true;
    }
    return false;
}

SetPartition kernel(const IndexWord& word) {
    std::vector<int> relabel(static_cast<std::size_t>(word.universe()) + 1, -1);
    std::vector<std::uint8_t> rgs;
    rgs.reserve(word.letters().size());
    int next = 0;
    for (int v : word.letters()) {
        int& lab = relabel[static_cast<std::size_t>(v)];
        if (lab == -1) lab = next++;
        rgs.push_back(static_cast<std::uint8_t>(lab));
    }
    return SetPartition::from_rgs(std::move(rgs));
}

BigInt bell_number(int p) {
    check_counting_order(p);
    // Bell triangle.
    std::vector<BigInt> row{1};
    for (int i = 1; i <= p; ++i) {
        std::vector<BigInt> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const auto& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

BigInt catalan_number(int p) {
    check_counting_order(p);
    // C(2p, p) / (p + 1), exact.
    BigInt binom = 1;
    for (int i = 1; i <= p; ++i) {
        binom *= (p + i);
        binom /= i;
    }
    return binom / (p + 1);
}

} // namespace fpoisson
