// Test-only reference implementations, kept independent of the library paths
// they check: enumeration by recursive insertion, crossing detection straight
// from the definition, noncrossing detection by interval-block peeling.
#pragma once

#include <algorithm>
#include <vector>

namespace oracles {

using Blocks = std::vector<std::vector<int>>;

// All partitions of {1,...,p} built by inserting each element into every
// existing block or a fresh one.
inline std::vector<Blocks> insertion_partitions(int p) {
    std::vector<Blocks> result{{{1}}};
    for (int e = 2; e <= p; ++e) {
        std::vector<Blocks> next;
        for (const auto& partition : result) {
            for (std::size_t b = 0; b < partition.size(); ++b) {
                Blocks grown = partition;
                grown[b].push_back(e);
                next.push_back(std::move(grown));
            }
            Blocks fresh = partition;
            fresh.push_back({e});
            next.push_back(std::move(fresh));
        }
        result = std::move(next);
    }
    return result;
}

// Literal reading of the crossing condition: a<b<c<d with a,c in one block
// and b,d in another.
inline bool definition_is_noncrossing(const Blocks& blocks) {
    const int nb = static_cast<int>(blocks.size());
    for (int x = 0; x < nb; ++x) {
        for (int y = 0; y < nb; ++y) {
            if (x == y) continue;
            for (int a : blocks[x])
                for (int c : blocks[x])
                    for (int b : blocks[y])
                        for (int d : blocks[y])
                            if (a < b && b < c && c < d) return false;
        }
    }
    return true;
}

// Second, structurally different noncrossing test: repeatedly delete a block
// that is an interval of the remaining elements; noncrossing iff everything
// can be deleted.
inline bool peeling_is_noncrossing(Blocks blocks) {
    std::vector<int> alive;
    for (const auto& block : blocks)
        for (int e : block) alive.push_back(e);
    std::sort(alive.begin(), alive.end());
    while (!blocks.empty()) {
        bool removed = false;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            // Contiguous in `alive`?
            auto sorted = blocks[b];
            std::sort(sorted.begin(), sorted.end());
            const auto first =
                std::find(alive.begin(), alive.end(), sorted.front()) - alive.begin();
            bool contiguous = true;
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                if (static_cast<std::size_t>(first) + i >= alive.size() ||
                    alive[static_cast<std::size_t>(first) + i] != sorted[i]) {
                    contiguous = false;
                    break;
                }
            }
            if (contiguous) {
                for (int e : sorted) alive.erase(std::find(alive.begin(), alive.end(), e));
                blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(b));
                removed = true;
                break;
            }
        }
        if (!removed) return false;
    }
    return true;
}

} // namespace oracles
