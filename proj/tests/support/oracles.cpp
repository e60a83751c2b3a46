#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace archrec::testing {

namespace {

using Block = std::set<std::string>;
using Blocks = std::set<Block>;

Blocks blocks_of(const Architecture& a) {
    Blocks blocks;
    for (const auto& [name, members] : a.clusters()) blocks.insert(members);
    return blocks;
}

// Search state with entities as bit positions: placed blocks (sorted
// non-empty masks), entities waiting in limbo, count of empty clusters.
// Absent entities are implied by the fixed universe.
struct MaskState {
    std::vector<std::uint32_t> blocks;
    std::uint32_t limbo = 0;
    int empty_clusters = 0;
};

std::string mask_key(const MaskState& s) {
    std::string key;
    key.reserve(s.blocks.size() * 4 + 5);
    auto put = [&](std::uint32_t v) {
        for (int shift = 0; shift < 32; shift += 8)
            key.push_back(static_cast<char>((v >> shift) & 0xff));
    };
    for (std::uint32_t b : s.blocks) put(b);
    put(s.limbo);
    key.push_back(static_cast<char>(s.empty_clusters));
    return key;
}

std::vector<std::uint32_t> canonical_blocks(std::vector<std::uint32_t> blocks) {
    blocks.erase(std::remove(blocks.begin(), blocks.end(), 0u), blocks.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

}  // namespace

long oracle_min_transform_total(const Architecture& a1, const Architecture& a2) {
    std::set<std::string> e1 = a1.entity_ids();
    std::set<std::string> e2 = a2.entity_ids();
    std::vector<std::string> universe;
    std::set_union(e1.begin(), e1.end(), e2.begin(), e2.end(),
                   std::back_inserter(universe));
    if (universe.size() > 31)
        throw std::runtime_error("transform oracle: universe too large");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < universe.size(); ++i)
        index[universe[i]] = static_cast<int>(i);

    auto mask_of = [&](const Block& names) {
        std::uint32_t mask = 0;
        for (const auto& e : names) mask |= 1u << index.at(e);
        return mask;
    };
    auto blocks_mask_of = [&](const Architecture& a) {
        std::vector<std::uint32_t> blocks;
        for (const auto& [name, members] : a.clusters()) blocks.push_back(mask_of(members));
        return canonical_blocks(std::move(blocks));
    };

    std::uint32_t leaving = 0, arriving = 0;
    for (const auto& e : e1)
        if (!e2.count(e)) leaving |= 1u << index.at(e);
    for (const auto& e : e2)
        if (!e1.count(e)) arriving |= 1u << index.at(e);

    const int empty_cap = static_cast<int>(a2.cluster_count()) + 1;
    const std::size_t state_cap = 5'000'000;

    MaskState start{blocks_mask_of(a1), 0, 0};
    const std::vector<std::uint32_t> goal_blocks = blocks_mask_of(a2);

    auto is_goal = [&](const MaskState& s) {
        return s.limbo == 0 && s.empty_clusters == 0 && s.blocks == goal_blocks;
    };
    if (is_goal(start)) return 0;

    std::unordered_set<std::string> seen{mask_key(start)};
    std::deque<std::pair<MaskState, long>> queue{{start, 0}};

    while (!queue.empty()) {
        auto [state, cost] = queue.front();
        queue.pop_front();
        long next_cost = cost + 1;

        bool found_goal = false;
        auto emit = [&](MaskState next) {
            if (is_goal(next)) {
                found_goal = true;
                return;
            }
            auto key = mask_key(next);
            if (seen.count(key)) return;
            if (seen.size() >= state_cap)
                throw std::runtime_error("transform oracle state cap exceeded");
            seen.insert(std::move(key));
            queue.emplace_back(std::move(next), next_cost);
        };

        // add / remove an empty cluster
        if (state.empty_clusters < empty_cap)
            emit({state.blocks, state.limbo, state.empty_clusters + 1});
        if (state.empty_clusters > 0)
            emit({state.blocks, state.limbo, state.empty_clusters - 1});

        std::uint32_t placed = 0;
        for (std::uint32_t b : state.blocks) placed |= b;

        // entities not yet in the architecture enter limbo first
        std::uint32_t entering = arriving & ~state.limbo & ~placed;
        for (std::uint32_t m = entering; m != 0; m &= m - 1) {
            std::uint32_t bit = m & ~(m - 1);
            emit({state.blocks, state.limbo | bit, state.empty_clusters});
        }

        // limbo entities: departing ones leave, incoming ones take a place
        for (std::uint32_t m = state.limbo; m != 0; m &= m - 1) {
            std::uint32_t bit = m & ~(m - 1);
            if (leaving & bit) {
                emit({state.blocks, state.limbo & ~bit, state.empty_clusters});
                continue;
            }
            for (std::size_t i = 0; i < state.blocks.size(); ++i) {
                auto blocks = state.blocks;
                blocks[i] |= bit;
                emit({canonical_blocks(std::move(blocks)), state.limbo & ~bit,
                      state.empty_clusters});
            }
            if (state.empty_clusters > 0) {
                auto blocks = state.blocks;
                blocks.push_back(bit);
                emit({canonical_blocks(std::move(blocks)), state.limbo & ~bit,
                      state.empty_clusters - 1});
            }
        }

        if (found_goal) return next_cost;

        // placed entities: departing ones step out to limbo, common ones move
        for (std::size_t i = 0; i < state.blocks.size(); ++i) {
            for (std::uint32_t m = state.blocks[i]; m != 0; m &= m - 1) {
                std::uint32_t bit = m & ~(m - 1);
                bool emptied = state.blocks[i] == bit;
                if (leaving & bit) {
                    auto blocks = state.blocks;
                    blocks[i] &= ~bit;
                    emit({canonical_blocks(std::move(blocks)), state.limbo | bit,
                          state.empty_clusters + (emptied ? 1 : 0)});
                    continue;
                }
                if (arriving & bit) continue;  // placed newcomers are frozen
                for (std::size_t j = 0; j < state.blocks.size(); ++j) {
                    if (j == i) continue;
                    auto blocks = state.blocks;
                    blocks[i] &= ~bit;
                    blocks[j] |= bit;
                    emit({canonical_blocks(std::move(blocks)), state.limbo,
                          state.empty_clusters + (emptied ? 1 : 0)});
                }
                if (state.empty_clusters > 0) {
                    auto blocks = state.blocks;
                    blocks[i] &= ~bit;
                    blocks.push_back(bit);
                    emit({canonical_blocks(std::move(blocks)), state.limbo,
                          state.empty_clusters - 1 + (emptied ? 1 : 0)});
                }
            }
        }

        if (found_goal) return next_cost;
    }
    throw std::runtime_error("transform oracle found no path");
}

std::string partition_key(const Architecture& a) {
    Blocks blocks = blocks_of(a);
    std::ostringstream out;
    for (const auto& block : blocks) {
        for (const auto& e : block) out << e << ',';
        out << '|';
    }
    return out.str();
}

namespace {

std::string blocks_key(const std::vector<std::set<std::string>>& partition) {
    Blocks blocks(partition.begin(), partition.end());
    std::ostringstream out;
    for (const auto& block : blocks) {
        for (const auto& e : block) out << e << ',';
        out << '|';
    }
    return out.str();
}

}  // namespace

std::vector<std::vector<std::set<std::string>>> all_partitions(
    const std::vector<std::string>& items) {
    std::vector<std::vector<std::set<std::string>>> result;
    if (items.empty()) {
        result.push_back({});
        return result;
    }
    std::vector<int> assignment(items.size(), 0);
    while (true) {
        int block_count = 1 + *std::max_element(assignment.begin(), assignment.end());
        std::vector<std::set<std::string>> partition(block_count);
        for (std::size_t i = 0; i < items.size(); ++i)
            partition[assignment[i]].insert(items[i]);
        result.push_back(std::move(partition));

        // next restricted growth string
        int i = static_cast<int>(items.size()) - 1;
        for (; i > 0; --i) {
            int prefix_max = *std::max_element(assignment.begin(), assignment.begin() + i);
            if (assignment[i] <= prefix_max) {
                assignment[i]++;
                std::fill(assignment.begin() + i + 1, assignment.end(), 0);
                break;
            }
            assignment[i] = 0;
        }
        if (i == 0) break;
    }
    return result;
}

MojoDistanceTable oracle_mojo_table(const Architecture& b) {
    std::set<std::string> ids = b.entity_ids();
    std::vector<std::string> universe(ids.begin(), ids.end());
    auto partitions = all_partitions(universe);

    std::map<std::string, std::size_t> index_of;
    for (std::size_t i = 0; i < partitions.size(); ++i)
        index_of[blocks_key(partitions[i])] = i;

    // Forward edges under single Move or Join operations.
    std::vector<std::set<std::size_t>> successors(partitions.size());
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        const auto& partition = partitions[i];
        for (std::size_t from = 0; from < partition.size(); ++from) {
            for (const auto& e : partition[from]) {
                // move to another existing block, or to a fresh one
                for (std::size_t to = 0; to <= partition.size(); ++to) {
                    if (to == from) continue;
                    auto next = partition;
                    next[from].erase(e);
                    if (to == partition.size())
                        next.push_back({e});
                    else
                        next[to].insert(e);
                    next.erase(std::remove_if(next.begin(), next.end(),
                                              [](const auto& blk) { return blk.empty(); }),
                               next.end());
                    successors[i].insert(index_of.at(blocks_key(next)));
                }
            }
            for (std::size_t other = from + 1; other < partition.size(); ++other) {
                auto next = partition;
                next[from].insert(next[other].begin(), next[other].end());
                next.erase(next.begin() + static_cast<long>(other));
                successors[i].insert(index_of.at(blocks_key(next)));
            }
        }
    }

    std::vector<std::set<std::size_t>> predecessors(partitions.size());
    for (std::size_t i = 0; i < partitions.size(); ++i)
        for (auto j : successors[i]) predecessors[j].insert(i);

    std::size_t target = index_of.at(partition_key(b));
    std::vector<long> distance(partitions.size(), -1);
    distance[target] = 0;
    std::deque<std::size_t> queue{target};
    while (!queue.empty()) {
        auto current = queue.front();
        queue.pop_front();
        for (auto prev : predecessors[current]) {
            if (distance[prev] != -1) continue;
            distance[prev] = distance[current] + 1;
            queue.push_back(prev);
        }
    }

    MojoDistanceTable table;
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        if (distance[i] < 0)
            throw std::runtime_error("mojo oracle: unreachable partition");
        table.distance_by_partition[blocks_key(partitions[i])] = distance[i];
        table.max_distance = std::max(table.max_distance, distance[i]);
    }
    return table;
}

long MojoDistanceTable::distance_to_target(const Architecture& from) const {
    auto it = distance_by_partition.find(partition_key(from));
    if (it == distance_by_partition.end())
        throw std::runtime_error("mojo oracle: partition outside target universe");
    return it->second;
}

}  // namespace archrec::testing
