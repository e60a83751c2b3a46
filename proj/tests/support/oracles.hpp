#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "archrec/model.hpp"

namespace archrec::testing {

// Exhaustive minimum over raw operation sequences (add/remove cluster,
// add/remove entity via limbo, move entity): breadth-first search on
// canonical states. Independent of the production matching-based path.
long oracle_min_transform_total(const Architecture& a1, const Architecture& a2);

// Shortest Move/Join distances to `b` from every partition of its entity
// universe, by reverse breadth-first search on the full partition graph.
struct MojoDistanceTable {
    std::map<std::string, long> distance_by_partition;  // canonical key -> mno
    long max_distance = 0;

    long distance_to_target(const Architecture& from) const;
};

MojoDistanceTable oracle_mojo_table(const Architecture& b);

// Canonical name-free partition key (sorted blocks of sorted members).
std::string partition_key(const Architecture& a);

// All partitions of the given items (restricted growth strings).
std::vector<std::vector<std::set<std::string>>> all_partitions(
    const std::vector<std::string>& items);

}  // namespace archrec::testing
