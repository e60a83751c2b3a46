#pragma once

#include <set>
#include <string>
#include <vector>

#include "archrec/model.hpp"

namespace archrec {

struct AcdcParams {
    std::size_t max_entities = 0;  // 0 disables the guard
};

struct DominatorCluster {
    std::string dominator;
    std::set<std::string> members;  // dominator plus its dominated subgraph
};

// For each node n in lexicographic order (skipping nodes claimed by an
// earlier cluster), take the nodes reachable from n among unclaimed
// nodes whose every incoming path from outside passes through n; emit a
// cluster when at least one node besides n qualifies.
std::vector<DominatorCluster> find_subgraph_dominators(const DependencyGraph& g);

// Assigns every unclustered node, in lexicographic order, to the
// dominator cluster it shares the most edges with (ties to the smaller
// cluster name); edge-free orphans fall back to "orphan.container.ss".
// Adoption is cumulative: earlier adoptees count for later orphans.
Architecture adopt_orphans(const std::vector<DominatorCluster>& clusters,
                           const DependencyGraph& g);

// Pipeline: dominators -> orphan adoption; clusters named "<dominator>.ss".
Architecture recover_acdc(const DependencyGraph& g, const AcdcParams& params = {});

}  // namespace archrec
