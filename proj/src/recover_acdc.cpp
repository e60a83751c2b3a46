#include "archrec/recover_acdc.hpp"

#include <deque>
#include <map>

namespace archrec {

std::vector<DominatorCluster> find_subgraph_dominators(const DependencyGraph& g) {
    std::vector<DominatorCluster> clusters;
    std::set<std::string> claimed;

    for (const auto& candidate : g.nodes()) {
        if (claimed.count(candidate)) continue;

        // Reachable set R from the candidate over unclaimed nodes only.
        std::set<std::string> reached;
        std::deque<std::string> frontier{candidate};
        while (!frontier.empty()) {
            auto current = frontier.front();
            frontier.pop_front();
            for (const auto& next : g.successors(current)) {
                if (next == candidate || claimed.count(next) || reached.count(next))
                    continue;
                reached.insert(next);
                frontier.push_back(next);
            }
        }

        // Shrink R to the fixpoint where every member's unclaimed
        // predecessors lie inside R ∪ {candidate}.
        auto outside = [&](const std::string& node) {
            for (const auto& pred : g.predecessors(node)) {
                if (pred == candidate || claimed.count(pred)) continue;
                if (!reached.count(pred)) return true;
            }
            return false;
        };
        std::deque<std::string> removal;
        for (const auto& node : reached)
            if (outside(node)) removal.push_back(node);
        while (!removal.empty()) {
            auto node = removal.front();
            removal.pop_front();
            if (!reached.count(node)) continue;
            reached.erase(node);
            for (const auto& next : g.successors(node))
                if (reached.count(next) && outside(next)) removal.push_back(next);
        }

        if (reached.empty()) continue;
        DominatorCluster cluster{candidate, reached};
        cluster.members.insert(candidate);
        for (const auto& member : cluster.members) claimed.insert(member);
        clusters.push_back(std::move(cluster));
    }
    return clusters;
}

Architecture adopt_orphans(const std::vector<DominatorCluster>& clusters,
                           const DependencyGraph& g) {
    Architecture::ClusterMap result;
    std::set<std::string> clustered;
    for (const auto& cluster : clusters) {
        result[cluster.dominator + ".ss"] = cluster.members;
        clustered.insert(cluster.members.begin(), cluster.members.end());
    }
    std::vector<std::string> candidate_names;
    for (const auto& cluster : clusters) candidate_names.push_back(cluster.dominator + ".ss");
    std::sort(candidate_names.begin(), candidate_names.end());

    for (const auto& orphan : g.nodes()) {
        if (clustered.count(orphan)) continue;
        std::size_t best_count = 0;
        std::string best_name;
        for (const auto& name : candidate_names) {
            std::size_t count = 0;
            for (const auto& member : result[name])
                count += g.has_edge(orphan, member) + g.has_edge(member, orphan);
            if (count > best_count) {
                best_count = count;
                best_name = name;
            }
        }
        result[best_count > 0 ? best_name : "orphan.container.ss"].insert(orphan);
    }
    return Architecture(std::move(result));
}

Architecture recover_acdc(const DependencyGraph& g, const AcdcParams& params) {
    if (g.nodes().empty())
        throw Error(Error::Kind::Validation, "pattern recovery requires a non-empty graph");
    if (params.max_entities > 0 && g.node_count() > params.max_entities)
        throw Error(Error::Kind::ResourceLimit,
                    "system too large: " + std::to_string(g.node_count()) +
                        " entities exceed the configured cap of " +
                        std::to_string(params.max_entities));
    return adopt_orphans(find_subgraph_dominators(g), g);
}

}  // namespace archrec
