#include "archrec/model.hpp"

#include <algorithm>
#include <cctype>

namespace archrec {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    return std::none_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
    });
}

std::string package_of(const std::string& id) {
    auto pos = id.rfind('.');
    if (pos == std::string::npos) return "";
    return id.substr(0, pos);
}

Entity make_entity(const std::string& id, const std::string& source_path) {
    if (!valid_identifier(id))
        throw Error(Error::Kind::Validation, "invalid entity id: '" + id + "'");
    return Entity{id, package_of(id), source_path};
}

void EntitySet::add(Entity e) {
    if (!valid_identifier(e.id))
        throw Error(Error::Kind::Validation, "invalid entity id: '" + e.id + "'");
    auto [it, inserted] = by_id_.emplace(e.id, std::move(e));
    if (!inserted)
        throw Error(Error::Kind::Validation, "duplicate entity id: '" + it->first + "'");
}

const Entity& EntitySet::at(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end())
        throw Error(Error::Kind::Validation, "unknown entity id: '" + id + "'");
    return it->second;
}

void DependencyGraph::add_node(const std::string& id) {
    if (!valid_identifier(id))
        throw Error(Error::Kind::Validation, "invalid node id: '" + id + "'");
    nodes_.insert(id);
}

void DependencyGraph::add_edge(const std::string& source, const std::string& target) {
    add_node(source);
    add_node(target);
    if (source == target) return;
    if (out_[source].insert(target).second) {
        in_[target].insert(source);
        ++edge_count_;
    }
}

bool DependencyGraph::has_edge(const std::string& source, const std::string& target) const {
    auto it = out_.find(source);
    return it != out_.end() && it->second.count(target) != 0;
}

std::vector<std::pair<std::string, std::string>> DependencyGraph::edges() const {
    std::vector<std::pair<std::string, std::string>> result;
    result.reserve(edge_count_);
    for (const auto& [source, targets] : out_)
        for (const auto& target : targets)
            result.emplace_back(source, target);
    return result;
}

const std::set<std::string>& DependencyGraph::successors(const std::string& id) const {
    static const std::set<std::string> kEmpty;
    auto it = out_.find(id);
    return it == out_.end() ? kEmpty : it->second;
}

const std::set<std::string>& DependencyGraph::predecessors(const std::string& id) const {
    static const std::set<std::string> kEmpty;
    auto it = in_.find(id);
    return it == in_.end() ? kEmpty : it->second;
}

Architecture::Architecture(ClusterMap clusters) : clusters_(std::move(clusters)) {
    for (const auto& [name, members] : clusters_) {
        if (!valid_identifier(name))
            throw Error(Error::Kind::Validation, "invalid cluster name: '" + name + "'");
        if (members.empty())
            throw Error(Error::Kind::Validation, "empty cluster: '" + name + "'");
        for (const auto& id : members) {
            if (!valid_identifier(id))
                throw Error(Error::Kind::Validation,
                            "invalid entity id '" + id + "' in cluster '" + name + "'");
            auto [it, inserted] = entity_to_cluster_.emplace(id, name);
            if (!inserted)
                throw Error(Error::Kind::Validation,
                            "entity '" + id + "' appears in clusters '" + it->second +
                                "' and '" + name + "'");
        }
    }
}

std::set<std::string> Architecture::entity_ids() const {
    std::set<std::string> ids;
    for (const auto& [id, cluster] : entity_to_cluster_) ids.insert(id);
    return ids;
}

bool same_partition(const Architecture& a, const Architecture& b) {
    std::set<std::set<std::string>> blocks_a, blocks_b;
    for (const auto& [name, members] : a.clusters()) blocks_a.insert(members);
    for (const auto& [name, members] : b.clusters()) blocks_b.insert(members);
    return blocks_a == blocks_b;
}

}  // namespace archrec
