#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace archrec {

class Error : public std::runtime_error {
public:
    enum class Kind { Parse, Validation, Config, ResourceLimit, Io };

    Error(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

    const char* category() const {
        switch (kind_) {
            case Kind::Parse: return "parse";
            case Kind::Validation: return "validation";
            case Kind::Config: return "config";
            case Kind::ResourceLimit: return "resource-limit";
            case Kind::Io: return "io";
        }
        return "error";
    }

private:
    Kind kind_;
};

// Identifiers (entity ids, cluster names, tokens) are whitespace-free.
bool valid_identifier(const std::string& s);

// "org.foo.Bar" -> "org.foo"; no dot -> "".
std::string package_of(const std::string& id);

// A named implementation unit, normally one source file.
struct Entity {
    std::string id;           // qualified, dot-separated
    std::string package;      // dot-prefix of id, or ""
    std::string source_path;  // relative path, optional

    friend bool operator==(const Entity&, const Entity&) = default;
};

Entity make_entity(const std::string& id, const std::string& source_path = "");

class EntitySet {
public:
    void add(Entity e);

    bool contains(const std::string& id) const { return by_id_.count(id) != 0; }
    const Entity& at(const std::string& id) const;
    std::size_t size() const { return by_id_.size(); }
    bool empty() const { return by_id_.empty(); }
    const std::map<std::string, Entity>& by_id() const { return by_id_; }

private:
    std::map<std::string, Entity> by_id_;
};

// Directed graph over entity ids. Self-loops are dropped and duplicate
// edges collapse on insertion; edge endpoints always become nodes.
class DependencyGraph {
public:
    void add_node(const std::string& id);
    void add_edge(const std::string& source, const std::string& target);

    const std::set<std::string>& nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool has_node(const std::string& id) const { return nodes_.count(id) != 0; }
    bool has_edge(const std::string& source, const std::string& target) const;

    std::vector<std::pair<std::string, std::string>> edges() const;  // sorted
    const std::set<std::string>& successors(const std::string& id) const;
    const std::set<std::string>& predecessors(const std::string& id) const;

    friend bool operator==(const DependencyGraph&, const DependencyGraph&) = default;

private:
    std::set<std::string> nodes_;
    std::map<std::string, std::set<std::string>> out_;
    std::map<std::string, std::set<std::string>> in_;
    std::size_t edge_count_ = 0;
};

// A partition of entities into named clusters. The default-constructed
// value is the null architecture (zero clusters, zero entities).
// Construction validates the partition invariant.
class Architecture {
public:
    using ClusterMap = std::map<std::string, std::set<std::string>>;

    Architecture() = default;
    explicit Architecture(ClusterMap clusters);

    const ClusterMap& clusters() const { return clusters_; }
    std::size_t cluster_count() const { return clusters_.size(); }
    std::size_t entity_count() const { return entity_to_cluster_.size(); }
    bool is_null() const { return clusters_.empty(); }

    // id -> owning cluster name
    const std::map<std::string, std::string>& entity_to_cluster() const {
        return entity_to_cluster_;
    }
    std::set<std::string> entity_ids() const;
    bool contains_entity(const std::string& id) const {
        return entity_to_cluster_.count(id) != 0;
    }

    friend bool operator==(const Architecture&, const Architecture&) = default;

private:
    ClusterMap clusters_;
    std::map<std::string, std::string> entity_to_cluster_;
};

// Equality of the underlying partitions, ignoring cluster names.
bool same_partition(const Architecture& a, const Architecture& b);

// Operation counts for transforming one architecture into another.
struct TransformOps {
    long add_c = 0;
    long rem_c = 0;
    long add_e = 0;
    long rem_e = 0;
    long mov_e = 0;

    long total() const { return add_c + rem_c + add_e + rem_e + mov_e; }

    friend bool operator==(const TransformOps&, const TransformOps&) = default;
};

}  // namespace archrec
