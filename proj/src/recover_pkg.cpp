#include "archrec/recover_pkg.hpp"

namespace archrec {

Architecture recover_pkg(const EntitySet& entities) {
    if (entities.empty())
        throw Error(Error::Kind::Validation, "package recovery requires at least one entity");
    Architecture::ClusterMap clusters;
    for (const auto& [id, entity] : entities.by_id()) {
        const std::string& name = entity.package.empty() ? "<default>" : entity.package;
        clusters[name].insert(id);
    }
    return Architecture(std::move(clusters));
}

}  // namespace archrec
