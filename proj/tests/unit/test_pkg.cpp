#include <doctest.h>

#include "archrec/recover_pkg.hpp"

using namespace archrec;

namespace {

EntitySet entities(std::initializer_list<const char*> ids) {
    EntitySet set;
    for (const char* id : ids) set.add(make_entity(id));
    return set;
}

}  // namespace

TEST_CASE("pkg clusters by package name") {
    Architecture arch = recover_pkg(
        entities({"org.a.X", "org.a.Y", "org.b.Z", "org.b.sub.W"}));
    CHECK(arch.cluster_count() == 3);
    CHECK(arch.clusters().at("org.a") == std::set<std::string>{"org.a.X", "org.a.Y"});
    CHECK(arch.clusters().at("org.b") == std::set<std::string>{"org.b.Z"});
    CHECK(arch.clusters().at("org.b.sub") == std::set<std::string>{"org.b.sub.W"});
}

TEST_CASE("root-package entities collect under <default>") {
    Architecture arch = recover_pkg(entities({"Main", "org.a.X"}));
    CHECK(arch.clusters().at("<default>") == std::set<std::string>{"Main"});
    CHECK(arch.clusters().at("org.a") == std::set<std::string>{"org.a.X"});
}

TEST_CASE("pkg needs at least one entity") {
    CHECK_THROWS_AS(recover_pkg(EntitySet{}), Error);
}

TEST_CASE("pkg is invariant to insertion order") {
    EntitySet forward = entities({"p.A", "p.B", "q.C"});
    EntitySet backward = entities({"q.C", "p.B", "p.A"});
    CHECK(recover_pkg(forward) == recover_pkg(backward));
}
