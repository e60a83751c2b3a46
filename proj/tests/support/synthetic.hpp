#pragma once

#include <random>
#include <string>
#include <vector>

#include "archrec/harness.hpp"
#include "archrec/model.hpp"

namespace archrec::testing {

// Lowercase alphabetic word for a concern's vocabulary; words of one
// concern share a base so stemming keeps them together.
std::string concern_word(std::size_t concern, std::size_t index);

// Letters-only encoding of an index, for identifiers in generated code.
std::string alpha_id(std::size_t index);

// Deterministic multi-package system; each package's documents draw from
// that package's own vocabulary block so concern recovery has signal.
struct SystemSpec {
    std::size_t entities = 200;
    std::size_t packages = 10;
    std::size_t edges = 400;
    int tokens_per_document = 12;
    unsigned long long seed = 42;
};

TrialSystem make_trial_system(const SystemSpec& spec);

// Random partition over the given names into at most max_clusters
// non-empty blocks, named C0, C1, ... in first-appearance order.
Architecture random_partition(std::mt19937_64& rng,
                              const std::vector<std::string>& names,
                              int max_clusters);

// A compilable-looking Java tree: package-per-directory, import edges,
// comment lines, concern-flavored identifiers. Deterministic per spec.
struct TreeSpec {
    std::size_t entities = 30;
    std::size_t packages = 5;
    std::size_t imports_per_file = 2;
    bool license_header = false;
    unsigned long long seed = 7;
};

void write_source_tree(const std::string& root, const TreeSpec& spec);

}  // namespace archrec::testing
