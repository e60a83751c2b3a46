#pragma once

#include <set>
#include <string>
#include <vector>

#include "archrec/corpus.hpp"
#include "archrec/model.hpp"
#include "archrec/tokenize.hpp"

namespace archrec {

struct ScanOptions {
    std::set<std::string> file_extensions{"java"};
    bool strip_comments = false;
    bool strip_license_header = false;
    bool stem = true;
    StopWordSet stops;
};

struct ScanResult {
    EntitySet entities;
    DependencyGraph graph;  // nodes = all entities; edges = resolved references
    Corpus corpus;
    std::vector<std::string> warnings;
    std::set<std::string> external_references;  // unresolved import targets
};

// One entity per matching file (id = package declaration + base name,
// falling back to the dotted relative path); edges from imports and
// fully qualified references that resolve to known entities.
ScanResult scan_source_tree(const std::string& root_dir, const ScanOptions& options);

}  // namespace archrec
