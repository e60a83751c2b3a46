#pragma once

#include <string>

#include "archrec/model.hpp"

namespace archrec {

// deps.rsf: lines of "depends <source> <target>".
DependencyGraph parse_deps_rsf(const std::string& text);

// arch.rsf: lines of "contain <cluster> <entity>".
Architecture parse_arch_rsf(const std::string& text);

// Canonical form: sorted, single-space separated, LF line endings.
std::string serialize_deps(const DependencyGraph& graph);
std::string serialize_arch(const Architecture& arch);

// JSON mirror: {"clusters": {"name": ["entity", ...]}}
Architecture arch_from_json(const std::string& text);
std::string arch_to_json(const Architecture& arch);

// Reads either format, keyed on the file extension (".json" vs anything else).
Architecture load_architecture(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace archrec
