#include "archrec/extract.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <map>
#include <regex>

#include "archrec/rsf.hpp"

namespace fs = std::filesystem;

namespace archrec {

namespace {

std::string sanitize_identifier(std::string s) {
    for (auto& c : s)
        if (std::isspace(static_cast<unsigned char>(c))) c = '_';
    return s;
}

std::string path_derived_id(const fs::path& relative) {
    fs::path stemmed = relative;
    stemmed.replace_extension();
    std::string id;
    for (const auto& part : stemmed) {
        if (!id.empty()) id += '.';
        id += part.string();
    }
    return sanitize_identifier(id);
}

std::string find_package_declaration(const std::string& stripped_text) {
    static const std::regex package_re(R"(^\s*package\s+([A-Za-z_][A-Za-z0-9_.]*)\s*;)",
                                       std::regex::multiline);
    std::smatch match;
    if (std::regex_search(stripped_text, match, package_re)) return match[1];
    return "";
}

std::vector<std::string> find_imports(const std::string& stripped_text) {
    static const std::regex import_re(
        R"(\bimport\s+(?:static\s+)?([A-Za-z_][A-Za-z0-9_.]*(?:\.\*)?)\s*;)");
    std::vector<std::string> imports;
    auto begin = std::sregex_iterator(stripped_text.begin(), stripped_text.end(), import_re);
    for (auto it = begin; it != std::sregex_iterator(); ++it)
        imports.push_back((*it)[1]);
    return imports;
}

std::vector<std::string> find_qualified_chains(const std::string& stripped_text) {
    static const std::regex chain_re(
        R"([A-Za-z_][A-Za-z0-9_]*(?:\.[A-Za-z_][A-Za-z0-9_]*)+)");
    std::vector<std::string> chains;
    auto begin = std::sregex_iterator(stripped_text.begin(), stripped_text.end(), chain_re);
    for (auto it = begin; it != std::sregex_iterator(); ++it)
        chains.push_back(it->str());
    return chains;
}

// Longest dotted prefix of `chain` that names a known entity.
std::string resolve_prefix(const std::string& chain, const std::set<std::string>& known) {
    std::string candidate = chain;
    while (true) {
        if (known.count(candidate)) return candidate;
        auto dot = candidate.rfind('.');
        if (dot == std::string::npos) return "";
        candidate.resize(dot);
        if (candidate.find('.') == std::string::npos) {
            // single-segment prefixes are not qualified references
            return known.count(candidate) ? candidate : "";
        }
    }
}

}  // namespace

ScanResult scan_source_tree(const std::string& root_dir, const ScanOptions& options) {
    fs::path root(root_dir);
    std::error_code ec;
    if (!fs::is_directory(root, ec))
        throw Error(Error::Kind::Io, "source root is not a readable directory: '" + root_dir + "'");

    std::vector<fs::path> files;
    for (auto it = fs::recursive_directory_iterator(
             root, fs::directory_options::skip_permission_denied, ec);
         it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) break;
        if (!it->is_regular_file(ec)) continue;
        std::string extension = it->path().extension().string();
        if (!extension.empty()) extension.erase(0, 1);  // drop the dot
        if (options.file_extensions.count(extension)) files.push_back(it->path());
    }
    std::sort(files.begin(), files.end(),
              [&](const fs::path& a, const fs::path& b) {
                  return a.lexically_relative(root) < b.lexically_relative(root);
              });

    ScanResult result;
    struct FileRecord {
        std::string id;
        std::string raw_text;
        std::string stripped_text;
    };
    std::vector<FileRecord> records;
    std::set<std::string> known_ids;

    for (const auto& path : files) {
        std::string raw;
        try {
            raw = read_text_file(path.string());
        } catch (const Error& e) {
            result.warnings.push_back(std::string("skipped unreadable file: ") + e.what());
            continue;
        }
        std::string stripped = strip_code_comments(raw);
        std::string package = find_package_declaration(stripped);
        fs::path relative = path.lexically_relative(root);
        std::string base = sanitize_identifier(relative.stem().string());
        std::string id = package.empty() ? path_derived_id(relative)
                                         : package + "." + base;
        if (known_ids.count(id)) {
            result.warnings.push_back("skipped duplicate entity id '" + id + "' from " +
                                      relative.string());
            continue;
        }
        known_ids.insert(id);
        result.entities.add(Entity{id, package_of(id), relative.string()});
        records.push_back({id, std::move(raw), std::move(stripped)});
    }

    if (records.empty())
        throw Error(Error::Kind::Validation,
                    "no source entities found under '" + root_dir + "'");

    std::map<std::string, std::set<std::string>> package_members;
    for (const auto& id : known_ids) package_members[package_of(id)].insert(id);

    for (const auto& record : records) {
        result.graph.add_node(record.id);
        for (const auto& target : find_imports(record.stripped_text)) {
            if (target.size() > 2 && target.compare(target.size() - 2, 2, ".*") == 0) {
                std::string pkg = target.substr(0, target.size() - 2);
                auto it = package_members.find(pkg);
                if (it == package_members.end()) {
                    result.external_references.insert(target);
                    continue;
                }
                for (const auto& member : it->second)
                    if (member != record.id) result.graph.add_edge(record.id, member);
                continue;
            }
            if (known_ids.count(target)) {
                if (target != record.id) result.graph.add_edge(record.id, target);
            } else {
                result.external_references.insert(target);
            }
        }
        for (const auto& chain : find_qualified_chains(record.stripped_text)) {
            std::string target = resolve_prefix(chain, known_ids);
            if (!target.empty() && target != record.id)
                result.graph.add_edge(record.id, target);
        }

        TokenizeOptions tokenize_options;
        tokenize_options.stem = options.stem;
        tokenize_options.strip_comments = options.strip_comments;
        tokenize_options.strip_license_header = options.strip_license_header;
        result.corpus.documents[record.id] =
            tokenize_document(record.raw_text, options.stops, tokenize_options);
    }

    return result;
}

}  // namespace archrec
