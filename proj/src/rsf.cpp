#include "archrec/rsf.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace archrec {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> fields;
    std::string field;
    while (in >> field) fields.push_back(field);
    return fields;
}

[[noreturn]] void fail_line(const std::string& what, std::size_t line_no,
                            const std::string& line) {
    throw Error(Error::Kind::Parse,
                what + " at line " + std::to_string(line_no) + ": '" + line + "'");
}

template <typename Fn>
void for_each_fact(const std::string& text, const std::string& expected_verb, Fn fn) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields.size() != 3)
            fail_line("expected 3 fields", line_no, line);
        if (fields[0] != expected_verb)
            fail_line("expected verb '" + expected_verb + "'", line_no, line);
        fn(fields[1], fields[2]);
    }
}

}  // namespace

DependencyGraph parse_deps_rsf(const std::string& text) {
    DependencyGraph graph;
    for_each_fact(text, "depends", [&](const std::string& s, const std::string& t) {
        graph.add_edge(s, t);
    });
    return graph;
}

Architecture parse_arch_rsf(const std::string& text) {
    Architecture::ClusterMap clusters;
    for_each_fact(text, "contain", [&](const std::string& c, const std::string& e) {
        clusters[c].insert(e);
    });
    return Architecture(std::move(clusters));
}

std::string serialize_deps(const DependencyGraph& graph) {
    std::ostringstream out;
    for (const auto& [source, target] : graph.edges())
        out << "depends " << source << ' ' << target << '\n';
    return out.str();
}

std::string serialize_arch(const Architecture& arch) {
    std::ostringstream out;
    for (const auto& [name, members] : arch.clusters())
        for (const auto& id : members)
            out << "contain " << name << ' ' << id << '\n';
    return out.str();
}

Architecture arch_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Error::Kind::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("clusters") || !doc["clusters"].is_object())
        throw Error(Error::Kind::Parse, "architecture JSON must have a 'clusters' object");
    Architecture::ClusterMap clusters;
    for (const auto& [name, members] : doc["clusters"].items()) {
        if (!members.is_array())
            throw Error(Error::Kind::Parse, "cluster '" + name + "' must map to an array");
        for (const auto& member : members) {
            if (!member.is_string())
                throw Error(Error::Kind::Parse,
                            "cluster '" + name + "' has a non-string member");
            clusters[name].insert(member.get<std::string>());
        }
    }
    return Architecture(std::move(clusters));
}

std::string arch_to_json(const Architecture& arch) {
    nlohmann::json clusters = nlohmann::json::object();
    for (const auto& [name, members] : arch.clusters())
        clusters[name] = members;
    nlohmann::json doc;
    doc["clusters"] = clusters;
    return doc.dump(2) + "\n";
}

Architecture load_architecture(const std::string& path) {
    std::string text = read_text_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return arch_from_json(text);
    return parse_arch_rsf(text);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Error::Kind::Io, "cannot open file for reading: '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw Error(Error::Kind::Io, "read failure on file: '" + path + "'");
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(Error::Kind::Io, "cannot open file for writing: '" + path + "'");
    out << content;
    out.flush();
    if (!out)
        throw Error(Error::Kind::Io, "write failure on file: '" + path + "'");
}

}  // namespace archrec
