#include "archrec/harness.hpp"

#include <sys/resource.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "archrec/extract.hpp"
#include "archrec/recover_pkg.hpp"
#include "archrec/rsf.hpp"
#include "archrec/tokenize.hpp"

namespace archrec {

namespace fs = std::filesystem;

std::string method_name(Method method) {
    switch (method) {
        case Method::Pkg: return "pkg";
        case Method::Acdc: return "acdc";
        case Method::Arc: return "arc";
    }
    return "unknown";
}

Method method_from_name(const std::string& name) {
    if (name == "pkg") return Method::Pkg;
    if (name == "acdc") return Method::Acdc;
    if (name == "arc") return Method::Arc;
    throw Error(Error::Kind::Config, "unknown recovery method: '" + name + "'");
}

void TrialSystem::validate() const {
    std::set<std::string> names;
    for (const auto& m : members) {
        if (!valid_identifier(m.name)) {
            throw Error(Error::Kind::Validation, "invalid member name: '" + m.name + "'");
        }
        if (m.name.find('.') != std::string::npos) {
            throw Error(Error::Kind::Validation,
                        "member name must not contain '.': " + m.name);
        }
        if (!m.package.empty() && !valid_identifier(m.package)) {
            throw Error(Error::Kind::Validation,
                        "invalid package for member " + m.name + ": '" + m.package + "'");
        }
        if (!names.insert(m.name).second) {
            throw Error(Error::Kind::Validation, "duplicate member name: " + m.name);
        }
        for (const auto& [token, count] : m.document) {
            if (!valid_identifier(token) || count <= 0) {
                throw Error(Error::Kind::Validation,
                            "invalid document entry for member " + m.name);
            }
        }
    }
    for (const auto& [from, to] : edges) {
        if (!names.count(from) || !names.count(to)) {
            throw Error(Error::Kind::Validation,
                        "edge references unknown member: " + from + " -> " + to);
        }
    }
}

std::string TrialSystem::qualified_id(const TrialMember& member) const {
    return member.package.empty() ? member.name : member.package + "." + member.name;
}

bool TrialSystem::has_member(const std::string& name) const {
    for (const auto& m : members) {
        if (m.name == name) return true;
    }
    return false;
}

const TrialMember& TrialSystem::member(const std::string& name) const {
    for (const auto& m : members) {
        if (m.name == name) return m;
    }
    throw Error(Error::Kind::Validation, "unknown member: " + name);
}

TrialMember& TrialSystem::member(const std::string& name) {
    for (auto& m : members) {
        if (m.name == name) return m;
    }
    throw Error(Error::Kind::Validation, "unknown member: " + name);
}

DependencyGraph TrialSystem::graph() const {
    DependencyGraph g;
    for (const auto& m : members) g.add_node(qualified_id(m));
    for (const auto& [from, to] : edges) {
        g.add_edge(qualified_id(member(from)), qualified_id(member(to)));
    }
    return g;
}

EntitySet TrialSystem::entities() const {
    EntitySet set;
    for (const auto& m : members) set.add(make_entity(qualified_id(m)));
    return set;
}

Corpus TrialSystem::corpus() const {
    Corpus c;
    for (const auto& m : members) c.documents[qualified_id(m)] = m.document;
    return c;
}

Architecture recover_trial_system(Method method, const TrialSystem& system,
                                  const MethodParams& params) {
    system.validate();
    Architecture raw;
    switch (method) {
        case Method::Pkg: raw = recover_pkg(system.entities()); break;
        case Method::Acdc: raw = recover_acdc(system.graph(), params.acdc); break;
        case Method::Arc:
            raw = recover_arc(system.corpus(), system.graph(), params.arc).architecture;
            break;
    }
    std::map<std::string, std::string> to_name;
    for (const auto& m : system.members) to_name[system.qualified_id(m)] = m.name;
    Architecture::ClusterMap rekeyed;
    for (const auto& [cluster, ids] : raw.clusters()) {
        auto& out = rekeyed[cluster];
        for (const auto& id : ids) {
            auto it = to_name.find(id);
            out.insert(it == to_name.end() ? id : it->second);
        }
    }
    return Architecture(std::move(rekeyed));
}

namespace {

std::string format_number(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void echo_params(Method method, const MethodParams& params,
                 std::map<std::string, std::string>& config) {
    config["method"] = method_name(method);
    if (method == Method::Acdc && params.acdc.max_entities != 0) {
        config["maxEntities"] = std::to_string(params.acdc.max_entities);
    }
    if (method == Method::Arc) {
        const ArcParams& a = params.arc;
        config["topics"] = std::to_string(a.topics);
        config["clusters"] = std::to_string(a.clusters);
        config["seed"] = std::to_string(a.seed);
        config["alpha"] = format_number(a.alpha < 0 ? 50.0 / a.topics : a.alpha);
        config["beta"] = format_number(a.beta);
        config["iterations"] = std::to_string(a.iterations);
        config["lambda"] = format_number(a.lambda);
        if (a.max_entities != 0) config["maxEntities"] = std::to_string(a.max_entities);
    }
}

void push(TrialReport& report, const std::string& label, const std::string& metric,
          double value) {
    report.measurements.push_back({label, metric, value});
}

void push_ops(TrialReport& report, const std::string& label, const TransformOps& ops) {
    push(report, label, "addC", static_cast<double>(ops.add_c));
    push(report, label, "remC", static_cast<double>(ops.rem_c));
    push(report, label, "addE", static_cast<double>(ops.add_e));
    push(report, label, "remE", static_cast<double>(ops.rem_e));
    push(report, label, "movE", static_cast<double>(ops.mov_e));
    push(report, label, "total", static_cast<double>(ops.total()));
}

double a2a_floor(const Architecture& before, const Architecture& after, double max_ops) {
    double den = static_cast<double>(mto(Architecture{}, before).total() +
                                     mto(Architecture{}, after).total());
    if (den <= 0.0) return 100.0;
    return (1.0 - max_ops / den) * 100.0;
}

Architecture recover_scan(Method method, const ScanResult& scan,
                          const MethodParams& params) {
    switch (method) {
        case Method::Pkg: return recover_pkg(scan.entities);
        case Method::Acdc: return recover_acdc(scan.graph, params.acdc);
        case Method::Arc:
            return recover_arc(scan.corpus, scan.graph, params.arc).architecture;
    }
    throw Error(Error::Kind::Config, "unknown recovery method");
}

long differing_cluster_count(const Architecture& a, const Architecture& b) {
    std::set<std::set<std::string>> a_sets, b_sets;
    for (const auto& [name, ids] : a.clusters()) a_sets.insert(ids);
    for (const auto& [name, ids] : b.clusters()) b_sets.insert(ids);
    long count = 0;
    for (const auto& ids : a_sets) count += b_sets.count(ids) ? 0 : 1;
    for (const auto& ids : b_sets) count += a_sets.count(ids) ? 0 : 1;
    return count;
}

// a2a always applies; MojoFM needs identical entity universes.
void push_similarity(TrialReport& report, const std::string& label,
                     const Architecture& before, const Architecture& after) {
    SimilarityResult sim = a2a(before, after);
    push(report, label, "a2a", sim.value);
    if (before.entity_ids() == after.entity_ids() && !before.is_null()) {
        push(report, label, "mojofm", mojofm(before, after).value);
    }
    push(report, label, "differingClusters",
         static_cast<double>(differing_cluster_count(before, after)));
    if (sim.ops) push_ops(report, label, *sim.ops);
}

}  // namespace

std::string trial_report_to_json(const TrialReport& report) {
    nlohmann::json j;
    j["method"] = report.method;
    j["kind"] = report.kind;
    j["verdict"] = report.verdict;
    auto measurements = nlohmann::json::array();
    for (const auto& m : report.measurements) {
        measurements.push_back(
            {{"label", m.label}, {"metric", m.metric}, {"value", m.value}});
    }
    j["measurements"] = std::move(measurements);
    j["config"] = report.config;
    j["detail"] = report.detail;
    return j.dump(2) + "\n";
}

TrialReport determinism_trial(Method method, const TrialSystem& system,
                              const MethodParams& params, int runs,
                              const std::vector<unsigned long long>& per_run_seeds) {
    if (runs < 2) {
        throw Error(Error::Kind::Config, "determinism trial needs at least 2 runs");
    }
    if (!per_run_seeds.empty() &&
        per_run_seeds.size() != static_cast<std::size_t>(runs)) {
        throw Error(Error::Kind::Config,
                    "seed list length must equal the run count");
    }
    TrialReport report;
    report.method = method_name(method);
    report.kind = "determinism";
    echo_params(method, params, report.config);
    report.config["runs"] = std::to_string(runs);

    bool distinct_seeds = false;
    for (std::size_t i = 1; i < per_run_seeds.size(); ++i) {
        if (per_run_seeds[i] != per_run_seeds[0]) distinct_seeds = true;
    }

    std::vector<Architecture> archs;
    std::vector<std::string> serialized;
    for (int i = 0; i < runs; ++i) {
        MethodParams run_params = params;
        if (!per_run_seeds.empty()) {
            run_params.arc.seed = per_run_seeds[static_cast<std::size_t>(i)];
            report.config["seed" + std::to_string(i + 1)] =
                std::to_string(per_run_seeds[static_cast<std::size_t>(i)]);
        }
        Architecture a = recover_trial_system(method, system, run_params);
        serialized.push_back(serialize_arch(a));
        archs.push_back(std::move(a));
    }

    bool identical_bytes = true;
    for (const auto& s : serialized) {
        if (s != serialized.front()) identical_bytes = false;
    }
    bool all_hundred = true;
    for (std::size_t i = 0; i < archs.size(); ++i) {
        for (std::size_t j = i + 1; j < archs.size(); ++j) {
            std::string label =
                "run" + std::to_string(i + 1) + ":run" + std::to_string(j + 1);
            double va = a2a(archs[i], archs[j]).value;
            double vm = mojofm(archs[i], archs[j]).value;
            push(report, label, "a2a", va);
            push(report, label, "mojofm", vm);
            if (va != 100.0 || vm != 100.0) all_hundred = false;
        }
    }
    push(report, "serialization", "byteIdentical", identical_bytes ? 1.0 : 0.0);

    if (distinct_seeds) {
        report.verdict = "info";
        report.detail.push_back(
            "distinct seeds supplied; agreement is reported, not judged");
    } else {
        report.verdict = (all_hundred && identical_bytes) ? "pass" : "fail";
    }
    return report;
}

TrialReport proportionality_trial(Method method, const TrialSystem& system,
                                  const MethodParams& params,
                                  const Perturbation& perturbation,
                                  const ProportionalityBudget& budget) {
    TrialSystem after = system;
    std::string description;
    if (perturbation.kind == "entity-add") {
        if (after.has_member(perturbation.target)) {
            throw Error(Error::Kind::Validation,
                        "member already exists: " + perturbation.target);
        }
        after.members.push_back({perturbation.target, perturbation.package, {}});
        description = "added " + perturbation.target +
                      (perturbation.package.empty() ? std::string()
                                                    : " to " + perturbation.package);
    } else if (perturbation.kind == "entity-move") {
        TrialMember& m = after.member(perturbation.target);
        description = "moved " + perturbation.target + " from '" + m.package +
                      "' to '" + perturbation.to_package + "'";
        m.package = perturbation.to_package;
    } else if (perturbation.kind == "comment-char-edit") {
        throw Error(Error::Kind::Config,
                    "comment-char-edit runs against a source tree, not a trial system");
    } else {
        throw Error(Error::Kind::Config,
                    "unknown perturbation kind: '" + perturbation.kind + "'");
    }

    Architecture before_arch = recover_trial_system(method, system, params);
    Architecture after_arch = recover_trial_system(method, after, params);
    double value = a2a(before_arch, after_arch).value;
    double floor = a2a_floor(before_arch, after_arch, budget.max_ops);

    TrialReport report;
    report.method = method_name(method);
    report.kind = "proportionality";
    echo_params(method, params, report.config);
    report.config["perturbation"] = perturbation.kind;
    report.config["maxOps"] = format_number(budget.max_ops);
    push_similarity(report, "change", before_arch, after_arch);
    push(report, "change", "a2aFloor", floor);
    report.detail.push_back(description);
    report.verdict = value + 1e-9 >= floor ? "pass" : "fail";
    return report;
}

namespace {

fs::path fresh_temp_dir(const std::string& tag) {
    static std::atomic<unsigned> counter{0};
    auto ticks = std::chrono::steady_clock::now().time_since_epoch().count();
    std::ostringstream name;
    name << "archrec-" << tag << "-" << ::getpid() << "-" << ticks << "-"
         << counter.fetch_add(1);
    return fs::temp_directory_path() / name.str();
}

// Flips the first letter or digit inside the first comment of the first
// file (ordered by path) that has one. Returns the edited file path.
std::string perturb_one_comment_char(const fs::path& root,
                                     const std::set<std::string>& extensions) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(
             root, fs::directory_options::skip_permission_denied)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        if (!ext.empty() && ext.front() == '.') ext.erase(0, 1);
        if (extensions.count(ext)) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        std::string text = read_text_file(path.string());
        std::size_t line_pos = text.find("//");
        std::size_t block_pos = text.find("/*");
        std::size_t pos = std::min(line_pos == std::string::npos ? text.size() : line_pos,
                                   block_pos == std::string::npos ? text.size()
                                                                  : block_pos);
        if (pos >= text.size()) continue;
        std::size_t end;
        if (pos == block_pos) {
            end = text.find("*/", pos + 2);
            if (end == std::string::npos) end = text.size();
        } else {
            end = text.find('\n', pos + 2);
            if (end == std::string::npos) end = text.size();
        }
        for (std::size_t i = pos + 2; i < end; ++i) {
            char c = text[i];
            if (std::isalnum(static_cast<unsigned char>(c))) {
                text[i] = (c == 'x' || c == 'X') ? 'y' : 'x';
                write_text_file(path.string(), text);
                return path.string();
            }
        }
    }
    throw Error(Error::Kind::Validation,
                "no editable comment found under " + root.string());
}

ScanOptions scan_options_for(const SourceSpec& source) {
    ScanOptions options;
    options.file_extensions = source.extensions;
    options.strip_comments = source.strip_comments;
    options.strip_license_header = source.strip_license;
    options.stops = build_stopword_set(default_general_stopwords(),
                                       source.stopword_file, source.system_name);
    return options;
}

}  // namespace

TrialReport comment_edit_trial(Method method, const SourceSpec& source,
                               const MethodParams& params,
                               const ProportionalityBudget& budget) {
    fs::path root(source.root);
    if (!fs::exists(root) || !fs::is_directory(root)) {
        throw Error(Error::Kind::Io, "source root is not a directory: " + source.root);
    }
    fs::path copy = fresh_temp_dir("edit");
    fs::copy(root, copy,
             fs::copy_options::recursive | fs::copy_options::copy_symlinks);

    TrialReport report;
    report.method = method_name(method);
    report.kind = "proportionality";
    echo_params(method, params, report.config);
    report.config["perturbation"] = "comment-char-edit";
    report.config["stripComments"] = source.strip_comments ? "true" : "false";
    report.config["maxOps"] = format_number(budget.max_ops);

    try {
        std::string edited = perturb_one_comment_char(copy, source.extensions);
        report.detail.push_back(
            "edited one comment character in " +
            fs::path(edited).lexically_relative(copy).generic_string());

        ScanOptions options = scan_options_for(source);
        ScanResult before = scan_source_tree(source.root, options);
        ScanResult after = scan_source_tree(copy.string(), options);

        bool corpus_identical = before.corpus.documents == after.corpus.documents;
        push(report, "corpus", "identical", corpus_identical ? 1.0 : 0.0);

        Architecture before_arch = recover_scan(method, before, params);
        Architecture after_arch = recover_scan(method, after, params);
        push_similarity(report, "change", before_arch, after_arch);
        double value = a2a(before_arch, after_arch).value;
        long delta_ops = mto(before_arch, after_arch).total();

        if (source.strip_comments) {
            report.verdict = (corpus_identical && delta_ops == 0) ? "pass" : "fail";
            report.detail.push_back(
                "comments are stripped, so the edit must be invisible");
        } else {
            double floor = a2a_floor(before_arch, after_arch, budget.max_ops);
            push(report, "change", "a2aFloor", floor);
            report.verdict = value + 1e-9 >= floor ? "pass" : "fail";
            report.detail.push_back(
                "comments feed the corpus; the shift is judged against the budget");
        }
    } catch (...) {
        std::error_code ec;
        fs::remove_all(copy, ec);
        throw;
    }
    std::error_code ec;
    fs::remove_all(copy, ec);
    return report;
}

TrialReport continuity_trial(Method method, const TrialSystem& system,
                             const MethodParams& params,
                             const std::vector<MoveStep>& script) {
    std::vector<TrialSystem> states;
    states.push_back(system);
    TrialSystem current = system;
    std::vector<std::string> moves;
    for (const auto& step : script) {
        TrialMember& m = current.member(step.entity);
        moves.push_back("moved " + step.entity + " from '" + m.package + "' to '" +
                        step.to_package + "'");
        m.package = step.to_package;
        states.push_back(current);
    }

    std::vector<Architecture> archs;
    archs.reserve(states.size());
    for (const auto& state : states) {
        archs.push_back(recover_trial_system(method, state, params));
    }

    TrialReport report;
    report.method = method_name(method);
    report.kind = "continuity";
    echo_params(method, params, report.config);
    report.config["moves"] = std::to_string(script.size());
    report.detail = moves;

    const Architecture& final_arch = archs.back();
    bool monotone = true;
    double previous = -1.0;
    for (std::size_t i = 0; i < archs.size(); ++i) {
        double value = a2a(archs[i], final_arch).value;
        push(report, "step" + std::to_string(i), "a2aToFinal", value);
        if (i > 0 && value + 1e-9 < previous) monotone = false;
        previous = value;
    }
    if (method == Method::Acdc) {
        // Renaming a node can flip lexicographic tie-breaks in the
        // dominator pass, so the series is reported without judgement.
        report.verdict = "info";
        report.detail.push_back("structural clustering; series reported, not judged");
    } else {
        report.verdict = monotone ? "pass" : "fail";
        if (!monotone) {
            report.detail.push_back("similarity to the final state moved backwards");
        }
    }
    return report;
}

TrialReport isolation_trial(Method method, const TrialSystem& system,
                            const MethodParams& params,
                            const LocalizedChange& change) {
    TrialSystem after = system;
    std::string touched = change.package;
    std::string description;

    if (change.kind == "entity-add") {
        if (after.has_member(change.entity)) {
            throw Error(Error::Kind::Validation,
                        "member already exists: " + change.entity);
        }
        after.members.push_back({change.entity, change.package, {}});
        description = "added " + change.entity;
    } else if (change.kind == "entity-remove") {
        const TrialMember& m = system.member(change.entity);
        if (touched.empty()) touched = m.package;
        after.members.erase(
            std::remove_if(after.members.begin(), after.members.end(),
                           [&](const TrialMember& x) { return x.name == change.entity; }),
            after.members.end());
        after.edges.erase(
            std::remove_if(after.edges.begin(), after.edges.end(),
                           [&](const std::pair<std::string, std::string>& e) {
                               return e.first == change.entity ||
                                      e.second == change.entity;
                           }),
            after.edges.end());
        description = "removed " + change.entity;
    } else if (change.kind == "doc-edit") {
        TrialMember& m = after.member(change.entity);
        if (touched.empty()) touched = m.package;
        if (m.document.empty()) {
            m.document["edited"] = 1;
        } else {
            m.document.begin()->second += 1;
        }
        description = "edited the document of " + change.entity;
    } else if (change.kind == "none") {
        description = "no change (control)";
        if (touched.empty()) touched = "<none>";
    } else {
        throw Error(Error::Kind::Config, "unknown change kind: '" + change.kind + "'");
    }

    Architecture before_arch = recover_trial_system(method, system, params);
    Architecture after_arch = recover_trial_system(method, after, params);

    std::map<std::string, std::string> before_pkg, after_pkg;
    for (const auto& m : system.members) before_pkg[m.name] = m.package;
    for (const auto& m : after.members) after_pkg[m.name] = m.package;

    std::set<std::set<std::string>> before_sets, after_sets;
    for (const auto& [name, ids] : before_arch.clusters()) before_sets.insert(ids);
    for (const auto& [name, ids] : after_arch.clusters()) after_sets.insert(ids);

    long differing = 0;
    long contained = 0;
    auto scan_side = [&](const Architecture& arch,
                         const std::set<std::set<std::string>>& other,
                         const std::map<std::string, std::string>& packages,
                         const char* side, TrialReport& report) {
        for (const auto& [name, ids] : arch.clusters()) {
            if (other.count(ids)) continue;
            ++differing;
            bool touches = false;
            for (const auto& id : ids) {
                auto it = packages.find(id);
                if (it != packages.end() && it->second == touched) {
                    touches = true;
                    break;
                }
            }
            if (touches) ++contained;
            report.detail.push_back(std::string(side) + " cluster differs: " + name +
                                    (touches ? "" : " (outside the changed package)"));
        }
    };

    TrialReport report;
    report.method = method_name(method);
    report.kind = "isolation";
    echo_params(method, params, report.config);
    report.config["change"] = change.kind;
    report.config["package"] = touched;
    report.detail.push_back(description);
    scan_side(before_arch, after_sets, before_pkg, "before", report);
    scan_side(after_arch, before_sets, after_pkg, "after", report);
    push(report, "clusters", "differing", static_cast<double>(differing));
    push(report, "clusters", "withinChangedPackage", static_cast<double>(contained));
    report.verdict = differing == contained ? "pass" : "fail";
    return report;
}

namespace {

Architecture recover_version(Method method, const VersionInput& version,
                             const MethodParams& params) {
    switch (method) {
        case Method::Pkg: {
            EntitySet entities;
            for (const auto& id : version.graph.nodes()) entities.add(make_entity(id));
            for (const auto& [id, doc] : version.corpus.documents) {
                if (!entities.contains(id)) entities.add(make_entity(id));
            }
            return recover_pkg(entities);
        }
        case Method::Acdc:
            return recover_acdc(version.graph, params.acdc);
        case Method::Arc:
            return recover_arc(version.corpus, version.graph, params.arc).architecture;
    }
    throw Error(Error::Kind::Config, "unknown recovery method");
}

}  // namespace

StudyResult evolution_study(const std::vector<VersionInput>& versions, Method method,
                            TopicScope scope, const MethodParams& params,
                            const CvgParams& cvg_params) {
    if (versions.size() < 2) {
        throw Error(Error::Kind::Validation,
                    "evolution study needs at least two versions");
    }
    std::set<std::string> labels;
    for (const auto& v : versions) {
        if (!valid_identifier(v.label)) {
            throw Error(Error::Kind::Validation, "invalid version label: '" + v.label + "'");
        }
        if (!labels.insert(v.label).second) {
            throw Error(Error::Kind::Validation, "duplicate version label: " + v.label);
        }
    }

    StudyResult result;
    TrialReport& report = result.report;
    report.method = method_name(method);
    report.kind = "evolution-study";
    report.verdict = "info";
    echo_params(method, params, report.config);
    report.config["topicScope"] =
        scope == TopicScope::Shared ? "shared" : "per-version";
    report.config["threshold"] = format_number(cvg_params.threshold);
    report.config["versions"] = std::to_string(versions.size());

    if (method == Method::Arc && scope == TopicScope::Shared) {
        Corpus merged;
        for (const auto& v : versions) {
            for (const auto& [id, doc] : v.corpus.documents) {
                merged.documents[v.label + "::" + id] = doc;
            }
        }
        LdaParams lda_params;
        lda_params.topics = params.arc.topics;
        lda_params.alpha = params.arc.alpha;
        lda_params.beta = params.arc.beta;
        lda_params.iterations = params.arc.iterations;
        lda_params.seed = params.arc.seed;
        TopicModel model = fit_lda(merged, lda_params);
        for (const auto& warning : model.warnings) report.detail.push_back(warning);

        for (const auto& v : versions) {
            try {
                TopicModel view = model;
                view.doc_topic.clear();
                for (const auto& [id, doc] : v.corpus.documents) {
                    view.doc_topic[id] = model.doc_topic.at(v.label + "::" + id);
                }
                auto features = build_features(view, v.graph, params.arc.lambda);
                std::size_t k = params.arc.clusters != 0
                                    ? params.arc.clusters
                                    : default_cluster_count(features.size());
                result.version_architectures[v.label] = cluster_entities(
                    features, k, static_cast<std::size_t>(model.topics));
            } catch (const Error& e) {
                report.detail.push_back("version " + v.label + " failed: " + e.what());
            }
        }
    } else {
        for (const auto& v : versions) {
            try {
                result.version_architectures[v.label] =
                    recover_version(method, v, params);
            } catch (const Error& e) {
                report.detail.push_back("version " + v.label + " failed: " + e.what());
            }
        }
    }

    for (const auto& v : versions) {
        auto it = result.version_architectures.find(v.label);
        push(report, v.label, "recovered",
             it == result.version_architectures.end() ? 0.0 : 1.0);
        if (it == result.version_architectures.end()) continue;
        push(report, v.label, "clusters",
             static_cast<double>(it->second.cluster_count()));
        push(report, v.label, "entities",
             static_cast<double>(it->second.entity_count()));
    }
    for (std::size_t i = 1; i < versions.size(); ++i) {
        const std::string& prev = versions[i - 1].label;
        const std::string& next = versions[i].label;
        auto a = result.version_architectures.find(prev);
        auto b = result.version_architectures.find(next);
        if (a == result.version_architectures.end() ||
            b == result.version_architectures.end()) {
            continue;
        }
        std::string label = prev + "->" + next;
        push(report, label, "a2a", a2a(a->second, b->second).value);
        push(report, label, "cvgForward", cvg(a->second, b->second, cvg_params).value);
        push(report, label, "cvgBackward", cvg(b->second, a->second, cvg_params).value);
    }
    return result;
}

TrialReport criteria_scorecard(Method method, const TrialSystem& system,
                               const MethodParams& params) {
    system.validate();
    TrialReport report;
    report.method = method_name(method);
    report.kind = "criteria-scorecard";
    report.verdict = "info";
    echo_params(method, params, report.config);

    switch (method) {
        case Method::Pkg:
            report.detail.push_back(
                "RQ1 output: package view; mirrors code structure rather than an "
                "intended architecture");
            break;
        case Method::Acdc:
            report.detail.push_back(
                "RQ1 output: component view grouped under subgraph dominators");
            break;
        case Method::Arc:
            report.detail.push_back(
                "RQ1 output: concern-oriented view from topic and dependency features");
            break;
    }

    auto started = std::chrono::steady_clock::now();
    Architecture arch;
    bool feasible = true;
    try {
        arch = recover_trial_system(method, system, params);
    } catch (const Error& e) {
        if (e.kind() != Error::Kind::ResourceLimit) throw;
        feasible = false;
        report.detail.push_back(std::string("RQ2 feasibility: resource limit: ") +
                                e.what());
    }
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    struct rusage usage {};
    getrusage(RUSAGE_SELF, &usage);
    push(report, "RQ2", "feasible", feasible ? 1.0 : 0.0);
    push(report, "RQ2", "wallMillis", elapsed);
    push(report, "RQ2", "peakRssKb", static_cast<double>(usage.ru_maxrss));
    if (!feasible) return report;
    push(report, "RQ2", "clusters", static_cast<double>(arch.cluster_count()));
    report.detail.push_back("RQ2 feasibility: completed");

    switch (method) {
        case Method::Pkg:
            report.detail.push_back("RQ3 clarity: clusters carry package names");
            break;
        case Method::Acdc:
            report.detail.push_back(
                "RQ3 clarity: clusters carry dominator names; no rationale per member");
            break;
        case Method::Arc:
            report.detail.push_back(
                "RQ3 clarity: clusters are numbered; concern labels live in the "
                "concern report");
            break;
    }

    TrialReport determinism = determinism_trial(method, system, params, 3);
    push(report, "RQ4", "pass", determinism.verdict == "pass" ? 1.0 : 0.0);
    report.detail.push_back("RQ4 determinism: " + determinism.verdict);

    std::string probe = "probe";
    while (system.has_member(probe)) probe += "x";
    Perturbation addition;
    addition.kind = "entity-add";
    addition.target = probe;
    addition.package = system.members.front().package;
    TrialReport proportionality =
        proportionality_trial(method, system, params, addition, {});
    push(report, "RQ5", "pass", proportionality.verdict == "pass" ? 1.0 : 0.0);
    report.detail.push_back("RQ5 proportionality: " + proportionality.verdict);

    std::vector<MoveStep> script;
    std::string destination = "movedprobe";
    script.push_back({system.members.front().name, destination});
    if (system.members.size() > 1) script.push_back({system.members[1].name, destination});
    TrialReport continuity = continuity_trial(method, system, params, script);
    push(report, "RQ6", "pass", continuity.verdict == "pass" ? 1.0 : 0.0);
    report.detail.push_back("RQ6 continuity: " + continuity.verdict);

    LocalizedChange edit;
    edit.kind = "doc-edit";
    edit.entity = system.members.front().name;
    TrialReport isolation = isolation_trial(method, system, params, edit);
    push(report, "RQ7", "pass", isolation.verdict == "pass" ? 1.0 : 0.0);
    report.detail.push_back("RQ7 isolation: " + isolation.verdict);

    return report;
}

}  // namespace archrec
