#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "archrec/corpus.hpp"
#include "archrec/extract.hpp"
#include "archrec/harness.hpp"
#include "archrec/metrics.hpp"
#include "archrec/model.hpp"
#include "archrec/recover_acdc.hpp"
#include "archrec/recover_arc.hpp"
#include "archrec/recover_pkg.hpp"
#include "archrec/rsf.hpp"
#include "archrec/smells.hpp"
#include "archrec/tokenize.hpp"

namespace {

using namespace archrec;

unsigned long long env_default_seed() {
    const char* env = std::getenv("ARCHREC_SEED");
    if (env == nullptr || *env == '\0') return 1;
    errno = 0;
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0') {
        throw Error(Error::Kind::Config,
                    std::string("invalid ARCHREC_SEED value: '") + env + "'");
    }
    return value;
}

bool has_json_extension(const std::string& path) {
    return std::filesystem::path(path).extension() == ".json";
}

void write_architecture(const std::string& path, const Architecture& arch) {
    write_text_file(path, has_json_extension(path) ? arch_to_json(arch)
                                                   : serialize_arch(arch));
}

void print_fixed(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.3f", value);
    std::cout << buffer << "\n";
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

nlohmann::json ops_to_json(const TransformOps& ops) {
    return {{"addC", ops.add_c}, {"remC", ops.rem_c}, {"addE", ops.add_e},
            {"remE", ops.rem_e}, {"movE", ops.mov_e}, {"total", ops.total()}};
}

nlohmann::json load_json_file(const std::string& path) {
    std::string text = read_text_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Error::Kind::Parse, path + ": " + e.what());
    }
}

std::string format_double(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// ---- extract ----------------------------------------------------------

struct ExtractArgs {
    std::string src;
    std::string out;
    std::string corpus_out;
    std::vector<std::string> extensions{"java"};
    bool strip_comments = false;
    bool strip_license = false;
    bool no_stem = false;
    std::string system_name;
    std::string stopwords;
};

void run_extract(const ExtractArgs& args) {
    ScanOptions options;
    options.file_extensions = std::set<std::string>(args.extensions.begin(),
                                                    args.extensions.end());
    options.strip_comments = args.strip_comments;
    options.strip_license_header = args.strip_license;
    options.stem = !args.no_stem;
    options.stops = build_stopword_set(default_general_stopwords(), args.stopwords,
                                       args.system_name);
    ScanResult result = scan_source_tree(args.src, options);
    print_warnings(result.warnings);
    write_text_file(args.out, serialize_deps(result.graph));
    write_text_file(args.corpus_out, corpus_to_json(result.corpus));
    long tokens = 0;
    for (const auto& [id, doc] : result.corpus.documents) {
        for (const auto& [token, count] : doc) tokens += count;
    }
    std::cout << "entities " << result.entities.size() << " edges "
              << result.graph.edge_count() << " tokens " << tokens << "\n";
}

// ---- recover ----------------------------------------------------------

EntitySet entities_from_graph(const DependencyGraph& graph) {
    EntitySet entities;
    for (const auto& id : graph.nodes()) entities.add(make_entity(id));
    return entities;
}

void run_recover_pkg(const std::string& deps, const std::string& out) {
    DependencyGraph graph = parse_deps_rsf(read_text_file(deps));
    write_architecture(out, recover_pkg(entities_from_graph(graph)));
}

void run_recover_acdc(const std::string& deps, const std::string& out,
                      std::size_t max_entities) {
    DependencyGraph graph = parse_deps_rsf(read_text_file(deps));
    AcdcParams params;
    params.max_entities = max_entities;
    write_architecture(out, recover_acdc(graph, params));
}

struct ArcArgs {
    std::string deps;
    std::string corpus;
    std::string out;
    std::string concerns;
    ArcParams params;
};

void run_recover_arc(const ArcArgs& args) {
    DependencyGraph graph = parse_deps_rsf(read_text_file(args.deps));
    Corpus corpus = corpus_from_json(read_text_file(args.corpus));
    ArcResult result = recover_arc(corpus, graph, args.params);
    print_warnings(result.model.warnings);
    write_architecture(args.out, result.architecture);
    if (!args.concerns.empty()) {
        std::map<std::string, std::string> echo;
        echo["method"] = "arc";
        echo["topics"] = std::to_string(result.model.topics);
        echo["clusters"] = std::to_string(result.architecture.cluster_count());
        echo["seed"] = std::to_string(args.params.seed);
        echo["alpha"] = format_double(result.model.alpha);
        echo["beta"] = format_double(result.model.beta);
        echo["iterations"] = std::to_string(result.model.iterations);
        echo["lambda"] = format_double(args.params.lambda);
        echo["topWords"] = std::to_string(args.params.top_words);
        write_text_file(args.concerns,
                        concerns_to_json(result.concerns, result.model, echo));
    }
}

// ---- compare ----------------------------------------------------------

void run_compare(const std::string& metric, const std::string& path_a,
                 const std::string& path_b, double threshold, bool as_json) {
    Architecture a = load_architecture(path_a);
    Architecture b = load_architecture(path_b);
    if (metric == "a2a") {
        SimilarityResult r = a2a(a, b);
        if (as_json) {
            nlohmann::json j{{"metric", "a2a"}, {"value", r.value}};
            if (r.ops) j["ops"] = ops_to_json(*r.ops);
            std::cout << j.dump(2) << "\n";
        } else {
            print_fixed(r.value);
        }
    } else if (metric == "mojofm") {
        SimilarityResult r = mojofm(a, b);
        if (as_json) {
            nlohmann::json j{{"metric", "mojofm"},
                             {"value", r.value},
                             {"mojo", mojo_distance(a, b)},
                             {"maxMojo", max_mojo_distance(b)}};
            std::cout << j.dump(2) << "\n";
        } else {
            print_fixed(r.value);
        }
    } else {
        CvgParams params{threshold};
        SimilarityResult forward = cvg(a, b, params);
        SimilarityResult backward = cvg(b, a, params);
        if (as_json) {
            nlohmann::json j{{"metric", "cvg"}, {"threshold", threshold}};
            j["aToB"] = {{"value", forward.value},
                         {"similarClusters", forward.matched ? *forward.matched
                                                             : std::set<std::string>{}}};
            j["bToA"] = {{"value", backward.value},
                         {"similarClusters", backward.matched
                                                 ? *backward.matched
                                                 : std::set<std::string>{}}};
            std::cout << j.dump(2) << "\n";
        } else {
            char buffer[64];
            std::snprintf(buffer, sizeof(buffer), "%.3f", forward.value);
            std::cout << "a->b " << buffer << "\n";
            std::snprintf(buffer, sizeof(buffer), "%.3f", backward.value);
            std::cout << "b->a " << buffer << "\n";
        }
    }
}

// ---- smells -----------------------------------------------------------

void run_smells(const std::string& arch_path, const std::string& concerns_path,
                const SmellThresholds& thresholds) {
    Architecture arch = load_architecture(arch_path);
    ConcernFile file = concerns_from_json(read_text_file(concerns_path));
    std::vector<SmellFinding> findings =
        detect_concern_overload(file.concerns, file.topic_word, thresholds);
    std::vector<SmellFinding> scattered =
        detect_scattered_parasitic(arch, file.concerns, file.topic_word, thresholds);
    findings.insert(findings.end(), scattered.begin(), scattered.end());
    std::cout << smell_findings_to_json(findings, thresholds);
}

// ---- evaluate ---------------------------------------------------------

TrialSystem parse_trial_system(const nlohmann::json& config) {
    if (!config.contains("system")) {
        throw Error(Error::Kind::Config, "trial config needs a 'system' section");
    }
    const nlohmann::json& section = config.at("system");
    TrialSystem system;
    for (const auto& m : section.value("members", nlohmann::json::array())) {
        TrialMember member;
        member.name = m.at("name").get<std::string>();
        member.package = m.value("package", std::string());
        if (m.contains("document")) {
            for (const auto& [token, count] : m.at("document").items()) {
                member.document[token] = count.get<long>();
            }
        }
        system.members.push_back(std::move(member));
    }
    for (const auto& e : section.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2) {
            throw Error(Error::Kind::Config,
                        "each edge must be a [from, to] pair");
        }
        system.edges.emplace_back(e.at(0).get<std::string>(),
                                  e.at(1).get<std::string>());
    }
    system.validate();
    return system;
}

MethodParams parse_method_params(const nlohmann::json& config,
                                 unsigned long long default_seed) {
    MethodParams params;
    params.arc.seed = default_seed;
    if (!config.contains("params")) return params;
    const nlohmann::json& p = config.at("params");
    params.arc.topics = p.value("topics", params.arc.topics);
    params.arc.clusters =
        static_cast<std::size_t>(p.value("clusters", static_cast<long>(0)));
    params.arc.seed = p.value("seed", params.arc.seed);
    params.arc.alpha = p.value("alpha", params.arc.alpha);
    params.arc.beta = p.value("beta", params.arc.beta);
    params.arc.iterations = p.value("iterations", params.arc.iterations);
    params.arc.lambda = p.value("lambda", params.arc.lambda);
    params.arc.top_words = p.value("topWords", params.arc.top_words);
    auto cap = static_cast<std::size_t>(p.value("maxEntities", static_cast<long>(0)));
    params.arc.max_entities = cap;
    params.acdc.max_entities = cap;
    return params;
}

SourceSpec parse_source_spec(const nlohmann::json& config) {
    if (!config.contains("source")) {
        throw Error(Error::Kind::Config,
                    "this perturbation needs a 'source' section in the trial config");
    }
    const nlohmann::json& s = config.at("source");
    SourceSpec spec;
    spec.root = s.at("root").get<std::string>();
    if (s.contains("ext")) {
        spec.extensions.clear();
        for (const auto& e : s.at("ext")) spec.extensions.insert(e.get<std::string>());
    }
    spec.strip_comments = s.value("stripComments", false);
    spec.strip_license = s.value("stripLicense", false);
    spec.system_name = s.value("systemName", std::string());
    spec.stopword_file = s.value("stopwords", std::string());
    return spec;
}

void run_evaluate(const std::string& kind, const std::string& method_str,
                  const std::string& config_path, const std::string& out_path,
                  unsigned long long default_seed) {
    Method method = method_from_name(method_str);
    nlohmann::json config = load_json_file(config_path);
    MethodParams params = parse_method_params(config, default_seed);

    TrialReport report;
    if (kind == "determinism") {
        int runs = config.value("runs", 5);
        std::vector<unsigned long long> seeds;
        for (const auto& s : config.value("seeds", nlohmann::json::array())) {
            seeds.push_back(s.get<unsigned long long>());
        }
        report = determinism_trial(method, parse_trial_system(config), params, runs,
                                   seeds);
    } else if (kind == "proportionality") {
        if (!config.contains("perturbation")) {
            throw Error(Error::Kind::Config,
                        "trial config needs a 'perturbation' section");
        }
        const nlohmann::json& p = config.at("perturbation");
        Perturbation perturbation;
        perturbation.kind = p.value("kind", std::string());
        perturbation.target = p.value("target", std::string());
        perturbation.package = p.value("package", std::string());
        perturbation.to_package = p.value("toPackage", std::string());
        ProportionalityBudget budget;
        budget.max_ops =
            config.value("budget", nlohmann::json::object()).value("maxOps", 4.0);
        if (perturbation.kind == "comment-char-edit") {
            report = comment_edit_trial(method, parse_source_spec(config), params,
                                        budget);
        } else {
            report = proportionality_trial(method, parse_trial_system(config), params,
                                           perturbation, budget);
        }
    } else if (kind == "continuity") {
        std::vector<MoveStep> script;
        for (const auto& m : config.value("moves", nlohmann::json::array())) {
            script.push_back({m.at("entity").get<std::string>(),
                              m.value("to", std::string())});
        }
        report = continuity_trial(method, parse_trial_system(config), params, script);
    } else if (kind == "isolation") {
        if (!config.contains("change")) {
            throw Error(Error::Kind::Config, "trial config needs a 'change' section");
        }
        const nlohmann::json& c = config.at("change");
        LocalizedChange change;
        change.kind = c.value("kind", std::string());
        change.entity = c.value("entity", std::string());
        change.package = c.value("package", std::string());
        report = isolation_trial(method, parse_trial_system(config), params, change);
    } else {
        report = criteria_scorecard(method, parse_trial_system(config), params);
    }

    std::string text = trial_report_to_json(report);
    std::cout << text;
    if (!out_path.empty()) write_text_file(out_path, text);
}

// ---- study ------------------------------------------------------------

std::string version_label(std::string dir) {
    while (!dir.empty() && (dir.back() == '/' || dir.back() == '\\')) dir.pop_back();
    std::string label = std::filesystem::path(dir).filename().string();
    return label.empty() ? dir : label;
}

void run_study(const std::vector<std::string>& dirs, const std::string& method_str,
               const std::string& scope_str, const std::string& out_path,
               double threshold, const ArcParams& arc_params) {
    Method method = method_from_name(method_str);
    TopicScope scope;
    if (scope_str == "per-version") {
        scope = TopicScope::PerVersion;
    } else if (scope_str == "shared") {
        scope = TopicScope::Shared;
    } else {
        throw Error(Error::Kind::Config,
                    "unknown topic scope: '" + scope_str + "' (per-version | shared)");
    }

    std::vector<VersionInput> versions;
    for (const auto& dir : dirs) {
        VersionInput version;
        version.label = version_label(dir);
        std::filesystem::path deps = std::filesystem::path(dir) / "deps.rsf";
        std::filesystem::path corpus = std::filesystem::path(dir) / "corpus.json";
        if (std::filesystem::exists(deps)) {
            version.graph = parse_deps_rsf(read_text_file(deps.string()));
            if (std::filesystem::exists(corpus)) {
                version.corpus = corpus_from_json(read_text_file(corpus.string()));
            }
        } else {
            ScanOptions options;
            options.stops = build_stopword_set(default_general_stopwords());
            ScanResult scan = scan_source_tree(dir, options);
            print_warnings(scan.warnings);
            version.graph = scan.graph;
            version.corpus = scan.corpus;
        }
        versions.push_back(std::move(version));
    }

    MethodParams params;
    params.arc = arc_params;
    params.acdc.max_entities = arc_params.max_entities;
    StudyResult result =
        evolution_study(versions, method, scope, params, CvgParams{threshold});

    std::string report_text = trial_report_to_json(result.report);
    std::cout << report_text;
    if (!out_path.empty()) {
        nlohmann::json study;
        study["report"] = nlohmann::json::parse(report_text);
        auto architectures = nlohmann::json::object();
        for (const auto& [label, arch] : result.version_architectures) {
            architectures[label] = nlohmann::json::parse(arch_to_json(arch));
        }
        study["architectures"] = std::move(architectures);
        write_text_file(out_path, study.dump(2) + "\n");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"architecture recovery workbench"};
    app.require_subcommand(1);

    try {
        unsigned long long default_seed = env_default_seed();

        // extract
        ExtractArgs extract_args;
        CLI::App* extract = app.add_subcommand(
            "extract", "scan a source tree into deps.rsf and corpus.json");
        extract->add_option("--src", extract_args.src, "source tree root")->required();
        extract->add_option("--ext", extract_args.extensions,
                            "file extensions to scan (default: java)")
            ->delimiter(',');
        extract->add_option("--out", extract_args.out, "dependency RSF output")
            ->required();
        extract->add_option("--corpus", extract_args.corpus_out, "corpus JSON output")
            ->required();
        extract->add_flag("--strip-comments", extract_args.strip_comments,
                          "drop comments before tokenizing");
        extract->add_flag("--strip-license", extract_args.strip_license,
                          "drop a leading license header before tokenizing");
        extract->add_flag("--no-stem", extract_args.no_stem, "skip Porter stemming");
        extract->add_option("--system-name", extract_args.system_name,
                            "system name whose tokens become stop words");
        extract->add_option("--stopwords", extract_args.stopwords,
                            "extra stop words, one per line");
        extract->callback([&] { run_extract(extract_args); });

        // recover
        CLI::App* recover = app.add_subcommand("recover", "recover an architecture");
        recover->require_subcommand(1);

        std::string pkg_deps, pkg_out;
        CLI::App* pkg = recover->add_subcommand("pkg", "one cluster per package");
        pkg->add_option("--deps", pkg_deps, "dependency RSF input")->required();
        pkg->add_option("--out", pkg_out, "architecture output")->required();
        pkg->callback([&] { run_recover_pkg(pkg_deps, pkg_out); });

        std::string acdc_deps, acdc_out;
        std::size_t acdc_cap = 0;
        CLI::App* acdc = recover->add_subcommand(
            "acdc", "subgraph-dominator clustering with orphan adoption");
        acdc->add_option("--deps", acdc_deps, "dependency RSF input")->required();
        acdc->add_option("--out", acdc_out, "architecture output")->required();
        acdc->add_option("--max-entities", acdc_cap, "refuse larger systems");
        acdc->callback([&] { run_recover_acdc(acdc_deps, acdc_out, acdc_cap); });

        ArcArgs arc_args;
        arc_args.params.seed = default_seed;
        CLI::App* arc = recover->add_subcommand(
            "arc", "concern-based clustering from topics and dependencies");
        arc->add_option("--deps", arc_args.deps, "dependency RSF input")->required();
        arc->add_option("--corpus", arc_args.corpus, "corpus JSON input")->required();
        arc->add_option("--out", arc_args.out, "architecture output")->required();
        arc->add_option("--concerns", arc_args.concerns, "concern report output");
        arc->add_option("--topics", arc_args.params.topics, "topic count K");
        arc->add_option("--clusters", arc_args.params.clusters,
                        "cluster count (0 picks a size-based default)");
        arc->add_option("--seed", arc_args.params.seed, "sampler seed");
        arc->add_option("--alpha", arc_args.params.alpha,
                        "document-topic prior (negative picks 50/K)");
        arc->add_option("--beta", arc_args.params.beta, "topic-word prior");
        arc->add_option("--iterations", arc_args.params.iterations, "Gibbs sweeps");
        arc->add_option("--lambda", arc_args.params.lambda,
                        "structural feature weight in [0,1]");
        arc->add_option("--top-words", arc_args.params.top_words,
                        "words listed per topic in the concern report");
        arc->add_option("--max-entities", arc_args.params.max_entities,
                        "refuse larger systems");
        arc->callback([&] { run_recover_arc(arc_args); });

        // compare
        CLI::App* compare = app.add_subcommand("compare", "compare two architectures");
        compare->require_subcommand(1);
        for (const std::string metric : {"a2a", "mojofm", "cvg"}) {
            auto state = std::make_shared<std::tuple<std::string, std::string, double,
                                                     bool>>("", "", 0.5, false);
            CLI::App* sub = compare->add_subcommand(
                metric, metric == "a2a"    ? "transform-operation similarity"
                        : metric == "mojofm" ? "move-join effectiveness"
                                             : "cluster coverage, both directions");
            sub->add_option("arch-a", std::get<0>(*state), "first architecture")
                ->required();
            sub->add_option("arch-b", std::get<1>(*state), "second architecture")
                ->required();
            if (metric == "cvg") {
                sub->add_option("--th", std::get<2>(*state),
                                "overlap threshold in (0,1)");
            }
            sub->add_flag("--json", std::get<3>(*state), "machine-readable output");
            sub->callback([state, metric] {
                run_compare(metric, std::get<0>(*state), std::get<1>(*state),
                            std::get<2>(*state), std::get<3>(*state));
            });
        }

        // smells
        std::string smells_arch, smells_concerns;
        SmellThresholds thresholds;
        CLI::App* smells = app.add_subcommand(
            "smells", "concern-based smell detection on a recovered architecture");
        smells->add_option("--arch", smells_arch, "architecture input")->required();
        smells->add_option("--concerns", smells_concerns, "concern report input")
            ->required();
        smells->add_option("--relevance-th", thresholds.relevance_th,
                           "minimum relevant topic weight");
        smells->add_option("--overload-th", thresholds.overload_th,
                           "relevant concerns tolerated per cluster");
        smells->add_option("--scatter-th", thresholds.scatter_th,
                           "clusters sharing a concern before it scatters");
        smells->add_option("--orthogonality-th", thresholds.orthogonality_th,
                           "divergence above which concerns are orthogonal");
        smells->add_option("--duplicate-th", thresholds.duplicate_th,
                           "divergence below which topics are duplicates");
        smells->callback([&] { run_smells(smells_arch, smells_concerns, thresholds); });

        // evaluate
        CLI::App* evaluate =
            app.add_subcommand("evaluate", "run a maintenance-criteria trial");
        evaluate->require_subcommand(1);
        for (const std::string kind : {"determinism", "proportionality", "continuity",
                                       "isolation", "scorecard"}) {
            auto state =
                std::make_shared<std::tuple<std::string, std::string, std::string>>(
                    "", "", "");
            CLI::App* sub = evaluate->add_subcommand(kind, kind + " trial");
            sub->add_option("--method", std::get<0>(*state), "pkg | acdc | arc")
                ->required();
            sub->add_option("--config", std::get<1>(*state), "trial config JSON")
                ->required();
            sub->add_option("--out", std::get<2>(*state), "also write the report here");
            sub->callback([state, kind, default_seed] {
                run_evaluate(kind, std::get<0>(*state), std::get<1>(*state),
                             std::get<2>(*state), default_seed);
            });
        }

        // study
        std::vector<std::string> study_dirs;
        std::string study_method = "arc";
        std::string study_scope = "per-version";
        std::string study_out;
        double study_th = 0.5;
        ArcParams study_params;
        study_params.seed = default_seed;
        CLI::App* study =
            app.add_subcommand("study", "version-over-version evolution study");
        study->add_option("--versions", study_dirs,
                          "version directories, oldest first")
            ->delimiter(',')
            ->required();
        study->add_option("--method", study_method, "pkg | acdc | arc");
        study->add_option("--topic-scope", study_scope, "per-version | shared");
        study->add_option("--out", study_out, "study JSON output");
        study->add_option("--th", study_th, "cvg overlap threshold");
        study->add_option("--topics", study_params.topics, "topic count K");
        study->add_option("--clusters", study_params.clusters,
                          "cluster count (0 picks a size-based default)");
        study->add_option("--seed", study_params.seed, "sampler seed");
        study->add_option("--iterations", study_params.iterations, "Gibbs sweeps");
        study->add_option("--lambda", study_params.lambda,
                          "structural feature weight in [0,1]");
        study->add_option("--max-entities", study_params.max_entities,
                          "refuse larger systems");
        study->callback([&] {
            run_study(study_dirs, study_method, study_scope, study_out, study_th,
                      study_params);
        });

        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        nlohmann::json j{{"error", {{"category", e.category()}, {"message", e.what()}}}};
        std::cerr << j.dump() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        nlohmann::json j{{"error", {{"category", "parse"}, {"message", e.what()}}}};
        std::cerr << j.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        nlohmann::json j{{"error", {{"category", "internal"}, {"message", e.what()}}}};
        std::cerr << j.dump() << "\n";
        return 1;
    }
    return 0;
}
