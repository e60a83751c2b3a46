// End-to-end acceptance checks. Each criterion prints exactly one
// PASS/FAIL line; run with an argument 1..10 to select a single one.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unistd.h>
#include <vector>

#include "archrec/extract.hpp"
#include "archrec/harness.hpp"
#include "archrec/lda.hpp"
#include "archrec/metrics.hpp"
#include "archrec/recover_acdc.hpp"
#include "archrec/recover_arc.hpp"
#include "archrec/recover_pkg.hpp"
#include "archrec/rsf.hpp"
#include "archrec/smells.hpp"
#include "archrec/tokenize.hpp"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

using namespace archrec;
namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.3f", v);
    return buffer;
}

Architecture arch_of(std::initializer_list<
                     std::pair<const char*, std::set<std::string>>> clusters) {
    Architecture::ClusterMap map;
    for (const auto& [name, members] : clusters) map[name] = members;
    return Architecture(std::move(map));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

struct TempTree {
    fs::path root;
    explicit TempTree(const std::string& tag) {
        root = fs::temp_directory_path() /
               ("archrec-accept-" + tag + "-" + std::to_string(::getpid()));
        fs::remove_all(root);
        fs::create_directories(root);
    }
    ~TempTree() {
        std::error_code ec;
        fs::remove_all(root, ec);
    }
};

double report_value(const TrialReport& report, const std::string& label,
                    const std::string& metric) {
    for (const auto& m : report.measurements) {
        if (m.label == label && m.metric == metric) return m.value;
    }
    throw std::runtime_error("missing measurement " + label + "/" + metric);
}

bool report_has(const TrialReport& report, const std::string& metric) {
    return std::any_of(report.measurements.begin(), report.measurements.end(),
                       [&](const Measurement& m) { return m.metric == metric; });
}

// 1. Production metrics match exhaustive-search oracles on random pairs.
bool criterion_1(std::string& note) {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240817);
    const std::vector<std::string> pool{"a", "b", "c", "d", "e", "f"};

    auto subset = [&](std::size_t n) {
        std::vector<std::string> items = pool;
        std::shuffle(items.begin(), items.end(), rng);
        items.resize(n);
        std::sort(items.begin(), items.end());
        return items;
    };

    std::map<std::string, testing::MojoDistanceTable> tables;
    int transform_pairs = 0;
    int mojo_pairs = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto u1 = subset(1 + rng() % pool.size());
        auto u2 = subset(1 + rng() % pool.size());
        Architecture a1 = testing::random_partition(rng, u1, 4);
        Architecture a2 = testing::random_partition(rng, u2, 4);
        long got = mto(a1, a2).total();
        long want = testing::oracle_min_transform_total(a1, a2);
        if (got != want) {
            note = "transform total " + std::to_string(got) + " but oracle found " +
                   std::to_string(want) + " on trial " + std::to_string(trial);
            return false;
        }
        ++transform_pairs;

        auto u = subset(1 + rng() % pool.size());
        Architecture b1 = testing::random_partition(rng, u, 4);
        Architecture b2 = testing::random_partition(rng, u, 4);
        std::string cache_key;
        for (const auto& e : u) cache_key += e;
        cache_key += "#" + testing::partition_key(b2);
        auto it = tables.find(cache_key);
        if (it == tables.end()) {
            it = tables.emplace(cache_key, testing::oracle_mojo_table(b2)).first;
        }
        long distance = mojo_distance(b1, b2);
        if (distance != it->second.distance_to_target(b1)) {
            note = "move-join distance " + std::to_string(distance) +
                   " disagrees with the oracle on trial " + std::to_string(trial);
            return false;
        }
        if (max_mojo_distance(b2) != it->second.max_distance) {
            note = "normalization denominator disagrees with the exhaustive maximum "
                   "on trial " + std::to_string(trial);
            return false;
        }
        ++mojo_pairs;
    }
    note = std::to_string(transform_pairs) + " transform pairs and " +
           std::to_string(mojo_pairs) + " move-join pairs match the oracles in " +
           fmt(seconds_since(start)) + "s";
    return true;
}

// 2. Hand-derived metric values reproduce exactly.
bool criterion_2(std::string& note) {
    Architecture abc = arch_of({{"X", {"a", "b", "c"}}});
    Architecture ab_c = arch_of({{"X", {"a", "b"}}, {"Y", {"c"}}});
    double split = a2a(abc, ab_c).value;
    if (std::fabs(split - 86.667) > 0.001) {
        note = "a2a on the split example gave " + fmt(split);
        return false;
    }

    Architecture xa = arch_of({{"X", {"a"}}});
    Architecture xab = arch_of({{"X", {"a", "b"}}});
    double grow = a2a(xa, xab).value;
    if (grow != 75.0) {
        note = "a2a on the growth example gave " + fmt(grow);
        return false;
    }

    Architecture left = arch_of({{"X", {"a", "b"}}, {"Y", {"c", "d"}}});
    Architecture right = arch_of({{"Xp", {"a", "b"}}, {"Z", {"e", "f"}}});
    double coverage = cvg(left, right, CvgParams{0.5}).value;
    if (coverage != 50.0) {
        note = "coverage on the half-matched example gave " + fmt(coverage);
        return false;
    }
    Architecture wide =
        arch_of({{"Xp", {"a", "b"}}, {"Z", {"e", "f"}}, {"W", {"g", "h"}}});
    double third = cvg(wide, left, CvgParams{0.5}).value;
    if (std::fabs(third - 100.0 / 3.0) > 1e-9) {
        note = "coverage on the three-cluster example gave " + fmt(third);
        return false;
    }

    Architecture singles =
        arch_of({{"Sa", {"a"}}, {"Sb", {"b"}}, {"Sc", {"c"}}});
    Architecture lump = arch_of({{"All", {"a", "b", "c"}}});
    double zero = mojofm(singles, lump).value;
    double half = mojofm(arch_of({{"A", {"a", "b"}}, {"C", {"c"}}}), lump).value;
    double full = mojofm(lump, lump).value;
    if (zero != 0.0 || half != 50.0 || full != 100.0) {
        note = "move-join scores gave " + fmt(zero) + "/" + fmt(half) + "/" +
               fmt(full) + " instead of 0/50/100";
        return false;
    }
    note = "a2a 86.667 and 75, coverage 50 and 33.333, move-join 0/50/100";
    return true;
}

// 3. Five repeated runs of every recoverer agree byte for byte.
bool criterion_3(std::string& note) {
    testing::SystemSpec spec;  // 200 entities, 10 packages
    TrialSystem system = testing::make_trial_system(spec);
    MethodParams params;
    params.arc.topics = 25;
    params.arc.iterations = 150;
    params.arc.seed = 7;

    for (Method method : {Method::Pkg, Method::Acdc, Method::Arc}) {
        std::vector<std::string> serialized;
        std::vector<Architecture> archs;
        for (int run = 0; run < 5; ++run) {
            Architecture a = recover_trial_system(method, system, params);
            serialized.push_back(serialize_arch(a));
            archs.push_back(std::move(a));
        }
        for (const auto& s : serialized) {
            if (s != serialized.front()) {
                note = method_name(method) + " produced differing serializations";
                return false;
            }
        }
        for (std::size_t i = 0; i < archs.size(); ++i) {
            for (std::size_t j = i + 1; j < archs.size(); ++j) {
                if (a2a(archs[i], archs[j]).value != 100.0 ||
                    mojofm(archs[i], archs[j]).value != 100.0) {
                    note = method_name(method) + " runs " + std::to_string(i + 1) +
                           " and " + std::to_string(j + 1) + " are not identical";
                    return false;
                }
            }
        }
        TrialReport report = determinism_trial(method, system, params, 5);
        if (report.verdict != "pass") {
            note = method_name(method) + " determinism verdict was " + report.verdict;
            return false;
        }
    }
    note = "pkg, acdc and arc each gave 5 byte-identical runs on 200 entities "
           "(pairwise a2a and move-join 100)";
    return true;
}

// 4. One edited comment character: invisible with comments stripped,
//    measured and reported with comments included.
bool criterion_4(std::string& note) {
    TempTree tree("comment");
    testing::TreeSpec spec;
    spec.entities = 24;
    spec.packages = 4;
    testing::write_source_tree(tree.root.string(), spec);

    MethodParams params;
    params.arc.topics = 10;
    params.arc.iterations = 80;
    params.arc.seed = 5;

    SourceSpec stripped;
    stripped.root = tree.root.string();
    stripped.strip_comments = true;
    for (Method method : {Method::Pkg, Method::Arc}) {
        TrialReport report = comment_edit_trial(method, stripped, params, {});
        if (report.verdict != "pass" ||
            report_value(report, "corpus", "identical") != 1.0 ||
            report_value(report, "change", "total") != 0.0) {
            note = method_name(method) +
                   " saw a delta although comments were stripped";
            return false;
        }
    }

    SourceSpec kept = stripped;
    kept.strip_comments = false;
    TrialReport report = comment_edit_trial(Method::Arc, kept, params, {});
    if (!report_has(report, "a2a") || !report_has(report, "mojofm")) {
        note = "comment-included run did not report both similarity deltas";
        return false;
    }
    note = "stripped-comment deltas are exactly 0 for pkg and arc; "
           "comment-included run reports a2a " +
           fmt(report_value(report, "change", "a2a")) + " and move-join " +
           fmt(report_value(report, "change", "mojofm"));
    return true;
}

// 5. Package recovery passes isolation, continuity and determinism.
bool criterion_5(std::string& note) {
    TrialSystem system;
    system.members.push_back({"x", "P", {}});
    system.members.push_back({"y", "P", {}});
    system.members.push_back({"z", "P", {}});
    system.members.push_back({"w", "Q", {}});

    LocalizedChange add;
    add.kind = "entity-add";
    add.entity = "v";
    add.package = "P";
    TrialReport isolation = isolation_trial(Method::Pkg, system, {}, add);
    if (isolation.verdict != "pass") {
        note = "isolation verdict was " + isolation.verdict;
        return false;
    }

    std::vector<MoveStep> script = {{"x", "Q"}, {"y", "Q"}};
    TrialReport continuity = continuity_trial(Method::Pkg, system, {}, script);
    const double expected[] = {90.0, 95.0, 100.0};
    if (continuity.verdict != "pass" || continuity.measurements.size() != 3) {
        note = "continuity verdict was " + continuity.verdict;
        return false;
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (std::fabs(continuity.measurements[i].value - expected[i]) > 1e-9) {
            note = "continuity series step " + std::to_string(i) + " gave " +
                   fmt(continuity.measurements[i].value);
            return false;
        }
    }

    TrialReport determinism = determinism_trial(Method::Pkg, system, {}, 5);
    if (determinism.verdict != "pass") {
        note = "determinism verdict was " + determinism.verdict;
        return false;
    }
    note = "isolation pass, continuity series exactly 90/95/100, determinism pass";
    return true;
}

// 6. A shared license header hijacks a topic; stop words cure it.
bool criterion_6(std::string& note) {
    const std::vector<std::string> header = {
        "licensed",   "license",  "apache",      "software",   "foundation",
        "contributor", "agreements", "notice",   "copyright",  "ownership",
        "compliance", "obtain",   "applicable",  "law",        "agreed",
        "writing",    "distributed", "basis",    "warranties", "conditions"};
    for (const auto& word : header) {
        if (!license_lexicon().count(word)) {
            note = "header word '" + word + "' missing from the license lexicon";
            return false;
        }
    }

    Corpus noisy, clean;
    for (std::size_t i = 0; i < 50; ++i) {
        std::string id = "doc" + std::to_string(i);
        std::size_t group = i % 5;
        for (const auto& word : header) noisy.documents[id][word] = 3;
        for (std::size_t k = 0; k < 10; ++k) {
            std::string word = testing::concern_word(group, k);
            noisy.documents[id][word] = 2;
            clean.documents[id][word] = 2;
        }
    }

    LdaParams params;
    params.topics = 10;
    params.seed = 1;
    params.iterations = 300;

    TopicModel dirty_model = fit_lda(noisy, params);
    const std::set<std::string> header_set(header.begin(), header.end());
    int dominated = -1;
    for (int k = 0; k < dirty_model.topics; ++k) {
        auto words = top_topic_words(dirty_model, k, 10);
        int hits = 0;
        for (const auto& w : words) hits += header_set.count(w) ? 1 : 0;
        if (hits >= 7) {
            dominated = k;
            break;
        }
    }
    if (dominated < 0) {
        note = "no topic had at least 7 of its top 10 words from the header";
        return false;
    }
    TopicAuditReport dirty_audit =
        topic_quality_audit(dirty_model, StopWordSet{}, license_lexicon(), 0.1, 10);
    bool flagged =
        std::find(dirty_audit.license_topics.begin(), dirty_audit.license_topics.end(),
                  dominated) != dirty_audit.license_topics.end();
    if (!flagged) {
        note = "the audit did not flag the header-dominated topic";
        return false;
    }

    TopicModel clean_model = fit_lda(clean, params);
    TopicAuditReport clean_audit =
        topic_quality_audit(clean_model, StopWordSet{}, license_lexicon(), 0.1, 10);
    if (!clean_audit.license_topics.empty()) {
        note = "a topic was still flagged after the header words became stop words";
        return false;
    }
    note = "topic " + std::to_string(dominated) +
           " is header-dominated and flagged; none flagged once the header words "
           "are stopped";
    return true;
}

// 7. Shared-scope topic models are study-scope sensitive; per-version
//    models are not.
bool criterion_7(std::string& note) {
    // Version vocabularies are disjoint blocks. v3's block holds three
    // internal word groups but only two clusters are requested, so one pair
    // of groups must merge; which pair lands closest in topic space depends
    // on the other versions the model was fitted with.
    auto make_version = [](const std::string& label, std::size_t block,
                           std::size_t docs, std::size_t groups, long count) {
        VersionInput v;
        v.label = label;
        for (std::size_t i = 0; i < docs; ++i) {
            std::string id = "n" + std::to_string(i);
            std::size_t group = i * groups / docs;
            for (std::size_t k = 0; k < 6; ++k) {
                v.corpus.documents[id]
                                  [testing::concern_word(block, group * 7 + k)] =
                    count;
            }
        }
        return v;
    };

    VersionInput v1 = make_version("v1", 0, 4, 1, 2);
    VersionInput v2 = make_version("v2", 1, 4, 1, 2);
    VersionInput v3 = make_version("v3", 2, 6, 3, 2);
    VersionInput v4 = make_version("v4", 3, 8, 2, 3);
    VersionInput v5 = make_version("v5", 4, 8, 2, 3);

    MethodParams params;
    params.arc.topics = 4;
    params.arc.clusters = 2;
    params.arc.iterations = 200;
    params.arc.seed = 3;
    params.arc.lambda = 0.0;

    StudyResult early = evolution_study({v1, v2, v3}, Method::Arc,
                                        TopicScope::Shared, params);
    StudyResult late = evolution_study({v3, v4, v5}, Method::Arc,
                                       TopicScope::Shared, params);
    const Architecture& early_v3 = early.version_architectures.at("v3");
    const Architecture& late_v3 = late.version_architectures.at("v3");
    double shared_similarity = a2a(early_v3, late_v3).value;
    if (shared_similarity >= 100.0) {
        note = "shared-scope recoveries of the middle version coincide (a2a 100)";
        return false;
    }

    StudyResult early_pv = evolution_study({v1, v2, v3}, Method::Arc,
                                           TopicScope::PerVersion, params);
    StudyResult late_pv = evolution_study({v3, v4, v5}, Method::Arc,
                                          TopicScope::PerVersion, params);
    double per_version_similarity =
        a2a(early_pv.version_architectures.at("v3"),
            late_pv.version_architectures.at("v3"))
            .value;
    if (per_version_similarity != 100.0) {
        note = "per-version recoveries of the middle version differ (a2a " +
               fmt(per_version_similarity) + ")";
        return false;
    }
    note = "shared scope shifts the middle version to a2a " +
           fmt(shared_similarity) + "; per-version scope stays at 100";
    return true;
}

// 8. Gibbs sweeps conserve token counts; distributions are normalized.
bool criterion_8(std::string& note) {
    Corpus corpus;
    std::mt19937_64 rng(31);
    for (std::size_t i = 0; i < 40; ++i) {
        std::string id = "d" + std::to_string(i);
        std::size_t group = i % 4;
        for (int t = 0; t < 15; ++t) {
            corpus.documents[id][testing::concern_word(group, rng() % 10)] += 1;
        }
    }
    long total_tokens = 0;
    for (const auto& [id, doc] : corpus.documents) {
        for (const auto& [w, c] : doc) total_tokens += c;
    }

    LdaParams params;
    params.topics = 8;
    params.iterations = 120;
    params.seed = 3;

    int sweeps = 0;
    bool conserved = true;
    TopicModel model = fit_lda(corpus, params, [&](const SweepStats& stats) {
        ++sweeps;
        conserved = conserved && stats.topic_count_sum == total_tokens &&
                    stats.doc_topic_count_sum == total_tokens &&
                    stats.topic_word_count_sum == total_tokens;
    });
    if (!conserved || sweeps != params.iterations) {
        note = "token counts were not conserved across all " +
               std::to_string(params.iterations) + " sweeps";
        return false;
    }

    for (const auto& [id, row] : model.doc_topic) {
        double sum = 0.0;
        for (double p : row) sum += p;
        if (std::fabs(sum - 1.0) > 1e-9) {
            note = "document-topic row for " + id + " sums to " + fmt(sum);
            return false;
        }
    }
    for (int k = 0; k < model.topics; ++k) {
        double sum = 0.0;
        for (double p : model.topic_word[k]) sum += p;
        if (std::fabs(sum - 1.0) > 1e-9) {
            note = "topic-word row " + std::to_string(k) + " sums to " + fmt(sum);
            return false;
        }
    }
    note = std::to_string(total_tokens) + " tokens conserved across " +
           std::to_string(sweeps) + " sweeps; all distributions sum to 1";
    return true;
}

// 9. The full pipeline is feasible at 1000 entities / 5000 edges, and
//    entity caps degrade into structured errors.
bool criterion_9(std::string& note) {
    TempTree tree("large");
    testing::TreeSpec spec;
    spec.entities = 1000;
    spec.packages = 20;
    spec.imports_per_file = 5;
    spec.seed = 11;
    testing::write_source_tree(tree.root.string(), spec);

    auto start = std::chrono::steady_clock::now();
    ScanOptions options;
    options.stops = build_stopword_set(default_general_stopwords());
    ScanResult scan = scan_source_tree(tree.root.string(), options);
    if (scan.entities.size() != 1000 || scan.graph.edge_count() != 5000) {
        note = "scan found " + std::to_string(scan.entities.size()) +
               " entities and " + std::to_string(scan.graph.edge_count()) + " edges";
        return false;
    }

    Architecture by_package = recover_pkg(scan.entities);
    Architecture by_dominators = recover_acdc(scan.graph);
    ArcParams arc_params;
    arc_params.topics = 50;
    arc_params.iterations = 200;
    arc_params.seed = 4;
    Architecture by_concerns =
        recover_arc(scan.corpus, scan.graph, arc_params).architecture;

    const Architecture* views[] = {&by_package, &by_dominators, &by_concerns};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            double v = a2a(*views[i], *views[j]).value;
            double m = mojofm(*views[i], *views[j]).value;
            if (v < 0.0 || v > 100.0 || m < 0.0 || m > 100.0) {
                note = "a pairwise comparison left the [0,100] range";
                return false;
            }
        }
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 60.0) {
        note = "pipeline took " + fmt(elapsed) + "s (budget 60s)";
        return false;
    }

    bool guarded = false;
    try {
        AcdcParams capped;
        capped.max_entities = 500;
        recover_acdc(scan.graph, capped);
    } catch (const Error& e) {
        guarded = e.kind() == Error::Kind::ResourceLimit;
    }
    if (!guarded) {
        note = "the dominator recoverer ignored its entity cap";
        return false;
    }
    guarded = false;
    try {
        ArcParams capped = arc_params;
        capped.max_entities = 500;
        recover_arc(scan.corpus, scan.graph, capped);
    } catch (const Error& e) {
        guarded = e.kind() == Error::Kind::ResourceLimit;
    }
    if (!guarded) {
        note = "the concern recoverer ignored its entity cap";
        return false;
    }
    note = "extract + 3 recoveries + pairwise comparisons on 1000 entities / "
           "5000 edges in " + fmt(elapsed) + "s; caps fail as resource-limit errors";
    return true;
}

// 10. Raising smell thresholds never creates findings; one-topic models
//     cannot scatter.
bool criterion_10(std::string& note) {
    std::mt19937_64 rng(77);
    auto random_weight = [&]() { return (rng() % 1000) / 999.0; };

    for (int trial = 0; trial < 200; ++trial) {
        int topics = 1 + static_cast<int>(rng() % 6);
        const std::size_t vocabulary = 8;
        std::vector<std::vector<double>> topic_word(
            topics, std::vector<double>(vocabulary, 0.0));
        for (auto& row : topic_word) {
            double sum = 0.0;
            for (auto& p : row) {
                p = random_weight() + 0.01;
                sum += p;
            }
            for (auto& p : row) p /= sum;
        }

        std::size_t cluster_count = 1 + rng() % 6;
        Architecture::ClusterMap clusters;
        ConcernAssignment ca;
        for (std::size_t c = 0; c < cluster_count; ++c) {
            std::string name = "c" + std::to_string(c);
            clusters[name] = {"e" + std::to_string(c)};
            for (int k = 0; k < topics; ++k) {
                ca.cluster_concerns[name].emplace_back(k, random_weight());
            }
        }
        Architecture arch(std::move(clusters));

        SmellThresholds th;
        th.relevance_th = (trial % 2 == 0) ? 0.1 : 0.3;

        std::size_t previous = SIZE_MAX;
        for (int o = 0; o <= 5; ++o) {
            th.overload_th = o;
            std::size_t count = detect_concern_overload(ca, topic_word, th).size();
            if (count > previous) {
                note = "raising the overload threshold increased findings on trial " +
                       std::to_string(trial);
                return false;
            }
            previous = count;
        }

        th.overload_th = 5;
        previous = SIZE_MAX;
        for (int s = 1; s <= 6; ++s) {
            th.scatter_th = s;
            std::size_t count =
                detect_scattered_parasitic(arch, ca, topic_word, th).size();
            if (count > previous) {
                note = "raising the scatter threshold increased findings on trial " +
                       std::to_string(trial);
                return false;
            }
            previous = count;
        }

        if (topics == 1) {
            th.scatter_th = 1;
            if (!detect_scattered_parasitic(arch, ca, topic_word, th).empty()) {
                note = "a one-topic model produced a scattered finding on trial " +
                       std::to_string(trial);
                return false;
            }
        }
    }
    note = "200 randomized assignments: threshold raises never add findings; "
           "one-topic models never scatter";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    using Criterion = std::function<bool(std::string&)>;
    const std::vector<Criterion> criteria = {
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
        criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
    };

    int selected = 0;
    if (argc > 1) {
        selected = std::atoi(argv[1]);
        if (selected < 1 || selected > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "usage: %s [1..%zu]\n", argv[0], criteria.size());
            return 2;
        }
    }

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int number = static_cast<int>(i) + 1;
        if (selected != 0 && selected != number) continue;
        std::string note;
        bool ok = false;
        try {
            ok = criteria[i](note);
        } catch (const std::exception& e) {
            ok = false;
            note = std::string("unexpected error: ") + e.what();
        }
        std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number,
                    note.c_str());
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
