#include "archrec/smells.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "archrec/divergence.hpp"

namespace archrec {

namespace {

void require_distributions(const std::vector<std::vector<double>>& topic_word) {
    if (topic_word.empty())
        throw Error(Error::Kind::Config,
                    "smell detection needs full topic-word distributions; the concern "
                    "file lacks its 'topicWord' section");
}

// Union-find over topics; duplicates (divergence <= threshold) share roots.
std::vector<int> duplicate_groups(const std::vector<std::vector<double>>& topic_word,
                                  double duplicate_th) {
    int K = static_cast<int>(topic_word.size());
    std::vector<int> parent(K);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int t = 0; t < K; ++t)
        for (int u = t + 1; u < K; ++u)
            if (jensen_shannon(topic_word[t], topic_word[u]) <= duplicate_th) {
                int a = find(t), b = find(u);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
    for (int t = 0; t < K; ++t) parent[t] = find(t);
    return parent;
}

}  // namespace

std::vector<SmellFinding> detect_concern_overload(
    const ConcernAssignment& ca, const std::vector<std::vector<double>>& topic_word,
    const SmellThresholds& thresholds) {
    require_distributions(topic_word);
    auto group_of = duplicate_groups(topic_word, thresholds.duplicate_th);

    std::vector<SmellFinding> findings;
    for (const auto& [cluster, ranked] : ca.cluster_concerns) {
        std::map<int, double> merged_weight;
        for (const auto& [topic, weight] : ranked) {
            if (topic < 0 || topic >= static_cast<int>(group_of.size()))
                throw Error(Error::Kind::Validation,
                            "concern references topic " + std::to_string(topic) +
                                " outside the model");
            merged_weight[group_of[topic]] += weight;
        }
        std::vector<std::pair<int, double>> relevant;
        for (const auto& [group, weight] : merged_weight)
            if (weight >= thresholds.relevance_th) relevant.emplace_back(group, weight);
        if (static_cast<int>(relevant.size()) <= thresholds.overload_th) continue;

        std::sort(relevant.begin(), relevant.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        SmellFinding finding;
        finding.kind = "ConcernOverload";
        finding.subjects = {cluster};
        finding.evidence = relevant;
        std::ostringstream detail;
        detail << relevant.size() << " distinct concerns at weight >= "
               << thresholds.relevance_th << " exceed the limit of "
               << thresholds.overload_th;
        finding.detail = detail.str();
        findings.push_back(std::move(finding));
    }
    return findings;
}

std::vector<SmellFinding> detect_scattered_parasitic(
    const Architecture& arch, const ConcernAssignment& ca,
    const std::vector<std::vector<double>>& topic_word, const SmellThresholds& thresholds) {
    require_distributions(topic_word);
    const int K = static_cast<int>(topic_word.size());

    std::map<std::string, std::map<int, double>> relevant_in;  // cluster -> topic -> weight
    std::map<int, std::set<std::string>> clusters_of;          // topic -> clusters
    for (const auto& [cluster, ranked] : ca.cluster_concerns) {
        if (!arch.clusters().count(cluster))
            throw Error(Error::Kind::Validation,
                        "concern assignment names unknown cluster '" + cluster + "'");
        for (const auto& [topic, weight] : ranked) {
            if (weight < thresholds.relevance_th) continue;
            relevant_in[cluster][topic] = weight;
            clusters_of[topic].insert(cluster);
        }
    }

    std::vector<SmellFinding> findings;
    for (int t = 0; t < K; ++t) {
        auto spread = clusters_of.find(t);
        if (spread == clusters_of.end() ||
            static_cast<int>(spread->second.size()) < thresholds.scatter_th)
            continue;

        for (const auto& cluster : spread->second) {
            const auto& topics_here = relevant_in[cluster];
            int orthogonal = -1;
            for (const auto& [u, weight] : topics_here) {
                if (u == t) continue;
                if (jensen_shannon(topic_word[t], topic_word[u]) >=
                    thresholds.orthogonality_th) {
                    orthogonal = u;
                    break;
                }
            }
            if (orthogonal < 0) continue;

            SmellFinding finding;
            finding.kind = "ScatteredParasiticFunctionality";
            finding.subjects.assign(spread->second.begin(), spread->second.end());
            finding.evidence.emplace_back(t, topics_here.at(t));
            finding.evidence.emplace_back(orthogonal, topics_here.at(orthogonal));
            std::ostringstream detail;
            detail << "concern " << t << " spans " << spread->second.size()
                   << " clusters; cluster '" << cluster
                   << "' also hosts orthogonal concern " << orthogonal;
            finding.detail = detail.str();
            findings.push_back(std::move(finding));
            break;  // one finding per scattered concern
        }
    }
    return findings;
}

TopicAuditReport topic_quality_audit(const TopicModel& model, const StopWordSet& stops,
                                     const std::set<std::string>& license_words,
                                     double duplicate_th, int top_words) {
    TopicAuditReport report;

    std::set<std::string> name_tokens;
    for (const auto& token : stops.auto_tokens) {
        name_tokens.insert(token);
        name_tokens.insert(porter_stem(token));
    }

    for (int k = 0; k < model.topics; ++k) {
        auto words = top_topic_words(model, k, top_words);
        if (words.empty()) continue;

        std::size_t license_hits = 0;
        bool has_name_token = false;
        double length_sum = 0.0;
        for (const auto& word : words) {
            if (license_words.count(word)) ++license_hits;
            if (name_tokens.count(word)) has_name_token = true;
            length_sum += static_cast<double>(word.size());
        }
        if (license_hits * 2 >= words.size()) report.license_topics.push_back(k);
        if (has_name_token) report.system_name_topics.push_back(k);
        if (length_sum / static_cast<double>(words.size()) <= 2.0)
            report.junk_topics.push_back(k);
    }

    for (int t = 0; t < model.topics; ++t)
        for (int u = t + 1; u < model.topics; ++u)
            if (jensen_shannon(model.topic_word[t], model.topic_word[u]) <= duplicate_th)
                report.duplicate_topic_pairs.emplace_back(t, u);

    return report;
}

std::string smell_findings_to_json(const std::vector<SmellFinding>& findings,
                                   const SmellThresholds& thresholds) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& finding : findings) {
        nlohmann::json evidence = nlohmann::json::array();
        for (const auto& [topic, weight] : finding.evidence)
            evidence.push_back({{"topic", topic}, {"weight", weight}});
        rows.push_back({{"kind", finding.kind},
                        {"subjects", finding.subjects},
                        {"evidence", std::move(evidence)},
                        {"detail", finding.detail}});
    }
    nlohmann::json doc;
    doc["findings"] = std::move(rows);
    doc["config"] = {{"relevanceTh", thresholds.relevance_th},
                     {"overloadTh", thresholds.overload_th},
                     {"scatterTh", thresholds.scatter_th},
                     {"orthogonalityTh", thresholds.orthogonality_th},
                     {"duplicateTh", thresholds.duplicate_th}};
    return doc.dump(2) + "\n";
}

}  // namespace archrec
