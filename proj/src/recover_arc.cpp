#include "archrec/recover_arc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <json.hpp>

#include "archrec/divergence.hpp"

namespace archrec {

std::map<std::string, std::vector<double>> build_features(const TopicModel& model,
                                                          const DependencyGraph& g,
                                                          double lambda) {
    if (lambda < 0.0 || lambda > 1.0)
        throw Error(Error::Kind::Config, "lambda must lie within [0, 1]");
    std::set<std::string> ids = g.nodes();
    for (const auto& [id, theta] : model.doc_topic) ids.insert(id);

    std::vector<std::string> ordered(ids.begin(), ids.end());
    std::map<std::string, std::size_t> position;
    for (std::size_t i = 0; i < ordered.size(); ++i) position[ordered[i]] = i;

    const std::size_t K = static_cast<std::size_t>(model.topics);
    const double uniform = K > 0 ? 1.0 / static_cast<double>(K) : 0.0;

    std::map<std::string, std::vector<double>> features;
    for (const auto& id : ordered) {
        std::vector<double> feature(K + ordered.size(), 0.0);
        auto it = model.doc_topic.find(id);
        for (std::size_t k = 0; k < K; ++k) {
            double p = it != model.doc_topic.end() ? it->second[k] : uniform;
            feature[k] = (1.0 - lambda) * p;
        }
        std::size_t degree = 0;
        if (g.has_node(id)) {
            for (const auto& neighbor : g.successors(id)) {
                feature[K + position.at(neighbor)] = 1.0;
            }
            for (const auto& neighbor : g.predecessors(id)) {
                feature[K + position.at(neighbor)] = 1.0;
            }
            for (std::size_t i = 0; i < ordered.size(); ++i)
                degree += feature[K + i] > 0.0 ? 1 : 0;
        }
        if (degree > 0) {
            double scale = lambda / static_cast<double>(degree);
            for (std::size_t i = 0; i < ordered.size(); ++i) feature[K + i] *= scale;
        }
        features[id] = std::move(feature);
    }
    return features;
}

Architecture cluster_entities(const std::map<std::string, std::vector<double>>& features,
                              std::size_t num_clusters, std::size_t topic_dim) {
    const std::size_t n = features.size();
    if (num_clusters < 1 || num_clusters > n)
        throw Error(Error::Kind::Config,
                    "cluster count " + std::to_string(num_clusters) +
                        " is outside [1, " + std::to_string(n) + "]");

    std::vector<std::string> reps;         // smallest member of each live cluster
    std::vector<std::set<std::string>> members;
    std::vector<const std::vector<double>*> vectors;
    for (const auto& [id, feature] : features) {
        reps.push_back(id);
        members.push_back({id});
        vectors.push_back(&feature);
    }

    auto pair_distance = [&](std::size_t i, std::size_t j) {
        const auto& a = *vectors[i];
        const auto& b = *vectors[j];
        return jensen_shannon(a.data(), b.data(), topic_dim) +
               euclidean_distance(a.data() + topic_dim, b.data() + topic_dim,
                                  a.size() - topic_dim);
    };

    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            dist[i][j] = dist[j][i] = pair_distance(i, j);

    std::vector<bool> alive(n, true);
    std::size_t live = n;
    while (live > num_clusters) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_i = 0, best_j = 0;
        std::pair<std::string, std::string> best_key;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!alive[j] || dist[i][j] > best) continue;
                std::pair<std::string, std::string> key =
                    reps[i] < reps[j] ? std::make_pair(reps[i], reps[j])
                                      : std::make_pair(reps[j], reps[i]);
                if (dist[i][j] < best || key < best_key) {
                    best = dist[i][j];
                    best_i = i;
                    best_j = j;
                    best_key = std::move(key);
                }
            }
        }
        // Average-linkage update (Lance-Williams) onto best_i.
        double size_i = static_cast<double>(members[best_i].size());
        double size_j = static_cast<double>(members[best_j].size());
        for (std::size_t k = 0; k < n; ++k) {
            if (!alive[k] || k == best_i || k == best_j) continue;
            double merged =
                (size_i * dist[k][best_i] + size_j * dist[k][best_j]) / (size_i + size_j);
            dist[k][best_i] = dist[best_i][k] = merged;
        }
        members[best_i].insert(members[best_j].begin(), members[best_j].end());
        reps[best_i] = std::min(reps[best_i], reps[best_j]);
        alive[best_j] = false;
        --live;
    }

    std::vector<std::set<std::string>> final_clusters;
    for (std::size_t i = 0; i < n; ++i)
        if (alive[i]) final_clusters.push_back(members[i]);
    std::sort(final_clusters.begin(), final_clusters.end(),
              [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });

    Architecture::ClusterMap clusters;
    for (std::size_t i = 0; i < final_clusters.size(); ++i)
        clusters["c" + std::to_string(i)] = std::move(final_clusters[i]);
    return Architecture(std::move(clusters));
}

ConcernAssignment label_clusters(const Architecture& arch, const TopicModel& model,
                                 int top_words) {
    ConcernAssignment assignment;
    const int K = model.topics;
    const double uniform = K > 0 ? 1.0 / K : 0.0;

    for (const auto& [name, ids] : arch.clusters()) {
        std::vector<double> weights(K, 0.0);
        for (const auto& id : ids) {
            auto it = model.doc_topic.find(id);
            for (int k = 0; k < K; ++k)
                weights[k] += it != model.doc_topic.end() ? it->second[k] : uniform;
        }
        std::vector<std::pair<int, double>> ranked;
        for (int k = 0; k < K; ++k)
            ranked.emplace_back(k, weights[k] / static_cast<double>(ids.size()));
        std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            return a.second > b.second;
        });
        assignment.cluster_concerns[name] = std::move(ranked);
    }

    for (int k = 0; k < K; ++k)
        assignment.top_words[k] = top_topic_words(model, k, top_words);
    return assignment;
}

std::vector<std::string> top_topic_words(const TopicModel& model, int topic, int count) {
    if (topic < 0 || topic >= model.topics)
        throw Error(Error::Kind::Validation,
                    "topic index " + std::to_string(topic) + " outside the model");
    std::vector<std::pair<double, std::string>> ranked;
    for (std::size_t w = 0; w < model.vocabulary.size(); ++w)
        ranked.emplace_back(model.topic_word[topic][w], model.vocabulary[w]);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<std::string> words;
    for (std::size_t i = 0; i < ranked.size() && i < static_cast<std::size_t>(count); ++i)
        words.push_back(ranked[i].second);
    return words;
}

std::size_t default_cluster_count(std::size_t entity_count) {
    if (entity_count == 0) return 0;
    auto target = static_cast<std::size_t>(
        std::max<long long>(2, std::llround(static_cast<double>(entity_count) / 10.0)));
    return std::min(target, entity_count);
}

ArcResult recover_arc(const Corpus& corpus, const DependencyGraph& g,
                      const ArcParams& params) {
    std::set<std::string> universe = g.nodes();
    for (const auto& [id, bag] : corpus.documents) universe.insert(id);
    if (universe.empty())
        throw Error(Error::Kind::Validation, "concern recovery requires at least one entity");
    if (params.max_entities > 0 && universe.size() > params.max_entities)
        throw Error(Error::Kind::ResourceLimit,
                    "system too large: " + std::to_string(universe.size()) +
                        " entities exceed the configured cap of " +
                        std::to_string(params.max_entities));

    LdaParams lda_params;
    lda_params.topics = params.topics;
    lda_params.alpha = params.alpha;
    lda_params.beta = params.beta;
    lda_params.iterations = params.iterations;
    lda_params.seed = params.seed;

    ArcResult result;
    result.model = fit_lda(corpus, lda_params);
    auto features = build_features(result.model, g, params.lambda);
    std::size_t clusters =
        params.clusters > 0 ? params.clusters : default_cluster_count(features.size());
    result.architecture =
        cluster_entities(features, clusters, static_cast<std::size_t>(params.topics));
    result.concerns = label_clusters(result.architecture, result.model, params.top_words);
    return result;
}

std::string concerns_to_json(const ConcernAssignment& concerns, const TopicModel& model,
                             const std::map<std::string, std::string>& config_echo) {
    nlohmann::json topics = nlohmann::json::object();
    for (const auto& [k, words] : concerns.top_words)
        topics[std::to_string(k)] = words;

    nlohmann::json clusters = nlohmann::json::object();
    for (const auto& [name, ranked] : concerns.cluster_concerns) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [k, weight] : ranked)
            rows.push_back(nlohmann::json::array({k, weight}));
        clusters[name] = std::move(rows);
    }

    nlohmann::json topic_word = nlohmann::json::object();
    for (int k = 0; k < model.topics; ++k) {
        nlohmann::json row = nlohmann::json::object();
        for (std::size_t w = 0; w < model.vocabulary.size(); ++w)
            row[model.vocabulary[w]] = model.topic_word[k][w];
        topic_word[std::to_string(k)] = std::move(row);
    }

    nlohmann::json doc;
    doc["topics"] = std::move(topics);
    doc["clusters"] = std::move(clusters);
    doc["topicWord"] = std::move(topic_word);
    doc["config"] = config_echo;
    return doc.dump(2) + "\n";
}

namespace {

int parse_topic_index(const std::string& key) {
    try {
        std::size_t used = 0;
        int value = std::stoi(key, &used);
        if (used != key.size() || value < 0) throw std::invalid_argument(key);
        return value;
    } catch (const std::exception&) {
        throw Error(Error::Kind::Parse, "topic keys must be non-negative integers, got '" +
                                            key + "'");
    }
}

}  // namespace

ConcernFile concerns_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Error::Kind::Parse, std::string("invalid concerns JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("topics") || !doc.contains("clusters"))
        throw Error(Error::Kind::Parse,
                    "concerns JSON must carry 'topics' and 'clusters' objects");

    ConcernFile file;
    for (const auto& [k, words] : doc["topics"].items()) {
        std::vector<std::string> list;
        for (const auto& word : words) list.push_back(word.get<std::string>());
        file.concerns.top_words[parse_topic_index(k)] = std::move(list);
    }
    for (const auto& [name, rows] : doc["clusters"].items()) {
        std::vector<std::pair<int, double>> ranked;
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != 2)
                throw Error(Error::Kind::Parse,
                            "cluster '" + name + "' rows must be [topic, weight] pairs");
            ranked.emplace_back(row[0].get<int>(), row[1].get<double>());
        }
        file.concerns.cluster_concerns[name] = std::move(ranked);
    }
    if (doc.contains("topicWord") && doc["topicWord"].is_object()) {
        // Rows share one vocabulary; align every row on the union.
        std::set<std::string> vocabulary;
        for (const auto& [k, row] : doc["topicWord"].items())
            for (const auto& [word, p] : row.items()) vocabulary.insert(word);
        std::map<std::string, std::size_t> position;
        std::size_t next = 0;
        for (const auto& word : vocabulary) position[word] = next++;

        std::map<int, std::vector<double>> rows;
        for (const auto& [k, row] : doc["topicWord"].items()) {
            std::vector<double> values(vocabulary.size(), 0.0);
            for (const auto& [word, p] : row.items())
                values[position.at(word)] = p.get<double>();
            rows[parse_topic_index(k)] = std::move(values);
        }
        for (auto& [k, values] : rows) file.topic_word.push_back(std::move(values));
    }
    return file;
}

}  // namespace archrec
