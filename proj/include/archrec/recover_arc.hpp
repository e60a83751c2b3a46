#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "archrec/corpus.hpp"
#include "archrec/lda.hpp"
#include "archrec/model.hpp"

namespace archrec {

struct ArcParams {
    int topics = 100;
    std::size_t clusters = 0;  // 0 selects max(2, round(n/10)), clamped to [1, n]
    unsigned long long seed = 1;
    double alpha = -1.0;       // negative selects 50/K
    double beta = 0.01;
    int iterations = 1000;
    double lambda = 0.5;       // structural feature weight in [0,1]
    int top_words = 10;
    std::size_t max_entities = 0;  // 0 disables the guard
};

struct ConcernAssignment {
    // cluster -> (topic, weight) sorted by descending weight
    std::map<std::string, std::vector<std::pair<int, double>>> cluster_concerns;
    std::map<int, std::vector<std::string>> top_words;  // descending probability
};

// Feature per entity: (1-lambda) * doc_topic followed by lambda * the
// L1-normalized undirected incidence vector over sorted entity ids.
// Entities present only in the graph get a uniform topic part.
std::map<std::string, std::vector<double>> build_features(const TopicModel& model,
                                                          const DependencyGraph& g,
                                                          double lambda);

// Average-linkage agglomerative clustering; distance = Jensen-Shannon
// divergence over the first topic_dim entries plus Euclidean distance
// over the rest. Clusters are named c0, c1, ... by smallest member.
Architecture cluster_entities(const std::map<std::string, std::vector<double>>& features,
                              std::size_t num_clusters, std::size_t topic_dim);

// Cluster weight for a topic = mean member doc_topic value.
ConcernAssignment label_clusters(const Architecture& arch, const TopicModel& model,
                                 int top_words);

// Words of a topic by descending probability (ties alphabetical).
std::vector<std::string> top_topic_words(const TopicModel& model, int topic, int count);

struct ArcResult {
    Architecture architecture;
    ConcernAssignment concerns;
    TopicModel model;
};

ArcResult recover_arc(const Corpus& corpus, const DependencyGraph& g,
                      const ArcParams& params);

std::size_t default_cluster_count(std::size_t entity_count);

// Concern report: topics, per-cluster weights, and the full topic-word
// distributions needed by downstream smell detection.
std::string concerns_to_json(const ConcernAssignment& concerns, const TopicModel& model,
                             const std::map<std::string, std::string>& config_echo);

struct ConcernFile {
    ConcernAssignment concerns;
    std::vector<std::vector<double>> topic_word;  // empty when absent from the file
};

ConcernFile concerns_from_json(const std::string& text);

}  // namespace archrec
