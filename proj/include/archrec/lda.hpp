#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "archrec/corpus.hpp"

namespace archrec {

struct LdaParams {
    int topics = 100;
    double alpha = -1.0;  // negative selects the 50/K default
    double beta = 0.01;
    int iterations = 1000;
    unsigned long long seed = 1;
};

struct SweepStats {
    int sweep = 0;                // 1-based
    long topic_count_sum = 0;     // sum over topics of assignment counts
    long doc_topic_count_sum = 0;
    long topic_word_count_sum = 0;
};
using SweepObserver = std::function<void(const SweepStats&)>;

struct TopicModel {
    int topics = 0;
    double alpha = 0.0;
    double beta = 0.0;
    unsigned long long seed = 1;
    int iterations = 0;
    std::vector<std::string> vocabulary;                // sorted
    std::map<std::string, std::vector<double>> doc_topic;  // id -> length-K distribution
    std::vector<std::vector<double>> topic_word;        // K x V distributions
    std::vector<std::string> warnings;
};

// Collapsed Gibbs sampling with a canonical token order (documents by
// sorted id, tokens sorted within each document) and a single seeded
// generator, so equal inputs give bit-equal models on any platform.
// Documents with identical content receive identical doc_topic rows.
TopicModel fit_lda(const Corpus& corpus, const LdaParams& params,
                   const SweepObserver& observer = {});

}  // namespace archrec
