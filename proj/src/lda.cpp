#include "archrec/lda.hpp"

#include <random>
#include <sstream>

#include "archrec/model.hpp"

namespace archrec {

namespace {

// Uniform double in [0,1) from the top 53 bits; the standard library's
// distributions are implementation-defined, this mapping is not.
double next_uniform(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace

TopicModel fit_lda(const Corpus& corpus, const LdaParams& params,
                   const SweepObserver& observer) {
    if (corpus.documents.empty())
        throw Error(Error::Kind::Validation, "topic model requires a non-empty corpus");
    if (params.topics < 1)
        throw Error(Error::Kind::Config, "topic count must be at least 1");
    if (params.iterations < 1)
        throw Error(Error::Kind::Config, "iteration count must be at least 1");
    if (params.beta <= 0.0)
        throw Error(Error::Kind::Config, "beta must be positive");

    const int K = params.topics;
    const double alpha = params.alpha < 0.0 ? 50.0 / K : params.alpha;
    if (alpha <= 0.0) throw Error(Error::Kind::Config, "alpha must be positive");
    const double beta = params.beta;

    TopicModel model;
    model.topics = K;
    model.alpha = alpha;
    model.beta = beta;
    model.seed = params.seed;
    model.iterations = params.iterations;
    model.vocabulary = corpus.vocabulary();

    const int V = static_cast<int>(model.vocabulary.size());
    if (V == 0)
        throw Error(Error::Kind::Validation, "corpus has no tokens to model");
    if (K > V)
        model.warnings.push_back("topic count " + std::to_string(K) +
                                 " exceeds vocabulary size " + std::to_string(V));

    std::map<std::string, int> word_index;
    for (int w = 0; w < V; ++w) word_index[model.vocabulary[w]] = w;

    // Canonical token stream: documents by sorted id, each document's
    // tokens sorted and repeated by count.
    std::vector<std::string> doc_ids;
    std::vector<int> doc_of, word_of;
    std::vector<long> doc_length;
    for (const auto& [id, bag] : corpus.documents) {
        int d = static_cast<int>(doc_ids.size());
        doc_ids.push_back(id);
        long length = 0;
        for (const auto& [token, count] : bag) {
            int w = word_index.at(token);
            for (long c = 0; c < count; ++c) {
                doc_of.push_back(d);
                word_of.push_back(w);
            }
            length += count;
        }
        doc_length.push_back(length);
    }
    const int D = static_cast<int>(doc_ids.size());
    const long total_tokens = static_cast<long>(word_of.size());

    std::vector<long> n_dk(static_cast<std::size_t>(D) * K, 0);
    std::vector<long> n_wk(static_cast<std::size_t>(V) * K, 0);
    std::vector<long> n_k(K, 0);
    std::vector<double> inv_topic_total(K);
    const double v_beta = V * beta;
    for (int k = 0; k < K; ++k) inv_topic_total[k] = 1.0 / v_beta;

    std::mt19937_64 gen(params.seed);
    std::vector<int> assignment(word_of.size());
    for (std::size_t i = 0; i < word_of.size(); ++i) {
        int k = static_cast<int>(next_uniform(gen) * K);
        if (k >= K) k = K - 1;
        assignment[i] = k;
        n_dk[static_cast<std::size_t>(doc_of[i]) * K + k]++;
        n_wk[static_cast<std::size_t>(word_of[i]) * K + k]++;
        n_k[k]++;
        inv_topic_total[k] = 1.0 / (n_k[k] + v_beta);
    }

    std::vector<double> cumulative(K);
    for (int sweep = 1; sweep <= params.iterations; ++sweep) {
        for (std::size_t i = 0; i < word_of.size(); ++i) {
            const std::size_t d_base = static_cast<std::size_t>(doc_of[i]) * K;
            const std::size_t w_base = static_cast<std::size_t>(word_of[i]) * K;
            int old_k = assignment[i];
            n_dk[d_base + old_k]--;
            n_wk[w_base + old_k]--;
            n_k[old_k]--;
            inv_topic_total[old_k] = 1.0 / (n_k[old_k] + v_beta);

            double sum = 0.0;
            for (int k = 0; k < K; ++k) {
                sum += (n_dk[d_base + k] + alpha) * (n_wk[w_base + k] + beta) *
                       inv_topic_total[k];
                cumulative[k] = sum;
            }
            double target = next_uniform(gen) * sum;
            int new_k = K - 1;
            for (int k = 0; k < K; ++k) {
                if (target < cumulative[k]) {
                    new_k = k;
                    break;
                }
            }
            assignment[i] = new_k;
            n_dk[d_base + new_k]++;
            n_wk[w_base + new_k]++;
            n_k[new_k]++;
            inv_topic_total[new_k] = 1.0 / (n_k[new_k] + v_beta);
        }

        long topic_sum = 0;
        for (int k = 0; k < K; ++k) topic_sum += n_k[k];
        if (topic_sum != total_tokens)
            throw std::logic_error("topic count conservation violated after sweep " +
                                   std::to_string(sweep));
        if (observer) {
            long doc_sum = 0, word_sum = 0;
            for (long count : n_dk) doc_sum += count;
            for (long count : n_wk) word_sum += count;
            observer(SweepStats{sweep, topic_sum, doc_sum, word_sum});
        }
    }

    // Identical documents must get identical distributions; a single
    // Gibbs pass gives them different final counts, so rows are averaged
    // within groups of equal content before smoothing.
    std::map<std::string, std::vector<int>> content_groups;
    for (int d = 0; d < D; ++d) {
        std::ostringstream key;
        for (const auto& [token, count] : corpus.documents.at(doc_ids[d]))
            key << token.size() << ':' << token << ':' << count << ';';
        content_groups[key.str()].push_back(d);
    }
    std::vector<std::vector<double>> doc_mean(D, std::vector<double>(K, 0.0));
    for (const auto& [content, group] : content_groups) {
        std::vector<double> mean(K, 0.0);
        for (int d : group)
            for (int k = 0; k < K; ++k)
                mean[k] += static_cast<double>(n_dk[static_cast<std::size_t>(d) * K + k]);
        for (int k = 0; k < K; ++k) mean[k] /= static_cast<double>(group.size());
        for (int d : group) doc_mean[d] = mean;
    }

    for (int d = 0; d < D; ++d) {
        std::vector<double> theta(K);
        double denominator = static_cast<double>(doc_length[d]) + K * alpha;
        for (int k = 0; k < K; ++k) theta[k] = (doc_mean[d][k] + alpha) / denominator;
        model.doc_topic[doc_ids[d]] = std::move(theta);
    }

    model.topic_word.assign(K, std::vector<double>(V));
    for (int k = 0; k < K; ++k) {
        double denominator = static_cast<double>(n_k[k]) + v_beta;
        for (int w = 0; w < V; ++w)
            model.topic_word[k][w] =
                (static_cast<double>(n_wk[static_cast<std::size_t>(w) * K + k]) + beta) /
                denominator;
    }
    return model;
}

}  // namespace archrec
