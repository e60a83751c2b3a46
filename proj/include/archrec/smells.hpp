#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "archrec/lda.hpp"
#include "archrec/model.hpp"
#include "archrec/recover_arc.hpp"
#include "archrec/tokenize.hpp"

namespace archrec {

struct SmellThresholds {
    double relevance_th = 0.1;   // minimum topic weight to count as relevant
    int overload_th = 5;         // distinct relevant concerns beyond which a cluster is overloaded
    int scatter_th = 3;          // clusters sharing a concern before it counts as scattered
    double orthogonality_th = 0.5;  // JS divergence above which two topics are orthogonal
    double duplicate_th = 0.1;   // JS divergence below which two topics are duplicates
};

struct SmellFinding {
    std::string kind;  // "ConcernOverload" | "ScatteredParasiticFunctionality"
    std::vector<std::string> subjects;                  // cluster names
    std::vector<std::pair<int, double>> evidence;       // topics with weights
    std::string detail;
};

// A cluster is overloaded when, after merging duplicate topics, more
// than overload_th merged concerns stay at or above relevance_th.
std::vector<SmellFinding> detect_concern_overload(
    const ConcernAssignment& ca, const std::vector<std::vector<double>>& topic_word,
    const SmellThresholds& thresholds);

// A concern relevant in at least scatter_th clusters is parasitic when
// one of those clusters also hosts a relevant orthogonal concern.
std::vector<SmellFinding> detect_scattered_parasitic(
    const Architecture& arch, const ConcernAssignment& ca,
    const std::vector<std::vector<double>>& topic_word, const SmellThresholds& thresholds);

struct TopicAuditReport {
    std::vector<int> license_topics;
    std::vector<int> system_name_topics;
    std::vector<std::pair<int, int>> duplicate_topic_pairs;
    std::vector<int> junk_topics;  // top words degenerate to near-noise
};

TopicAuditReport topic_quality_audit(const TopicModel& model, const StopWordSet& stops,
                                     const std::set<std::string>& license_words,
                                     double duplicate_th, int top_words);

std::string smell_findings_to_json(const std::vector<SmellFinding>& findings,
                                   const SmellThresholds& thresholds);

}  // namespace archrec
