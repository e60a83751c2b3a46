#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "archrec/corpus.hpp"
#include "archrec/metrics.hpp"
#include "archrec/model.hpp"
#include "archrec/recover_acdc.hpp"
#include "archrec/recover_arc.hpp"

namespace archrec {

enum class Method { Pkg, Acdc, Arc };

std::string method_name(Method method);
Method method_from_name(const std::string& name);

// A self-contained experimental system. Members are addressed by bare
// name; the recoverers see the package-qualified id, and results are
// mapped back to names so the entity universe survives package moves.
struct TrialMember {
    std::string name;
    std::string package;                  // may be empty
    std::map<std::string, long> document; // token counts for concern recovery
};

struct TrialSystem {
    std::vector<TrialMember> members;
    std::vector<std::pair<std::string, std::string>> edges;  // by member name

    void validate() const;
    std::string qualified_id(const TrialMember& member) const;
    const TrialMember& member(const std::string& name) const;
    TrialMember& member(const std::string& name);
    bool has_member(const std::string& name) const;

    DependencyGraph graph() const;   // over qualified ids
    EntitySet entities() const;
    Corpus corpus() const;           // keyed by qualified id
};

struct MethodParams {
    ArcParams arc;
    AcdcParams acdc;
};

// Runs the chosen recoverer and rekeys the result to member names.
Architecture recover_trial_system(Method method, const TrialSystem& system,
                                  const MethodParams& params);

struct Measurement {
    std::string label;
    std::string metric;
    double value = 0.0;
};

struct TrialReport {
    std::string method;
    std::string kind;
    std::string verdict;  // pass | fail | info
    std::vector<Measurement> measurements;
    std::map<std::string, std::string> config;  // echoed effective configuration
    std::vector<std::string> detail;
};

std::string trial_report_to_json(const TrialReport& report);

// Repeated runs on identical inputs; pass iff every pairwise a2a and
// MojoFM equals 100. Distinct per-run seeds make the verdict "info".
TrialReport determinism_trial(Method method, const TrialSystem& system,
                              const MethodParams& params, int runs,
                              const std::vector<unsigned long long>& per_run_seeds = {});

struct Perturbation {
    std::string kind;      // entity-add | entity-move | comment-char-edit
    std::string target;    // entity name involved
    std::string package;   // package for entity-add
    std::string to_package;  // destination for entity-move
};

struct ProportionalityBudget {
    double max_ops = 4.0;  // allowed transform operations for a small change
};

TrialReport proportionality_trial(Method method, const TrialSystem& system,
                                  const MethodParams& params,
                                  const Perturbation& perturbation,
                                  const ProportionalityBudget& budget);

// Source-tree flavor: copies the tree, flips one letter inside the first
// comment found, extracts and recovers both sides. With comments
// stripped the corpus is unchanged and the delta must be exactly zero;
// with comments included the deltas are reported without a pinned bound.
struct SourceSpec {
    std::string root;
    std::set<std::string> extensions{"java"};
    bool strip_comments = false;
    bool strip_license = false;
    std::string system_name;
    std::string stopword_file;
};

TrialReport comment_edit_trial(Method method, const SourceSpec& source,
                               const MethodParams& params,
                               const ProportionalityBudget& budget);

struct MoveStep {
    std::string entity;
    std::string to_package;
};

// Applies moves one at a time; reports the a2a of every intermediate
// state against the final state (step 0 = initial system). Pass iff the
// series never decreases.
TrialReport continuity_trial(Method method, const TrialSystem& system,
                             const MethodParams& params,
                             const std::vector<MoveStep>& script);

struct LocalizedChange {
    std::string kind;    // entity-add | entity-remove | doc-edit | none
    std::string package; // the package the change is confined to
    std::string entity;  // entity added / removed / edited
};

// Pass iff every cluster that differs between the before and after
// recoveries contains an entity of the changed package (no crosstalk).
TrialReport isolation_trial(Method method, const TrialSystem& system,
                            const MethodParams& params, const LocalizedChange& change);

struct VersionInput {
    std::string label;
    DependencyGraph graph;
    Corpus corpus;
};

enum class TopicScope { PerVersion, Shared };

struct StudyResult {
    TrialReport report;
    std::map<std::string, Architecture> version_architectures;  // by label
};

// Recovers every version and reports a2a plus both cvg directions for
// consecutive pairs. Shared scope fits a single topic model over the
// concatenation of exactly the listed versions.
StudyResult evolution_study(const std::vector<VersionInput>& versions, Method method,
                            TopicScope scope, const MethodParams& params,
                            const CvgParams& cvg_params = {});

// One-stop summary over the maintenance-value criteria: architectural
// output class, feasibility record, clarity, and the four trial verdicts
// on default scenarios derived from the system.
TrialReport criteria_scorecard(Method method, const TrialSystem& system,
                               const MethodParams& params);

}  // namespace archrec
