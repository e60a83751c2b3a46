#pragma once

#include <optional>
#include <set>
#include <string>

#include "archrec/model.hpp"

namespace archrec {

struct CvgParams {
    double threshold = 0.5;  // fraction, exclusive bounds
};

struct SimilarityResult {
    double value = 0.0;                             // percentage in [0,100]
    std::optional<TransformOps> ops;                // a2a breakdown
    std::optional<std::set<std::string>> matched;   // cvg breakdown (similar clusters)
};

// Minimum operation counts turning a1 into a2 under the five-operation
// model (add/remove cluster, add/remove entity, move entity). Adding or
// removing an entity also costs one move. Cluster correspondence is the
// maximum-weight matching on shared-entity counts.
TransformOps mto(const Architecture& a1, const Architecture& a2);

// (1 - mto(a1,a2) / (mto(empty,a1) + mto(empty,a2))) * 100. Symmetric.
// Both inputs null -> 100.
SimilarityResult a2a(const Architecture& a1, const Architecture& a2);

// |c1 ∩ c2| / max(|c1|, |c2|) * 100.
double c2c(const std::set<std::string>& c1, const std::set<std::string>& c2);

// Clusters of a1 having some a2 cluster with c2c strictly above
// threshold * 100.
std::set<std::string> sim_clusters(const Architecture& a1, const Architecture& a2,
                                   const CvgParams& params);

// |sim_clusters| / |clusters of a1| * 100. Not symmetric. a1 null -> error.
SimilarityResult cvg(const Architecture& a1, const Architecture& a2,
                     const CvgParams& params);

// Minimum Move/Join operations turning partition a into partition b.
// Requires identical entity universes.
long mojo_distance(const Architecture& a, const Architecture& b);

// max over all partitions a' of mojo_distance(a', b); closed form.
long max_mojo_distance(const Architecture& b);

// (1 - mno(a,b) / max_mno(b)) * 100; zero denominator -> 100.
SimilarityResult mojofm(const Architecture& a, const Architecture& b);

}  // namespace archrec
