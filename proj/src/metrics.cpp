#include "archrec/metrics.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <vector>

namespace archrec {

namespace {

// Maximum-value assignment on a square matrix (Hungarian method with
// potentials, O(n^3)). Returns the optimal total value; `match_of_row`
// receives the matched column per row.
long long max_assignment(const std::vector<std::vector<long long>>& value,
                         std::vector<int>& match_of_row) {
    int n = static_cast<int>(value.size());
    match_of_row.assign(n, -1);
    if (n == 0) return 0;

    const long long kInf = std::numeric_limits<long long>::max() / 4;
    // Minimize negated values; 1-based arrays per the classic formulation.
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<long long> minv(n + 1, kInf);
        std::vector<char> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = -1;
            long long delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                long long cur = -value[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    long long total = 0;
    for (int j = 1; j <= n; ++j) {
        if (p[j] == 0) continue;
        match_of_row[p[j] - 1] = j - 1;
        total += value[p[j] - 1][j - 1];
    }
    return total;
}

std::size_t intersection_size(const std::set<std::string>& a,
                              const std::set<std::string>& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    std::size_t n = 0;
    for (const auto& x : small) n += large.count(x);
    return n;
}

bool try_kuhn(int row, const std::vector<std::vector<int>>& adj,
              std::vector<char>& visited, std::vector<int>& match_of_col) {
    for (int col : adj[row]) {
        if (visited[col]) continue;
        visited[col] = true;
        if (match_of_col[col] == -1 || try_kuhn(match_of_col[col], adj, visited, match_of_col)) {
            match_of_col[col] = row;
            return true;
        }
    }
    return false;
}

}  // namespace

TransformOps mto(const Architecture& a1, const Architecture& a2) {
    std::vector<const std::set<std::string>*> c1, c2;
    for (const auto& [name, members] : a1.clusters()) c1.push_back(&members);
    for (const auto& [name, members] : a2.clusters()) c2.push_back(&members);

    // Maximize 2*matched_pairs + shared_entities_preserved: each matched
    // cluster pair saves one addC and one remC, each preserved entity one
    // move. Dummy rows/columns pad the matrix square with zero value.
    std::size_t n = std::max(c1.size(), c2.size());
    std::vector<std::vector<long long>> value(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < c1.size(); ++i)
        for (std::size_t j = 0; j < c2.size(); ++j)
            value[i][j] = static_cast<long long>(intersection_size(*c1[i], *c2[j])) + 2;

    std::vector<int> match_of_row;
    max_assignment(value, match_of_row);

    long matched_pairs = 0;
    long preserved = 0;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        int j = match_of_row[i];
        if (j < 0 || static_cast<std::size_t>(j) >= c2.size()) continue;
        ++matched_pairs;
        preserved += static_cast<long>(intersection_size(*c1[i], *c2[j]));
    }

    auto e1 = a1.entity_ids();
    auto e2 = a2.entity_ids();
    long common = static_cast<long>(intersection_size(e1, e2));

    TransformOps ops;
    ops.add_e = static_cast<long>(e2.size()) - common;
    ops.rem_e = static_cast<long>(e1.size()) - common;
    ops.mov_e = (common - preserved) + ops.add_e + ops.rem_e;
    ops.add_c = static_cast<long>(c2.size()) - matched_pairs;
    ops.rem_c = static_cast<long>(c1.size()) - matched_pairs;
    return ops;
}

SimilarityResult a2a(const Architecture& a1, const Architecture& a2) {
    SimilarityResult result;
    TransformOps ops = mto(a1, a2);
    result.ops = ops;
    if (a1.is_null() && a2.is_null()) {
        result.value = 100.0;
        return result;
    }
    long den = mto(Architecture(), a1).total() + mto(Architecture(), a2).total();
    result.value = (1.0 - static_cast<double>(ops.total()) / static_cast<double>(den)) * 100.0;
    return result;
}

double c2c(const std::set<std::string>& c1, const std::set<std::string>& c2) {
    if (c1.empty() || c2.empty())
        throw Error(Error::Kind::Validation, "c2c requires non-empty entity sets");
    auto shared = static_cast<double>(intersection_size(c1, c2));
    auto larger = static_cast<double>(std::max(c1.size(), c2.size()));
    return shared / larger * 100.0;
}

std::set<std::string> sim_clusters(const Architecture& a1, const Architecture& a2,
                                   const CvgParams& params) {
    if (params.threshold <= 0.0 || params.threshold >= 1.0)
        throw Error(Error::Kind::Config, "coverage threshold must lie strictly between 0 and 1");
    std::set<std::string> similar;
    for (const auto& [name1, members1] : a1.clusters()) {
        for (const auto& [name2, members2] : a2.clusters()) {
            if (c2c(members1, members2) > params.threshold * 100.0) {
                similar.insert(name1);
                break;
            }
        }
    }
    return similar;
}

SimilarityResult cvg(const Architecture& a1, const Architecture& a2,
                     const CvgParams& params) {
    if (a1.is_null())
        throw Error(Error::Kind::Validation, "cvg is undefined for a null first architecture");
    SimilarityResult result;
    auto similar = sim_clusters(a1, a2, params);
    result.value = static_cast<double>(similar.size()) /
                   static_cast<double>(a1.cluster_count()) * 100.0;
    result.matched = std::move(similar);
    return result;
}

long mojo_distance(const Architecture& a, const Architecture& b) {
    if (a.entity_ids() != b.entity_ids())
        throw Error(Error::Kind::Validation,
                    "mojo requires identical entity universes; use a2a for differing ones");

    std::vector<const std::set<std::string>*> ca, cb;
    for (const auto& [name, members] : a.clusters()) ca.push_back(&members);
    for (const auto& [name, members] : b.clusters()) cb.push_back(&members);

    long n = static_cast<long>(a.entity_count());
    long m_a = static_cast<long>(ca.size());

    // Moves: every entity outside its cluster's best-overlap target moves.
    // Joins: clusters sharing a target merge; maximizing distinct targets
    // (matching on the best-overlap edges) minimizes joins.
    long total_best = 0;
    std::vector<std::vector<int>> argmax_edges(ca.size());
    for (std::size_t i = 0; i < ca.size(); ++i) {
        std::size_t best = 0;
        for (std::size_t j = 0; j < cb.size(); ++j)
            best = std::max(best, intersection_size(*ca[i], *cb[j]));
        total_best += static_cast<long>(best);
        for (std::size_t j = 0; j < cb.size(); ++j)
            if (intersection_size(*ca[i], *cb[j]) == best)
                argmax_edges[i].push_back(static_cast<int>(j));
    }

    std::vector<int> match_of_col(cb.size(), -1);
    long matched = 0;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        std::vector<char> visited(cb.size(), false);
        if (try_kuhn(static_cast<int>(i), argmax_edges, visited, match_of_col)) ++matched;
    }

    return (n - total_best) + (m_a - matched);
}

long max_mojo_distance(const Architecture& b) {
    long n = static_cast<long>(b.entity_count());
    if (n == 0) return 0;
    // The farthest source scatters b's clusters across partial transversals,
    // and its distance is n minus the smallest forcible cluster matching.
    // Covering the k largest clusters of b leaves a matching of k plus the
    // next cluster size, so the minimum over k is that matching.
    std::vector<long> sizes;
    sizes.reserve(b.cluster_count());
    for (const auto& [name, members] : b.clusters())
        sizes.push_back(static_cast<long>(members.size()));
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    long cover = sizes.front();
    for (std::size_t k = 1; k <= sizes.size(); ++k) {
        long tail = k < sizes.size() ? sizes[k] : 0;
        cover = std::min(cover, static_cast<long>(k) + tail);
    }
    return n - cover;
}

SimilarityResult mojofm(const Architecture& a, const Architecture& b) {
    SimilarityResult result;
    long mno = mojo_distance(a, b);
    long den = max_mojo_distance(b);
    result.value = den == 0
                       ? 100.0
                       : (1.0 - static_cast<double>(mno) / static_cast<double>(den)) * 100.0;
    return result;
}

}  // namespace archrec
