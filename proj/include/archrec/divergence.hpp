#pragma once

#include <vector>

namespace archrec {

// Jensen-Shannon divergence, base-2 logarithms. Inputs are nonnegative
// weight vectors of equal length; for probability vectors the result is
// in [0, 1]. JSD(c*P, c*Q) == c * JSD(P, Q) for any scale c > 0.
double jensen_shannon(const double* p, const double* q, std::size_t length);
double jensen_shannon(const std::vector<double>& p, const std::vector<double>& q);

double euclidean_distance(const double* p, const double* q, std::size_t length);
double euclidean_distance(const std::vector<double>& p, const std::vector<double>& q);

}  // namespace archrec
