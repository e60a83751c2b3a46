#include "archrec/divergence.hpp"

#include <cmath>

#include "archrec/model.hpp"

namespace archrec {

double jensen_shannon(const double* p, const double* q, std::size_t length) {
    double sum = 0.0;
    for (std::size_t i = 0; i < length; ++i) {
        double m = 0.5 * (p[i] + q[i]);
        if (p[i] > 0.0) sum += 0.5 * p[i] * std::log2(p[i] / m);
        if (q[i] > 0.0) sum += 0.5 * q[i] * std::log2(q[i] / m);
    }
    return sum < 0.0 ? 0.0 : sum;
}

double jensen_shannon(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.size() != q.size())
        throw Error(Error::Kind::Validation, "divergence inputs differ in length");
    return jensen_shannon(p.data(), q.data(), p.size());
}

double euclidean_distance(const double* p, const double* q, std::size_t length) {
    double sum = 0.0;
    for (std::size_t i = 0; i < length; ++i) {
        double d = p[i] - q[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double euclidean_distance(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.size() != q.size())
        throw Error(Error::Kind::Validation, "distance inputs differ in length");
    return euclidean_distance(p.data(), q.data(), p.size());
}

}  // namespace archrec
