#include "steercert/entropy.hpp"

#include <cmath>

#include "steercert/errors.hpp"

namespace steercert {

double shannon_entropy(std::span<const double> p) {
    double h = 0.0;
    for (double x : p) {
        if (x < -1e-9) throw DomainError("probabilities must be non-negative");
        if (x > 0.0) h -= x * std::log2(x);
    }
    return h;
}

double binary_entropy(double p) {
    if (p < -1e-9 || p > 1.0 + 1e-9) throw DomainError("binary_entropy requires p in [0,1]");
    const double q[2] = {p > 0.0 ? p : 0.0, 1.0 - p > 0.0 ? 1.0 - p : 0.0};
    return shannon_entropy(q);
}

} // namespace steercert
