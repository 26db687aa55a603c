#pragma once
// Shannon entropy in bits, with the 0 log 0 = 0 convention.

#include <span>

namespace steercert {

double shannon_entropy(std::span<const double> p);
double binary_entropy(double p);

} // namespace steercert
