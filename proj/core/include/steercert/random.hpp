#pragma once
// Seeded random number source.  The Gaussian variates are produced from raw
// generator bits (Box-Muller), so a given seed yields the same stream on
// every platform.

#include <cstdint>
#include <random>

namespace steercert {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1).
    double uniform();
    // Standard normal.
    double gaussian();
    // Uniform integer in [0, bound).
    std::uint64_t integer(std::uint64_t bound);
    // Independent child stream, deterministically derived.
    Rng spawn() { return Rng(gen_()); }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace steercert
