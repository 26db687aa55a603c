#pragma once
// Classical mimicry of the steering protocols.  A local-hidden-state model
// draws a hidden index lambda, announces outcomes a_i with probabilities
// that may depend on lambda but not on the verifier's measurement, and hands
// the verifier a fixed state rho_lambda.  Whatever the model, the kernels in
// kernels.hpp stay at or below their classical bounds.

#include <array>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "steercert/kernels.hpp"
#include "steercert/numerics.hpp"
#include "steercert/qudit.hpp"

namespace steercert {

class LhsStrategy {
public:
    // responses[i] is row-major |lambda| x d: P(a | setting i+1, lambda).
    LhsStrategy(std::size_t dim, std::vector<double> hidden_weights,
                std::array<std::vector<double>, 2> responses,
                std::vector<DensityMatrix> hidden_states);

    std::size_t dim() const { return dim_; }
    std::size_t n_hidden() const { return hidden_weights_.size(); }
    const std::vector<double>& hidden_weights() const { return hidden_weights_; }
    double response(std::size_t setting, std::size_t lambda, std::size_t a) const;
    const DensityMatrix& hidden_state(std::size_t lambda) const { return hidden_states_[lambda]; }

private:
    std::size_t dim_;
    std::vector<double> hidden_weights_;
    std::array<std::vector<double>, 2> responses_;
    std::vector<DensityMatrix> hidden_states_;
};

// Joint tables of the model against the verifier's (possibly rotated) pair
// of bases.  Matching rule is Equal for both settings.
SteeringRecord simulate_lhs(const LhsStrategy& s, const MubPair& bob);

// Per-setting tables for the qubit time-sequence kernel.  The verifier
// measures the sigma_z, sigma_x and (n_settings = 3) sigma_y bases.  The
// model only carries responses for two settings; the third reuses the first
// response row, which is harmless because the classical bound holds for any
// announced-outcome distribution.
std::vector<SettingTable> simulate_lhs_temporal(const LhsStrategy& s, int n_settings);

// Best deterministic single-state model for the u-rotated pair: the hidden
// state is the top eigenvector of |m><m| + |n><n| built from the announced
// pair (m, n) = (0, 0), which saturates 1 + 1/sqrt(d).
LhsStrategy optimal_strategy(std::size_t d, const ComplexMatrix& u);

// Uniformly random weights, responses and hidden states (alternating pure
// and mixed); reproducible from the seed.
LhsStrategy random_strategy(std::size_t d, std::size_t n_hidden, std::uint64_t seed);

// Device that secretly measures every input in basis 1 and announces the
// result for setting 1 and noise for setting 2.  Reaches 1 + 1/d.
LhsStrategy fixed_basis_measure_strategy(std::size_t d, const ComplexMatrix& u);

// Device with no qualified apparatus at all: announces random outcomes and
// ships arbitrary states.
LhsStrategy unqualified_apparatus_strategy(std::size_t d, std::uint64_t seed);

} // namespace steercert
