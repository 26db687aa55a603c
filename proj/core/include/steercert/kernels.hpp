#pragma once
// Steering records and the kernel functionals evaluated on them.
//
// A record holds, for each of two measurement settings, the joint outcome
// table P(a, b) between the trusted preparation/measurement side (a) and the
// verifier side (b), together with the matching rule that says which (a, b)
// pairs count as correlated.  The kernels compare the recorded correlations
// against the best value any local-hidden-state model can reach.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "steercert/channels.hpp"
#include "steercert/numerics.hpp"
#include "steercert/qudit.hpp"

namespace steercert {

enum class MatchRule {
    Equal,   // b == a
    ModZero, // (a + b) mod d == 0
    SumDm1,  // a + b == d - 1
};

bool matches(MatchRule rule, std::size_t a, std::size_t b, std::size_t d);
// The unique b matched with a under the rule.
std::size_t matched_outcome(MatchRule rule, std::size_t a, std::size_t d);

// Joint table for one setting.  joint is row-major d x d with a as the row
// index; marginal[a] = sum_b joint(a, b).
struct SettingTable {
    std::size_t dim = 0;
    std::vector<double> joint;
    std::vector<double> marginal;
};

class SteeringRecord {
public:
    SteeringRecord(std::size_t dim, std::array<SettingTable, 2> settings,
                   std::array<MatchRule, 2> rules);

    std::size_t dim() const { return dim_; }
    const SettingTable& setting(std::size_t i) const { return settings_[i]; } // i in {0, 1}
    MatchRule rule(std::size_t i) const { return rules_[i]; }

private:
    std::size_t dim_;
    std::array<SettingTable, 2> settings_;
    std::array<MatchRule, 2> rules_;
};

struct KernelReport {
    std::string kernel;
    double value = 0.0;
    double bound = 0.0;
    bool certified = false; // value > bound, strictly
    double margin = 0.0;    // value - bound
    std::size_t dim = 0;
};

// 1 + 1/sqrt(d): largest matched-pair sum a hidden-state model can produce,
// i.e. the top eigenvalue of |m><m| + |n><n| over cross-basis projector
// pairs with overlap 1/sqrt(d).
double classical_bound_sdu(std::size_t d);
// log2(1/d): entropic analogue, from the uncertainty relation
// H(B_1|lambda) + H(B_2|lambda) >= log2 d.
double classical_bound_ent(std::size_t d);

// Single-system protocol: the sender measures rho_s in one of the two mub
// bases, the resulting basis state passes through ch (the full physical
// process, target unitary included), and the verifier measures in his
// u-rotated copy of the same basis.
SteeringRecord run_single_system(const DensityMatrix& rho_s, const MubPair& mub,
                                 const QuantumChannel& ch, const ComplexMatrix& u);

// Bipartite protocol: ch_on_bob (again the full process on the verifier
// side) acts on the second factor of state; each side measures its own
// basis for the chosen setting.  The matching rules encode how outcomes
// correlate for the given state.
SteeringRecord run_epr(const DensityMatrix& state, const MubPair& alice, const MubPair& bob,
                       const QuantumChannel& ch_on_bob, std::array<MatchRule, 2> rules);

// Qubit time-sequence protocol: measure rho_s, send the collapsed state
// through ch, measure again in the same basis.  Settings run over sigma_z,
// sigma_x and (for n_settings = 3) sigma_y eigenbases.
std::vector<SettingTable> run_temporal(const DensityMatrix& rho_s, const QuantumChannel& ch,
                                       int n_settings);

// Matched-pair probability sum over both settings; bound 1 + 1/sqrt(d).
KernelReport kernel_sdu(const SteeringRecord& rec);

// -sum_i sum_a P(a) H(B|a); bound log2(1/d).  Matching rules only relabel
// the conditional distributions, which leaves the entropies unchanged, so
// the value is computed on the raw tables.
KernelReport kernel_ent(const SteeringRecord& rec);

// sum_i sum_a P(a) <B>_a^2 with <B>_a = P(b=0|a) - P(b=1|a); qubits only,
// 2 or 3 settings; bound 1.
KernelReport temporal_kernel(const std::vector<SettingTable>& settings);

} // namespace steercert
