#pragma once
// Quantum operations in Kraus form, plus the named channels used by the
// steering scenarios.

#include <cstddef>
#include <string>
#include <vector>

#include "steercert/numerics.hpp"
#include "steercert/qudit.hpp"
#include "steercert/random.hpp"

namespace steercert {

// Completely positive trace-preserving map.  Construction checks
// sum_k K_k^dag K_k = I to 1e-9.
class QuantumChannel {
public:
    QuantumChannel(std::size_t dim, std::vector<ComplexMatrix> kraus);

    std::size_t dim() const { return dim_; }
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

private:
    std::size_t dim_;
    std::vector<ComplexMatrix> kraus_;
};

// sum_k K rho K^dag.  Preserves trace and Hermiticity.
DensityMatrix apply(const QuantumChannel& ch, const DensityMatrix& rho);

QuantumChannel identity_channel(std::size_t d);
QuantumChannel unitary_channel(const ComplexMatrix& u);

// rho -> (p/d) I + (1-p) rho.  Kraus set: weighted identity plus the d^2 - 1
// remaining Heisenberg-Weyl operators X^j Z^k.  Every basis state of a
// mutually unbiased pair keeps fidelity F = (1-p) + p/d.
QuantumChannel depolarizing(std::size_t d, double p);

// Qubit X.
QuantumChannel bit_flip();

// Measure in b and resend the observed basis state; dephases in b.
QuantumChannel intercept_resend(const Basis& b);

// Channel running a first, then b.  Kraus products {B_j A_i}.
QuantumChannel compose(const QuantumChannel& a, const QuantumChannel& b);

// Lift a channel to the second factor of a bipartite space: Kraus I (x) K.
QuantumChannel extend_to_second(const QuantumChannel& ch, std::size_t dim_first);

// Random CPTP map of the given Kraus rank (Gaussian Kraus operators,
// normalized through the inverse square root of sum K^dag K).
QuantumChannel random_channel(std::size_t d, std::size_t kraus_rank, Rng& rng);

// CLI grammar: "identity" | "depolarizing:p=<float>" | "bitflip" |
// "intercept:basis=<1|2>" | "unitary:file=<path>".
QuantumChannel parse_channel(std::size_t d, const std::string& spec);

// Unitary matrix file: first line d, then d rows of d "re,im" pairs.
// Unitarity is checked to 1e-8.
ComplexMatrix load_unitary_file(const std::string& path);

} // namespace steercert
