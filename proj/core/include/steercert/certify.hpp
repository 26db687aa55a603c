#pragma once
// Security and process-fidelity thresholds derived from the steering
// kernels: what a key-distribution session or a gate-certification run must
// beat before the correlations are beyond every hidden-state explanation.

#include <cstddef>
#include <optional>

#include "steercert/kernels.hpp"

namespace steercert {

// F log2 F + (1 - F) log2[(1 - F)/(d - 1)], the negative entropy of a
// symmetric-fidelity outcome distribution.  Strictly increasing in F on
// (1/d, 1].
double ftilde(double f, std::size_t d);

struct QkdThresholds {
    std::size_t dim = 0;
    double f_individual = 0.0; // (1 + 1/sqrt(d)) / 2
    double d_individual = 0.0; // 1 - f_individual
    double f_coherent = 0.0;   // root of ftilde(F) = -log2(d)/2
    double d_coherent = 0.0;   // 1 - f_coherent
};

// Disturbance thresholds against individual and coherent attacks.  The
// coherent root is found by bisection on [1/d, 1] to 1e-10.
QkdThresholds qkd_thresholds(std::size_t d);

struct GateCertificate {
    std::size_t dim = 0;
    double f1 = 0.0;
    double f2 = 0.0;
    double f_process_lower = 0.0; // f1 + f2 - 1
    double threshold_sdu = 0.0;   // 1/sqrt(d)
    double threshold_ent = 0.0;   // 1 - 2 d_coherent
    bool certified_sdu = false;
    bool certified_ent = false;
    // Lower bound 2 F_process - 1 on the concurrence of the 4-dimensional
    // (two-qubit) maximally entangled output; absent otherwise.
    std::optional<double> concurrence_lower;
};

// Certify a gate from its average fidelities over the two basis families.
GateCertificate gate_certificate(double f1, double f2, std::size_t d);
// Same, from an externally obtained process-fidelity lower bound.
GateCertificate gate_certificate_from_process(double f_process, std::size_t d);

// Extract the per-setting fidelities from a record with uniform sender
// marginals (f_i equals the matched-pair sum of setting i).
GateCertificate certify_from_record(const SteeringRecord& rec);

} // namespace steercert
