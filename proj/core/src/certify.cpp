#include "steercert/certify.hpp"

#include <cmath>

#include "steercert/errors.hpp"

namespace steercert {

double ftilde(double f, std::size_t d) {
    if (d < 2) throw DomainError("dimension must be at least 2");
    if (f < 0.0 || f > 1.0) throw DomainError("fidelity must lie in [0,1]");
    double v = 0.0;
    if (f > 0.0) v += f * std::log2(f);
    const double rest = 1.0 - f;
    if (rest > 0.0) v += rest * std::log2(rest / static_cast<double>(d - 1));
    return v;
}

QkdThresholds qkd_thresholds(std::size_t d) {
    if (d < 2) throw DomainError("dimension must be at least 2");
    QkdThresholds t;
    t.dim = d;
    t.f_individual = 0.5 * (1.0 + 1.0 / std::sqrt(static_cast<double>(d)));
    t.d_individual = 1.0 - t.f_individual;

    // ftilde is strictly increasing on (1/d, 1] and spans
    // [-log2 d, 0], so the half-way target has a unique root.
    const double target = -0.5 * std::log2(static_cast<double>(d));
    double lo = 1.0 / static_cast<double>(d);
    double hi = 1.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (ftilde(mid, d) < target)
            lo = mid;
        else
            hi = mid;
    }
    t.f_coherent = 0.5 * (lo + hi);
    t.d_coherent = 1.0 - t.f_coherent;
    return t;
}

GateCertificate gate_certificate(double f1, double f2, std::size_t d) {
    if (d < 2) throw DomainError("dimension must be at least 2");
    if (f1 < 0.0 || f1 > 1.0 || f2 < 0.0 || f2 > 1.0)
        throw DomainError("fidelities must lie in [0,1]");
    GateCertificate c;
    c.dim = d;
    c.f1 = f1;
    c.f2 = f2;
    c.f_process_lower = f1 + f2 - 1.0;
    c.threshold_sdu = 1.0 / std::sqrt(static_cast<double>(d));
    c.threshold_ent = 1.0 - 2.0 * qkd_thresholds(d).d_coherent;
    c.certified_sdu = c.f_process_lower > c.threshold_sdu;
    c.certified_ent = c.f_process_lower > c.threshold_ent;
    if (d == 4) c.concurrence_lower = 2.0 * c.f_process_lower - 1.0;
    return c;
}

GateCertificate gate_certificate_from_process(double f_process, std::size_t d) {
    if (f_process < 0.0 || f_process > 1.0)
        throw DomainError("process fidelity must lie in [0,1]");
    // Symmetric split keeps f1 + f2 - 1 equal to the supplied bound.
    const double f = 0.5 * (1.0 + f_process);
    return gate_certificate(f, f, d);
}

GateCertificate certify_from_record(const SteeringRecord& rec) {
    const std::size_t d = rec.dim();
    const double uniform = 1.0 / static_cast<double>(d);
    double fidelity[2] = {0.0, 0.0};
    for (std::size_t i = 0; i < 2; ++i) {
        const SettingTable& t = rec.setting(i);
        for (std::size_t a = 0; a < d; ++a) {
            if (std::abs(t.marginal[a] - uniform) > 1e-9)
                throw ContractError("gate certification requires uniform sender marginals");
            fidelity[i] += t.joint[a * d + matched_outcome(rec.rule(i), a, d)];
        }
    }
    return gate_certificate(std::min(fidelity[0], 1.0), std::min(fidelity[1], 1.0), d);
}

} // namespace steercert
