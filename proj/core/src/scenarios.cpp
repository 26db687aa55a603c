#include "steercert/scenarios.hpp"

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "steercert/errors.hpp"
#include "steercert/random.hpp"

namespace steercert {

namespace {

SettingTable noise_table(std::size_t d, double p) {
    const double dd = static_cast<double>(d);
    const double matched = (1.0 - p + p / dd) / dd;
    const double missed = p / (dd * dd);
    SettingTable t;
    t.dim = d;
    t.joint.assign(d * d, missed);
    t.marginal.assign(d, 1.0 / dd);
    for (std::size_t a = 0; a < d; ++a) t.joint[a * d + a] = matched;
    return t;
}

} // namespace

SteeringRecord symmetric_noise_record(std::size_t d, double p) {
    if (p < 0.0 || p > 1.0) throw DomainError("noise weight must lie in [0,1]");
    SettingTable t = noise_table(d, p);
    return SteeringRecord(d, {t, t}, {MatchRule::Equal, MatchRule::Equal});
}

double noise_threshold_sdu_closed_form(std::size_t d) {
    const double dd = static_cast<double>(d);
    return (1.0 - 1.0 / std::sqrt(dd)) / (2.0 * (1.0 - 1.0 / dd));
}

double noise_threshold_sdu_bisection(std::size_t d) {
    const double bound = classical_bound_sdu(d);
    // S_dU(p) = 2 (1 - p + p/d) falls from 2 to 2/d, crossing the bound once.
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (kernel_sdu(symmetric_noise_record(d, mid)).value > bound)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

double noise_threshold_ent_bisection(std::size_t d) {
    const double bound = classical_bound_ent(d);
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (kernel_ent(symmetric_noise_record(d, mid)).value > bound)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

RobustnessPoint noise_threshold(std::size_t d) {
    RobustnessPoint pt;
    pt.dim = d;
    pt.p_sdu = noise_threshold_sdu_bisection(d);
    pt.p_ent = noise_threshold_ent_bisection(d);
    return pt;
}

BitflipDiscrepancy bitflip_discrepancy() {
    const MubPair mub = fourier_basis(2);
    const QuantumChannel flip = bit_flip();
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
    BitflipDiscrepancy out;
    out.s2i = kernel_sdu(run_single_system(mixed, mub, flip, ComplexMatrix::identity(2))).value;
    out.sn = temporal_kernel(run_temporal(mixed, flip, 2)).value;
    out.epr = kernel_sdu(run_epr(maximally_entangled_phi(2), mub, mub, flip,
                                 {MatchRule::Equal, MatchRule::ModZero}))
                  .value;
    return out;
}

ComplexMatrix cluster4_vector() {
    ComplexMatrix v(16, 1);
    for (std::size_t a1 = 0; a1 < 2; ++a1)
        for (std::size_t a2 = 0; a2 < 2; ++a2)
            for (std::size_t b1 = 0; b1 < 2; ++b1)
                for (std::size_t b2 = 0; b2 < 2; ++b2) {
                    const std::size_t parity = (a1 & a2) ^ (a1 & b1) ^ (a2 & b2);
                    v(8 * a1 + 4 * a2 + 2 * b1 + b2, 0) = parity ? -0.25 : 0.25;
                }
    return v;
}

ComplexMatrix oneway_gate() {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix h(2, 2);
    h(0, 0) = r;
    h(0, 1) = r;
    h(1, 0) = r;
    h(1, 1) = -r;
    ComplexMatrix cz = ComplexMatrix::identity(4);
    cz(3, 3) = -1.0;
    return kron(h, h) * cz;
}

namespace {

// (|0> + (-1)^q |1>) / sqrt(2)
ComplexMatrix x_ket(std::size_t q) {
    ComplexMatrix v(2, 1);
    const double r = 1.0 / std::sqrt(2.0);
    v(0, 0) = r;
    v(1, 0) = q ? -r : r;
    return v;
}

// (|0> + (-1)^q i |1>) / sqrt(2)
ComplexMatrix y_ket(std::size_t q) {
    ComplexMatrix v(2, 1);
    const double r = 1.0 / std::sqrt(2.0);
    v(0, 0) = r;
    v(1, 0) = Complex(0.0, q ? -r : r);
    return v;
}

} // namespace

ComplexMatrix cluster4_x_expansion() {
    const ComplexMatrix u = oneway_gate();
    ComplexMatrix v(16, 1);
    for (std::size_t m = 0; m < 2; ++m)
        for (std::size_t n = 0; n < 2; ++n) {
            const ComplexMatrix in = kron(x_ket(m), x_ket(n));
            v = v + 0.5 * kron(in, u * in);
        }
    return v;
}

ComplexMatrix cluster4_y_expansion() {
    const ComplexMatrix u = oneway_gate();
    ComplexMatrix v(16, 1);
    for (std::size_t m = 0; m < 2; ++m)
        for (std::size_t n = 0; n < 2; ++n) {
            const ComplexMatrix in = kron(y_ket(m), y_ket(n));
            v = v + 0.5 * kron(in.conjugate(), u * in);
        }
    return v;
}

KernelReport oneway_experiment(const QuantumChannel& ch) {
    if (ch.dim() != 4)
        throw ContractError("one-way certification needs a channel on the verifier pair (d = 4)");
    const ComplexMatrix u = oneway_gate();

    std::vector<ComplexMatrix> alice1, alice2, bob1, bob2;
    for (std::size_t m = 0; m < 2; ++m)
        for (std::size_t n = 0; n < 2; ++n) {
            const ComplexMatrix xs = kron(x_ket(m), x_ket(n));
            const ComplexMatrix ys = kron(y_ket(m), y_ket(n));
            alice1.push_back(xs);
            // The sender's second-setting kets carry the conjugate phase:
            // only then does the cluster state expand as
            // sum_a |a~>_A (x) U|a>_B over the y product basis.
            alice2.push_back(ys.conjugate());
            bob1.push_back(u * xs);
            bob2.push_back(u * ys);
        }
    const MubPair alice(Basis(4, std::move(alice1)), Basis(4, std::move(alice2)));
    const MubPair bob(Basis(4, std::move(bob1)), Basis(4, std::move(bob2)));

    const SteeringRecord rec = run_epr(DensityMatrix::pure(cluster4_vector()), alice, bob, ch,
                                       {MatchRule::Equal, MatchRule::Equal});
    return kernel_sdu(rec);
}

double equivalence_sweep(std::size_t d, std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    const MubPair mub = fourier_basis(d);
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(d);
    const DensityMatrix phi = maximally_entangled_phi(d);

    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const ComplexMatrix u = random_unitary(d, rng);
        const QuantumChannel noise =
            random_channel(d, 1 + static_cast<std::size_t>(rng.integer(d)), rng);
        const QuantumChannel process = compose(unitary_channel(u), noise);

        const SteeringRecord ss = run_single_system(mixed, mub, process, u);
        const SteeringRecord ep = run_epr(phi, mub, rotate_pair(mub, u), process,
                                          {MatchRule::Equal, MatchRule::ModZero});

        for (std::size_t a = 0; a < d; ++a) {
            const std::size_t ar = (d - a) % d; // sender label under the transpose
            for (std::size_t b = 0; b < d; ++b) {
                const double d1 =
                    std::abs(ss.setting(0).joint[a * d + b] - ep.setting(0).joint[a * d + b]);
                const double d2 =
                    std::abs(ss.setting(1).joint[a * d + b] - ep.setting(1).joint[ar * d + b]);
                worst = std::max(worst, std::max(d1, d2));
            }
        }
    }
    return worst;
}

} // namespace steercert
