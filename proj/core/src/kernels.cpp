#include "steercert/kernels.hpp"

#include <cmath>
#include <utility>

#include "steercert/entropy.hpp"
#include "steercert/errors.hpp"

namespace steercert {

bool matches(MatchRule rule, std::size_t a, std::size_t b, std::size_t d) {
    switch (rule) {
        case MatchRule::Equal: return a == b;
        case MatchRule::ModZero: return (a + b) % d == 0;
        case MatchRule::SumDm1: return a + b == d - 1;
    }
    throw DomainError("unknown matching rule");
}

std::size_t matched_outcome(MatchRule rule, std::size_t a, std::size_t d) {
    switch (rule) {
        case MatchRule::Equal: return a;
        case MatchRule::ModZero: return (d - a) % d;
        case MatchRule::SumDm1: return d - 1 - a;
    }
    throw DomainError("unknown matching rule");
}

namespace {

void validate_table(const SettingTable& t, std::size_t dim) {
    if (t.dim != dim || t.joint.size() != dim * dim || t.marginal.size() != dim)
        throw ContractError("setting table has inconsistent sizes");
    double total = 0.0;
    for (std::size_t a = 0; a < dim; ++a) {
        double row = 0.0;
        for (std::size_t b = 0; b < dim; ++b) {
            const double p = t.joint[a * dim + b];
            if (p < -1e-9) throw ContractError("joint probabilities must be non-negative");
            row += p;
        }
        if (std::abs(row - t.marginal[a]) > 1e-9)
            throw ContractError("marginal does not match its row sum");
        total += row;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw ContractError("joint table does not sum to one");
}

} // namespace

SteeringRecord::SteeringRecord(std::size_t dim, std::array<SettingTable, 2> settings,
                               std::array<MatchRule, 2> rules)
    : dim_(dim), settings_(std::move(settings)), rules_(rules) {
    if (dim_ < 2) throw DomainError("record dimension must be at least 2");
    for (const auto& t : settings_) validate_table(t, dim_);
}

double classical_bound_sdu(std::size_t d) {
    if (d < 2) throw DomainError("dimension must be at least 2");
    return 1.0 + 1.0 / std::sqrt(static_cast<double>(d));
}

double classical_bound_ent(std::size_t d) {
    if (d < 2) throw DomainError("dimension must be at least 2");
    return std::log2(1.0 / static_cast<double>(d));
}

SteeringRecord run_single_system(const DensityMatrix& rho_s, const MubPair& mub,
                                 const QuantumChannel& ch, const ComplexMatrix& u) {
    const std::size_t d = mub.dim();
    if (rho_s.dim() != d || ch.dim() != d)
        throw DimensionError("state, bases and channel dimensions differ");
    if (u.rows() != d || u.cols() != d || !u.is_unitary(1e-9))
        throw ContractError("target transformation must be a d x d unitary");

    std::array<SettingTable, 2> tables;
    for (std::size_t i = 0; i < 2; ++i) {
        const Basis& prep = mub.basis(i + 1);
        const Basis readout = rotate_basis(prep, u);
        SettingTable t{d, std::vector<double>(d * d, 0.0), std::vector<double>(d, 0.0)};
        for (std::size_t a = 0; a < d; ++a) {
            const double pa = born_probability(prep.vector(a), rho_s.matrix());
            const DensityMatrix out = apply(ch, DensityMatrix::pure(prep.vector(a)));
            const std::vector<double> dist = measurement_distribution(out, readout);
            double row = 0.0;
            for (std::size_t b = 0; b < d; ++b) {
                t.joint[a * d + b] = pa * dist[b];
                row += t.joint[a * d + b];
            }
            t.marginal[a] = row;
        }
        tables[i] = std::move(t);
    }
    return SteeringRecord(d, std::move(tables), {MatchRule::Equal, MatchRule::Equal});
}

SteeringRecord run_epr(const DensityMatrix& state, const MubPair& alice, const MubPair& bob,
                       const QuantumChannel& ch_on_bob, std::array<MatchRule, 2> rules) {
    const std::size_t d = alice.dim();
    if (bob.dim() != d || ch_on_bob.dim() != d || state.dim() != d * d)
        throw DimensionError("bipartite protocol requires matching d and a d^2 state");

    const QuantumChannel lifted = extend_to_second(ch_on_bob, d);
    const DensityMatrix sigma = apply(lifted, state);

    std::array<SettingTable, 2> tables;
    for (std::size_t i = 0; i < 2; ++i) {
        const Basis& ba = alice.basis(i + 1);
        const Basis& bb = bob.basis(i + 1);
        SettingTable t{d, std::vector<double>(d * d, 0.0), std::vector<double>(d, 0.0)};
        for (std::size_t a = 0; a < d; ++a) {
            double row = 0.0;
            for (std::size_t b = 0; b < d; ++b) {
                const ComplexMatrix v = kron(ba.vector(a), bb.vector(b));
                t.joint[a * d + b] = born_probability(v, sigma.matrix());
                row += t.joint[a * d + b];
            }
            t.marginal[a] = row;
        }
        tables[i] = std::move(t);
    }
    return SteeringRecord(d, std::move(tables), rules);
}

namespace {

Basis sigma_y_basis() {
    const Complex i{0.0, 1.0};
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix plus(2, 1);
    plus(0, 0) = s;
    plus(1, 0) = s * i;
    ComplexMatrix minus(2, 1);
    minus(0, 0) = s;
    minus(1, 0) = -s * i;
    return Basis(2, {plus, minus});
}

std::vector<Basis> temporal_bases(int n_settings) {
    if (n_settings != 2 && n_settings != 3)
        throw DomainError("temporal protocol supports 2 or 3 settings");
    const MubPair mub = fourier_basis(2);
    std::vector<Basis> bases{mub.basis1(), mub.basis2()};
    if (n_settings == 3) bases.push_back(sigma_y_basis());
    return bases;
}

} // namespace

std::vector<SettingTable> run_temporal(const DensityMatrix& rho_s, const QuantumChannel& ch,
                                       int n_settings) {
    if (rho_s.dim() != 2 || ch.dim() != 2)
        throw DomainError("temporal protocol is defined for qubits");
    const std::vector<Basis> bases = temporal_bases(n_settings);
    std::vector<SettingTable> tables;
    tables.reserve(bases.size());
    for (const Basis& basis : bases) {
        SettingTable t{2, std::vector<double>(4, 0.0), std::vector<double>(2, 0.0)};
        for (std::size_t a = 0; a < 2; ++a) {
            const double pa = born_probability(basis.vector(a), rho_s.matrix());
            const DensityMatrix out = apply(ch, DensityMatrix::pure(basis.vector(a)));
            const std::vector<double> dist = measurement_distribution(out, basis);
            for (std::size_t b = 0; b < 2; ++b) t.joint[a * 2 + b] = pa * dist[b];
            t.marginal[a] = pa * (dist[0] + dist[1]);
        }
        tables.push_back(std::move(t));
    }
    return tables;
}

KernelReport kernel_sdu(const SteeringRecord& rec) {
    const std::size_t d = rec.dim();
    double value = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        const SettingTable& t = rec.setting(i);
        for (std::size_t a = 0; a < d; ++a)
            value += t.joint[a * d + matched_outcome(rec.rule(i), a, d)];
    }
    const double bound = classical_bound_sdu(d);
    return {"sdu", value, bound, value > bound, value - bound, d};
}

KernelReport kernel_ent(const SteeringRecord& rec) {
    const std::size_t d = rec.dim();
    double value = 0.0;
    std::vector<double> cond(d);
    for (std::size_t i = 0; i < 2; ++i) {
        const SettingTable& t = rec.setting(i);
        for (std::size_t a = 0; a < d; ++a) {
            const double pa = t.marginal[a];
            if (pa <= 0.0) continue;
            for (std::size_t b = 0; b < d; ++b) {
                double c = t.joint[a * d + b] / pa;
                if (c < 0.0) c = 0.0;
                if (c > 1.0) c = 1.0;
                cond[b] = c;
            }
            value -= pa * shannon_entropy(cond);
        }
    }
    const double bound = classical_bound_ent(d);
    return {"ent", value, bound, value > bound, value - bound, d};
}

KernelReport temporal_kernel(const std::vector<SettingTable>& settings) {
    if (settings.size() != 2 && settings.size() != 3)
        throw DomainError("temporal kernel takes 2 or 3 settings");
    double value = 0.0;
    for (const SettingTable& t : settings) {
        if (t.dim != 2) throw DomainError("temporal kernel is defined for qubits");
        validate_table(t, 2);
        for (std::size_t a = 0; a < 2; ++a) {
            const double pa = t.marginal[a];
            if (pa <= 0.0) continue;
            const double expectation = (t.joint[a * 2] - t.joint[a * 2 + 1]) / pa;
            value += pa * expectation * expectation;
        }
    }
    const double bound = 1.0;
    return {"temporal", value, bound, value > bound, value - bound, 2};
}

} // namespace steercert
