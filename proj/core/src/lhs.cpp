#include "steercert/lhs.hpp"

#include <cmath>
#include <utility>

#include "steercert/errors.hpp"

namespace steercert {

LhsStrategy::LhsStrategy(std::size_t dim, std::vector<double> hidden_weights,
                         std::array<std::vector<double>, 2> responses,
                         std::vector<DensityMatrix> hidden_states)
    : dim_(dim),
      hidden_weights_(std::move(hidden_weights)),
      responses_(std::move(responses)),
      hidden_states_(std::move(hidden_states)) {
    if (dim_ < 2) throw DomainError("strategy dimension must be at least 2");
    const std::size_t n = hidden_weights_.size();
    if (n == 0) throw ContractError("strategy needs at least one hidden value");
    double total = 0.0;
    for (double w : hidden_weights_) {
        if (w < -1e-12) throw ContractError("hidden weights must be non-negative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw ContractError("hidden weights must sum to one");
    for (const auto& resp : responses_) {
        if (resp.size() != n * dim_) throw DimensionError("response table has the wrong shape");
        for (std::size_t l = 0; l < n; ++l) {
            double row = 0.0;
            for (std::size_t a = 0; a < dim_; ++a) {
                const double p = resp[l * dim_ + a];
                if (p < -1e-12) throw ContractError("response probabilities must be non-negative");
                row += p;
            }
            if (std::abs(row - 1.0) > 1e-9)
                throw ContractError("response rows must sum to one");
        }
    }
    if (hidden_states_.size() != n) throw DimensionError("one hidden state per hidden value");
    for (const auto& rho : hidden_states_)
        if (rho.dim() != dim_) throw DimensionError("hidden state dimension mismatch");
}

double LhsStrategy::response(std::size_t setting, std::size_t lambda, std::size_t a) const {
    if (setting != 1 && setting != 2) throw DomainError("setting index must be 1 or 2");
    return responses_[setting - 1][lambda * dim_ + a];
}

SteeringRecord simulate_lhs(const LhsStrategy& s, const MubPair& bob) {
    const std::size_t d = s.dim();
    if (bob.dim() != d) throw DimensionError("verifier bases must match the strategy dimension");

    std::array<SettingTable, 2> tables;
    for (std::size_t i = 0; i < 2; ++i) {
        const Basis& basis = bob.basis(i + 1);
        SettingTable t{d, std::vector<double>(d * d, 0.0), std::vector<double>(d, 0.0)};
        for (std::size_t l = 0; l < s.n_hidden(); ++l) {
            const double w = s.hidden_weights()[l];
            if (w <= 0.0) continue;
            const std::vector<double> dist = measurement_distribution(s.hidden_state(l), basis);
            for (std::size_t a = 0; a < d; ++a) {
                const double r = w * s.response(i + 1, l, a);
                if (r <= 0.0) continue;
                for (std::size_t b = 0; b < d; ++b) t.joint[a * d + b] += r * dist[b];
            }
        }
        for (std::size_t a = 0; a < d; ++a) {
            double row = 0.0;
            for (std::size_t b = 0; b < d; ++b) row += t.joint[a * d + b];
            t.marginal[a] = row;
        }
        tables[i] = std::move(t);
    }
    return SteeringRecord(d, std::move(tables), {MatchRule::Equal, MatchRule::Equal});
}

std::vector<SettingTable> simulate_lhs_temporal(const LhsStrategy& s, int n_settings) {
    if (s.dim() != 2) throw DomainError("temporal mimicry is defined for qubits");
    if (n_settings != 2 && n_settings != 3)
        throw DomainError("temporal protocol supports 2 or 3 settings");

    const MubPair mub = fourier_basis(2);
    const Complex im{0.0, 1.0};
    const double n2 = 1.0 / std::sqrt(2.0);
    const Basis sigma_y(2, {ComplexMatrix(2, 1, {n2, n2 * im}), ComplexMatrix(2, 1, {n2, -n2 * im})});

    std::vector<SettingTable> tables;
    for (int i = 0; i < n_settings; ++i) {
        const Basis& basis = i == 0 ? mub.basis1() : (i == 1 ? mub.basis2() : sigma_y);
        const std::size_t resp_setting = (i < 2) ? i + 1 : 1;
        SettingTable t{2, std::vector<double>(4, 0.0), std::vector<double>(2, 0.0)};
        for (std::size_t l = 0; l < s.n_hidden(); ++l) {
            const double w = s.hidden_weights()[l];
            if (w <= 0.0) continue;
            const std::vector<double> dist = measurement_distribution(s.hidden_state(l), basis);
            for (std::size_t a = 0; a < 2; ++a) {
                const double r = w * s.response(resp_setting, l, a);
                for (std::size_t b = 0; b < 2; ++b) t.joint[a * 2 + b] += r * dist[b];
            }
        }
        t.marginal[0] = t.joint[0] + t.joint[1];
        t.marginal[1] = t.joint[2] + t.joint[3];
        tables.push_back(std::move(t));
    }
    return tables;
}

LhsStrategy optimal_strategy(std::size_t d, const ComplexMatrix& u) {
    const MubPair mub = fourier_basis(d);
    const ComplexMatrix m1 = u * mub.basis1().vector(0);
    const ComplexMatrix n2 = u * mub.basis2().vector(0);
    const ComplexMatrix sum = m1 * m1.adjoint() + n2 * n2.adjoint();
    const HermitianEigensystem eig = hermitian_eig(sum);
    ComplexMatrix top(d, 1);
    for (std::size_t r = 0; r < d; ++r) top(r, 0) = eig.eigenvectors(r, d - 1);

    std::array<std::vector<double>, 2> responses;
    for (auto& resp : responses) {
        resp.assign(d, 0.0);
        resp[0] = 1.0; // always announce a = 0
    }
    return LhsStrategy(d, {1.0}, std::move(responses), {DensityMatrix::pure(top)});
}

LhsStrategy random_strategy(std::size_t d, std::size_t n_hidden, std::uint64_t seed) {
    if (n_hidden == 0) throw DomainError("need at least one hidden value");
    Rng rng(seed);

    std::vector<double> weights(n_hidden);
    double total = 0.0;
    for (auto& w : weights) {
        w = -std::log(1.0 - rng.uniform());
        total += w;
    }
    for (auto& w : weights) w /= total;

    std::array<std::vector<double>, 2> responses;
    for (auto& resp : responses) {
        resp.resize(n_hidden * d);
        for (std::size_t l = 0; l < n_hidden; ++l) {
            double row = 0.0;
            for (std::size_t a = 0; a < d; ++a) {
                resp[l * d + a] = -std::log(1.0 - rng.uniform());
                row += resp[l * d + a];
            }
            for (std::size_t a = 0; a < d; ++a) resp[l * d + a] /= row;
        }
    }

    std::vector<DensityMatrix> states;
    states.reserve(n_hidden);
    for (std::size_t l = 0; l < n_hidden; ++l) {
        if (l % 2 == 0) {
            states.push_back(random_pure_state(d, rng));
        } else {
            states.push_back(random_density_matrix(d, 1 + rng.integer(d), rng));
        }
    }
    return LhsStrategy(d, std::move(weights), std::move(responses), std::move(states));
}

LhsStrategy fixed_basis_measure_strategy(std::size_t d, const ComplexMatrix& u) {
    const Basis comp = Basis::computational(d);
    const Basis rotated = rotate_basis(comp, u);

    std::vector<double> weights(d, 1.0 / static_cast<double>(d));
    std::array<std::vector<double>, 2> responses;
    responses[0].assign(d * d, 0.0);
    for (std::size_t l = 0; l < d; ++l) responses[0][l * d + l] = 1.0; // announce the result
    responses[1].assign(d * d, 1.0 / static_cast<double>(d));          // announce noise

    std::vector<DensityMatrix> states;
    states.reserve(d);
    for (std::size_t l = 0; l < d; ++l) states.push_back(DensityMatrix::pure(rotated.vector(l)));
    return LhsStrategy(d, std::move(weights), std::move(responses), std::move(states));
}

LhsStrategy unqualified_apparatus_strategy(std::size_t d, std::uint64_t seed) {
    return random_strategy(d, d, seed);
}

} // namespace steercert
