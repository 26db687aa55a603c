#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "steercert/errors.hpp"
#include "steercert/kernels.hpp"
#include "steercert/lhs.hpp"
#include "steercert/qudit.hpp"
#include "steercert/random.hpp"

using namespace steercert;

namespace {

LhsStrategy tiny_strategy(std::size_t d) {
    std::vector<double> w = {1.0};
    std::array<std::vector<double>, 2> resp;
    resp[0].assign(d, 0.0);
    resp[1].assign(d, 0.0);
    resp[0][0] = 1.0;
    resp[1][0] = 1.0;
    return LhsStrategy(d, w, resp, {DensityMatrix::maximally_mixed(d)});
}

} // namespace

TEST_CASE("strategy construction validates its pieces") {
    std::array<std::vector<double>, 2> resp;
    resp[0] = {1.0, 0.0};
    resp[1] = {0.5, 0.5};
    CHECK_NOTHROW(LhsStrategy(2, {1.0}, resp, {DensityMatrix::maximally_mixed(2)}));
    CHECK_THROWS_AS(LhsStrategy(2, {-0.5, 1.5}, resp,
                                {DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(2)}),
                    ContractError);
    CHECK_THROWS_AS(LhsStrategy(2, {0.7}, resp, {DensityMatrix::maximally_mixed(2)}),
                    ContractError);
    std::array<std::vector<double>, 2> short_resp;
    short_resp[0] = {1.0, 0.5}; // does not sum to one per row
    short_resp[1] = {0.5, 0.5};
    CHECK_THROWS_AS(LhsStrategy(2, {1.0}, short_resp, {DensityMatrix::maximally_mixed(2)}),
                    ContractError);
    CHECK_THROWS_AS(LhsStrategy(2, {1.0}, resp, {DensityMatrix::maximally_mixed(3)}),
                    DimensionError);
}

TEST_CASE("optimal strategy saturates the bound") {
    for (std::size_t d : {2, 3, 4, 8}) {
        const LhsStrategy s = optimal_strategy(d, ComplexMatrix::identity(d));
        const KernelReport r = kernel_sdu(simulate_lhs(s, fourier_basis(d)));
        CHECK(std::abs(r.value - r.bound) < 1e-9);
        // certification is a strict >, so rounding can land either side of
        // the bound; what matters is that any violation is pure noise
        if (r.certified) CHECK(r.margin < 1e-9);
    }
    // the bound is basis-independent
    Rng rng(23);
    for (std::size_t d : {2, 3, 4}) {
        const ComplexMatrix u = (d == 3) ? fourier_matrix(3) : random_unitary(d, rng);
        const LhsStrategy s = optimal_strategy(d, u);
        const KernelReport r = kernel_sdu(simulate_lhs(s, rotate_pair(fourier_basis(d), u)));
        CHECK(std::abs(r.value - (1.0 + 1.0 / std::sqrt(static_cast<double>(d)))) < 1e-9);
    }
}

TEST_CASE("fixed-basis measuring device reaches 1 + 1/d") {
    for (std::size_t d : {2, 3, 4, 6}) {
        const LhsStrategy s = fixed_basis_measure_strategy(d, ComplexMatrix::identity(d));
        const KernelReport r = kernel_sdu(simulate_lhs(s, fourier_basis(d)));
        CHECK(r.value == doctest::Approx(1.0 + 1.0 / d).epsilon(1e-9));
        CHECK_FALSE(r.certified);
    }
}

TEST_CASE("random strategies never beat any bound") {
    for (std::size_t d : {2, 3}) {
        const MubPair mub = fourier_basis(d);
        const double bound_sdu = classical_bound_sdu(d);
        const double bound_ent = classical_bound_ent(d);
        for (std::uint64_t seed = 0; seed < 2000; ++seed) {
            const LhsStrategy s = random_strategy(d, 1 + seed % 4, seed);
            const SteeringRecord rec = simulate_lhs(s, mub);
            CHECK(kernel_sdu(rec).value <= bound_sdu + 1e-12);
            CHECK(kernel_ent(rec).value <= bound_ent + 1e-12);
            if (d == 2) {
                CHECK(temporal_kernel(simulate_lhs_temporal(s, 2)).value <= 1.0 + 1e-12);
                CHECK(temporal_kernel(simulate_lhs_temporal(s, 3)).value <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("soundness also holds against rotated verification bases") {
    Rng rng(71);
    for (std::size_t d : {2, 3}) {
        const double bound = classical_bound_sdu(d);
        for (int trial = 0; trial < 50; ++trial) {
            const ComplexMatrix u = random_unitary(d, rng);
            const LhsStrategy s = random_strategy(d, d, 1000 + trial);
            const KernelReport r = kernel_sdu(simulate_lhs(s, rotate_pair(fourier_basis(d), u)));
            CHECK(r.value <= bound + 1e-12);
        }
    }
}

TEST_CASE("verifier's unconditional state is setting independent") {
    for (std::uint64_t seed : {1, 2, 3}) {
        const std::size_t d = 3;
        const LhsStrategy s = random_strategy(d, 4, seed);
        const MubPair mub = fourier_basis(d);
        const SteeringRecord rec = simulate_lhs(s, mub);
        ComplexMatrix rho_b(d, d);
        for (std::size_t l = 0; l < s.n_hidden(); ++l)
            rho_b = rho_b + s.hidden_weights()[l] * s.hidden_state(l).matrix();
        for (std::size_t i = 0; i < 2; ++i) {
            const std::vector<double> expect =
                measurement_distribution(DensityMatrix(rho_b), mub.basis(i + 1));
            for (std::size_t b = 0; b < d; ++b) {
                double pb = 0.0;
                for (std::size_t a = 0; a < d; ++a) pb += rec.setting(i).joint[a * d + b];
                CHECK(pb == doctest::Approx(expect[b]).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("unqualified apparatus stays classical") {
    const LhsStrategy s = unqualified_apparatus_strategy(4, 9);
    const KernelReport r = kernel_sdu(simulate_lhs(s, fourier_basis(4)));
    CHECK(r.value <= r.bound + 1e-12);
    CHECK_FALSE(r.certified);
}

TEST_CASE("temporal third setting reuses announced outcomes harmlessly") {
    const LhsStrategy s = tiny_strategy(2);
    const std::vector<SettingTable> tables = simulate_lhs_temporal(s, 3);
    REQUIRE(tables.size() == 3);
    CHECK(temporal_kernel(tables).value <= 1.0 + 1e-12);
    CHECK_THROWS_AS(simulate_lhs_temporal(s, 4), DomainError);
    CHECK_THROWS_AS(simulate_lhs_temporal(tiny_strategy(3), 2), DomainError);
}
