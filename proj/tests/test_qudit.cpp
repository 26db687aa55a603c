#include <doctest.h>

#include <cmath>
#include <vector>

#include "steercert/entropy.hpp"
#include "steercert/errors.hpp"
#include "steercert/qudit.hpp"
#include "steercert/random.hpp"

using namespace steercert;

TEST_CASE("fourier pair is mutually unbiased") {
    for (std::size_t d : {2, 3, 4, 5, 8, 16, 64}) {
        const MubPair mub = fourier_basis(d); // construction validates both bases
        const double target = 1.0 / std::sqrt(static_cast<double>(d));
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                Complex ov = 0.0;
                for (std::size_t j = 0; j < d; ++j)
                    ov += std::conj(mub.basis1().vector(a)(j, 0)) * mub.basis2().vector(b)(j, 0);
                CHECK(std::abs(std::abs(ov) - target) < 1e-10);
            }
    }
}

TEST_CASE("fourier matrix is unitary and matches the basis") {
    for (std::size_t d : {2, 3, 7}) {
        const ComplexMatrix f = fourier_matrix(d);
        CHECK(f.is_unitary(1e-10));
        const MubPair mub = fourier_basis(d);
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t j = 0; j < d; ++j)
                CHECK(std::abs(f(j, k) - mub.basis2().vector(k)(j, 0)) < 1e-12);
    }
}

TEST_CASE("basis construction rejects non-orthonormal sets") {
    std::vector<ComplexMatrix> vecs;
    vecs.push_back(ComplexMatrix::column({Complex(1, 0), Complex(0, 0)}));
    vecs.push_back(ComplexMatrix::column({Complex(1, 0), Complex(0, 0)}));
    CHECK_THROWS_AS(Basis(2, vecs), ContractError);
    // same first basis appearing in both slots is not unbiased
    const Basis comp = Basis::computational(2);
    CHECK_THROWS_AS(MubPair(comp, comp), ContractError);
}

TEST_CASE("rotating a pair preserves unbiasedness") {
    Rng rng(21);
    for (std::size_t d : {2, 3, 5}) {
        const ComplexMatrix u = random_unitary(d, rng);
        const MubPair rotated = rotate_pair(fourier_basis(d), u); // revalidates on construction
        CHECK(rotated.dim() == d);
        CHECK_THROWS_AS(rotate_basis(Basis::computational(d), ComplexMatrix(d, d)), ContractError);
    }
}

TEST_CASE("density matrix construction and purity") {
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(4);
    CHECK(mixed.purity() == doctest::Approx(0.25).epsilon(1e-12));
    Rng rng(3);
    const DensityMatrix pure = random_pure_state(5, rng);
    CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-10));
    // unnormalized input is normalized by pure()
    const DensityMatrix p2 = DensityMatrix::pure(ComplexMatrix::column({Complex(3, 0), Complex(4, 0)}));
    CHECK(p2.matrix()(0, 0).real() == doctest::Approx(9.0 / 25.0));
    CHECK_THROWS_AS(DensityMatrix::pure(ComplexMatrix::column({Complex(0, 0), Complex(0, 0)})),
                    DomainError);
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(2)), ContractError); // trace 2
}

TEST_CASE("born probabilities form a distribution") {
    Rng rng(17);
    for (std::size_t d : {2, 3, 6}) {
        const DensityMatrix rho = random_density_matrix(d, 3, rng);
        const std::vector<double> p = measurement_distribution(rho, Basis::computational(d));
        double sum = 0.0;
        for (double x : p) {
            CHECK(x >= 0.0);
            CHECK(x <= 1.0);
            sum += x;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("maximally entangled state has maximally mixed margins") {
    for (std::size_t d : {2, 3, 4}) {
        const DensityMatrix phi = maximally_entangled_phi(d);
        const DensityMatrix reduced = partial_trace_first(phi, d, d);
        CHECK((reduced.matrix() - DensityMatrix::maximally_mixed(d).matrix()).max_abs() < 1e-12);
    }
}

TEST_CASE("partial trace of a product state returns the second factor") {
    Rng rng(8);
    const DensityMatrix a = random_density_matrix(2, 2, rng);
    const DensityMatrix b = random_density_matrix(3, 2, rng);
    const DensityMatrix joint(kron(a.matrix(), b.matrix()));
    const DensityMatrix out = partial_trace_first(joint, 2, 3);
    CHECK((out.matrix() - b.matrix()).max_abs() < 1e-12);
}

TEST_CASE("supersinglet is the singlet at d = 2 and anticorrelated in general") {
    const DensityMatrix ss2 = supersinglet(2);
    ComplexMatrix singlet(4, 1);
    singlet(1, 0) = 1.0 / std::sqrt(2.0);
    singlet(2, 0) = -1.0 / std::sqrt(2.0);
    CHECK((ss2.matrix() - DensityMatrix::pure(singlet).matrix()).max_abs() < 1e-12);

    for (std::size_t d : {3, 4, 5}) {
        const DensityMatrix ss = supersinglet(d);
        // computational joint outcomes sit on a + b = d - 1 with weight 1/d
        const Basis comp = Basis::computational(d * d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                const double p = born_probability(comp.vector(a * d + b), ss.matrix());
                if (a + b == d - 1)
                    CHECK(p == doctest::Approx(1.0 / d).epsilon(1e-12));
                else
                    CHECK(p < 1e-12);
            }
    }
}

TEST_CASE("singlet is invariant under a shared rotation") {
    Rng rng(40);
    const DensityMatrix ss = supersinglet(2);
    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix r = random_unitary(2, rng);
        const ComplexMatrix rr = kron(r, r);
        const DensityMatrix rotated(rr * ss.matrix() * rr.adjoint());
        CHECK((rotated.matrix() - ss.matrix()).max_abs() < 1e-10);
    }
}

TEST_CASE("random unitary is unitary and seed-stable") {
    Rng a(55);
    Rng b(55);
    for (std::size_t d : {2, 3, 8}) {
        const ComplexMatrix ua = random_unitary(d, a);
        const ComplexMatrix ub = random_unitary(d, b);
        CHECK(ua.is_unitary(1e-9));
        CHECK((ua - ub).max_abs() == 0.0);
    }
}

TEST_CASE("random density matrices are valid states") {
    Rng rng(60);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(trial % 4);
        const DensityMatrix rho = random_density_matrix(d, 1 + trial % 3, rng);
        CHECK(rho.matrix().is_hermitian(1e-10));
        CHECK(std::abs(rho.matrix().trace() - Complex(1, 0)) < 1e-9);
        const HermitianEigensystem es = hermitian_eig(rho.matrix());
        for (double ev : es.eigenvalues) CHECK(ev > -1e-10);
    }
}

TEST_CASE("entropic uncertainty over the fourier pair") {
    Rng rng(77);
    for (std::size_t d = 2; d <= 8; ++d) {
        const MubPair mub = fourier_basis(d);
        const double floor = std::log2(static_cast<double>(d));
        for (int trial = 0; trial < 200; ++trial) {
            const DensityMatrix psi = random_pure_state(d, rng);
            const double h1 = shannon_entropy(measurement_distribution(psi, mub.basis1()));
            const double h2 = shannon_entropy(measurement_distribution(psi, mub.basis2()));
            CHECK(h1 + h2 >= floor - 1e-9);
        }
    }
}

TEST_CASE("dimension guards") {
    CHECK_THROWS_AS(fourier_basis(1), DomainError);
    CHECK_THROWS_AS(DensityMatrix::maximally_mixed(0), DomainError);
    const std::size_t old_cap = dimension_cap();
    set_dimension_cap(16);
    CHECK_THROWS_AS(fourier_basis(17), DimensionError);
    CHECK_NOTHROW(fourier_basis(16));
    set_dimension_cap(old_cap);
}
