#pragma once
// d-dimensional states and measurement bases.  The workhorse pair of bases
// is the computational basis together with its Fourier transform; every
// overlap between the two has modulus 1/sqrt(d), which is what the steering
// bounds in kernels.hpp rely on.

#include <cstddef>
#include <vector>

#include "steercert/numerics.hpp"
#include "steercert/random.hpp"

namespace steercert {

// Orthonormal set of dim column vectors (validated to 1e-10 on construction).
class Basis {
public:
    Basis(std::size_t dim, std::vector<ComplexMatrix> vectors);

    static Basis computational(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const ComplexMatrix& vector(std::size_t k) const { return vectors_[k]; }
    ComplexMatrix projector(std::size_t k) const; // |v_k><v_k|

private:
    std::size_t dim_;
    std::vector<ComplexMatrix> vectors_;
};

// Two mutually unbiased bases of the same dimension:
// |<a|b>| = 1/sqrt(d) for every cross pair (validated to 1e-10).
class MubPair {
public:
    MubPair(Basis basis1, Basis basis2);

    std::size_t dim() const { return basis1_.dim(); }
    const Basis& basis1() const { return basis1_; }
    const Basis& basis2() const { return basis2_; }
    const Basis& basis(std::size_t setting) const; // setting in {1, 2}

private:
    Basis basis1_;
    Basis basis2_;
};

// F(j,k) = omega^{jk} / sqrt(d) with omega = exp(i 2 pi / d); columns are the
// Fourier-basis vectors.
ComplexMatrix fourier_matrix(std::size_t d);

// Computational basis paired with its Fourier transform.
MubPair fourier_basis(std::size_t d);

// Apply a unitary to every basis vector.
Basis rotate_basis(const Basis& b, const ComplexMatrix& u);
MubPair rotate_pair(const MubPair& pair, const ComplexMatrix& u);

// Unit-trace positive Hermitian operator.  Construction checks Hermiticity
// and trace to 1e-9; positivity is the producer's contract (checked in the
// test suites, not on every construction).
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix pure(const ComplexMatrix& state_vector); // normalizes
    static DensityMatrix maximally_mixed(std::size_t dim);

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }
    double purity() const; // Tr rho^2

private:
    ComplexMatrix matrix_;
};

// <v| rho |v>, clipped into [0, 1].
double born_probability(const ComplexMatrix& v, const ComplexMatrix& rho);

// Outcome distribution of rho measured in b; entries clipped to [0, 1],
// sum checked against 1 to 1e-9.
std::vector<double> measurement_distribution(const DensityMatrix& rho, const Basis& b);

// (1/sqrt(d)) sum_a |a>|a> as a density matrix on d^2 dimensions.
DensityMatrix maximally_entangled_phi(std::size_t d);

// (1/sqrt(d)) sum_{a+b=d-1} (-1)^a |a>|b>.  For d = 2 this is the singlet,
// invariant under R (x) R for every unitary R up to a global phase.
DensityMatrix supersinglet(std::size_t d);

// Trace out the first factor of a bipartite state of shape
// dim_first x dim_second.
DensityMatrix partial_trace_first(const DensityMatrix& rho, std::size_t dim_first,
                                  std::size_t dim_second);

// Haar-distributed unitary: Gram-Schmidt on a complex Gaussian matrix (the
// positive-diagonal QR convention).
ComplexMatrix random_unitary(std::size_t d, Rng& rng);
ComplexMatrix random_state_vector(std::size_t d, Rng& rng);
DensityMatrix random_pure_state(std::size_t d, Rng& rng);
// Random mixture of `rank` random pure states.
DensityMatrix random_density_matrix(std::size_t d, std::size_t rank, Rng& rng);

} // namespace steercert
