#include "steercert/qudit.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "steercert/errors.hpp"

namespace steercert {

namespace {

constexpr double kBasisTol = 1e-10;

Complex inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::conj(a(i, 0)) * b(i, 0);
    return s;
}

void require_dim(std::size_t d) {
    if (d < 2) throw DomainError("dimension must be at least 2");
    if (d > dimension_cap())
        throw DimensionError("dimension exceeds the cap (" + std::to_string(dimension_cap()) + ")");
}

} // namespace

Basis::Basis(std::size_t dim, std::vector<ComplexMatrix> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ == 0) throw DomainError("basis dimension must be positive");
    if (vectors_.size() != dim_) throw DimensionError("basis needs exactly dim vectors");
    for (const auto& v : vectors_)
        if (v.rows() != dim_ || v.cols() != 1)
            throw DimensionError("basis vectors must be dim x 1 columns");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j) {
            const Complex g = inner(vectors_[i], vectors_[j]);
            const Complex expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - expected) > kBasisTol)
                throw ContractError("basis vectors are not orthonormal");
        }
}

Basis Basis::computational(std::size_t dim) {
    std::vector<ComplexMatrix> vecs;
    vecs.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        ComplexMatrix v(dim, 1);
        v(k, 0) = 1.0;
        vecs.push_back(std::move(v));
    }
    return Basis(dim, std::move(vecs));
}

ComplexMatrix Basis::projector(std::size_t k) const {
    const ComplexMatrix& v = vectors_.at(k);
    return v * v.adjoint();
}

MubPair::MubPair(Basis basis1, Basis basis2)
    : basis1_(std::move(basis1)), basis2_(std::move(basis2)) {
    if (basis1_.dim() != basis2_.dim())
        throw DimensionError("MUB pair requires equal dimensions");
    const double target = 1.0 / std::sqrt(static_cast<double>(basis1_.dim()));
    for (std::size_t a = 0; a < basis1_.dim(); ++a)
        for (std::size_t b = 0; b < basis2_.dim(); ++b) {
            const double overlap = std::abs(inner(basis1_.vector(a), basis2_.vector(b)));
            if (std::abs(overlap - target) > kBasisTol)
                throw ContractError("bases are not mutually unbiased");
        }
}

const Basis& MubPair::basis(std::size_t setting) const {
    if (setting == 1) return basis1_;
    if (setting == 2) return basis2_;
    throw DomainError("setting index must be 1 or 2");
}

ComplexMatrix fourier_matrix(std::size_t d) {
    require_dim(d);
    ComplexMatrix f(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            const double angle =
                2.0 * std::numbers::pi * static_cast<double>((j * k) % d) / static_cast<double>(d);
            f(j, k) = norm * Complex{std::cos(angle), std::sin(angle)};
        }
    return f;
}

MubPair fourier_basis(std::size_t d) {
    require_dim(d);
    const ComplexMatrix f = fourier_matrix(d);
    std::vector<ComplexMatrix> vecs;
    vecs.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        ComplexMatrix v(d, 1);
        for (std::size_t j = 0; j < d; ++j) v(j, 0) = f(j, k);
        vecs.push_back(std::move(v));
    }
    return MubPair(Basis::computational(d), Basis(d, std::move(vecs)));
}

Basis rotate_basis(const Basis& b, const ComplexMatrix& u) {
    if (u.rows() != b.dim() || u.cols() != b.dim())
        throw DimensionError("rotation matrix must match the basis dimension");
    if (!u.is_unitary(1e-9)) throw ContractError("rotation matrix must be unitary");
    std::vector<ComplexMatrix> vecs;
    vecs.reserve(b.dim());
    for (std::size_t k = 0; k < b.dim(); ++k) vecs.push_back(u * b.vector(k));
    return Basis(b.dim(), std::move(vecs));
}

MubPair rotate_pair(const MubPair& pair, const ComplexMatrix& u) {
    return MubPair(rotate_basis(pair.basis1(), u), rotate_basis(pair.basis2(), u));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
    if (!matrix_.is_square() || matrix_.rows() == 0)
        throw DimensionError("density matrix must be square and non-empty");
    if (!matrix_.is_hermitian(1e-9)) throw ContractError("density matrix must be Hermitian");
    if (std::abs(matrix_.trace() - Complex{1.0, 0.0}) > 1e-9)
        throw ContractError("density matrix must have unit trace");
}

DensityMatrix DensityMatrix::pure(const ComplexMatrix& state_vector) {
    if (state_vector.cols() != 1 || state_vector.rows() == 0)
        throw DimensionError("pure state requires a column vector");
    const double norm = state_vector.frobenius_norm();
    if (norm < 1e-12) throw DomainError("cannot normalize the zero vector");
    const ComplexMatrix v = (1.0 / norm) * state_vector;
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    require_dim(dim);
    return DensityMatrix((1.0 / static_cast<double>(dim)) * ComplexMatrix::identity(dim));
}

double DensityMatrix::purity() const {
    return trace_product(matrix_, matrix_).real();
}

double born_probability(const ComplexMatrix& v, const ComplexMatrix& rho) {
    if (v.cols() != 1 || v.rows() != rho.rows() || !rho.is_square())
        throw DimensionError("born_probability requires a matching column vector");
    // v^dag (rho v), O(d^2).
    Complex p = 0.0;
    for (std::size_t r = 0; r < rho.rows(); ++r) {
        Complex row = 0.0;
        for (std::size_t c = 0; c < rho.cols(); ++c) row += rho(r, c) * v(c, 0);
        p += std::conj(v(r, 0)) * row;
    }
    double out = p.real();
    if (out < 0.0) out = 0.0;
    if (out > 1.0) out = 1.0;
    return out;
}

std::vector<double> measurement_distribution(const DensityMatrix& rho, const Basis& b) {
    if (rho.dim() != b.dim())
        throw DimensionError("state and basis dimensions differ");
    std::vector<double> p(b.dim());
    double sum = 0.0;
    for (std::size_t k = 0; k < b.dim(); ++k) {
        p[k] = born_probability(b.vector(k), rho.matrix());
        sum += p[k];
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ContractError("measurement distribution does not sum to one");
    return p;
}

DensityMatrix maximally_entangled_phi(std::size_t d) {
    require_dim(d);
    if (d * d > dimension_cap())
        throw DimensionError("bipartite dimension exceeds the cap");
    ComplexMatrix v(d * d, 1);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t a = 0; a < d; ++a) v(a * d + a, 0) = amp;
    return DensityMatrix::pure(v);
}

DensityMatrix supersinglet(std::size_t d) {
    require_dim(d);
    if (d * d > dimension_cap())
        throw DimensionError("bipartite dimension exceeds the cap");
    ComplexMatrix v(d * d, 1);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t a = 0; a < d; ++a) {
        const std::size_t b = d - 1 - a;
        v(a * d + b, 0) = (a % 2 == 0) ? amp : -amp;
    }
    return DensityMatrix::pure(v);
}

DensityMatrix partial_trace_first(const DensityMatrix& rho, std::size_t dim_first,
                                  std::size_t dim_second) {
    if (rho.dim() != dim_first * dim_second)
        throw DimensionError("bipartite factors do not match the state dimension");
    ComplexMatrix out(dim_second, dim_second);
    for (std::size_t i = 0; i < dim_second; ++i)
        for (std::size_t j = 0; j < dim_second; ++j) {
            Complex s = 0.0;
            for (std::size_t a = 0; a < dim_first; ++a)
                s += rho.matrix()(a * dim_second + i, a * dim_second + j);
            out(i, j) = s;
        }
    return DensityMatrix(out);
}

ComplexMatrix random_state_vector(std::size_t d, Rng& rng) {
    require_dim(d);
    ComplexMatrix v(d, 1);
    for (std::size_t k = 0; k < d; ++k) v(k, 0) = Complex{rng.gaussian(), rng.gaussian()};
    const double norm = v.frobenius_norm();
    return (1.0 / norm) * v;
}

ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
    require_dim(d);
    ComplexMatrix q(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) q(r, c) = Complex{rng.gaussian(), rng.gaussian()};
    // Two Gram-Schmidt passes; the second scrubs the residual loss of
    // orthogonality so columns meet the 1e-10 basis tolerance with margin.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t prev = 0; prev < c; ++prev) {
                Complex overlap = 0.0;
                for (std::size_t r = 0; r < d; ++r) overlap += std::conj(q(r, prev)) * q(r, c);
                for (std::size_t r = 0; r < d; ++r) q(r, c) -= overlap * q(r, prev);
            }
            double norm = 0.0;
            for (std::size_t r = 0; r < d; ++r) norm += std::norm(q(r, c));
            norm = std::sqrt(norm);
            if (norm < 1e-12) throw ContractError("degenerate Gaussian draw");
            for (std::size_t r = 0; r < d; ++r) q(r, c) /= norm;
        }
    }
    return q;
}

DensityMatrix random_pure_state(std::size_t d, Rng& rng) {
    return DensityMatrix::pure(random_state_vector(d, rng));
}

DensityMatrix random_density_matrix(std::size_t d, std::size_t rank, Rng& rng) {
    require_dim(d);
    if (rank == 0) throw DomainError("rank must be positive");
    ComplexMatrix m(d, d);
    std::vector<double> w(rank);
    double total = 0.0;
    for (std::size_t k = 0; k < rank; ++k) {
        w[k] = -std::log(1.0 - rng.uniform()); // exponential weights
        total += w[k];
    }
    for (std::size_t k = 0; k < rank; ++k) {
        const ComplexMatrix v = random_state_vector(d, rng);
        m = m + (w[k] / total) * (v * v.adjoint());
    }
    return DensityMatrix(m);
}

} // namespace steercert
