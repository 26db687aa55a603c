#include "steercert/channels.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <utility>

#include "steercert/errors.hpp"

namespace steercert {

QuantumChannel::QuantumChannel(std::size_t dim, std::vector<ComplexMatrix> kraus)
    : dim_(dim), kraus_(std::move(kraus)) {
    if (dim_ < 2) throw DomainError("channel dimension must be at least 2");
    if (kraus_.empty()) throw ContractError("channel needs at least one Kraus operator");
    for (const auto& k : kraus_)
        if (k.rows() != dim_ || k.cols() != dim_)
            throw DimensionError("Kraus operators must be dim x dim");
    ComplexMatrix sum(dim_, dim_);
    for (const auto& k : kraus_) sum = sum + k.adjoint() * k;
    if ((sum - ComplexMatrix::identity(dim_)).max_abs() > 1e-9)
        throw ContractError("Kraus operators do not preserve trace");
}

DensityMatrix apply(const QuantumChannel& ch, const DensityMatrix& rho) {
    if (ch.dim() != rho.dim()) throw DimensionError("channel and state dimensions differ");
    ComplexMatrix out(ch.dim(), ch.dim());
    for (const auto& k : ch.kraus()) out = out + k * rho.matrix() * k.adjoint();
    return DensityMatrix(out);
}

QuantumChannel identity_channel(std::size_t d) {
    return QuantumChannel(d, {ComplexMatrix::identity(d)});
}

QuantumChannel unitary_channel(const ComplexMatrix& u) {
    if (!u.is_square()) throw DimensionError("unitary channel requires a square matrix");
    if (!u.is_unitary(1e-9)) throw ContractError("unitary channel requires a unitary matrix");
    return QuantumChannel(u.rows(), {u});
}

namespace {

// X^j Z^k on d dimensions: |m> -> omega^{km} |m+j mod d>.
ComplexMatrix heisenberg_weyl(std::size_t d, std::size_t j, std::size_t k) {
    ComplexMatrix w(d, d);
    for (std::size_t m = 0; m < d; ++m) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>((k * m) % d) / static_cast<double>(d);
        w((m + j) % d, m) = Complex{std::cos(angle), std::sin(angle)};
    }
    return w;
}

} // namespace

QuantumChannel depolarizing(std::size_t d, double p) {
    if (d < 2) throw DomainError("channel dimension must be at least 2");
    if (p < 0.0 || p > 1.0) throw DomainError("depolarizing strength must lie in [0,1]");
    const double dd = static_cast<double>(d * d);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(d * d);
    kraus.push_back(std::sqrt(1.0 - p + p / dd) * ComplexMatrix::identity(d));
    const double wj = std::sqrt(p / dd);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            if (j == 0 && k == 0) continue;
            kraus.push_back(wj * heisenberg_weyl(d, j, k));
        }
    return QuantumChannel(d, std::move(kraus));
}

QuantumChannel bit_flip() {
    ComplexMatrix x(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    return QuantumChannel(2, {x});
}

QuantumChannel intercept_resend(const Basis& b) {
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(b.dim());
    for (std::size_t k = 0; k < b.dim(); ++k) kraus.push_back(b.projector(k));
    return QuantumChannel(b.dim(), std::move(kraus));
}

QuantumChannel compose(const QuantumChannel& a, const QuantumChannel& b) {
    if (a.dim() != b.dim()) throw DimensionError("composed channels must share a dimension");
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(a.kraus().size() * b.kraus().size());
    for (const auto& kb : b.kraus())
        for (const auto& ka : a.kraus()) kraus.push_back(kb * ka);
    return QuantumChannel(a.dim(), std::move(kraus));
}

QuantumChannel extend_to_second(const QuantumChannel& ch, std::size_t dim_first) {
    const ComplexMatrix eye = ComplexMatrix::identity(dim_first);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(ch.kraus().size());
    for (const auto& k : ch.kraus()) kraus.push_back(kron(eye, k));
    return QuantumChannel(dim_first * ch.dim(), std::move(kraus));
}

QuantumChannel random_channel(std::size_t d, std::size_t kraus_rank, Rng& rng) {
    if (kraus_rank == 0 || kraus_rank > d * d)
        throw DomainError("Kraus rank must lie in [1, d^2]");
    std::vector<ComplexMatrix> g;
    g.reserve(kraus_rank);
    ComplexMatrix sum(d, d);
    for (std::size_t n = 0; n < kraus_rank; ++n) {
        ComplexMatrix gi(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) gi(r, c) = Complex{rng.gaussian(), rng.gaussian()};
        sum = sum + gi.adjoint() * gi;
        g.push_back(std::move(gi));
    }
    // K_i = G_i S^{-1/2} with S = sum G^dag G, so sum K^dag K = I.
    const HermitianEigensystem eig = hermitian_eig(sum);
    ComplexMatrix inv_sqrt(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        if (eig.eigenvalues[k] <= 1e-12) throw ContractError("degenerate Gaussian draw");
        const double w = 1.0 / std::sqrt(eig.eigenvalues[k]);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                inv_sqrt(r, c) += w * eig.eigenvectors(r, k) * std::conj(eig.eigenvectors(c, k));
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(kraus_rank);
    for (const auto& gi : g) kraus.push_back(gi * inv_sqrt);
    return QuantumChannel(d, std::move(kraus));
}

ComplexMatrix load_unitary_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open unitary file: " + path);
    std::size_t d = 0;
    if (!(in >> d) || d < 2) throw DomainError("unitary file must start with the dimension");
    ComplexMatrix u(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            std::string token;
            if (!(in >> token)) throw DomainError("unitary file is truncated");
            const std::size_t comma = token.find(',');
            if (comma == std::string::npos)
                throw DomainError("unitary file entries must be re,im pairs");
            try {
                u(r, c) = Complex{std::stod(token.substr(0, comma)),
                                  std::stod(token.substr(comma + 1))};
            } catch (const std::exception&) {
                throw DomainError("unitary file entry is not numeric: " + token);
            }
        }
    if (!u.is_unitary(1e-8)) throw ContractError("matrix in " + path + " is not unitary");
    return u;
}

QuantumChannel parse_channel(std::size_t d, const std::string& spec) {
    if (spec == "identity") return identity_channel(d);
    if (spec == "bitflip") {
        if (d != 2) throw DimensionError("bitflip is a qubit channel");
        return bit_flip();
    }
    if (spec.rfind("depolarizing:p=", 0) == 0) {
        double p = 0.0;
        try {
            p = std::stod(spec.substr(15));
        } catch (const std::exception&) {
            throw DomainError("bad depolarizing strength in: " + spec);
        }
        return depolarizing(d, p);
    }
    if (spec.rfind("intercept:basis=", 0) == 0) {
        const std::string which = spec.substr(16);
        const MubPair mub = fourier_basis(d);
        if (which == "1") return intercept_resend(mub.basis1());
        if (which == "2") return intercept_resend(mub.basis2());
        throw DomainError("intercept basis must be 1 or 2");
    }
    if (spec.rfind("unitary:file=", 0) == 0) {
        const ComplexMatrix u = load_unitary_file(spec.substr(13));
        if (u.rows() != d) throw DimensionError("unitary file dimension does not match d");
        return unitary_channel(u);
    }
    throw DomainError("unknown channel spec: " + spec);
}

} // namespace steercert
