#include "sdlab/random.hpp"

#include <cmath>
#include <numbers>

#include "sdlab/errors.hpp"

namespace sdlab {

std::uint64_t Rng::integer(std::uint64_t bound) {
    if (bound == 0) throw HypothesisError("Rng::integer: bound must be positive");
    // Rejection-free modulo is fine here: bounds are tiny corpus parameters.
    return gen_() % bound;
}

double Rng::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

Complex Rng::unit() {
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    return {std::cos(phi), std::sin(phi)};
}

ComplexMatrix Rng::matrix(std::size_t rows, std::size_t cols, double scale) {
    ComplexMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out(i, j) = scale * complex_normal();
    return out;
}

ComplexMatrix Rng::hermitian(std::size_t n, double scale) {
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = Complex{scale * normal(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex z = scale * complex_normal();
            out(i, j) = z;
            out(j, i) = std::conj(z);
        }
    }
    return out;
}

ComplexMatrix Rng::unitary(std::size_t n) {
    // Modified Gram-Schmidt on a Gaussian matrix; retry on (improbable)
    // near-dependence.
    for (int attempt = 0; attempt < 8; ++attempt) {
        ComplexMatrix g = matrix(n, n);
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            for (std::size_t p = 0; p < j; ++p) {
                Complex dot{};
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(g(i, p)) * g(i, j);
                for (std::size_t i = 0; i < n; ++i) g(i, j) -= dot * g(i, p);
            }
            double nrm = 0.0;
            for (std::size_t i = 0; i < n; ++i) nrm += std::norm(g(i, j));
            nrm = std::sqrt(nrm);
            if (nrm < 1e-8) { ok = false; break; }
            for (std::size_t i = 0; i < n; ++i) g(i, j) /= nrm;
        }
        if (ok) return g;
    }
    throw std::runtime_error("Rng::unitary: repeated rank deficiency");
}

ComplexMatrix Rng::nonsingular(std::size_t n, double smin, double smax) {
    return with_rank(n, n, smin, smax);
}

ComplexMatrix Rng::with_rank(std::size_t n, std::size_t rank, double smin, double smax) {
    if (rank > n) throw HypothesisError("Rng::with_rank: rank exceeds dimension");
    const ComplexMatrix u = unitary(n);
    const ComplexMatrix v = unitary(n);
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < rank; ++i) d(i, i) = uniform(smin, smax);
    return u * d * v.adjoint();
}

std::pair<ComplexMatrix, std::vector<Complex>> Rng::normal_matrix(std::size_t n, double rmin,
                                                                  double rmax) {
    const ComplexMatrix u = unitary(n);
    std::vector<Complex> lambdas(n);
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        lambdas[i] = uniform(rmin, rmax) * unit();
        d(i, i) = lambdas[i];
    }
    return {u * d * u.adjoint(), lambdas};
}

} // namespace sdlab
