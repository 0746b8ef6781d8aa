#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sdlab/complex_matrix.hpp"

namespace sdlab {

/// Deterministic random matrix source. All draws map raw mt19937_64 output
/// through fixed arithmetic (no std::*_distribution), so a seed reproduces the
/// same corpus on every platform and toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }   // [0, 1)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    std::uint64_t integer(std::uint64_t bound);   // [0, bound)

    double normal();            // Box-Muller
    Complex complex_normal();   // independent N(0,1) parts
    Complex unit();             // uniform on the unit circle

    ComplexMatrix matrix(std::size_t rows, std::size_t cols, double scale = 1.0);
    ComplexMatrix hermitian(std::size_t n, double scale = 1.0);
    ComplexMatrix unitary(std::size_t n);

    /// U diag(s) V* with singular values s drawn uniformly from [smin, smax].
    ComplexMatrix nonsingular(std::size_t n, double smin = 0.5, double smax = 1.5);

    /// Same construction with `rank` nonzero singular values in [smin, smax].
    ComplexMatrix with_rank(std::size_t n, std::size_t rank, double smin = 0.5,
                            double smax = 1.5);

    /// Normal nonsingular matrix U diag(lambda) U*; eigenvalues returned too.
    std::pair<ComplexMatrix, std::vector<Complex>> normal_matrix(std::size_t n, double rmin,
                                                                 double rmax);

private:
    std::mt19937_64 gen_;
};

} // namespace sdlab
