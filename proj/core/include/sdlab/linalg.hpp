#pragma once

#include <cstddef>
#include <vector>

#include "sdlab/complex_matrix.hpp"

namespace sdlab {

/// Signature of a Hermitian matrix: eigenvalue counts by sign, where
/// eigenvalues in the open interval (-tol, tol) count as zero.
struct Inertia {
    int pos = 0;
    int zero = 0;
    int neg = 0;
    double tol = 0.0;   // the absolute threshold that produced these counts

    int dim() const { return pos + zero + neg; }
    int igeq0() const { return pos + zero; }   // number of nonnegative eigenvalues
    int ileq0() const { return neg + zero; }

    bool operator==(const Inertia& o) const {
        return pos == o.pos && zero == o.zero && neg == o.neg;
    }
};

/// Full spectral decomposition of a Hermitian matrix: H = V diag(values) V*,
/// eigenvalues ascending, eigenvectors as the columns of a unitary matrix.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;
};

struct RankNullity {
    int rank = 0;
    int nullity = 0;
    /// False when some singular value falls within a factor 10 of the rank
    /// cutoff, i.e. the rank decision hinges on the tolerance.
    bool stable = true;
};

/// Hermitian part (X + X*)/2. Input must be square.
ComplexMatrix re_part(const ComplexMatrix& x);
/// Skew part (X - X*)/(2i); Hermitian, satisfies X = re_part + i*im_part.
ComplexMatrix im_part(const ComplexMatrix& x);

/// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// sweeps. Rejects inputs that are not Hermitian to a relative 1e-10.
HermitianEigen hermitian_eigen(const ComplexMatrix& h);

/// Eigenvalues only (ascending); same algorithm without accumulating vectors.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Default absolute zero-threshold for inertia: 64 * eps * dim * ||H||_F.
double default_inertia_tol(const ComplexMatrix& h);

Inertia inertia(const ComplexMatrix& h, double tol);
Inertia inertia(const ComplexMatrix& h);    // uses default_inertia_tol

/// Singular values, descending, via one-sided Jacobi on the columns.
std::vector<double> singular_values(const ComplexMatrix& x);

/// rank = #{sigma > tol * sigma_max} (plain "> tol" when sigma_max = 0);
/// nullity = cols - rank.
RankNullity rank_nullity(const ComplexMatrix& x, double tol);

/// sigma_min > tol * sigma_max; a 0 x 0 matrix counts as nonsingular.
bool is_nonsingular(const ComplexMatrix& x, double tol = 1e-10);

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix direct_sum(const ComplexMatrix& x, const ComplexMatrix& y);
/// Upper-triangular k x k Jordan block J_k(lambda).
ComplexMatrix jordan_block(std::size_t k, Complex lambda);

/// Schur complement of the leading block_dim x block_dim block:
/// A22 - A21 * A11^{-1} * A12. Throws HypothesisError when the leading block
/// is numerically singular.
ComplexMatrix schur_complement(const ComplexMatrix& m, std::size_t block_dim);

/// Determinant by LU with partial pivoting.
Complex determinant(const ComplexMatrix& a);

/// Solves A X = B; throws HypothesisError on a numerically singular A.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix inverse(const ComplexMatrix& a);

} // namespace sdlab
