#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sdlab/complex_matrix.hpp"

namespace sdlab::companion {

/// Data defining a generalized companion matrix: m-1 diagonal blocks A_1..A_{m-1}
/// stacked above the diagonal and m bottom blocks B_0..B_{m-1}, all n x n.
struct GeneralizedCompanionSpec {
    std::size_t m = 2;
    std::size_t n = 1;
    std::vector<ComplexMatrix> diag_blocks;    // A_1..A_{m-1}
    std::vector<ComplexMatrix> bottom_blocks;  // B_0..B_{m-1}

    void validate() const;   // throws on block count/size violations
};

/// Monic matrix polynomial P(z) = I z^degree + sum coeffs[e] z^e.
struct MatrixPolynomial {
    std::size_t degree = 0;
    std::size_t block_size = 1;
    std::map<std::size_t, ComplexMatrix> coeffs;   // exponent -> n x n coefficient (degree excluded)
    bool monic = true;

    ComplexMatrix eval(Complex z) const;
};

struct ZdiBounds {
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;
};

/// Assembles the mn x mn matrix: zero left column strip, +A_j on the block
/// superdiagonal strip, B_0..B_{m-1} across the bottom block row.
ComplexMatrix build(const GeneralizedCompanionSpec& spec);

/// Rotation similarity: omega * C_{A,B} is unitarily similar to C_{A,Y} with
/// Y_j = omega^{m-j} B_j, witnessed by U = diag-block(omega^1 I, ..., omega^m I):
/// C_{A,Y} U = omega U C_{A,B}.
std::pair<GeneralizedCompanionSpec, ComplexMatrix> rotate(const GeneralizedCompanionSpec& spec,
                                                          Complex omega);

/// The even-m polynomial P(z) = I z^m + sum_j P_j z^{2j-2} whose unit-circle
/// spectrum marks exactly the rotations where Re(omega C_{A,B}) is singular.
/// Requires even m and nonsingular A_j.
MatrixPolynomial p_polynomial(const GeneralizedCompanionSpec& spec);

/// Closed form ((-1)^{mn/2} / 2^{mn}) prod_{odd j} |det A_j|^2 |det P(omega)|^2.
double det_re_closed_form(const GeneralizedCompanionSpec& spec, Complex omega);

/// Eigenvalues of the block-companion linearization of a monic matrix polynomial.
std::vector<Complex> sigma_p(const MatrixPolynomial& p);
std::vector<Complex> sigma_p(const GeneralizedCompanionSpec& spec);

/// nullity(Re(omega * build(spec))) at the given relative tolerance.
int nullity_re(const GeneralizedCompanionSpec& spec, Complex omega, double tol);

/// Zero-dilation bounds: odd m gives [(m-1)n/2, (m+1)n/2]; even m is exactly
/// mn/2. Requires every A_j nonsingular (rejects otherwise).
ZdiBounds zdi_bounds(const GeneralizedCompanionSpec& spec);

/// The interpolating family: A_j = I_n, B = [0, ..., 0, H/2] with
/// H = 0_k direct-sum (-I_{n-k}); its zero-dilation index is (m-1)n/2 + k.
GeneralizedCompanionSpec build_interp_example(std::size_t m, std::size_t n, std::size_t k);

/// General dense eigenvalues via Hessenberg reduction plus shifted QR; used by
/// sigma_p and exposed for tests. Intended for modest dimensions (<= 64).
std::vector<Complex> eigenvalues_dense(ComplexMatrix a);

} // namespace sdlab::companion
