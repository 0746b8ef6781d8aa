#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sdlab/complex_matrix.hpp"

namespace sdlab::kms {

/// The data (m, A) defining the block upper triangular KMS matrix K_m(A).
struct KmsSpec {
    std::size_t m = 2;
    ComplexMatrix a;

    void validate() const;
};

/// Nonincreasing nilpotent Jordan block sizes at eigenvalue 0, together with
/// the algebraic multiplicity of 0. `stable` is false when some rank decision
/// along the Weyr sequence sat within a factor 10 of its cutoff.
struct SegreCharacteristic {
    std::vector<int> sizes;
    int alg_mult0 = 0;
    bool stable = true;
};

/// counts[k-1] = number of J_k(0) blocks in the Jordan form of J_m(0) (x) A.
struct NkCounts {
    std::vector<int> counts;

    bool operator==(const NkCounts& o) const { return counts == o.counts; }
    /// Bookkeeping invariant: sum k * N_k = m * n.
    long weighted_sum() const;
};

/// A word p(s, t) in two noncommuting variables, stored as alternating
/// exponent factors (s^{e1} t^{f1}) (s^{e2} t^{f2}) ...
struct Word {
    std::vector<std::pair<int, int>> factors;

    int total_degree() const;
    std::string str() const;   // e.g. "st", "s^2t", "stst"

    /// Evaluates p(x, x*) by multiplying out the factors.
    ComplexMatrix eval(const ComplexMatrix& x) const;

    /// Exact integer trace of p(J_m(0), J_m(0)^*); both letters act as partial
    /// shifts on basis vectors, so the trace is the number of surviving
    /// round trips.
    long long trace_on_jordan(std::size_t m) const;
};

/// Outcome of the truncated Specht comparison. Distinguished is a proof of
/// non-(unitary similarity); indistinguishable up to a degree cap is not a
/// proof of unitary similarity.
struct UsimVerdict {
    bool distinguished = false;
    Word word;            // the separating word, when distinguished
    Complex trace_a{};
    Complex trace_b{};
    int max_degree = 0;   // the cap that was exhausted, when indistinguishable
};

/// Strictly block upper triangular Toeplitz matrix with (i, j) block A^{j-i}.
ComplexMatrix build(const KmsSpec& spec);

/// || (I + K_m(A)) (I - J_m(0) (x) A) - I ||_F; the resolvent identity says
/// this is zero in exact arithmetic.
double resolvent_residual(const KmsSpec& spec);

/// Segre characteristic of A at eigenvalue 0, from the Weyr sequence
/// w_k = nullity(A^k) - nullity(A^{k-1}).
SegreCharacteristic segre_at_zero(const ComplexMatrix& a, double tol);

/// The closed-form block counts of the Jordan form of J_m(0) (x) A.
NkCounts nk_formula(std::size_t m, const ComplexMatrix& a, double tol);

/// Independent oracle: the same counts from the Weyr sequence of the
/// explicitly built Kronecker product.
NkCounts nk_oracle(std::size_t m, const ComplexMatrix& a, double tol);

/// K_m(A) ~ K_m(B) iff their N_k counts agree.
bool kms_similar(std::size_t m, const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// K_2 specializations: similarity is rank equality, unitary similarity is
/// equality of singular values.
bool k2_similar(const ComplexMatrix& a, const ComplexMatrix& b, double tol);
bool k2_unitarily_similar(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// All words of total degree <= max_degree, canonicalized under cyclic
/// rotation, whose trace on (J_m(0), J_m(0)^*) is nonzero; ordered by
/// (degree, lexicographic letters) with the trace values attached.
std::vector<std::pair<Word, long long>> specht_words(std::size_t m, int max_degree);

/// Compares tr[p(A, A*)] against tr[p(B, B*)] over the specht_words list.
UsimVerdict kms_unitarily_similar_upto(std::size_t m, const ComplexMatrix& a,
                                       const ComplexMatrix& b, int max_degree, double tol);

/// d(K_2(A)) = n + nullity(A).
int zdi_kms2(const ComplexMatrix& a, double tol);

/// The congruence-reduced pencil X_k^A(theta); k = m uses the truncated
/// diagonal weight I_{m-1} (+) [0], k < m the full I_k.
ComplexMatrix x_matrix(std::size_t k, std::size_t m, const ComplexMatrix& a, double theta);

/// d(K_m(A)) = i_{>=0}(Re(K_m(A))) for m >= 3. When A is nonsingular the
/// reduction d = n + i_{>=0}(X_{m-2}^A(0)) is evaluated as a cross-assertion.
int zdi_kms(std::size_t m, const ComplexMatrix& a, double tol);

/// Closed form for nonsingular normal A given its eigenvalues: each
/// eigenvalue contributes the largest k in {1..m-2} with
/// cos(k pi/(m-1)) < |lambda| <= cos((k-1) pi/(m-1)), defaulting to 1.
int zdi_kms_normal(std::size_t m, const std::vector<Complex>& eigenvalues, double tol);

/// (theta, i_{>=0}(X_k^A(theta))) along a sorted grid that must lie within
/// [0, pi] or [pi, 2pi]; nondecreasing on the first, nonincreasing on the second.
std::vector<std::pair<double, int>> monotonicity_profile(std::size_t k, std::size_t m,
                                                         const ComplexMatrix& a,
                                                         const std::vector<double>& theta_grid,
                                                         double tol);

/// || S (alpha K + beta K*) S* - [alpha J (x) A + beta (J (x) A)* -
/// (alpha+beta)(I_{m-1} (+) [0]) (x) AA*] ||_F with S = I - J_m(0) (x) A.
double congruence_check(std::size_t m, const ComplexMatrix& a, Complex alpha, Complex beta);

/// The conjugated branch of the same lemma: for beta = 1/alpha, or
/// beta = conj(alpha) with |alpha| = 1, T = diag(1, alpha, ..., alpha^{m-1}) (x) I
/// carries S (alpha K + beta K*) S* onto 2 Re(J (x) A) - (alpha+beta)(I (+) [0]) (x) AA*.
double congruence_check_rotated(std::size_t m, const ComplexMatrix& a, Complex alpha,
                                Complex beta);

} // namespace sdlab::kms
