#pragma once

#include <utility>
#include <vector>

#include "sdlab/complex_matrix.hpp"
#include "sdlab/linalg.hpp"

namespace sdlab::dilation {

/// Result of the grid minimization of theta -> i_{>=0}(Re(e^{i theta} A)).
///
/// The count profile is piecewise constant: it can only change where an
/// eigenvalue branch of Re(e^{i theta} A) crosses zero, and det Re(e^{i theta} A)
/// is a trigonometric polynomial of degree dim(A), so there are finitely many
/// breakpoints and the minimum is attained on open arcs. A uniform grid plus
/// local bisection therefore recovers the exact minimum for the structured
/// families this library targets; the closed-form results serve as the
/// exactness cross-check.
struct ZdiResult {
    int index = 0;                // the computed d(A): min over profile
    double argmin_theta = 0.0;    // smallest theta attaining index
    /// (theta, i_{>=0}) samples: the first grid_size entries are the uniform
    /// grid; any further entries are refinement samples that lowered the
    /// minimum.
    std::vector<std::pair<double, int>> profile;
    int grid_size = 0;
    bool refined = false;
};

/// i_{>=0}(Re(e^{i theta} A)) at the given absolute zero-threshold.
int igeq_at(const ComplexMatrix& a, double theta, double tol);
int igeq_at(const ComplexMatrix& a, double theta);

/// Minimizes i_{>=0}(Re(e^{i theta} A)) over a uniform grid on [0, 2pi), then
/// bisection-refines the two intervals adjacent to the grid minimum (40 steps
/// each), accepting the smallest count observed. Ties in theta break toward
/// the smallest theta.
ZdiResult zdi(const ComplexMatrix& a, int grid_size, double tol);
ZdiResult zdi(const ComplexMatrix& a, int grid_size = 4096);

/// 0 in Lambda_k(A): true iff the minimized count is >= k.
bool lambda_k_contains_zero(const ComplexMatrix& a, int k, int grid_size, double tol);
bool lambda_k_contains_zero(const ComplexMatrix& a, int k, int grid_size = 4096);

/// (m + r)/2 with r = nullity(Re(omega A)) at tol; an upper bound for d(A).
double approach_bound(const ComplexMatrix& a, Complex omega, double tol);

} // namespace sdlab::dilation
