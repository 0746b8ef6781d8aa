#pragma once

#include <vector>

#include "sdlab/complex_matrix.hpp"
#include "sdlab/kms.hpp"

namespace sdlab::numrange {

/// One supporting line of W(A): direction theta, signed distance `support`
/// (the top eigenvalue of Re(e^{-i theta} A)) and a boundary point x*Ax for a
/// top eigenvector x.
struct BoundarySample {
    double theta = 0.0;
    double support = 0.0;
    Complex point{};
};

/// Verdict of the centered-disk test: a disk has a constant support function
/// and contains 0.
struct CircularityVerdict {
    bool circular = false;
    double radius = 0.0;           // mean support (the disk radius when circular)
    double max_deviation = 0.0;    // max |support - mean| / max(|mean|, eps)
};

/// lambda_max(Re(e^{-i theta} A)), the support function of W(A).
double support(const ComplexMatrix& a, double theta);

/// n_samples uniform directions with support values and boundary points.
std::vector<BoundarySample> boundary(const ComplexMatrix& a, int n_samples);

/// Kippenhahn polynomial value det(x Re(A) + y Im(A) + z I). Real arguments
/// give a real value; complex arguments are accepted because the curve is
/// probed at (1, i, z) as well.
Complex kippenhahn(const ComplexMatrix& a, Complex x, Complex y, Complex z);

/// Max over the y samples of the normalized defect between p_{K_m(A)}(1, y, 0)
/// and its factored form through det(A*A) and the reduced (m-2)-block pencil.
double lemdet_residual(std::size_t m, const ComplexMatrix& a, const std::vector<double>& y_samples);

/// Tests whether W(K_m(A)) is a circular disk centered at 0: the support
/// function must be constant to a relative tol and nonnegative.
CircularityVerdict circularity(const kms::KmsSpec& spec, int n_samples, double tol);

} // namespace sdlab::numrange
