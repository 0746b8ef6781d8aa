#include "sdlab/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sdlab/errors.hpp"
#include "sdlab/linalg.hpp"

namespace sdlab::numrange {

namespace {

ComplexMatrix rotated_re(const ComplexMatrix& re, const ComplexMatrix& im, double theta) {
    // Re(e^{-i theta} A) = cos(theta) Re(A) + sin(theta) Im(A)
    ComplexMatrix h = re;
    h *= Complex{std::cos(theta), 0.0};
    ComplexMatrix t = im;
    t *= Complex{std::sin(theta), 0.0};
    h += t;
    return h;
}

} // namespace

double support(const ComplexMatrix& a, double theta) {
    if (!a.is_square()) throw DimensionError("support: matrix must be square");
    const std::vector<double> vals =
        hermitian_eigenvalues(rotated_re(re_part(a), im_part(a), theta));
    return vals.back();
}

std::vector<BoundarySample> boundary(const ComplexMatrix& a, int n_samples) {
    if (!a.is_square()) throw DimensionError("boundary: matrix must be square");
    if (n_samples < 8) throw HypothesisError("boundary: need at least 8 samples");

    const ComplexMatrix re = re_part(a);
    const ComplexMatrix im = im_part(a);
    const std::size_t n = a.rows();

    std::vector<BoundarySample> out;
    out.reserve(n_samples);
    for (int k = 0; k < n_samples; ++k) {
        const double theta = 2.0 * std::numbers::pi * double(k) / double(n_samples);
        const HermitianEigen eig = hermitian_eigen(rotated_re(re, im, theta));

        BoundarySample s;
        s.theta = theta;
        s.support = eig.values.back();
        // x*Ax for the top eigenvector; with a degenerate top eigenvalue any
        // extreme point of the flat boundary portion is acceptable.
        const std::size_t top = n - 1;
        Complex point{};
        for (std::size_t i = 0; i < n; ++i) {
            Complex row{};
            for (std::size_t j = 0; j < n; ++j) row += a(i, j) * eig.vectors(j, top);
            point += std::conj(eig.vectors(i, top)) * row;
        }
        s.point = point;
        out.push_back(s);
    }
    return out;
}

Complex kippenhahn(const ComplexMatrix& a, Complex x, Complex y, Complex z) {
    if (!a.is_square()) throw DimensionError("kippenhahn: matrix must be square");
    ComplexMatrix pencil = x * re_part(a) + y * im_part(a);
    for (std::size_t i = 0; i < pencil.rows(); ++i) pencil(i, i) += z;
    return determinant(pencil);
}

double lemdet_residual(std::size_t m, const ComplexMatrix& a,
                       const std::vector<double>& y_samples) {
    if (m < 3) throw HypothesisError("lemdet_residual: m must be at least 3");
    if (!a.is_square()) throw DimensionError("lemdet_residual: A must be square");
    const std::size_t n = a.rows();
    const int ni = int(n);

    const kms::KmsSpec spec{m, a};
    const ComplexMatrix k = kms::build(spec);
    const ComplexMatrix re_k = re_part(k);
    const ComplexMatrix im_k = im_part(k);

    const Complex det_aa = determinant(a.adjoint() * a);
    const ComplexMatrix j = kron(jordan_block(m - 2, 0.0), a);
    const ComplexMatrix aa_block = kron(ComplexMatrix::identity(m - 2), a * a.adjoint());

    double worst = 0.0;
    for (double y : y_samples) {
        // LHS: p_{K_m(A)}(1, y, 0)
        ComplexMatrix pencil = re_k;
        ComplexMatrix t = im_k;
        t *= Complex{y, 0.0};
        pencil += t;
        const Complex lhs = determinant(pencil);

        // RHS: (-1)^n (1+y^2)^n det(A*A) / 4^n  *  h(y)
        const Complex alpha{0.5, -0.5 * y};   // (1 - iy)/2
        const Complex beta{0.5, 0.5 * y};     // (1 + iy)/2
        const Complex hy = determinant(alpha * j + beta * j.adjoint() - aa_block);
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const Complex rhs = sign * std::pow(1.0 + y * y, ni) * det_aa * std::ldexp(1.0, -2 * ni) * hy;

        const double scale = 1.0 + std::max(std::abs(lhs), std::abs(rhs));
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    return worst;
}

CircularityVerdict circularity(const kms::KmsSpec& spec, int n_samples, double tol) {
    if (n_samples < 8) throw HypothesisError("circularity: need at least 8 samples");
    const ComplexMatrix k = kms::build(spec);
    const ComplexMatrix re = re_part(k);
    const ComplexMatrix im = im_part(k);

    std::vector<double> supports(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double theta = 2.0 * std::numbers::pi * double(i) / double(n_samples);
        supports[i] = hermitian_eigenvalues(rotated_re(re, im, theta)).back();
    }
    const double mean = [&] {
        double s = 0.0;
        for (double v : supports) s += v;
        return s / double(n_samples);
    }();
    double max_abs_dev = 0.0;
    double min_support = supports[0];
    for (double v : supports) {
        max_abs_dev = std::max(max_abs_dev, std::abs(v - mean));
        min_support = std::min(min_support, v);
    }

    CircularityVerdict verdict;
    verdict.radius = mean;
    verdict.max_deviation = max_abs_dev / std::max(std::abs(mean), 1e-300);
    const double slack = tol * std::max(std::abs(mean), 1.0e-12 * (1.0 + k.frobenius_norm()));
    verdict.circular = (max_abs_dev <= tol * std::abs(mean) || max_abs_dev == 0.0) &&
                       min_support >= -slack;
    return verdict;
}

} // namespace sdlab::numrange
