#include "sdlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sdlab/errors.hpp"

namespace sdlab {

namespace {

constexpr double kHermTol = 1e-10;          // relative Hermitian-ness gate
constexpr double kJacobiOffTarget = 1e-14;  // off-diagonal Frobenius target, relative
constexpr int kMaxJacobiSweeps = 100;
constexpr int kMaxSvdSweeps = 60;

/// One cyclic-Jacobi diagonalization pass over a Hermitian matrix held in `h`.
/// Rotations zero h(p,q) exactly; `vectors`, when non-null, accumulates the
/// product of rotations so that (original) = V diag V*.
void jacobi_diagonalize(ComplexMatrix& h, ComplexMatrix* vectors) {
    const std::size_t n = h.rows();
    if (n <= 1) return;

    const double scale = h.frobenius_norm();
    if (scale == 0.0) return;
    const double target = kJacobiOffTarget * scale;

    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        double off2 = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off2 += 2.0 * std::norm(h(p, q));
        if (std::sqrt(off2) <= target) return;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex hpq = h(p, q);
                const double g = std::abs(hpq);
                if (g == 0.0) continue;
                // Negligible relative to the convergence goal; rotating would
                // only churn roundoff.
                if (g < target / (8.0 * double(n))) continue;

                const double a = h(p, p).real();
                const double b = h(q, q).real();
                const Complex u = std::conj(hpq) / g;   // simultaneously phases h(p,q) to |h(p,q)|

                const double tau = (b - a) / (2.0 * g);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // V restricted to coordinates (p,q):  [ c      s  ]
                //                                     [-s*u   c*u ]
                const Complex vqp = -s * u;
                const Complex vqq = c * u;

                // H <- V* H V.  Columns first...
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex hk_p = h(k, p), hk_q = h(k, q);
                    h(k, p) = c * hk_p + vqp * hk_q;
                    h(k, q) = s * hk_p + vqq * hk_q;
                }
                // ...then rows.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex hp_k = h(p, k), hq_k = h(q, k);
                    h(p, k) = c * hp_k + std::conj(vqp) * hq_k;
                    h(q, k) = s * hp_k + std::conj(vqq) * hq_k;
                }

                // Pin the algebraically exact values.
                h(p, p) = Complex{a - t * g, 0.0};
                h(q, q) = Complex{b + t * g, 0.0};
                h(p, q) = Complex{};
                h(q, p) = Complex{};

                if (vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vk_p = (*vectors)(k, p), vk_q = (*vectors)(k, q);
                        (*vectors)(k, p) = c * vk_p + vqp * vk_q;
                        (*vectors)(k, q) = s * vk_p + vqq * vk_q;
                    }
                }
            }
        }
    }
    throw std::runtime_error("jacobi_diagonalize: no convergence in 100 sweeps");
}

ComplexMatrix hermitian_part_checked(const ComplexMatrix& h, const char* who) {
    if (!h.is_square()) throw DimensionError(std::string(who) + ": matrix must be square");
    if (!h.is_hermitian(kHermTol))
        throw HypothesisError(std::string(who) + ": matrix is not Hermitian within tolerance");
    ComplexMatrix s = h;
    for (std::size_t i = 0; i < s.rows(); ++i) {
        s(i, i) = Complex{s(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < s.cols(); ++j) {
            const Complex avg = 0.5 * (s(i, j) + std::conj(s(j, i)));
            s(i, j) = avg;
            s(j, i) = std::conj(avg);
        }
    }
    return s;
}

struct Lu {
    ComplexMatrix lu;            // packed L\U factors
    std::vector<std::size_t> perm;
    int sign = 1;
    double max_abs = 0.0;        // scale of the input
    double min_pivot = 0.0;
};

Lu lu_factor(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("lu_factor: matrix must be square");
    const std::size_t n = a.rows();
    Lu f{a, {}, 1, a.max_abs(), std::numeric_limits<double>::infinity()};
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(f.lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(f.lu(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
            f.sign = -f.sign;
        }
        f.min_pivot = std::min(f.min_pivot, best);
        if (best == 0.0) continue;   // exactly singular; leave the zero column
        const Complex inv_pivot = 1.0 / f.lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex m = f.lu(i, k) * inv_pivot;
            f.lu(i, k) = m;
            if (m == Complex{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
        }
    }
    if (n == 0) f.min_pivot = 0.0;
    return f;
}

bool lu_is_singular(const Lu& f) {
    return f.min_pivot <= 1e-14 * std::max(1.0, f.max_abs);
}

ComplexMatrix lu_solve(const Lu& f, const ComplexMatrix& b) {
    const std::size_t n = f.lu.rows();
    if (b.rows() != n) throw DimensionError("solve: right-hand side has wrong row count");
    ComplexMatrix x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(i, j) = b(f.perm[i], j);
    // forward: L y = P b
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t k = 0; k < i; ++k) {
            const Complex m = f.lu(i, k);
            if (m == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) -= m * x(k, j);
        }
    // back: U x = y
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t k = ii + 1; k < n; ++k) {
            const Complex m = f.lu(ii, k);
            if (m == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) x(ii, j) -= m * x(k, j);
        }
        const Complex d = f.lu(ii, ii);
        for (std::size_t j = 0; j < b.cols(); ++j) x(ii, j) /= d;
    }
    return x;
}

} // namespace

ComplexMatrix re_part(const ComplexMatrix& x) {
    if (!x.is_square()) throw DimensionError("re_part: matrix must be square");
    ComplexMatrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            out(i, j) = 0.5 * (x(i, j) + std::conj(x(j, i)));
    return out;
}

ComplexMatrix im_part(const ComplexMatrix& x) {
    if (!x.is_square()) throw DimensionError("im_part: matrix must be square");
    ComplexMatrix out(x.rows(), x.cols());
    const Complex half_over_i{0.0, -0.5};   // 1/(2i)
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            out(i, j) = half_over_i * (x(i, j) - std::conj(x(j, i)));
    return out;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
    ComplexMatrix s = hermitian_part_checked(h, "hermitian_eigen");
    const std::size_t n = s.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    jacobi_diagonalize(s, &v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return s(a, a).real() < s(b, b).real(); });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = s(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    ComplexMatrix s = hermitian_part_checked(h, "hermitian_eigenvalues");
    jacobi_diagonalize(s, nullptr);
    std::vector<double> vals(s.rows());
    for (std::size_t i = 0; i < s.rows(); ++i) vals[i] = s(i, i).real();
    std::sort(vals.begin(), vals.end());
    return vals;
}

double default_inertia_tol(const ComplexMatrix& h) {
    return 64.0 * std::numeric_limits<double>::epsilon() * double(h.rows()) * h.frobenius_norm();
}

Inertia inertia(const ComplexMatrix& h, double tol) {
    if (tol < 0.0) throw HypothesisError("inertia: tolerance must be nonnegative");
    Inertia out;
    out.tol = tol;
    for (double lambda : hermitian_eigenvalues(h)) {
        if (lambda > -tol && lambda < tol) ++out.zero;
        else if (lambda >= tol) ++out.pos;
        else ++out.neg;
    }
    return out;
}

Inertia inertia(const ComplexMatrix& h) { return inertia(h, default_inertia_tol(h)); }

std::vector<double> singular_values(const ComplexMatrix& x) {
    // One-sided Jacobi: orthogonalize columns of W; ||w_j|| converge to the
    // singular values. Work on the adjoint when that makes columns the short
    // dimension.
    ComplexMatrix w = (x.rows() >= x.cols()) ? x : x.adjoint();
    const std::size_t n = w.cols();
    const std::size_t m = w.rows();
    if (n == 0) return {};

    for (int sweep = 0; sweep < kMaxSvdSweeps; ++sweep) {
        double max_cos = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double a = 0.0, b = 0.0;
                Complex cpq{};
                for (std::size_t k = 0; k < m; ++k) {
                    a += std::norm(w(k, p));
                    b += std::norm(w(k, q));
                    cpq += std::conj(w(k, p)) * w(k, q);
                }
                const double g = std::abs(cpq);
                if (a == 0.0 || b == 0.0 || g == 0.0) continue;
                max_cos = std::max(max_cos, g / std::sqrt(a * b));
                if (g <= 1e-15 * std::sqrt(a * b)) continue;

                const Complex u = std::conj(cpq) / g;
                const double tau = (b - a) / (2.0 * g);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex vqp = -s * u;
                const Complex vqq = c * u;
                for (std::size_t k = 0; k < m; ++k) {
                    const Complex wk_p = w(k, p), wk_q = w(k, q);
                    w(k, p) = c * wk_p + vqp * wk_q;
                    w(k, q) = s * wk_p + vqq * wk_q;
                }
            }
        }
        if (max_cos <= 1e-14) break;
        if (sweep == kMaxSvdSweeps - 1)
            throw std::runtime_error("singular_values: one-sided Jacobi did not converge");
    }

    std::vector<double> sv(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s2 = 0.0;
        for (std::size_t k = 0; k < m; ++k) s2 += std::norm(w(k, j));
        sv[j] = std::sqrt(s2);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

RankNullity rank_nullity(const ComplexMatrix& x, double tol) {
    if (tol < 0.0) throw HypothesisError("rank_nullity: tolerance must be nonnegative");
    const std::vector<double> sv = singular_values(x);
    const double smax = sv.empty() ? 0.0 : sv.front();
    const double cut = (smax > 0.0) ? tol * smax : tol;

    RankNullity out;
    for (double s : sv) {
        if (s > cut) ++out.rank;
        if (cut > 0.0 && s >= cut / 10.0 && s <= cut * 10.0) out.stable = false;
    }
    out.nullity = int(x.cols()) - out.rank;
    return out;
}

bool is_nonsingular(const ComplexMatrix& x, double tol) {
    if (!x.is_square()) return false;
    if (x.rows() == 0) return true;
    const std::vector<double> sv = singular_values(x);
    return sv.back() > tol * sv.front();
}

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
    ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            const Complex f = x(i, j);
            if (f == Complex{}) continue;
            for (std::size_t k = 0; k < y.rows(); ++k)
                for (std::size_t l = 0; l < y.cols(); ++l)
                    out(i * y.rows() + k, j * y.cols() + l) = f * y(k, l);
        }
    return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& x, const ComplexMatrix& y) {
    ComplexMatrix out(x.rows() + y.rows(), x.cols() + y.cols());
    out.set_block(0, 0, x);
    out.set_block(x.rows(), x.cols(), y);
    return out;
}

ComplexMatrix jordan_block(std::size_t k, Complex lambda) {
    ComplexMatrix out(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        out(i, i) = lambda;
        if (i + 1 < k) out(i, i + 1) = 1.0;
    }
    return out;
}

ComplexMatrix schur_complement(const ComplexMatrix& m, std::size_t block_dim) {
    if (!m.is_square()) throw DimensionError("schur_complement: matrix must be square");
    if (block_dim == 0 || block_dim >= m.rows())
        throw DimensionError("schur_complement: block dimension out of range");
    const std::size_t n = m.rows();
    const ComplexMatrix a11 = m.block(0, 0, block_dim, block_dim);
    const ComplexMatrix a12 = m.block(0, block_dim, block_dim, n - block_dim);
    const ComplexMatrix a21 = m.block(block_dim, 0, n - block_dim, block_dim);
    const ComplexMatrix a22 = m.block(block_dim, block_dim, n - block_dim, n - block_dim);

    const Lu f = lu_factor(a11);
    if (lu_is_singular(f))
        throw HypothesisError("schur_complement: leading block is singular");
    return a22 - a21 * lu_solve(f, a12);
}

Complex determinant(const ComplexMatrix& a) {
    const Lu f = lu_factor(a);
    Complex det{double(f.sign), 0.0};
    for (std::size_t i = 0; i < f.lu.rows(); ++i) det *= f.lu(i, i);
    return det;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Lu f = lu_factor(a);
    if (lu_is_singular(f)) throw HypothesisError("solve: matrix is numerically singular");
    return lu_solve(f, b);
}

ComplexMatrix inverse(const ComplexMatrix& a) {
    return solve(a, ComplexMatrix::identity(a.rows()));
}

} // namespace sdlab
