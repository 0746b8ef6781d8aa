#include "sdlab/companion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sdlab/errors.hpp"
#include "sdlab/linalg.hpp"

namespace sdlab::companion {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool block_is(const ComplexMatrix& b, std::size_t n) { return b.rows() == n && b.cols() == n; }

/// Diagonal (power-of-two) balancing; a similarity, so eigenvalues are untouched.
void balance(ComplexMatrix& a) {
    const std::size_t n = a.rows();
    bool converged = false;
    for (int pass = 0; pass < 20 && !converged; ++pass) {
        converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                r += std::abs(a(i, j));
                c += std::abs(a(j, i));
            }
            if (r == 0.0 || c == 0.0) continue;
            double f = 1.0;
            const double s = r + c;
            while (c < r / 2.0) { c *= 2.0; r /= 2.0; f *= 2.0; }
            while (c >= r * 2.0) { c /= 2.0; r *= 2.0; f /= 2.0; }
            if (c + r < 0.95 * s) {
                converged = false;
                for (std::size_t j = 0; j < n; ++j) a(i, j) /= f;
                for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
            }
        }
    }
}

/// Householder reduction to upper Hessenberg form (in place).
void hessenberg(ComplexMatrix& a) {
    const std::size_t n = a.rows();
    if (n < 3) return;
    std::vector<Complex> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(a(i, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;

        const Complex x0 = a(k + 1, k);
        const Complex phase = (x0 == Complex{}) ? Complex{1.0, 0.0} : x0 / std::abs(x0);
        // v = x + phase * ||x|| e_1, reflector P = I - 2 v v^* / v^* v
        for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
        v[k + 1] += phase * xnorm;
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;

        // A <- P A : rows k+1..n-1
        for (std::size_t j = 0; j < n; ++j) {
            Complex dot{};
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * a(i, j);
            dot *= beta;
            for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= dot * v[i];
        }
        // A <- A P : columns k+1..n-1
        for (std::size_t i = 0; i < n; ++i) {
            Complex dot{};
            for (std::size_t j = k + 1; j < n; ++j) dot += a(i, j) * v[j];
            dot *= beta;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= dot * std::conj(v[j]);
        }
        a(k + 1, k) = -phase * xnorm;
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = Complex{};
    }
}

/// Complex Givens pair (c real, s) with  [c, s; -conj(s), c] [a; b] = [r; 0].
struct Givens {
    double c;
    Complex s;
};

Givens make_givens(Complex a, Complex b) {
    const double aa = std::abs(a), bb = std::abs(b);
    if (bb == 0.0) return {1.0, Complex{}};
    if (aa == 0.0) return {0.0, std::conj(b) / bb};
    const double r = std::hypot(aa, bb);
    return {aa / r, (a / aa) * std::conj(b) / r};
}

/// Eigenvalues of the 2x2 [[a, b], [c, d]]; `both` ordered arbitrarily.
std::pair<Complex, Complex> eig2(Complex a, Complex b, Complex c, Complex d) {
    const Complex tr = a + d;
    const Complex disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
    Complex l1 = 0.5 * (tr + disc);
    Complex l2 = 0.5 * (tr - disc);
    // Use the larger root and the determinant for the smaller, when possible.
    if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);
    if (l1 != Complex{}) l2 = (a * d - b * c) / l1;
    return {l1, l2};
}

} // namespace

std::vector<Complex> eigenvalues_dense(ComplexMatrix a) {
    if (!a.is_square()) throw DimensionError("eigenvalues_dense: matrix must be square");
    const std::size_t n = a.rows();
    std::vector<Complex> eigs;
    eigs.reserve(n);
    if (n == 0) return eigs;

    balance(a);
    hessenberg(a);

    std::size_t hi = n - 1;
    int iter_since_deflation = 0;
    long total_iters = 0;
    const long max_total = 60 * long(n) + 100;

    while (true) {
        // Zero out negligible subdiagonals.
        for (std::size_t k = 0; k < hi; ++k) {
            const double mag = std::abs(a(k + 1, k));
            if (mag <= kEps * (std::abs(a(k, k)) + std::abs(a(k + 1, k + 1))) + 1e-300)
                a(k + 1, k) = Complex{};
        }
        // Deflate converged trailing eigenvalues.
        while (hi > 0 && a(hi, hi - 1) == Complex{}) {
            eigs.push_back(a(hi, hi));
            --hi;
            iter_since_deflation = 0;
        }
        if (hi == 0) {
            eigs.push_back(a(0, 0));
            break;
        }
        // Active window [lo, hi]: walk up to the first zero subdiagonal.
        std::size_t lo = hi;
        while (lo > 0 && a(lo, lo - 1) != Complex{}) --lo;

        if (hi - lo == 1) {
            const auto [l1, l2] = eig2(a(lo, lo), a(lo, hi), a(hi, lo), a(hi, hi));
            eigs.push_back(l1);
            eigs.push_back(l2);
            if (lo == 0) break;
            hi = lo - 1;
            iter_since_deflation = 0;
            continue;
        }

        if (++total_iters > max_total)
            throw std::runtime_error("eigenvalues_dense: QR iteration did not converge");

        // Shift strategy: first step in a window unshifted, then Wilkinson,
        // with an exceptional shift if progress stalls.
        Complex mu{};
        if (iter_since_deflation == 0) {
            mu = Complex{};
        } else if (iter_since_deflation % 12 == 0) {
            mu = a(hi, hi) + Complex{1.5 * std::abs(a(hi, hi - 1)), 0.0};
        } else {
            const auto [l1, l2] = eig2(a(hi - 1, hi - 1), a(hi - 1, hi), a(hi, hi - 1), a(hi, hi));
            mu = (std::abs(l1 - a(hi, hi)) < std::abs(l2 - a(hi, hi))) ? l1 : l2;
        }
        ++iter_since_deflation;

        // Explicit shifted QR step on the window: Q R = A - mu I, A <- R Q + mu I.
        for (std::size_t i = lo; i <= hi; ++i) a(i, i) -= mu;
        std::vector<Givens> rots(hi - lo);
        for (std::size_t k = lo; k < hi; ++k) {
            const Givens g = make_givens(a(k, k), a(k + 1, k));
            rots[k - lo] = g;
            for (std::size_t j = k; j <= hi; ++j) {
                const Complex top = a(k, j), bot = a(k + 1, j);
                a(k, j) = g.c * top + g.s * bot;
                a(k + 1, j) = -std::conj(g.s) * top + g.c * bot;
            }
            a(k + 1, k) = Complex{};
        }
        for (std::size_t k = lo; k < hi; ++k) {
            const Givens g = rots[k - lo];
            const std::size_t top_row = lo;
            const std::size_t bot_row = std::min(hi, k + 1);
            for (std::size_t i = top_row; i <= bot_row; ++i) {
                const Complex left = a(i, k), right = a(i, k + 1);
                a(i, k) = left * g.c + right * std::conj(g.s);
                a(i, k + 1) = -left * g.s + right * g.c;
            }
        }
        for (std::size_t i = lo; i <= hi; ++i) a(i, i) += mu;
    }
    return eigs;
}

void GeneralizedCompanionSpec::validate() const {
    if (m < 2) throw HypothesisError("companion spec: m must be at least 2");
    if (n < 1) throw HypothesisError("companion spec: n must be at least 1");
    if (diag_blocks.size() != m - 1)
        throw DimensionError("companion spec: expected m-1 diagonal blocks");
    if (bottom_blocks.size() != m)
        throw DimensionError("companion spec: expected m bottom blocks");
    for (const auto& b : diag_blocks)
        if (!block_is(b, n)) throw DimensionError("companion spec: diagonal block is not n x n");
    for (const auto& b : bottom_blocks)
        if (!block_is(b, n)) throw DimensionError("companion spec: bottom block is not n x n");
}

ComplexMatrix build(const GeneralizedCompanionSpec& spec) {
    spec.validate();
    const std::size_t m = spec.m, n = spec.n;
    ComplexMatrix out(m * n, m * n);
    for (std::size_t j = 0; j < m - 1; ++j)
        out.set_block(j * n, (j + 1) * n, spec.diag_blocks[j]);
    for (std::size_t j = 0; j < m; ++j)
        out.set_block((m - 1) * n, j * n, spec.bottom_blocks[j]);
    return out;
}

std::pair<GeneralizedCompanionSpec, ComplexMatrix> rotate(const GeneralizedCompanionSpec& spec,
                                                          Complex omega) {
    spec.validate();
    if (std::abs(std::abs(omega) - 1.0) > 1e-12)
        throw HypothesisError("rotate: omega must lie on the unit circle");
    const std::size_t m = spec.m, n = spec.n;

    GeneralizedCompanionSpec rotated = spec;
    // Y_j = omega^{m-j} B_j
    for (std::size_t j = 0; j < m; ++j) {
        Complex factor{1.0, 0.0};
        for (std::size_t p = 0; p < m - j; ++p) factor *= omega;
        rotated.bottom_blocks[j] = factor * spec.bottom_blocks[j];
    }

    ComplexMatrix u(m * n, m * n);
    Complex pw = omega;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) u(j * n + i, j * n + i) = pw;
        pw *= omega;
    }
    return {rotated, u};
}

ComplexMatrix MatrixPolynomial::eval(Complex z) const {
    ComplexMatrix out = ComplexMatrix::identity(block_size);
    Complex zk{1.0, 0.0};
    std::vector<Complex> powers(degree + 1);
    for (std::size_t k = 0; k <= degree; ++k) { powers[k] = zk; zk *= z; }
    out *= powers[degree];
    for (const auto& [e, coeff] : coeffs) out += powers[e] * coeff;
    return out;
}

MatrixPolynomial p_polynomial(const GeneralizedCompanionSpec& spec) {
    spec.validate();
    if (spec.m % 2 != 0) throw HypothesisError("p_polynomial: m must be even");
    for (const auto& a : spec.diag_blocks)
        if (!is_nonsingular(a)) throw HypothesisError("p_polynomial: singular diagonal block");

    const std::size_t m = spec.m, n = spec.n;
    MatrixPolynomial p;
    p.degree = m;
    p.block_size = n;

    // Build P_j = (-1)^{m/2-j} A_{m-1}^{-1} A_{m-2}^* A_{m-3}^{-1} ... A_{2j-1}^{-1} B_{2j-2}^*
    // from the top down, extending the alternating prefix product as j decreases.
    // diag_blocks[i] holds A_{i+1}.
    auto a_block = [&](std::size_t idx1) -> const ComplexMatrix& { return spec.diag_blocks[idx1 - 1]; };

    ComplexMatrix prefix = inverse(a_block(m - 1));
    for (std::size_t j = m / 2; j >= 1; --j) {
        const double sign = ((m / 2 - j) % 2 == 0) ? 1.0 : -1.0;
        p.coeffs[2 * j - 2] = sign * (prefix * spec.bottom_blocks[2 * j - 2].adjoint());
        if (j > 1)
            prefix = prefix * a_block(2 * j - 2).adjoint() * inverse(a_block(2 * j - 3));
    }
    return p;
}

double det_re_closed_form(const GeneralizedCompanionSpec& spec, Complex omega) {
    if (std::abs(std::abs(omega) - 1.0) > 1e-12)
        throw HypothesisError("det_re_closed_form: omega must lie on the unit circle");
    const MatrixPolynomial p = p_polynomial(spec);
    const std::size_t m = spec.m, n = spec.n;

    double prod = 1.0;
    for (std::size_t j = 1; j <= m - 1; j += 2) {
        const double d = std::abs(determinant(spec.diag_blocks[j - 1]));
        prod *= d * d;
    }
    const double dp = std::abs(determinant(p.eval(omega)));
    const double sign = ((m * n / 2) % 2 == 0) ? 1.0 : -1.0;
    return sign * std::ldexp(prod * dp * dp, -int(m * n));
}

std::vector<Complex> sigma_p(const MatrixPolynomial& p) {
    if (!p.monic) throw HypothesisError("sigma_p: polynomial must be monic");
    const std::size_t deg = p.degree, n = p.block_size;
    if (deg == 0) return {};
    ComplexMatrix comp(deg * n, deg * n);
    for (std::size_t j = 0; j + 1 < deg; ++j)
        comp.set_block(j * n, (j + 1) * n, ComplexMatrix::identity(n));
    for (std::size_t e = 0; e < deg; ++e) {
        auto it = p.coeffs.find(e);
        if (it == p.coeffs.end()) continue;
        comp.set_block((deg - 1) * n, e * n, -it->second);
    }
    return eigenvalues_dense(comp);
}

std::vector<Complex> sigma_p(const GeneralizedCompanionSpec& spec) {
    return sigma_p(p_polynomial(spec));
}

int nullity_re(const GeneralizedCompanionSpec& spec, Complex omega, double tol) {
    if (std::abs(std::abs(omega) - 1.0) > 1e-12)
        throw HypothesisError("nullity_re: omega must lie on the unit circle");
    return rank_nullity(re_part(omega * build(spec)), tol).nullity;
}

ZdiBounds zdi_bounds(const GeneralizedCompanionSpec& spec) {
    spec.validate();
    for (const auto& a : spec.diag_blocks)
        if (!is_nonsingular(a))
            throw HypothesisError("zdi_bounds: singular diagonal block, bounds not guaranteed");
    const int m = int(spec.m), n = int(spec.n);
    ZdiBounds b;
    if (m % 2 == 0) {
        b.lower = b.upper = m * n / 2;
        b.exact = m * n / 2;
    } else {
        b.lower = (m - 1) * n / 2;
        b.upper = (m + 1) * n / 2;
    }
    return b;
}

GeneralizedCompanionSpec build_interp_example(std::size_t m, std::size_t n, std::size_t k) {
    if (m < 3 || m % 2 == 0)
        throw HypothesisError("build_interp_example: m must be odd and at least 3");
    if (k > n) throw HypothesisError("build_interp_example: k must lie in [0, n]");

    GeneralizedCompanionSpec spec;
    spec.m = m;
    spec.n = n;
    spec.diag_blocks.assign(m - 1, ComplexMatrix::identity(n));
    spec.bottom_blocks.assign(m, ComplexMatrix::zero(n, n));
    ComplexMatrix h(n, n);
    for (std::size_t i = k; i < n; ++i) h(i, i) = -1.0;
    spec.bottom_blocks[m - 1] = 0.5 * h;
    return spec;
}

} // namespace sdlab::companion
