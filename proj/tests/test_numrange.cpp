#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sdlab/errors.hpp"
#include "sdlab/kms.hpp"
#include "sdlab/linalg.hpp"
#include "sdlab/numrange.hpp"
#include "sdlab/random.hpp"

using namespace sdlab;

namespace {
constexpr double kPi = std::numbers::pi;
ComplexMatrix scalar(Complex z) { return ComplexMatrix{{z}}; }
} // namespace

TEST_CASE("support fixtures") {
    // W(I) = {1}: support(theta) = cos(theta).
    for (double theta : {0.0, 0.4, 1.9, 4.0})
        CHECK(numrange::support(ComplexMatrix::identity(3), theta) ==
              doctest::Approx(std::cos(theta)).epsilon(1e-12));

    // K_2(2b I_n): disk of radius b.
    Rng rng(3);
    const double b = 0.75;
    const ComplexMatrix a = 2.0 * b * ComplexMatrix::identity(2);
    const ComplexMatrix k = kms::build({2, a});
    for (double theta : {0.0, 1.0, 2.5})
        CHECK(numrange::support(k, theta) == doctest::Approx(b).epsilon(1e-12));

    // J_2(0): disk of radius 1/2.
    for (double theta : {0.3, 3.3})
        CHECK(numrange::support(jordan_block(2, 0.0), theta) == doctest::Approx(0.5));
}

TEST_CASE("boundary samples") {
    SUBCASE("identity collapses to the point 1") {
        const auto samples = numrange::boundary(ComplexMatrix::identity(2), 16);
        for (const auto& s : samples) CHECK(std::abs(s.point - Complex{1, 0}) <= 1e-10);
    }
    SUBCASE("K_2(2): circle of radius 1") {
        const auto samples = numrange::boundary(kms::build({2, scalar(Complex{2, 0})}), 32);
        for (const auto& s : samples) CHECK(std::abs(std::abs(s.point) - 1.0) <= 1e-9);
    }
    SUBCASE("Hermitian input: boundary on the real axis") {
        Rng rng(5);
        const ComplexMatrix h = rng.hermitian(3);
        for (const auto& s : numrange::boundary(h, 32))
            CHECK(std::abs(s.point.imag()) <= 1e-9 * (1.0 + h.frobenius_norm()));
    }
    SUBCASE("support consistency invariant") {
        Rng rng(7);
        const ComplexMatrix a = rng.matrix(4, 4);
        for (const auto& s : numrange::boundary(a, 64)) {
            const Complex dir{std::cos(s.theta), -std::sin(s.theta)};   // e^{-i theta}
            CHECK(std::abs((dir * s.point).real() - s.support) <=
                  1e-9 * (1.0 + a.frobenius_norm()));
        }
    }
    SUBCASE("interior points never exceed the support") {
        Rng rng(11);
        const ComplexMatrix a = rng.matrix(3, 3);
        const auto samples = numrange::boundary(a, 32);
        for (int trial = 0; trial < 20; ++trial) {
            ComplexMatrix x = rng.matrix(3, 1);
            double nrm = 0.0;
            for (std::size_t i = 0; i < 3; ++i) nrm += std::norm(x(i, 0));
            nrm = std::sqrt(nrm);
            for (std::size_t i = 0; i < 3; ++i) x(i, 0) /= nrm;
            Complex point{};
            for (std::size_t i = 0; i < 3; ++i) {
                Complex row{};
                for (std::size_t j = 0; j < 3; ++j) row += a(i, j) * x(j, 0);
                point += std::conj(x(i, 0)) * row;
            }
            for (const auto& s : samples) {
                const Complex dir{std::cos(s.theta), -std::sin(s.theta)};
                CHECK((dir * point).real() <= s.support + 1e-9 * (1.0 + a.frobenius_norm()));
            }
        }
    }
}

TEST_CASE("kippenhahn polynomial") {
    SUBCASE("zero matrix: p = z^m") {
        const Complex z{1.3, -0.2};
        const Complex p = numrange::kippenhahn(ComplexMatrix(3, 3), Complex{1, 0}, Complex{0, 1}, z);
        CHECK(std::abs(p - z * z * z) <= 1e-12);
    }
    SUBCASE("p(1, i, z) recovers det(A + zI); strictly upper triangular gives z^{mn}") {
        const ComplexMatrix k = kms::build({3, scalar(Complex{0.8, 0.1})});
        const Complex z{0.7, 0.4};
        const Complex p = numrange::kippenhahn(k, Complex{1, 0}, Complex{0, 1}, z);
        Complex zn{1, 0};
        for (int i = 0; i < 3; ++i) zn *= z;
        CHECK(std::abs(p - zn) <= 1e-12);
    }
    SUBCASE("K_2(2b): z^2 - b^2 (x^2 + y^2)") {
        const double b = 1.2;
        const ComplexMatrix k = kms::build({2, scalar(Complex{2.0 * b, 0})});
        for (double x : {0.0, 0.5, 1.0})
            for (double y : {-1.0, 0.3})
                for (double z : {0.2, 2.0}) {
                    const Complex p =
                        numrange::kippenhahn(k, Complex{x, 0}, Complex{y, 0}, Complex{z, 0});
                    const double expected = z * z - b * b * (x * x + y * y);
                    CHECK(std::abs(p - expected) <= 1e-12 * (1.0 + std::abs(expected)));
                }
    }
    SUBCASE("support line touches the curve: p(cos, sin, -support) = 0") {
        Rng rng(13);
        const ComplexMatrix a = rng.matrix(3, 3);
        for (double theta : {0.0, 0.9, 2.2, 4.8}) {
            const double s = numrange::support(a, theta);
            const Complex p = numrange::kippenhahn(a, Complex{std::cos(theta), 0},
                                                   Complex{std::sin(theta), 0}, Complex{-s, 0});
            CHECK(std::abs(p) <= 1e-8 * (1.0 + std::pow(a.frobenius_norm(), 3.0)));
        }
    }
}

TEST_CASE("lemdet residual") {
    SUBCASE("singular parameter: both sides vanish") {
        const ComplexMatrix a = ComplexMatrix::diagonal({Complex{1, 0}, Complex{}});
        CHECK(numrange::lemdet_residual(3, a, {-1.0, 0.0, 2.0}) <= 1e-12);
    }
    SUBCASE("K_3(1) at y=0: both sides are 1/4") {
        // Direct check against the hand-computed value first.
        const ComplexMatrix k = kms::build({3, scalar(Complex{1, 0})});
        CHECK(std::abs(determinant(re_part(k)) - Complex{0.25, 0}) <= 1e-14);
        CHECK(numrange::lemdet_residual(3, scalar(Complex{1, 0}), {0.0}) <= 1e-12);
    }
    SUBCASE("random parameters across m") {
        Rng rng(17);
        for (std::size_t m : {3, 4, 5}) {
            const std::size_t n = 1 + rng.integer(2);
            const ComplexMatrix a = rng.matrix(n, n);
            CHECK(numrange::lemdet_residual(m, a, {-2.0, -1.0, 0.0, 1.0, 2.0}) <= 1e-8);
        }
    }
    CHECK_THROWS_AS(numrange::lemdet_residual(2, ComplexMatrix(1, 1), {0.0}), HypothesisError);
}

TEST_CASE("circularity verdicts") {
    SUBCASE("K_2(2): disk of radius 1") {
        const auto v = numrange::circularity({2, scalar(Complex{2, 0})}, 180, 1e-8);
        CHECK(v.circular);
        CHECK(v.radius == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("K_3(J_2(0)): circular (W equals W(J_2(0)))") {
        const auto v = numrange::circularity({3, jordan_block(2, 0.0)}, 180, 1e-8);
        CHECK(v.circular);
        CHECK(v.radius == doctest::Approx(0.5).epsilon(1e-10));
    }
    SUBCASE("K_3(diag(1,0)): not circular") {
        const ComplexMatrix b = ComplexMatrix::diagonal({Complex{1, 0}, Complex{}});
        const auto v = numrange::circularity({3, b}, 180, 1e-8);
        CHECK_FALSE(v.circular);
        CHECK(v.max_deviation > 1e-3);
    }
    SUBCASE("K_m(A) for nonsingular A, m >= 3: never circular") {
        Rng rng(19);
        for (std::size_t m : {3, 4}) {
            const auto v = numrange::circularity({m, rng.nonsingular(2)}, 180, 1e-8);
            CHECK_FALSE(v.circular);
            CHECK(v.max_deviation > 1e-3);
        }
    }
    SUBCASE("support is 2pi-periodic and unitarily invariant") {
        Rng rng(23);
        const ComplexMatrix a = rng.matrix(3, 3);
        const ComplexMatrix u = rng.unitary(3);
        for (double theta : {0.2, 1.7}) {
            CHECK(numrange::support(a, theta) ==
                  doctest::Approx(numrange::support(a, theta + 2.0 * kPi)).epsilon(1e-12));
            CHECK(numrange::support(a, theta) ==
                  doctest::Approx(numrange::support(u.adjoint() * a * u, theta)).epsilon(1e-10));
        }
    }
}
