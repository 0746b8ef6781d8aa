#include "sdlab/kms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sdlab/errors.hpp"
#include "sdlab/linalg.hpp"

namespace sdlab::kms {

namespace {

constexpr double kNonsingularTol = 1e-10;

/// Weyr sequence of X at eigenvalue 0: w_k = nullity(X^k) - nullity(X^{k-1}),
/// k = 1..depth. Also reports whether every rank decision was stable.
std::pair<std::vector<int>, bool> weyr_at_zero(const ComplexMatrix& x, std::size_t depth,
                                               double tol) {
    std::vector<int> w;
    bool stable = true;
    ComplexMatrix p = ComplexMatrix::identity(x.rows());
    int prev_nullity = 0;
    for (std::size_t k = 1; k <= depth; ++k) {
        p = p * x;
        const RankNullity rn = rank_nullity(p, tol);
        stable = stable && rn.stable;
        const int wk = rn.nullity - prev_nullity;
        prev_nullity = rn.nullity;
        if (wk <= 0) break;
        w.push_back(wk);
        if (std::size_t(rn.nullity) == x.rows()) break;   // fully nilpotent reached
    }
    return {w, stable};
}

/// Conjugate partition: sizes[i] = #{k : w_k >= i+1}.
std::vector<int> conjugate_partition(const std::vector<int>& w) {
    std::vector<int> sizes;
    if (w.empty()) return sizes;
    const int height = *std::max_element(w.begin(), w.end());
    sizes.reserve(height);
    for (int i = 1; i <= height; ++i) {
        int count = 0;
        for (int wk : w)
            if (wk >= i) ++count;
        sizes.push_back(count);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

ComplexMatrix diag_weight(std::size_t k, std::size_t m, std::size_t n) {
    // I_{m-1} (+) [0] blown up by (x) I_n for k = m; I_k (x) I_n otherwise.
    if (k == m) {
        ComplexMatrix d(m * n, m * n);
        for (std::size_t i = 0; i < (m - 1) * n; ++i) d(i, i) = 1.0;
        return d;
    }
    return ComplexMatrix::identity(k * n);
}

// (-tol, tol) counts as zero, hence >= 0; at tol = 0 plain lambda >= 0.
int igeq_count(const ComplexMatrix& h, double tol) {
    int count = 0;
    for (double lambda : hermitian_eigenvalues(h))
        if (lambda > -tol || lambda >= tol) ++count;
    return count;
}

} // namespace

void KmsSpec::validate() const {
    if (m < 2) throw HypothesisError("kms spec: m must be at least 2");
    if (!a.is_square()) throw DimensionError("kms spec: A must be square");
}

ComplexMatrix build(const KmsSpec& spec) {
    spec.validate();
    const std::size_t m = spec.m, n = spec.a.rows();
    std::vector<ComplexMatrix> powers(m);   // powers[d] = A^d for d >= 1 (index 0 unused)
    ComplexMatrix out(m * n, m * n);
    ComplexMatrix p = ComplexMatrix::identity(n);
    for (std::size_t d = 1; d < m; ++d) {
        p = p * spec.a;
        powers[d] = p;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            out.set_block(i * n, j * n, powers[j - i]);
    return out;
}

double resolvent_residual(const KmsSpec& spec) {
    spec.validate();
    const std::size_t m = spec.m, n = spec.a.rows();
    const ComplexMatrix s = ComplexMatrix::identity(m * n) - kron(jordan_block(m, 0.0), spec.a);
    const ComplexMatrix lhs = (ComplexMatrix::identity(m * n) + build(spec)) * s;
    return (lhs - ComplexMatrix::identity(m * n)).frobenius_norm();
}

SegreCharacteristic segre_at_zero(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) throw DimensionError("segre_at_zero: matrix must be square");
    SegreCharacteristic out;
    auto [w, stable] = weyr_at_zero(a, a.rows(), tol);
    out.sizes = conjugate_partition(w);
    out.alg_mult0 = 0;
    for (int s : out.sizes) out.alg_mult0 += s;
    out.stable = stable;
    return out;
}

NkCounts nk_formula(std::size_t m, const ComplexMatrix& a, double tol) {
    if (m < 2) throw HypothesisError("nk_formula: m must be at least 2");
    const SegreCharacteristic segre = segre_at_zero(a, tol);
    const int n = int(a.rows());
    const int alpha = segre.alg_mult0;

    NkCounts out;
    out.counts.assign(m, 0);

    // k = m: every nonzero eigenvalue contributes its full multiplicity, and
    // each nilpotent block of size s_j >= m contributes |m - s_j| + 1 copies.
    int nm = n - alpha;
    for (int s : segre.sizes)
        if (int(m) <= s) nm += std::abs(int(m) - s) + 1;
    out.counts[m - 1] = nm;

    // k < m: each s_j contributes two copies of every J_k(0) with
    // k < min(m, s_j) and |m - s_j| + 1 copies at k = min(m, s_j).
    for (int s : segre.sizes) {
        const int cap = std::min<int>(int(m), s);
        for (int k = 1; k < cap; ++k) out.counts[k - 1] += 2;
        if (cap < int(m)) out.counts[cap - 1] += std::abs(int(m) - s) + 1;
    }
    return out;
}

NkCounts nk_oracle(std::size_t m, const ComplexMatrix& a, double tol) {
    if (m < 2) throw HypothesisError("nk_oracle: m must be at least 2");
    const ComplexMatrix t = kron(jordan_block(m, 0.0), a);
    auto [w, stable] = weyr_at_zero(t, m, tol);
    (void)stable;
    w.resize(m + 1, 0);
    NkCounts out;
    out.counts.assign(m, 0);
    for (std::size_t k = 1; k <= m; ++k) out.counts[k - 1] = w[k - 1] - w[k];
    return out;
}

long NkCounts::weighted_sum() const {
    long s = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) s += long(k + 1) * counts[k];
    return s;
}

bool kms_similar(std::size_t m, const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("kms_similar: A and B must have the same size");
    return nk_formula(m, a, tol) == nk_formula(m, b, tol);
}

bool k2_similar(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("k2_similar: A and B must have the same size");
    return rank_nullity(a, tol).rank == rank_nullity(b, tol).rank;
}

bool k2_unitarily_similar(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("k2_unitarily_similar: A and B must have the same size");
    const std::vector<double> sa = singular_values(a);
    const std::vector<double> sb = singular_values(b);
    const double scale = std::max({1.0, sa.empty() ? 0.0 : sa.front(), sb.empty() ? 0.0 : sb.front()});
    for (std::size_t i = 0; i < sa.size(); ++i)
        if (std::abs(sa[i] - sb[i]) > tol * scale) return false;
    return true;
}

int Word::total_degree() const {
    int d = 0;
    for (auto [e, f] : factors) d += e + f;
    return d;
}

std::string Word::str() const {
    std::string out;
    auto append = [&out](char letter, int exp) {
        if (exp == 0) return;
        out += letter;
        if (exp > 1) out += "^" + std::to_string(exp);
    };
    for (auto [e, f] : factors) {
        append('s', e);
        append('t', f);
    }
    return out;
}

ComplexMatrix Word::eval(const ComplexMatrix& x) const {
    const ComplexMatrix xs = x.adjoint();
    ComplexMatrix out = ComplexMatrix::identity(x.rows());
    for (auto [e, f] : factors) {
        for (int i = 0; i < e; ++i) out = out * x;
        for (int i = 0; i < f; ++i) out = out * xs;
    }
    return out;
}

long long Word::trace_on_jordan(std::size_t m) const {
    // J_m(0) maps e_i -> e_{i-1} (killing e_1); J_m(0)^* maps e_i -> e_{i+1}
    // (killing e_m). Letters are applied right to left.
    std::vector<char> letters;
    for (auto [e, f] : factors) {
        letters.insert(letters.end(), e, 's');
        letters.insert(letters.end(), f, 't');
    }
    long long trace = 0;
    for (std::size_t start = 1; start <= m; ++start) {
        auto pos = static_cast<long long>(start);
        bool alive = true;
        for (auto it = letters.rbegin(); it != letters.rend() && alive; ++it) {
            if (*it == 's') {
                if (pos == 1) alive = false;
                else --pos;
            } else {
                if (pos == static_cast<long long>(m)) alive = false;
                else ++pos;
            }
        }
        if (alive && pos == static_cast<long long>(start)) ++trace;
    }
    return trace;
}

std::vector<std::pair<Word, long long>> specht_words(std::size_t m, int max_degree) {
    if (max_degree < 1) throw HypothesisError("specht_words: max degree must be at least 1");
    if (max_degree > 20) throw HypothesisError("specht_words: degree cap too large to enumerate");

    std::vector<std::pair<Word, long long>> out;
    for (int d = 1; d <= max_degree; ++d) {
        const std::uint64_t limit = std::uint64_t(1) << d;
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            // Letter i (left to right): bit (d-1-i); 0 = 's', 1 = 't'.
            // Keep only the lexicographically smallest cyclic rotation.
            bool canonical = true;
            for (int r = 1; r < d && canonical; ++r) {
                const std::uint64_t rotated =
                    ((mask << r) | (mask >> (d - r))) & (limit - 1);
                if (rotated < mask) canonical = false;
            }
            if (!canonical) continue;

            Word w;
            int i = 0;
            while (i < d) {
                int e = 0, f = 0;
                while (i < d && !((mask >> (d - 1 - i)) & 1)) { ++e; ++i; }
                while (i < d && ((mask >> (d - 1 - i)) & 1)) { ++f; ++i; }
                w.factors.emplace_back(e, f);
            }
            const long long tr = w.trace_on_jordan(m);
            if (tr != 0) out.emplace_back(std::move(w), tr);
        }
    }
    return out;
}

UsimVerdict kms_unitarily_similar_upto(std::size_t m, const ComplexMatrix& a,
                                       const ComplexMatrix& b, int max_degree, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("kms_unitarily_similar_upto: A and B must have the same size");
    UsimVerdict verdict;
    verdict.max_degree = max_degree;
    for (const auto& [word, jordan_trace] : specht_words(m, max_degree)) {
        (void)jordan_trace;
        const Complex ta = word.eval(a).trace();
        const Complex tb = word.eval(b).trace();
        const double scale = std::max({1.0, std::abs(ta), std::abs(tb)});
        if (std::abs(ta - tb) > tol * scale) {
            verdict.distinguished = true;
            verdict.word = word;
            verdict.trace_a = ta;
            verdict.trace_b = tb;
            return verdict;
        }
    }
    return verdict;
}

int zdi_kms2(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) throw DimensionError("zdi_kms2: A must be square");
    return int(a.rows()) + rank_nullity(a, tol).nullity;
}

ComplexMatrix x_matrix(std::size_t k, std::size_t m, const ComplexMatrix& a, double theta) {
    if (!a.is_square()) throw DimensionError("x_matrix: A must be square");
    if (k < 1 || k > m) throw HypothesisError("x_matrix: k must lie in [1, m]");
    const std::size_t n = a.rows();
    const std::size_t jsize = (k == m) ? m : k;
    const ComplexMatrix j = kron(jordan_block(jsize, 0.0), a);
    const ComplexMatrix aa = a * a.adjoint();
    ComplexMatrix out = j + j.adjoint();
    ComplexMatrix weight = diag_weight(k, m, n);
    // weight (x) AA^*: weight is diagonal 0/1, so scale block-diagonally.
    ComplexMatrix waa(jsize * n, jsize * n);
    for (std::size_t bi = 0; bi < jsize; ++bi) {
        if (weight(bi * n, bi * n) == Complex{}) continue;
        waa.set_block(bi * n, bi * n, aa);
    }
    out -= (2.0 * std::cos(theta)) * waa;
    return out;
}

int zdi_kms(std::size_t m, const ComplexMatrix& a, double tol) {
    if (!a.is_square()) throw DimensionError("zdi_kms: A must be square");
    if (m < 3) throw HypothesisError("zdi_kms: m must be at least 3 (use zdi_kms2 for m = 2)");
    const std::size_t n = a.rows();

    KmsSpec spec{m, a};
    const ComplexMatrix re = re_part(build(spec));
    const double scaled_tol = (tol > 0.0) ? tol * std::max(1.0, re.frobenius_norm()) : default_inertia_tol(re);
    const int d = igeq_count(re, scaled_tol);

    if (is_nonsingular(a, kNonsingularTol)) {
        const ComplexMatrix x = x_matrix(m - 2, m, a, 0.0);
        const double xtol = (tol > 0.0) ? tol * std::max(1.0, x.frobenius_norm()) : default_inertia_tol(x);
        const int reduced = int(n) + igeq_count(x, xtol);
        if (reduced != d)
            throw std::runtime_error("zdi_kms: X_{m-2} reduction disagrees with the direct count");
    }
    return d;
}

int zdi_kms_normal(std::size_t m, const std::vector<Complex>& eigenvalues, double tol) {
    if (m < 3) throw HypothesisError("zdi_kms_normal: m must be at least 3");
    (void)tol;
    int total = 0;
    for (const Complex& lambda : eigenvalues) {
        const double r = std::abs(lambda);
        if (r == 0.0)
            throw HypothesisError("zdi_kms_normal: zero eigenvalue, A must be nonsingular");
        int ki = 1;
        for (std::size_t k = m - 2; k >= 1; --k) {
            const double lo = std::cos(double(k) * std::numbers::pi / double(m - 1));
            const double hi = std::cos(double(k - 1) * std::numbers::pi / double(m - 1));
            if (lo < r && r <= hi) { ki = int(k); break; }
            if (k == 1) break;
        }
        total += ki;
    }
    return total;
}

std::vector<std::pair<double, int>> monotonicity_profile(std::size_t k, std::size_t m,
                                                         const ComplexMatrix& a,
                                                         const std::vector<double>& theta_grid,
                                                         double tol) {
    if (!std::is_sorted(theta_grid.begin(), theta_grid.end()))
        throw HypothesisError("monotonicity_profile: grid must be sorted");
    if (!theta_grid.empty()) {
        const double lo = theta_grid.front(), hi = theta_grid.back();
        const double pi = std::numbers::pi;
        const bool first_half = lo >= -1e-12 && hi <= pi + 1e-12;
        const bool second_half = lo >= pi - 1e-12 && hi <= 2.0 * pi + 1e-12;
        if (!first_half && !second_half)
            throw HypothesisError("monotonicity_profile: grid must lie within [0, pi] or [pi, 2pi]");
    }
    std::vector<std::pair<double, int>> profile;
    profile.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        const ComplexMatrix x = x_matrix(k, m, a, theta);
        const double xtol = (tol > 0.0) ? tol * std::max(1.0, x.frobenius_norm()) : default_inertia_tol(x);
        profile.emplace_back(theta, igeq_count(x, xtol));
    }
    return profile;
}

double congruence_check(std::size_t m, const ComplexMatrix& a, Complex alpha, Complex beta) {
    if (!a.is_square()) throw DimensionError("congruence_check: A must be square");
    const std::size_t n = a.rows();
    KmsSpec spec{m, a};
    const ComplexMatrix k = build(spec);
    const ComplexMatrix j = kron(jordan_block(m, 0.0), a);
    const ComplexMatrix s = ComplexMatrix::identity(m * n) - j;

    const ComplexMatrix lhs = s * (alpha * k + beta * k.adjoint()) * s.adjoint();

    const ComplexMatrix aa = a * a.adjoint();
    ComplexMatrix waa(m * n, m * n);
    for (std::size_t bi = 0; bi + 1 < m; ++bi) waa.set_block(bi * n, bi * n, aa);
    const ComplexMatrix rhs = alpha * j + beta * j.adjoint() - (alpha + beta) * waa;
    return (lhs - rhs).frobenius_norm();
}

double congruence_check_rotated(std::size_t m, const ComplexMatrix& a, Complex alpha,
                                Complex beta) {
    if (!a.is_square()) throw DimensionError("congruence_check_rotated: A must be square");
    const bool inverse_pair = std::abs(alpha * beta - Complex{1.0, 0.0}) <= 1e-12;
    const bool conj_unit = std::abs(beta - std::conj(alpha)) <= 1e-12 &&
                           std::abs(std::abs(alpha) - 1.0) <= 1e-12;
    if (!inverse_pair && !conj_unit)
        throw HypothesisError(
            "congruence_check_rotated: requires beta = 1/alpha, or beta = conj(alpha) on the unit circle");

    const std::size_t n = a.rows();
    KmsSpec spec{m, a};
    const ComplexMatrix k = build(spec);
    const ComplexMatrix j = kron(jordan_block(m, 0.0), a);
    const ComplexMatrix s = ComplexMatrix::identity(m * n) - j;

    std::vector<Complex> tdiag(m * n);
    Complex pw{1.0, 0.0};
    for (std::size_t bi = 0; bi < m; ++bi) {
        for (std::size_t i = 0; i < n; ++i) tdiag[bi * n + i] = pw;
        pw *= alpha;
    }
    const ComplexMatrix t = ComplexMatrix::diagonal(tdiag);
    const ComplexMatrix lhs = t * (s * (alpha * k + beta * k.adjoint()) * s.adjoint()) * inverse(t);

    const ComplexMatrix aa = a * a.adjoint();
    ComplexMatrix waa(m * n, m * n);
    for (std::size_t bi = 0; bi + 1 < m; ++bi) waa.set_block(bi * n, bi * n, aa);
    const ComplexMatrix rhs = j + j.adjoint() - (alpha + beta) * waa;
    return (lhs - rhs).frobenius_norm();
}

} // namespace sdlab::kms
