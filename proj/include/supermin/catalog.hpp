#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "supermin/curve.hpp"
#include "supermin/g2.hpp"

namespace supermin {

/// Singularity type data k = (k1, k2, k1, k1, k2, k1), all entries ≥ 1.
struct SingularityTypeSpec {
    int k1 = 1;
    int k2 = 1;

    SingularityTypeSpec(int a, int b) : k1(a), k2(b) {
        if (k1 < 1 || k2 < 1) throw PreconditionError("k1 and k2 must be positive");
    }

    std::array<int, 6> k() const { return {k1, k2, k1, k1, k2, k1}; }

    /// K_p = k_1 + … + k_p, p = 0..6.
    std::array<int, 7> ladder() const {
        std::array<int, 7> out{};
        const auto ks = k();
        for (int p = 1; p < 7; ++p) out[p] = out[p - 1] + ks[p - 1];
        return out;
    }

    /// Expected (r_1..r_6) at each of z = 0 and z = ∞.
    std::array<int, 6> ramification() const { return {k1 - 1, k2 - 1, k1 - 1, k1 - 1, k2 - 1, k1 - 1}; }
};

namespace detail {
inline AlgScalar q(long n, long d) { return AlgScalar::rational(n, d); }
inline AlgScalar rt(long n) { return AlgScalar::sqrt(n); }
}  // namespace detail

/// Coefficients C_p with example_family = Σ C_p z^{K_p} u_p.
inline std::array<AlgScalar, 7> example_u_coefficients(int k1, int k2) {
    using detail::q;
    using detail::rt;
    const long a = 3L * k1 + 2L * k2;
    const long b = 3L * k1 + k2;
    const long c = 2L * k1 + k2;
    return {
        q(90L * k1 * k2 * k2 * (k1 + k2), a * b * c * c),
        q(15L * k1 * k2, a * c) * rt(6),
        q(6L * k2 * (k1 + k2), c * b) * rt(15),
        q(6L * k2, c) * rt(5),
        rt(15),
        rt(6),
        AlgScalar(1),
    };
}

namespace detail {

inline CurveC7 example_family_impl(int k1, int k2, bool corrected) {
    const SingularityTypeSpec spec(k1, k2);
    const long a = 3L * k1 + 2L * k2;
    const long b = 3L * k1 + k2;
    const long c = 2L * k1 + k2;
    const AlgScalar i = AlgScalar::i();
    const AlgScalar c13 = q(3L * k2 * (k1 + k2), b * c) * rt(30);
    const AlgScalar c26 = q(15L * k1 * k2, a * c) * rt(3);
    const AlgScalar c37 = q(45L * k1 * k2 * k2 * (k1 + k2), a * b * c * c) * rt(2);
    const int e1 = k1 + k2;
    const int e2 = 3 * k1 + k2;
    const int e3 = 3 * k1 + 2 * k2;
    const int e4 = 4 * k1 + 2 * k2;
    const AlgScalar s = corrected ? AlgScalar(-1) : AlgScalar(1);
    CurveC7 f;
    f.f[0] = Poly::monomial(-(s * c13), e1) + Poly::monomial(s * q(1, 2) * rt(30), e2);
    f.f[1] = Poly::monomial(c26, k1) + Poly::monomial(rt(3), e3);
    f.f[2] = Poly(i * c37) + Poly::monomial(i * q(1, 2) * rt(2), e4);
    f.f[3] = Poly::monomial(q(6L * k2, c) * rt(5), 2 * k1 + k2);
    f.f[4] = Poly::monomial(s * i * c13, e1) + Poly::monomial(s * i * q(1, 2) * rt(30), e2);
    f.f[5] = Poly::monomial(-(i * c26), k1) + Poly::monomial(i * rt(3), e3);
    f.f[6] = Poly(-c37) + Poly::monomial(q(1, 2) * rt(2), e4);
    return f;
}

}  // namespace detail

/// The S¹-symmetric superhorizontal curve of singularity type
/// (k1−1, k2−1, k1−1, k1−1, k2−1, k1−1) at 0 and ∞, in the e-basis.
inline CurveC7 example_family(int k1, int k2) { return detail::example_family_impl(k1, k2, true); }

/// The same expression with the opposite sign on the e1 and e5 components.
/// Quadric but not superhorizontal; negative control only.
inline CurveC7 example_family_uncorrected(int k1, int k2) { return detail::example_family_impl(k1, k2, false); }

namespace detail {

inline CurveC7 lowest_curve_impl(bool corrected) {
    const AlgScalar i = AlgScalar::i();
    const AlgScalar s = corrected ? AlgScalar(-1) : AlgScalar(1);
    auto m = [](const AlgScalar& c, int e) { return Poly::monomial(c, e); };
    CurveC7 f;
    f.f[0] = s * (m(70 * rt(15), 5) - m(126 * rt(15), 3));
    f.f[1] = m(70 * rt(6), 7) + m(75 * rt(6), 1);
    f.f[2] = m(135 * i, 0) + m(70 * i, 8);
    f.f[3] = m(210 * rt(10), 4);
    f.f[4] = s * (m(70 * i * rt(15), 5) + m(126 * i * rt(15), 3));
    f.f[5] = m(70 * i * rt(6), 7) - m(75 * i * rt(6), 1);
    f.f[6] = m(AlgScalar(-135), 0) + m(AlgScalar(70), 8);
    return f;
}

}  // namespace detail

/// Degree-8 directrix of type (0,1,0,0,1,0) at 0 and ∞ (area 32π).
inline CurveC7 lowest_curve() { return detail::lowest_curve_impl(true); }
inline CurveC7 lowest_curve_uncorrected() { return detail::lowest_curve_impl(false); }

/// Σ c_p z^{K_p} u_p in the e-basis.
inline CurveC7 u_ladder_curve(const SingularityTypeSpec& spec, const std::array<AlgScalar, 7>& c) {
    const auto u = u_basis();
    std::array<Vec7<AlgScalar>, 7> v;
    for (int p = 0; p < 7; ++p) v[p] = c[p] * u[p];
    return curve_from_ladder(v, spec.ladder());
}

// ---------------------------------------------------------------------------
// Normal forms

template <class S>
struct NormalFormCurveT {
    std::array<Vec7<S>, 7> v;  // e-basis
    std::array<int, 7> K{};
    std::array<PolyT<S>, 7> h;  // unit factors h_p(z); constant 1 unless set

    NormalFormCurveT() {
        for (auto& x : h) x = PolyT<S>(ScalarField<S>::from_int(1));
    }

    CurveT<S> curve() const {
        CurveT<S> c;
        for (int p = 0; p < 7; ++p) {
            if (p > 0 && K[p] <= K[p - 1]) throw PreconditionError("normal form: exponent ladder must increase");
            const PolyT<S> zk = PolyT<S>::monomial(ScalarField<S>::from_int(1), K[p]) * h[p];
            for (int k = 0; k < 7; ++k) c.f[k] += v[p][k] * zk;
        }
        return c;
    }

    /// (v_i, v_j) = 0 for i ≠ j under ⟨,⟩.
    bool is_orthogonal() const {
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                if (!ScalarField<S>::is_zero(hermitian(v[i], v[j]))) return false;
        return true;
    }
};

using NormalFormCurve = NormalFormCurveT<AlgScalar>;

/// Read v_p off the coefficients of z^{K_p}; the curve must be exactly Σ z^{K_p} v_p.
inline NormalFormCurve normal_form_from_curve(const CurveC7& c, const SingularityTypeSpec& spec) {
    NormalFormCurve nf;
    nf.K = spec.ladder();
    for (int p = 0; p < 7; ++p) nf.v[p] = c.coefficient(nf.K[p]);
    if (nf.curve() != c) throw PreconditionError("curve is not supported on the exponent ladder");
    return nf;
}

/// λ_j = Π_{1≤r≤s≤6} (k_r+…+k_s) / [Π_{r=1}^{j} (k_r+…+k_j) · Π_{r=1}^{6−j} (k_{j+1}+…+k_{7−r})].
inline Rational lambda_weights(const std::array<int, 6>& k, int j) {
    if (j < 0 || j > 6) throw PreconditionError("lambda_weights: j must be in 0..6");
    auto seg = [&](int r, int s) {
        long sum = 0;
        for (int t = r; t <= s; ++t) sum += k[t - 1];
        return sum;
    };
    mpz_class num = 1;
    for (int r = 1; r <= 6; ++r)
        for (int s = r; s <= 6; ++s) num *= seg(r, s);
    mpz_class den = 1;
    for (int r = 1; r <= j; ++r) den *= seg(r, j);
    for (int r = 1; r <= 6 - j; ++r) den *= seg(j + 1, 7 - r);
    Rational out(num, den);
    out.canonicalize();
    return out;
}

inline Rational lambda_weights(const SingularityTypeSpec& spec, int j) { return lambda_weights(spec.k(), j); }

struct RealityCheck {
    bool real = false;
    AlgScalar mu;
    std::optional<std::pair<int, int>> failing;  // first (j, i) violating the relation
};

/// ⟨v_j, v̄_i⟩ = (v_j, v_i) = (−1)^j δ_{j,6−i} μ λ_j for a single μ.
inline RealityCheck reality_check(const NormalFormCurve& nf, const std::array<int, 6>& k) {
    RealityCheck r;
    r.mu = bilinear(nf.v[0], nf.v[6]) / AlgScalar(lambda_weights(k, 0));
    for (int j = 0; j < 7; ++j)
        for (int i = 0; i < 7; ++i) {
            AlgScalar expected;
            if (i == 6 - j) expected = AlgScalar(Rational((j % 2 == 0 ? 1 : -1) * lambda_weights(k, j))) * r.mu;
            if (bilinear(nf.v[j], nf.v[i]) != expected) {
                r.failing = {j, i};
                return r;
            }
        }
    r.real = !r.mu.is_zero();
    return r;
}

inline RealityCheck reality_check(const NormalFormCurve& nf, const SingularityTypeSpec& spec) {
    return reality_check(nf, spec.k());
}

// ---------------------------------------------------------------------------
// r-parameter family

template <class S>
struct RFamilyParams {
    std::array<S, 8> r;  // r[0] = r1, …, r[7] = r8

    static RFamilyParams symmetric(const S& r1, const S& r8) {
        RFamilyParams p;
        p.r.fill(S{});
        p.r[0] = r1;
        p.r[7] = r8;
        return p;
    }
};

template <class S>
std::array<Vec7<S>, 7> u_basis_as() {
    const auto u = u_basis();
    if constexpr (std::is_same_v<S, AlgScalar>)
        return u;
    else {
        std::array<Vec7<S>, 7> out;
        for (int p = 0; p < 7; ++p) out[p] = to_float(u[p]);
        return out;
    }
}

/// Directrix Σ z^{K_p} v_p with v_p given in u-coordinates by r1..r8.
template <class S>
NormalFormCurveT<S> r_family(const SingularityTypeSpec& spec, const RFamilyParams<S>& params) {
    const auto& R = params.r;
    if (ScalarField<S>::is_zero(R[0]) || ScalarField<S>::is_zero(R[7])) throw PreconditionError("r_family: r1 and r8 must be nonzero");
    const S r1 = R[0], r2 = R[1], r3 = R[2], r4 = R[3], r5 = R[4], r6 = R[5], r7 = R[6], r8 = R[7];
    const long k1 = spec.k1, k2 = spec.k2;
    auto q = [](long n, long d) { return ScalarField<S>::from_rational(n, d); };
    const S s2 = ScalarField<S>::sqrt(2);
    const S one = ScalarField<S>::from_int(1);
    const S two = ScalarField<S>::from_int(2);
    const S half = q(1, 2);
    const long a = 3 * k1 + 2 * k2, b = 3 * k1 + k2, c = 2 * k1 + k2;

    std::array<std::array<S, 7>, 7> x{};  // x[p][j]: coefficient of u_j in v_p
    x[0][0] = q(k1 * k2 * k2 * (k1 + k2), a * b * c * c) * r1 * r1 * r8 * r8;
    const S c1 = q(k1 * k2, a * c) * r1 * r1 * r8;
    x[1][0] = c1 * r5;
    x[1][1] = c1;
    const S c2 = q(k2 * (k1 + k2), c * b) * r1 * r8;
    x[2][0] = c2 * (r2 * r5 - r4 * r8);
    x[2][1] = c2 * r2;
    x[2][2] = c2 * r8;
    const S c3 = q(k2, c) * r1 * r8;
    x[3][0] = c3 * s2 * r3;
    x[3][1] = c3 * two * r4;
    x[3][2] = c3 * two * r5;
    x[3][3] = c3 * s2;
    const S c4 = half * r1;
    x[4][0] = c4 * (s2 * r3 * r5 - two * r6);
    x[4][1] = c4 * (two * r4 * r5 - s2 * r3);
    x[4][2] = c4 * two * r5 * r5;
    x[4][3] = c4 * two * s2 * r5;
    x[4][4] = c4 * two;
    const S h2 = half * s2;
    x[5][0] = h2 * r2 * r3 * r5 - h2 * r3 * r4 * r8 + r7 * r8 - r2 * r6;
    x[5][1] = r2 * r4 * r5 - h2 * r2 * r3 - r4 * r4 * r8;
    x[5][2] = r2 * r5 * r5 - h2 * r3 * r8 - r4 * r5 * r8;
    x[5][3] = s2 * (r2 * r5 - r4 * r8);
    x[5][4] = r2;
    x[5][5] = r8;
    x[6][0] = r5 * r7 + half * r3 * r3 - r4 * r6;
    x[6][1] = r7;
    x[6][2] = r6;
    x[6][3] = r3;
    x[6][4] = r4;
    x[6][5] = r5;
    x[6][6] = one;

    const auto u = u_basis_as<S>();
    NormalFormCurveT<S> nf;
    nf.K = spec.ladder();
    for (int p = 0; p < 7; ++p) {
        Vec7<S> v;
        for (int j = 0; j < 7; ++j)
            if (!ScalarField<S>::is_zero(x[p][j])) v += x[p][j] * u[j];
        nf.v[p] = v;
    }
    return nf;
}

// ---------------------------------------------------------------------------
// Normalizer

/// Positive real m-th root of q inside K, when q is a positive rational
/// perfect power (or m = 1).
inline std::optional<AlgScalar> exact_root(const AlgScalar& q, int m) {
    if (m == 1) return q;
    if (!q.is_rational() || sgn(q[0]) <= 0) return std::nullopt;
    mpz_class num = q[0].get_num();
    mpz_class den = q[0].get_den();
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(m)) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(m)) == 0) return std::nullopt;
    return AlgScalar(Rational(rn, rd));
}

template <class S>
S power(const S& x, int n) {
    S r = ScalarField<S>::from_int(1);
    for (int k = 0; k < n; ++k) r = r * x;
    return r;
}

/// Diagonal entries of A in the u-basis, given the root r of r^{2k1+k2} r1 r8 = √90.
template <class S>
std::array<S, 7> normalizer_diagonal(const SingularityTypeSpec& spec, const S& r1, const S& r8, const S& r) {
    const auto K = spec.ladder();
    auto inv = [](const S& x) { return ScalarField<S>::from_int(1) / x; };
    const S sq = ScalarField<S>::sqrt(90);
    return {
        ScalarField<S>::from_int(90) * inv(r1 * r1 * r8 * r8),
        ScalarField<S>::from_int(15) * ScalarField<S>::sqrt(6) * inv(power(r, K[1]) * r1 * r1 * r8),
        ScalarField<S>::from_int(6) * ScalarField<S>::sqrt(15) * inv(power(r, K[2]) * r1 * r8 * r8),
        sq * inv(power(r, K[3]) * r1 * r8),
        ScalarField<S>::sqrt(15) * inv(power(r, K[4]) * r1),
        ScalarField<S>::sqrt(6) * inv(power(r, K[5]) * r8),
        inv(power(r, K[6])),
    };
}

template <class S>
Mat7<S> u_diagonal_matrix(const std::array<S, 7>& d) {
    Mat7<AlgScalar> u = u_matrix();
    Mat7<S> U;
    if constexpr (std::is_same_v<S, AlgScalar>)
        U = u;
    else
        U = to_float(u);
    Mat7<S> diag;
    for (int p = 0; p < 7; ++p) diag(p, p) = d[p];
    return U * diag * U.conjugate_transpose();
}

struct Normalizer {
    bool exact = false;
    std::optional<Mat7<AlgScalar>> matrix;  // set when the root lies in K
    Mat7<Complex> numeric;
    std::optional<AlgScalar> root;
    Complex root_float;
    std::string warning;
};

/// A with A u_p = d_p u_p. Exact when r lies in K, float otherwise (with a warning).
inline Normalizer normalizer(const SingularityTypeSpec& spec, const AlgScalar& r1, const AlgScalar& r8) {
    if (r1.is_zero() || r8.is_zero()) throw PreconditionError("normalizer: r1 and r8 must be nonzero");
    const int m = 2 * spec.k1 + spec.k2;
    const AlgScalar target = AlgScalar::sqrt(90) / (r1 * r8);
    Normalizer n;
    if (auto r = exact_root(target, m)) {
        n.exact = true;
        n.root = *r;
        n.root_float = r->to_complex();
        n.matrix = u_diagonal_matrix(normalizer_diagonal(spec, r1, r8, *r));
        n.numeric = to_float(*n.matrix);
        return n;
    }
    n.warning = "root of r^" + std::to_string(m) + " r1 r8 = sqrt(90) is not in Q(i,√2,√3,√5); using float";
    n.root_float = std::pow(target.to_complex(), 1.0 / m);
    n.numeric = u_diagonal_matrix(normalizer_diagonal(spec, r1.to_complex(), r8.to_complex(), n.root_float));
    return n;
}

/// Copy of the curve with delta added to the coefficient of z^exponent in one component.
inline CurveC7 perturbed(const CurveC7& c, int component, int exponent, const AlgScalar& delta) {
    CurveC7 out = c;
    out.f[component].add_term(exponent, delta);
    return out;
}

}  // namespace supermin
