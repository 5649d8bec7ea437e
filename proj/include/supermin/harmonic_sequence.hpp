#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "supermin/parallel.hpp"
#include "supermin/twistor.hpp"
#include "supermin/wedge.hpp"

namespace supermin {

/// Harmonic sequence of a polynomial directrix in the holomorphic-start gauge:
/// f_p = N_p / D_{p-1}, with D_p = |W_p|² (D_{-1} = 1) and N_p polynomial in z, z̄.
/// Then a_p = |f_p|² = D_p / D_{p-1}.
struct HarmonicSequence {
    CurveC7 f0;
    std::vector<MultiVec<AlgScalar>> wedges;  // W_0..W_6
    std::array<BiPoly, 7> D;
    std::array<Vec7<BiPoly>, 7> N;
    Vec7<BiPoly> next_numerator;  // numerator of f_7

    /// D_{p}, with D_{-1} = 1.
    BiPoly d(int p) const { return p < 0 ? BiPoly(AlgScalar(1)) : D[p]; }

    bool terminates() const { return is_zero_vec(next_numerator); }

    RationalFn a(int p) const { return {D[p], d(p - 1)}; }
    RationalFn alpha(int p) const { return a(p).log_dz(); }
    /// γ_p = a_{p+1} / a_p for p = 0..5.
    RationalFn gamma(int p) const { return {D[p + 1] * d(p - 1), D[p] * D[p]}; }

    Vec7<RationalFn> section(int p) const {
        Vec7<RationalFn> v;
        for (int k = 0; k < 7; ++k) v[k] = RationalFn(N[p][k], d(p - 1));
        return v;
    }
};

inline Vec7<BiPoly> dz(const Vec7<BiPoly>& v) {
    return v.map([](const BiPoly& x) { return x.dz(); });
}

/// Iterated projection of ∂_z f_p off f_p:
/// N_{p+1} = (D_p ∂N_p − ∂D_p N_p) / D_{p-1}, an exact polynomial quotient.
inline HarmonicSequence build_sequence(const CurveC7& f0) {
    HarmonicSequence s;
    s.f0 = f0;
    s.wedges = wedge_curves(f0);
    for (int p = 0; p < 7; ++p) s.D[p] = s.wedges[p].norm2();
    s.N[0] = to_bipoly(f0.f);
    for (int p = 0; p < 7; ++p) {
        const Vec7<BiPoly> dN = dz(s.N[p]);
        const BiPoly dD = s.D[p].dz();
        Vec7<BiPoly> next;
        for (int k = 0; k < 7; ++k) {
            BiPoly num = s.D[p] * dN[k] - dD * s.N[p][k];
            if (p < 6 && p > 0) num = num.exact_divide(s.D[p - 1]);
            next[k] = std::move(num);
        }
        if (p < 6)
            s.N[p + 1] = std::move(next);
        else
            s.next_numerator = std::move(next);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Exact identity checks

struct OrthogonalityReport {
    bool pass = true;
    std::vector<std::pair<int, int>> failing;
};

/// ⟨f_p, f_q⟩ ≡ 0 for p ≠ q, and ⟨N_p, N_p⟩ = D_p D_{p-1}.
inline OrthogonalityReport check_orthogonality(const HarmonicSequence& s) {
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < 7; ++p)
        for (int q = p; q < 7; ++q) pairs.emplace_back(p, q);
    std::vector<char> ok(pairs.size(), 0);
    parallel_for(pairs.size(), [&](std::size_t idx) {
        const auto [p, q] = pairs[idx];
        const BiPoly h = hermitian(s.N[p], s.N[q]);
        ok[idx] = p == q ? h == s.D[p] * s.d(p - 1) : h.is_zero();
    });
    OrthogonalityReport r;
    for (std::size_t idx = 0; idx < pairs.size(); ++idx)
        if (!ok[idx]) {
            r.pass = false;
            r.failing.push_back(pairs[idx]);
        }
    return r;
}

struct RealityReport {
    std::array<bool, 3> proportional{};  // k = 1, 2, 3
    bool pass() const { return proportional[0] && proportional[1] && proportional[2]; }
};

/// conj(f_{3+k}) ∧ f_{3-k} ≡ 0 for k = 1, 2, 3.
inline RealityReport check_reality(const HarmonicSequence& s) {
    RealityReport r;
    for (int k = 1; k <= 3; ++k) r.proportional[k - 1] = all_zero(wedge2(conj_vec(s.N[3 + k]), s.N[3 - k]));
    return r;
}

struct NormProductReport {
    std::array<std::optional<AlgScalar>, 3> balance;  // a_{3+k} a_{3-k} / a_3², expected 1
    std::optional<AlgScalar> su10;                    // a_4 a_5 / (a_3 a_6), expected 2
    bool pass() const {
        for (const auto& b : balance)
            if (!b || *b != AlgScalar(1)) return false;
        return su10 && *su10 == AlgScalar(2);
    }
};

inline std::optional<AlgScalar> constant_ratio(const BiPoly& num, const BiPoly& den) {
    return RationalFn(num, den).constant_value();
}

/// The ratios are invariant under a common rescaling of all f_p, so they can
/// be evaluated in the holomorphic-start gauge.
inline NormProductReport check_norm_products(const HarmonicSequence& s) {
    NormProductReport r;
    const BiPoly d2sq = s.D[2] * s.D[2];
    const BiPoly d3sq = s.D[3] * s.D[3];
    for (int k = 1; k <= 3; ++k)
        r.balance[k - 1] = constant_ratio(s.D[3 + k] * s.d(3 - k) * d2sq, s.D[2 + k] * s.d(2 - k) * d3sq);
    r.su10 = constant_ratio(s.D[5] * s.D[5] * s.D[2], d3sq * s.D[6]);
    return r;
}

/// One entry of the f_i × f_j table: zero, or coefficient · f_k.
struct TableFEntry {
    int re = 0;
    int im = 0;
    int k = -1;
    bool is_zero() const { return k < 0; }
    Complex coefficient() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

namespace detail {
constexpr TableFEntry Z{};
constexpr TableFEntry I(int k, int m = 1) { return {0, m, k}; }
}  // namespace detail

/// f_i × f_j in the unit gauge (|f_3| = 1, f_3 = π[f_0]).
inline constexpr std::array<std::array<TableFEntry, 7>, 7> kTableF{{
    {detail::Z, detail::Z, detail::Z, detail::I(0, -1), detail::I(1, -2), detail::I(2, -2), detail::I(3, -1)},
    {detail::Z, detail::Z, detail::I(0), detail::I(1), detail::Z, detail::I(3, -1), detail::I(4, -1)},
    {detail::Z, detail::I(0, -1), detail::Z, detail::I(2), detail::I(3), detail::Z, detail::I(5, -1)},
    {detail::I(0), detail::I(1, -1), detail::I(2, -1), detail::Z, detail::I(4), detail::I(5), detail::I(6, -1)},
    {detail::I(1, 2), detail::Z, detail::I(3, -1), detail::I(4, -1), detail::Z, detail::I(6, 2), detail::Z},
    {detail::I(2, 2), detail::I(3), detail::Z, detail::I(5, -1), detail::I(6, -2), detail::Z, detail::Z},
    {detail::I(3), detail::I(4), detail::I(5), detail::I(6), detail::Z, detail::Z, detail::Z},
}};

struct CrossTableReport {
    std::array<std::array<bool, 7>, 7> exact{};        // zero / proportionality identity
    std::array<std::array<double, 7>, 7> scalar_error{};  // unit-gauge float deviation
    double max_scalar_error = 0.0;
    bool exact_pass() const {
        for (const auto& row : exact)
            for (bool b : row)
                if (!b) return false;
        return true;
    }
    bool pass(double tol = 1e-8) const { return exact_pass() && max_scalar_error <= tol; }
};

// ---------------------------------------------------------------------------
// Numeric unit-gauge oracle

/// Sections at one point: Gram–Schmidt of f0, f0′, …, f0^(6), all scaled by
/// the single constant c with c·f_3 = π[f_0].
struct UnitGaugeFrame {
    std::array<Vec7<Complex>, 7> f;
    double next_norm = 0.0;  // |f_7| relative to |f_6|
    std::array<double, 7> a{};
};

template <class S>
UnitGaugeFrame unit_gauge_frame(const CurveT<S>& curve, Complex z0) {
    std::array<Vec7<Complex>, 8> g;
    for (int q = 0; q < 8; ++q) {
        Vec7<Complex> v;
        const auto dq = curve.derivative(q);
        for (int k = 0; k < 7; ++k) v[k] = dq.f[k].evaluate(z0);
        for (int r = 0; r < q; ++r) v = v - (hermitian(v, g[r]) / hermitian(g[r], g[r])) * g[r];
        g[q] = v;
    }
    UnitGaugeFrame out;
    const QuadricPoint<Complex> base(g[0], 1e-6);
    const auto pi = project(base);
    const Complex c = hermitian(pi, g[3]) / hermitian(g[3], g[3]);
    for (int p = 0; p < 7; ++p) {
        out.f[p] = c * g[p];
        out.a[p] = hermitian(out.f[p], out.f[p]).real();
    }
    out.next_norm = norm(g[7]) / norm(g[6]);
    return out;
}

struct OracleSample {
    Complex z;
    std::array<double, 3> balance{};
    double su10 = 0.0;
    double max_table_error = 0.0;
    std::array<std::array<double, 7>, 7> table_error{};
};

inline OracleSample oracle_at(const CurveC7& curve, Complex z0) {
    const auto fr = unit_gauge_frame(curve, z0);
    OracleSample s;
    s.z = z0;
    for (int k = 1; k <= 3; ++k) s.balance[k - 1] = fr.a[3 + k] * fr.a[3 - k] / (fr.a[3] * fr.a[3]);
    s.su10 = fr.a[4] * fr.a[5] / (fr.a[3] * fr.a[6]);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            const auto w = cross(fr.f[i], fr.f[j]);
            const auto& e = kTableF[i][j];
            const Vec7<Complex> expected = e.is_zero() ? Vec7<Complex>{} : e.coefficient() * fr.f[e.k];
            const double scale = std::sqrt(fr.a[i] * fr.a[j]);
            const double err = norm(w - expected) / scale;
            s.table_error[i][j] = err;
            s.max_table_error = std::max(s.max_table_error, err);
        }
    return s;
}

/// Deterministic sample points with every a_p (holomorphic gauge, float) above
/// threshold, so the sections are nondegenerate there.
inline std::vector<Complex> sample_points(const HarmonicSequence& s, int count, unsigned seed = 7) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.2, 1.8);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::vector<Complex> pts;
    while (static_cast<int>(pts.size()) < count) {
        const Complex z = std::polar(radius(rng), angle(rng));
        bool good = true;
        for (int p = 0; p < 7 && good; ++p) good = std::abs(s.D[p].evaluate(z)) >= 1e-8;
        if (good) pts.push_back(z);
    }
    return pts;
}

/// Zero entries: f_i × f_j ≡ 0. Nonzero entries: (f_i × f_j) ∧ f_k ≡ 0.
/// Scalars: unit-gauge float frame at the given points.
inline CrossTableReport check_cross_table(const HarmonicSequence& s, const std::vector<Complex>& points) {
    CrossTableReport r;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) pairs.emplace_back(i, j);
    std::vector<char> ok(pairs.size(), 0);
    parallel_for(pairs.size(), [&](std::size_t idx) {
        const auto [i, j] = pairs[idx];
        const auto w = cross(s.N[i], s.N[j]);
        const auto& e = kTableF[i][j];
        ok[idx] = e.is_zero() ? is_zero_vec(w) : all_zero(wedge2(w, s.N[e.k]));
    });
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto [i, j] = pairs[idx];
        // cross is antisymmetric by construction and so is the table
        const auto& e = kTableF[i][j];
        const auto& t = kTableF[j][i];
        const bool antisym = e.k == t.k && e.re == -t.re && e.im == -t.im;
        r.exact[i][j] = ok[idx];
        r.exact[j][i] = ok[idx] && antisym;
    }
    for (Complex z : points) {
        const auto o = oracle_at(s.f0, z);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) r.scalar_error[i][j] = std::max(r.scalar_error[i][j], o.table_error[i][j]);
        r.max_scalar_error = std::max(r.max_scalar_error, o.max_table_error);
    }
    return r;
}

/// ∂_z f_p = f_{p+1} + α_p f_p and ∂_z̄ f_{p+1} = −γ_p f_p as rational-function identities.
inline bool check_recursion(const HarmonicSequence& s, int p) {
    if (p < 0 || p > 5) throw PreconditionError("check_recursion: p must be in 0..5");
    const auto fp = s.section(p);
    const auto alpha = s.alpha(p);
    const auto gamma = s.gamma(p);
    const auto fq = s.section(p + 1);
    for (int k = 0; k < 7; ++k) {
        if (fp[k].dz() != fq[k] + alpha * fp[k]) return false;
        if (fq[k].dzbar() != -(gamma * fp[k])) return false;
    }
    return true;
}

}  // namespace supermin
