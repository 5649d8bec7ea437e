#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>

#include "supermin/harmonic_sequence.hpp"
#include "supermin/quadrature.hpp"
#include "supermin/wedge.hpp"

namespace supermin {

enum class CurvePoint { Zero, Infinity };

/// (r_1..r_6) at z = 0 or z = ∞ from the vanishing orders s_j of W_j:
/// r_{j+1} = s_{j+1} − 2 s_j + s_{j−1}, s_{−1} = 0.
inline std::array<int, 6> singularity_type(const CurveC7& c, CurvePoint at) {
    const auto w = wedge_curves(at == CurvePoint::Zero ? c : c.reversed());
    std::array<int, 7> s{};
    for (int j = 0; j < 7; ++j) s[j] = w[j].ord0();
    std::array<int, 6> r{};
    for (int j = 0; j < 6; ++j) r[j] = s[j + 1] - 2 * s[j] + (j > 0 ? s[j - 1] : 0);
    return r;
}

/// δ_p = deg σ_p = (max degree of W_p) − ord₀(W_p), p = 0..5. The stripped
/// components must be coprime: any other common zero is a finite singular
/// point away from 0.
inline std::array<int, 6> degrees_exact(const std::vector<MultiVec<AlgScalar>>& w) {
    std::array<int, 6> delta{};
    for (int p = 0; p < 6; ++p) {
        const int o = w[p].ord0();
        delta[p] = w[p].degree() - o;
        std::optional<Poly> g;
        for (int m : MultiVec<AlgScalar>::masks(w[p].grade)) {
            if (w[p].comp[m].is_zero()) continue;
            const Poly stripped = w[p].comp[m].divided_by_z(o);
            g = g ? gcd(*g, stripped) : stripped.monic();
            if (g->degree() == 0) break;
        }
        if (!g || g->degree() != 0)
            throw Error("unexpected interior singularity in osculating curve " + std::to_string(p));
    }
    return delta;
}

inline std::array<int, 6> degrees_exact(const CurveC7& c) { return degrees_exact(wedge_curves(c)); }

/// T_j = r_j(0) + r_j(∞).
inline std::array<int, 6> totals(const std::array<int, 6>& t0, const std::array<int, 6>& tinf) {
    std::array<int, 6> t{};
    for (int j = 0; j < 6; ++j) t[j] = t0[j] + tinf[j];
    return t;
}

/// δ_p = (p+1)(6−p) + (6−p)/7 Σ_{k<p} (k+1) R_k + (p+1)/7 Σ_{k≥p} (6−k) R_k with R_k = T_{k+1}.
inline std::array<Rational, 6> degrees_formula(const std::array<int, 6>& T) {
    std::array<Rational, 6> delta;
    for (int p = 0; p < 6; ++p) {
        Rational low = 0;
        Rational high = 0;
        for (int k = 0; k < p; ++k) low += Rational((k + 1) * T[k]);
        for (int k = p; k < 6; ++k) high += Rational((6 - k) * T[k]);
        delta[p] = Rational((p + 1) * (6 - p)) + Rational(6 - p, 7) * low + Rational(p + 1, 7) * high;
        delta[p].canonicalize();
    }
    return delta;
}

/// −2 − δ_{p−2} + 2δ_{p−1} − δ_p for p = 1..6, with δ_{−1} = δ_6 = 0.
inline std::array<int, 6> plucker_rhs(const std::array<int, 6>& delta) {
    auto d = [&](int p) { return p < 0 || p > 5 ? 0 : delta[p]; };
    std::array<int, 6> out{};
    for (int p = 1; p <= 6; ++p) out[p - 1] = -2 - d(p - 2) + 2 * d(p - 1) - d(p);
    return out;
}

/// T1 = T6, T2 = T5, T3 = T4 and T3 = T1: the pattern (a, b, a, a, b, a).
inline bool symmetry_check(const std::array<int, 6>& T) {
    return T[0] == T[5] && T[1] == T[4] && T[2] == T[3] && T[2] == T[0];
}

/// Area of the almost complex curve in units of π: δ_2 + δ_3, cross-checked
/// against 4(6 + 2T1 + T2).
inline int area_pi(const std::array<int, 6>& delta, const std::array<int, 6>& T) {
    const int from_degrees = delta[2] + delta[3];
    const int from_types = 4 * (6 + 2 * T[0] + T[1]);
    if (from_degrees != from_types)
        throw Error("area disagreement: pi(delta2+delta3) = " + std::to_string(from_degrees) + "pi but 4pi(6+2T1+T2) = " +
                    std::to_string(from_types) + "pi");
    return from_degrees;
}

/// Attainable d = A/4π over configurations of m ramified points (m ≠ 1, since a
/// harmonic 2-sphere is never 1-point ramified), each point of symmetric type
/// (a, b, a, a, b, a) ≠ 0 with a, b ≤ bound.
inline std::set<int> attainable_area_multiples(int max_points, int bound) {
    std::set<int> out{6};
    std::vector<std::pair<int, int>> types;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b)
            if (a != 0 || b != 0) types.emplace_back(a, b);
    // (T1, T2) sums reachable with exactly m points
    std::set<std::pair<int, int>> reach{{0, 0}};
    for (int m = 1; m <= max_points; ++m) {
        std::set<std::pair<int, int>> next;
        for (const auto& [t1, t2] : reach)
            for (const auto& [a, b] : types) next.emplace(t1 + a, t2 + b);
        reach = std::move(next);
        if (m == 1) continue;
        for (const auto& [t1, t2] : reach) out.insert(6 + 2 * t1 + t2);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Degrees by quadrature

/// (1/π) ∬ γ_p dx dy over the z-chart |z| ≤ 1 and the w = 1/z chart |w| ≤ 1.
inline QuadratureResult degrees_numeric(const HarmonicSequence& s, int p, const QuadratureParams& qp) {
    if (p < 0 || p > 5) throw PreconditionError("degrees_numeric: p must be in 0..5");
    const RationalFn g = s.gamma(p);
    const std::array<FloatDensity, 2> charts{FloatDensity(g), FloatDensity(chart_at_infinity(g))};
    // Target: a quarter of the tolerance per chart, relative to a rough size.
    std::array<QuadratureResult, 2> parts;
    auto rough = integrate_unit_disk([&](Complex z) { return charts[0](z); }, QuadratureParams{8, 1.0}, 1e300);
    auto rough_w = integrate_unit_disk([&](Complex z) { return charts[1](z); }, QuadratureParams{8, 1.0}, 1e300);
    const double scale = std::abs(rough.estimate) + std::abs(rough_w.estimate);
    const double target = 0.25 * qp.tol * scale;
    parallel_for(2, [&](std::size_t c) {
        parts[c] = integrate_unit_disk([&](Complex z) { return charts[c](z); }, qp, target);
    });
    QuadratureResult r;
    r.estimate = (parts[0].estimate + parts[1].estimate) / M_PI;
    r.error = (parts[0].error + parts[1].error) / M_PI;
    r.evaluations = parts[0].evaluations + parts[1].evaluations + rough.evaluations + rough_w.evaluations;
    if (!(r.error <= qp.tol * std::abs(r.estimate)))
        throw ConvergenceError("quadrature did not reach the requested tolerance", r.estimate, r.error);
    return r;
}

// ---------------------------------------------------------------------------
// Report

struct SingularityReport {
    std::array<int, 6> type0{};
    std::array<int, 6> type_inf{};
    std::array<int, 6> T{};
    std::array<int, 6> delta{};
    std::array<Rational, 6> delta_formula;
    std::array<int, 6> plucker{};  // right-hand sides, should equal T
    int area_pi = 0;
    bool formula_agrees = false;
    bool plucker_holds = false;
    bool symmetric = false;
    bool palindromic = false;
    std::optional<std::array<double, 6>> delta_numeric;
    bool numeric_agrees = true;
};

inline SingularityReport singularity_report(const CurveC7& c) {
    SingularityReport r;
    r.type0 = singularity_type(c, CurvePoint::Zero);
    r.type_inf = singularity_type(c, CurvePoint::Infinity);
    r.T = totals(r.type0, r.type_inf);
    r.delta = degrees_exact(c);
    r.delta_formula = degrees_formula(r.T);
    r.formula_agrees = true;
    for (int p = 0; p < 6; ++p) r.formula_agrees = r.formula_agrees && r.delta_formula[p] == Rational(r.delta[p]);
    r.plucker = plucker_rhs(r.delta);
    r.plucker_holds = r.plucker == r.T;
    r.symmetric = symmetry_check(r.T);
    r.palindromic = true;
    for (int p = 0; p < 6; ++p) r.palindromic = r.palindromic && r.delta[p] == r.delta[5 - p];
    r.area_pi = area_pi(r.delta, r.T);
    return r;
}

/// Adds quadrature estimates for every p; agreement means round(estimate) = δ_p
/// and |estimate − δ_p| ≤ tol·δ_p.
inline void attach_numeric_degrees(SingularityReport& r, const HarmonicSequence& s, const QuadratureParams& qp) {
    std::array<double, 6> est{};
    r.numeric_agrees = true;
    for (int p = 0; p < 6; ++p) {
        est[p] = degrees_numeric(s, p, qp).estimate;
        r.numeric_agrees = r.numeric_agrees && std::abs(est[p] - r.delta[p]) <= qp.tol * r.delta[p] &&
                           std::lround(est[p]) == r.delta[p];
    }
    r.delta_numeric = est;
}

}  // namespace supermin
