#pragma once

#include <array>
#include <bit>
#include <vector>

#include "supermin/curve.hpp"

namespace supermin {

/// Decomposable multivector over C⁷ with polynomial coefficients. Components
/// are indexed by 7-bit masks of the basis vectors involved; only masks with
/// popcount == grade are meaningful.
template <class S>
struct MultiVec {
    int grade = 0;
    std::array<PolyT<S>, 128> comp{};

    static std::vector<int> masks(int grade) {
        std::vector<int> out;
        for (int m = 0; m < 128; ++m)
            if (std::popcount(static_cast<unsigned>(m)) == grade) out.push_back(m);
        return out;
    }

    int ord0() const {
        int o = -1;
        for (int m : masks(grade)) {
            const int om = comp[m].ord0();
            if (om >= 0 && (o < 0 || om < o)) o = om;
        }
        return o;
    }

    int degree() const {
        int d = -1;
        for (int m : masks(grade)) d = std::max(d, comp[m].degree());
        return d;
    }

    bool is_zero() const { return degree() < 0; }

    /// Σ_S |W_S|² as a polynomial in z, z̄.
    BiPolyT<S> norm2() const {
        BiPolyT<S> s;
        for (int m : masks(grade)) {
            if (comp[m].is_zero()) continue;
            s += BiPolyT<S>::holomorphic(comp[m]) * BiPolyT<S>::antiholomorphic(comp[m]);
        }
        return s;
    }
};

/// W ∧ v, with v appended as the last factor.
template <class S>
MultiVec<S> wedge(const MultiVec<S>& w, const Vec7<PolyT<S>>& v) {
    MultiVec<S> out;
    out.grade = w.grade + 1;
    for (int m : MultiVec<S>::masks(out.grade)) {
        PolyT<S> acc;
        int t = 0;
        for (int b = 0; b < 7; ++b) {
            if (!(m & (1 << b))) continue;
            const int rest = m & ~(1 << b);
            if (!w.comp[rest].is_zero() && !v[b].is_zero()) {
                const PolyT<S> term = w.comp[rest] * v[b];
                if ((out.grade - 1 - t) % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++t;
        }
        out.comp[m] = std::move(acc);
    }
    return out;
}

/// W_j = f ∧ f′ ∧ … ∧ f^{(j)} for j = 0..6; throws if the curve is not linearly full.
template <class S>
std::vector<MultiVec<S>> wedge_curves(const CurveT<S>& c) {
    std::vector<MultiVec<S>> out;
    MultiVec<S> w;
    w.grade = 0;
    w.comp[0] = PolyT<S>(ScalarField<S>::from_int(1));
    for (int j = 0; j < 7; ++j) {
        w = wedge(w, c.derivative(j).f);
        if (w.is_zero())
            throw PreconditionError("curve is not linearly full: f ∧ … ∧ f^(" + std::to_string(j) + ") vanishes");
        out.push_back(w);
    }
    return out;
}

}  // namespace supermin
