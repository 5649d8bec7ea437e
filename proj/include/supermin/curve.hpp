#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "supermin/linalg.hpp"
#include "supermin/vec7.hpp"

namespace supermin {

/// Holomorphic polynomial curve z ↦ f(z) in C⁷, components in the e-basis.
template <class S>
struct CurveT {
    Vec7<PolyT<S>> f;
    std::string basis = "e";

    int degree() const {
        int d = -1;
        for (int k = 0; k < 7; ++k) d = std::max(d, f[k].degree());
        return d;
    }

    int ord0() const {
        int o = -1;
        for (int k = 0; k < 7; ++k) {
            const int ok = f[k].ord0();
            if (ok >= 0 && (o < 0 || ok < o)) o = ok;
        }
        return o;
    }

    bool is_zero() const { return degree() < 0; }

    CurveT derivative(int order = 1) const {
        CurveT d;
        for (int k = 0; k < 7; ++k) d.f[k] = f[k].derivative(order);
        return d;
    }

    /// w^d f(1/w) with d the degree: the curve near z = ∞.
    CurveT reversed() const {
        const int d = degree();
        CurveT r;
        for (int k = 0; k < 7; ++k) r.f[k] = f[k].reversed(d);
        return r;
    }

    /// z ↦ f(r z).
    CurveT rescaled(const S& r) const {
        CurveT c;
        for (int k = 0; k < 7; ++k) c.f[k] = f[k].rescaled(r);
        return c;
    }

    CurveT scaled(const S& s) const {
        CurveT c;
        for (int k = 0; k < 7; ++k) c.f[k] = s * f[k];
        return c;
    }

    Vec7<Complex> evaluate(Complex z) const {
        Vec7<Complex> v;
        for (int k = 0; k < 7; ++k) v[k] = f[k].evaluate(z);
        return v;
    }

    /// Coefficient vector of z^e.
    Vec7<S> coefficient(int e) const {
        Vec7<S> v;
        for (int k = 0; k < 7; ++k) v[k] = f[k].coeff(e);
        return v;
    }

    /// Exponents carrying a nonzero coefficient in some component, ascending.
    std::vector<int> exponents() const {
        std::vector<int> es;
        for (int k = 0; k < 7; ++k)
            for (const auto& [e, c] : f[k].terms()) es.push_back(e);
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        return es;
    }

    /// Rank of the coefficient vectors; 7 means linearly full.
    int coefficient_rank() const {
        Matrix<S> rows;
        for (int e : exponents()) {
            const auto v = coefficient(e);
            rows.emplace_back(v.c.begin(), v.c.end());
        }
        return rank(rows);
    }

    friend bool operator==(const CurveT& a, const CurveT& b) { return a.f == b.f; }
    friend bool operator!=(const CurveT& a, const CurveT& b) { return !(a == b); }
};

using CurveC7 = CurveT<AlgScalar>;
using CurveF = CurveT<Complex>;

inline CurveF to_float(const CurveC7& c) {
    CurveF r;
    for (int k = 0; k < 7; ++k) r.f[k] = to_float(c.f[k]);
    r.basis = c.basis;
    return r;
}

/// Σ z^{K_p} v_p.
template <class S>
CurveT<S> curve_from_ladder(const std::array<Vec7<S>, 7>& v, const std::array<int, 7>& exponents) {
    CurveT<S> c;
    for (int p = 0; p < 7; ++p)
        for (int k = 0; k < 7; ++k) c.f[k].add_term(exponents[p], v[p][k]);
    return c;
}

/// Apply a constant matrix to a curve.
template <class S>
CurveT<S> transform(const Mat7<S>& m, const CurveT<S>& c) {
    CurveT<S> r;
    r.f = m.apply(c.f);
    r.basis = c.basis;
    return r;
}

}  // namespace supermin
