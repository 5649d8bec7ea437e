#pragma once

#include <map>
#include <utility>

#include "supermin/alg_scalar.hpp"

namespace supermin {

/// Polynomial in the holomorphic variable z. Sparse: exponent -> coefficient,
/// never storing a zero coefficient.
template <class S>
class PolyT {
public:
    using Scalar = S;
    using Terms = std::map<int, S>;

    PolyT() = default;
    PolyT(const S& c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)

    static PolyT monomial(const S& c, int exponent) {
        PolyT p;
        p.add_term(exponent, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Largest stored exponent; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    /// Order of vanishing at z = 0; -1 for the zero polynomial.
    int ord0() const { return terms_.empty() ? -1 : terms_.begin()->first; }

    S coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? S{} : it->second;
    }

    void add_term(int exponent, const S& c) {
        if (exponent < 0) throw PreconditionError("negative exponent in polynomial");
        if (ScalarField<S>::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (ScalarField<S>::is_zero(it->second)) terms_.erase(it);
        }
    }

    PolyT& operator+=(const PolyT& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    PolyT& operator-=(const PolyT& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
    friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
    friend PolyT operator-(const PolyT& a) {
        PolyT r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        PolyT r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend PolyT operator*(const S& s, const PolyT& p) {
        PolyT r;
        if (ScalarField<S>::is_zero(s)) return r;
        for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
        return r;
    }
    PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

    friend bool operator==(const PolyT& a, const PolyT& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

    /// d/dz.
    PolyT derivative() const {
        PolyT r;
        for (const auto& [e, c] : terms_)
            if (e > 0) r.add_term(e - 1, ScalarField<S>::from_int(e) * c);
        return r;
    }

    PolyT derivative(int order) const {
        PolyT r = *this;
        for (int k = 0; k < order; ++k) r = r.derivative();
        return r;
    }

    Complex evaluate(Complex z) const {
        // Horner over the dense exponent range.
        Complex acc{0.0, 0.0};
        int e = degree();
        auto it = terms_.rbegin();
        for (; e >= 0; --e) {
            acc *= z;
            if (it != terms_.rend() && it->first == e) {
                acc += to_complex(it->second);
                ++it;
            }
        }
        return acc;
    }

    S evaluate_exact(const S& z) const {
        S acc{};
        int e = degree();
        auto it = terms_.rbegin();
        for (; e >= 0; --e) {
            acc = acc * z;
            if (it != terms_.rend() && it->first == e) {
                acc += it->second;
                ++it;
            }
        }
        return acc;
    }

    /// z^d p(1/z); requires d >= degree().
    PolyT reversed(int d) const {
        if (d < degree()) throw PreconditionError("reversal degree below polynomial degree");
        PolyT r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(d - e, c);
        return r;
    }

    /// p(r z).
    PolyT rescaled(const S& r) const {
        PolyT out;
        S power = ScalarField<S>::from_int(1);
        int last = 0;
        for (const auto& [e, c] : terms_) {
            for (; last < e; ++last) power = power * r;
            out.add_term(e, c * power);
        }
        return out;
    }

    /// p / z^k; requires ord0() >= k.
    PolyT divided_by_z(int k) const {
        PolyT r;
        for (const auto& [e, c] : terms_) {
            if (e < k) throw PreconditionError("polynomial not divisible by z^" + std::to_string(k));
            r.terms_.emplace(e - k, c);
        }
        return r;
    }

    const S& leading() const { return terms_.rbegin()->second; }

    /// Euclidean division over the coefficient field.
    std::pair<PolyT, PolyT> divmod(const PolyT& d) const {
        if (d.is_zero()) throw DivisionByZero();
        PolyT q;
        PolyT r = *this;
        const int dd = d.degree();
        const S inv_lead = ScalarField<S>::from_int(1) / d.leading();
        while (!r.is_zero() && r.degree() >= dd) {
            const int shift = r.degree() - dd;
            const S factor = r.leading() * inv_lead;
            q.add_term(shift, factor);
            PolyT sub;
            for (const auto& [e, c] : d.terms_) sub.add_term(e + shift, factor * c);
            const int before = r.degree();
            r -= sub;
            // guard against float residue in the leading slot
            if (!r.is_zero() && r.degree() == before) r.terms_.erase(before);
        }
        return {q, r};
    }

    PolyT monic() const {
        if (is_zero()) return *this;
        return (ScalarField<S>::from_int(1) / leading()) * *this;
    }

private:
    Terms terms_;
};

using Poly = PolyT<AlgScalar>;
using CPoly = PolyT<Complex>;

/// Monic gcd via the Euclidean algorithm (exact fields).
template <class S>
PolyT<S> gcd(PolyT<S> a, PolyT<S> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline CPoly to_float(const Poly& p) {
    CPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, c.to_complex());
    return r;
}

}  // namespace supermin
