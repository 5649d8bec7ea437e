#pragma once

#include <map>
#include <utility>
#include <vector>

#include "supermin/poly.hpp"

namespace supermin {

/// Polynomial in the commuting variables z and z̄. Keys are (power of z,
/// power of z̄); zero coefficients are never stored.
template <class S>
class BiPolyT {
public:
    using Scalar = S;
    using Exponent = std::pair<int, int>;
    using Terms = std::map<Exponent, S>;

    BiPolyT() = default;
    BiPolyT(const S& c) { add_term(0, 0, c); }  // NOLINT(google-explicit-constructor)

    static BiPolyT monomial(const S& c, int a, int b) {
        BiPolyT p;
        p.add_term(a, b, c);
        return p;
    }

    static BiPolyT holomorphic(const PolyT<S>& p) {
        BiPolyT r;
        for (const auto& [e, c] : p.terms()) r.terms_.emplace(Exponent{e, 0}, c);
        return r;
    }

    /// The complex conjugate of a holomorphic polynomial.
    static BiPolyT antiholomorphic(const PolyT<S>& p) {
        BiPolyT r;
        for (const auto& [e, c] : p.terms()) r.terms_.emplace(Exponent{0, e}, ScalarField<S>::conj(c));
        return r;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(int a, int b, const S& c) {
        if (a < 0 || b < 0) throw PreconditionError("negative exponent in BiPoly");
        if (ScalarField<S>::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(Exponent{a, b}, c);
        if (!inserted) {
            it->second += c;
            if (ScalarField<S>::is_zero(it->second)) terms_.erase(it);
        }
    }

    BiPolyT& operator+=(const BiPolyT& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    BiPolyT& operator-=(const BiPolyT& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    friend BiPolyT operator+(BiPolyT a, const BiPolyT& b) { return a += b; }
    friend BiPolyT operator-(BiPolyT a, const BiPolyT& b) { return a -= b; }
    friend BiPolyT operator-(const BiPolyT& a) {
        BiPolyT r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend BiPolyT operator*(const BiPolyT& a, const BiPolyT& b) {
        BiPolyT r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    friend BiPolyT operator*(const S& s, const BiPolyT& p) {
        BiPolyT r;
        if (ScalarField<S>::is_zero(s)) return r;
        for (const auto& [e, c] : p.terms_) r.add_term(e.first, e.second, s * c);
        return r;
    }
    BiPolyT& operator*=(const BiPolyT& o) { return *this = *this * o; }

    friend bool operator==(const BiPolyT& a, const BiPolyT& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPolyT& a, const BiPolyT& b) { return !(a == b); }

    /// ∂/∂z.
    BiPolyT dz() const {
        BiPolyT r;
        for (const auto& [e, c] : terms_)
            if (e.first > 0) r.add_term(e.first - 1, e.second, ScalarField<S>::from_int(e.first) * c);
        return r;
    }

    /// ∂/∂z̄.
    BiPolyT dzbar() const {
        BiPolyT r;
        for (const auto& [e, c] : terms_)
            if (e.second > 0) r.add_term(e.first, e.second - 1, ScalarField<S>::from_int(e.second) * c);
        return r;
    }

    /// Complex conjugate as a function: swaps exponents, conjugates coefficients.
    BiPolyT conj() const {
        BiPolyT r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.second, e.first}, ScalarField<S>::conj(c));
        return r;
    }

    Complex evaluate(Complex z) const {
        if (terms_.empty()) return {0.0, 0.0};
        const auto [da, db] = max_degrees();
        std::vector<Complex> pz(static_cast<std::size_t>(da) + 1), pzb(static_cast<std::size_t>(db) + 1);
        pz[0] = pzb[0] = 1.0;
        for (int k = 1; k <= da; ++k) pz[k] = pz[k - 1] * z;
        for (int k = 1; k <= db; ++k) pzb[k] = pzb[k - 1] * std::conj(z);
        Complex acc{0.0, 0.0};
        for (const auto& [e, c] : terms_) acc += to_complex(c) * pz[e.first] * pzb[e.second];
        return acc;
    }

    /// (max power of z, max power of z̄) over the terms.
    Exponent max_degrees() const {
        Exponent m{-1, -1};
        for (const auto& [e, c] : terms_) {
            m.first = std::max(m.first, e.first);
            m.second = std::max(m.second, e.second);
        }
        return m;
    }

    /// Largest monomial z^a z̄^b dividing every term.
    Exponent monomial_content() const {
        if (terms_.empty()) return {0, 0};
        Exponent m{terms_.begin()->first.first, terms_.begin()->first.second};
        for (const auto& [e, c] : terms_) {
            m.first = std::min(m.first, e.first);
            m.second = std::min(m.second, e.second);
        }
        return m;
    }

    BiPolyT shifted(int da, int db) const {
        BiPolyT r;
        for (const auto& [e, c] : terms_) {
            if (e.first + da < 0 || e.second + db < 0) throw PreconditionError("BiPoly shift below zero exponent");
            r.terms_.emplace(Exponent{e.first + da, e.second + db}, c);
        }
        return r;
    }

    /// z^m z̄^n P(1/z, 1/z̄).
    BiPolyT reversed(int m, int n) const {
        BiPolyT r;
        for (const auto& [e, c] : terms_) {
            if (e.first > m || e.second > n) throw PreconditionError("BiPoly reversal below degree");
            r.terms_.emplace(Exponent{m - e.first, n - e.second}, c);
        }
        return r;
    }

    const std::pair<const Exponent, S>& leading_term() const { return *terms_.rbegin(); }

    /// Exact quotient by d in lex order (z before z̄); throws if d does not divide.
    BiPolyT exact_divide(const BiPolyT& d) const {
        if (d.is_zero()) throw DivisionByZero();
        BiPolyT q;
        BiPolyT r = *this;
        const auto& [dexp, dcoef] = d.leading_term();
        const S inv = ScalarField<S>::from_int(1) / dcoef;
        while (!r.is_zero()) {
            const auto [rexp, rcoef] = r.leading_term();
            const int a = rexp.first - dexp.first;
            const int b = rexp.second - dexp.second;
            if (a < 0 || b < 0) throw Error("BiPoly exact division: divisor does not divide");
            const S factor = rcoef * inv;
            q.add_term(a, b, factor);
            for (const auto& [e, c] : d.terms_) r.add_term(e.first + a, e.second + b, -(factor * c));
        }
        return q;
    }

private:
    Terms terms_;
};

using BiPoly = BiPolyT<AlgScalar>;

}  // namespace supermin
