#pragma once

#include <optional>

#include "supermin/bipoly.hpp"

namespace supermin {

/// Quotient of two BiPolys. The only reduction applied automatically is
/// removal of the common monomial factor z^a z̄^b and scaling the denominator
/// to a monic lex-leading coefficient; equality is tested by cross
/// multiplication, never by division.
class RationalFn {
public:
    RationalFn() : den_(AlgScalar(1)) {}
    RationalFn(const BiPoly& num) : num_(num), den_(AlgScalar(1)) {}  // NOLINT(google-explicit-constructor)
    RationalFn(const AlgScalar& c) : num_(c), den_(AlgScalar(1)) {}   // NOLINT(google-explicit-constructor)
    RationalFn(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero();
        normalize();
    }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
        if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFn operator-(const RationalFn& a) { return {-a.num_, a.den_}; }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFn operator*(const AlgScalar& s, const RationalFn& a) { return {s * a.num_, a.den_}; }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.is_zero()) throw DivisionByZero();
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    RationalFn dz() const { return {num_.dz() * den_ - num_ * den_.dz(), den_ * den_}; }
    RationalFn dzbar() const { return {num_.dzbar() * den_ - num_ * den_.dzbar(), den_ * den_}; }
    RationalFn conj() const { return {num_.conj(), den_.conj()}; }

    /// ∂_z log(f) = (∂_z f) / f.
    RationalFn log_dz() const {
        if (is_zero()) throw DivisionByZero();
        return {num_.dz() * den_ - num_ * den_.dz(), num_ * den_};
    }

    Complex evaluate(Complex z) const { return num_.evaluate(z) / den_.evaluate(z); }

    /// The constant c with num = c·den, if the function is constant.
    std::optional<AlgScalar> constant_value() const {
        if (num_.is_zero()) return AlgScalar{};
        const auto& [ne, nc] = num_.leading_term();
        const auto& [de, dc] = den_.leading_term();
        if (ne != de) return std::nullopt;
        const AlgScalar c = nc / dc;
        if (num_ == c * den_) return c;
        return std::nullopt;
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = BiPoly(AlgScalar(1));
            return;
        }
        const auto [na, nb] = num_.monomial_content();
        const auto [da, db] = den_.monomial_content();
        const int sa = std::min(na, da);
        const int sb = std::min(nb, db);
        if (sa > 0 || sb > 0) {
            num_ = num_.shifted(-sa, -sb);
            den_ = den_.shifted(-sa, -sb);
        }
        const AlgScalar& lead = den_.leading_term().second;
        if (lead != AlgScalar(1)) {
            const AlgScalar inv = lead.inverse();
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    BiPoly num_;
    BiPoly den_;
};

inline RationalFn conj(const RationalFn& f) { return f.conj(); }
inline BiPoly conj(const BiPoly& p) { return p.conj(); }

}  // namespace supermin
