#pragma once

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "supermin/error.hpp"

namespace supermin {

using Rational = mpq_class;
using Complex = std::complex<double>;

namespace detail {

// Real radical basis, in serialization order: 1, √2, √3, √5, √6, √10, √15, √30.
inline constexpr std::array<int, 8> kRadicand{1, 2, 3, 5, 6, 10, 15, 30};
// Bitmask over the primes (2, 3, 5) for each slot, and its inverse.
inline constexpr std::array<int, 8> kMask{0, 1, 2, 4, 3, 5, 6, 7};
inline constexpr std::array<int, 8> kSlotOfMask{0, 1, 2, 4, 3, 5, 6, 7};

struct BasisProduct {
    int index;
    long factor;  // signed rational factor, always an integer here
};

// Product of basis elements a, b in 0..15 (index = slot + 8 * imaginary).
constexpr BasisProduct basis_product(int a, int b) {
    const int ma = kMask[a % 8];
    const int mb = kMask[b % 8];
    const int common = ma & mb;
    long f = 1;
    if (common & 1) f *= 2;
    if (common & 2) f *= 3;
    if (common & 4) f *= 5;
    const int imag = a / 8 + b / 8;
    if (imag == 2) f = -f;
    return {kSlotOfMask[ma ^ mb] + 8 * (imag % 2), f};
}

constexpr std::array<std::array<BasisProduct, 16>, 16> make_product_table() {
    std::array<std::array<BasisProduct, 16>, 16> t{};
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) t[a][b] = basis_product(a, b);
    return t;
}

inline constexpr auto kProductTable = make_product_table();

}  // namespace detail

/// Element of the field K = Q(i, √2, √3, √5), stored as 16 rational
/// coordinates over {1,√2,√3,√5,√6,√10,√15,√30} ⊗ {1, i}: index j < 8 is the
/// real radical j, index 8 + j is i times radical j.
class AlgScalar {
public:
    static constexpr int kDim = 16;

    AlgScalar() = default;
    AlgScalar(long v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
    AlgScalar(const Rational& q) {
        c_[0] = q;
        c_[0].canonicalize();
    }  // NOLINT(google-explicit-constructor)

    static AlgScalar i() {
        AlgScalar r;
        r.c_[8] = 1;
        return r;
    }

    static AlgScalar rational(long num, long den) {
        if (den == 0) throw PreconditionError("AlgScalar::rational: zero denominator");
        Rational q;
        mpq_set_num(q.get_mpq_t(), mpz_class(den < 0 ? -num : num).get_mpz_t());
        mpq_set_den(q.get_mpq_t(), mpz_class(den < 0 ? -den : den).get_mpz_t());
        return AlgScalar(q);  // canonicalized there
    }

    static AlgScalar basis(int index) {
        AlgScalar r;
        r.c_.at(static_cast<std::size_t>(index)) = 1;
        return r;
    }

    /// √n for a positive integer n whose square-free part divides 30.
    static AlgScalar sqrt(long n) {
        if (n < 0) return i() * sqrt(-n);
        if (n == 0) return {};
        for (int slot = 0; slot < 8; ++slot) {
            const long m = detail::kRadicand[slot];
            if (n % m != 0) continue;
            mpz_class q = n / m;
            if (mpz_perfect_square_p(q.get_mpz_t()) == 0) continue;
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
            AlgScalar r;
            r.c_[slot] = Rational(root);
            return r;
        }
        throw PreconditionError("sqrt(" + std::to_string(n) + ") is not in Q(i,√2,√3,√5)");
    }

    const Rational& operator[](int index) const { return c_[static_cast<std::size_t>(index)]; }
    Rational& operator[](int index) { return c_[static_cast<std::size_t>(index)]; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (sgn(q) != 0) return false;
        return true;
    }

    bool is_real() const {
        for (int k = 8; k < 16; ++k)
            if (sgn(c_[k]) != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (int k = 1; k < 16; ++k)
            if (sgn(c_[k]) != 0) return false;
        return true;
    }

    int nonzero_count() const {
        int n = 0;
        for (const auto& q : c_) n += sgn(q) != 0 ? 1 : 0;
        return n;
    }

    AlgScalar& operator+=(const AlgScalar& o) {
        for (int k = 0; k < 16; ++k)
            if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
        return *this;
    }
    AlgScalar& operator-=(const AlgScalar& o) {
        for (int k = 0; k < 16; ++k)
            if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
        return *this;
    }
    AlgScalar& operator*=(const AlgScalar& o) { return *this = *this * o; }
    AlgScalar& operator/=(const AlgScalar& o) { return *this = *this / o; }

    friend AlgScalar operator+(AlgScalar a, const AlgScalar& b) { return a += b; }
    friend AlgScalar operator-(AlgScalar a, const AlgScalar& b) { return a -= b; }
    friend AlgScalar operator-(AlgScalar a) {
        for (auto& q : a.c_) q = -q;
        return a;
    }

    friend AlgScalar operator*(const AlgScalar& a, const AlgScalar& b) {
        AlgScalar r;
        Rational t;
        for (int x = 0; x < 16; ++x) {
            if (sgn(a.c_[x]) == 0) continue;
            for (int y = 0; y < 16; ++y) {
                if (sgn(b.c_[y]) == 0) continue;
                const auto& p = detail::kProductTable[x][y];
                t = a.c_[x] * b.c_[y];
                if (p.factor != 1) t *= p.factor;
                r.c_[p.index] += t;
            }
        }
        return r;
    }

    friend AlgScalar operator/(const AlgScalar& a, const AlgScalar& b) { return a * b.inverse(); }

    friend bool operator==(const AlgScalar& a, const AlgScalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const AlgScalar& a, const AlgScalar& b) { return !(a == b); }

    /// Image under the Galois automorphism negating generator g:
    /// g = 0 for i, g = 1, 2, 3 for √2, √3, √5.
    AlgScalar galois(int g) const {
        AlgScalar r = *this;
        for (int k = 0; k < 16; ++k) {
            const bool flip = g == 0 ? k >= 8 : ((detail::kMask[k % 8] >> (g - 1)) & 1) != 0;
            if (flip) r.c_[k] = -r.c_[k];
        }
        return r;
    }

    AlgScalar conj() const { return galois(0); }

    AlgScalar inverse() const {
        // Multiplying by the conjugate over each generator in turn leaves an
        // element fixed by the whole Galois group, i.e. a rational.
        AlgScalar acc(1);
        AlgScalar y = *this;
        for (int g = 0; g < 4; ++g) {
            const AlgScalar c = y.galois(g);
            acc *= c;
            y *= c;
        }
        if (sgn(y.c_[0]) == 0) throw DivisionByZero();
        const Rational inv = 1 / y.c_[0];
        for (auto& q : acc.c_) q *= inv;
        return acc;
    }

    Complex to_complex() const {
        static const std::array<double, 8> root = [] {
            std::array<double, 8> r{};
            for (int k = 0; k < 8; ++k) r[k] = std::sqrt(static_cast<double>(detail::kRadicand[k]));
            return r;
        }();
        double re = 0.0;
        double im = 0.0;
        for (int k = 0; k < 8; ++k) {
            if (sgn(c_[k]) != 0) re += c_[k].get_d() * root[k];
            if (sgn(c_[k + 8]) != 0) im += c_[k + 8].get_d() * root[k];
        }
        return {re, im};
    }

    /// The 16 coordinates as "p/q" strings, in basis order.
    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        out.reserve(16);
        for (const auto& q : c_) out.push_back(q.get_num().get_str() + "/" + q.get_den().get_str());
        return out;
    }

    static AlgScalar from_strings(const std::vector<std::string>& s) {
        if (s.size() != 16) throw ParseError("AlgScalar needs 16 coordinates, got " + std::to_string(s.size()));
        AlgScalar r;
        for (int k = 0; k < 16; ++k) {
            try {
                r.c_[k] = Rational(s[k]);
            } catch (const std::invalid_argument&) {
                throw ParseError("bad rational '" + s[k] + "'");
            }
            if (r.c_[k].get_den() == 0) throw ParseError("zero denominator in '" + s[k] + "'");
            r.c_[k].canonicalize();
        }
        return r;
    }

    /// Human-readable form, e.g. "3*√5 + i*1/2*√2".
    std::string pretty() const {
        static const std::array<const char*, 8> name{"", "√2", "√3", "√5", "√6", "√10", "√15", "√30"};
        std::string out;
        for (int k = 0; k < 16; ++k) {
            if (sgn(c_[k]) == 0) continue;
            if (!out.empty()) out += " + ";
            if (k >= 8) out += "i*";
            out += c_[k].get_str();
            if (k % 8 != 0) out += std::string("*") + name[k % 8];
        }
        return out.empty() ? "0" : out;
    }

private:
    std::array<Rational, 16> c_{};
};

inline AlgScalar conj(const AlgScalar& x) { return x.conj(); }
inline Complex to_complex(const AlgScalar& x) { return x.to_complex(); }
inline Complex to_complex(const Complex& x) { return x; }

/// Uniform access to the two scalar fields used throughout: exact AlgScalar
/// and double-precision complex numbers.
template <class S>
struct ScalarField;

template <>
struct ScalarField<AlgScalar> {
    static constexpr bool exact = true;
    static AlgScalar from_int(long v) { return AlgScalar(v); }
    static AlgScalar from_rational(long n, long d) { return AlgScalar::rational(n, d); }
    static AlgScalar sqrt(long n) { return AlgScalar::sqrt(n); }
    static AlgScalar i() { return AlgScalar::i(); }
    static bool is_zero(const AlgScalar& x) { return x.is_zero(); }
    static AlgScalar conj(const AlgScalar& x) { return x.conj(); }
    static double magnitude(const AlgScalar& x) { return std::abs(x.to_complex()); }
};

template <>
struct ScalarField<Complex> {
    static constexpr bool exact = false;
    static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static Complex from_rational(long n, long d) { return {static_cast<double>(n) / static_cast<double>(d), 0.0}; }
    static Complex sqrt(long n) {
        return n >= 0 ? Complex(std::sqrt(static_cast<double>(n)), 0.0) : Complex(0.0, std::sqrt(static_cast<double>(-n)));
    }
    static Complex i() { return {0.0, 1.0}; }
    static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
    static Complex conj(const Complex& x) { return std::conj(x); }
    static double magnitude(const Complex& x) { return std::abs(x); }
};

}  // namespace supermin
