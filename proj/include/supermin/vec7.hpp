#pragma once

#include <array>
#include <complex>
#include <vector>

#include "supermin/rational_fn.hpp"

namespace supermin {

inline Complex conj_of(const Complex& x) { return std::conj(x); }
inline AlgScalar conj_of(const AlgScalar& x) { return x.conj(); }
inline BiPoly conj_of(const BiPoly& x) { return x.conj(); }
inline RationalFn conj_of(const RationalFn& x) { return x.conj(); }

/// A 7-component vector over a ring R (scalars, polynomials, rational
/// functions). Components are 0-based: component k is the coefficient of e_{k+1}.
template <class R>
struct Vec7 {
    std::array<R, 7> c{};

    R& operator[](int k) { return c[static_cast<std::size_t>(k)]; }
    const R& operator[](int k) const { return c[static_cast<std::size_t>(k)]; }

    static Vec7 unit(int k, const R& one) {
        Vec7 v;
        v[k] = one;
        return v;
    }

    Vec7& operator+=(const Vec7& o) {
        for (int k = 0; k < 7; ++k) c[k] += o.c[k];
        return *this;
    }
    Vec7& operator-=(const Vec7& o) {
        for (int k = 0; k < 7; ++k) c[k] -= o.c[k];
        return *this;
    }
    friend Vec7 operator+(Vec7 a, const Vec7& b) { return a += b; }
    friend Vec7 operator-(Vec7 a, const Vec7& b) { return a -= b; }
    friend Vec7 operator-(const Vec7& a) {
        Vec7 r;
        for (int k = 0; k < 7; ++k) r.c[k] = -a.c[k];
        return r;
    }
    template <class T>
    friend Vec7 operator*(const T& s, const Vec7& a) {
        Vec7 r;
        for (int k = 0; k < 7; ++k) r.c[k] = s * a.c[k];
        return r;
    }
    friend bool operator==(const Vec7& a, const Vec7& b) { return a.c == b.c; }
    friend bool operator!=(const Vec7& a, const Vec7& b) { return !(a == b); }

    template <class F>
    auto map(F&& f) const {
        Vec7<decltype(f(c[0]))> r;
        for (int k = 0; k < 7; ++k) r.c[k] = f(c[k]);
        return r;
    }
};

namespace detail {

struct CrossEntry {
    int sign;   // 0 when e_i × e_j = 0
    int index;  // 0-based target basis vector
};

// Oriented triples (a, b, c) with e_a × e_b = e_c, extended cyclically and
// antisymmetrically. 0-based; these generate the whole 7×7 table.
inline constexpr std::array<std::array<int, 3>, 7> kCrossTriples{{
    {0, 1, 2}, {0, 3, 4}, {0, 6, 5}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 5, 4},
}};

constexpr std::array<std::array<CrossEntry, 7>, 7> make_cross_table() {
    std::array<std::array<CrossEntry, 7>, 7> t{};
    for (const auto& tr : kCrossTriples) {
        for (int r = 0; r < 3; ++r) {
            const int a = tr[r];
            const int b = tr[(r + 1) % 3];
            const int c = tr[(r + 2) % 3];
            t[a][b] = {1, c};
            t[b][a] = {-1, c};
        }
    }
    return t;
}

}  // namespace detail

inline constexpr auto kCrossTable = detail::make_cross_table();

/// The 7-dimensional cross product, extended C-linearly (or R-bilinearly for
/// function rings) from the standard-basis structure constants.
template <class R>
Vec7<R> cross(const Vec7<R>& u, const Vec7<R>& v) {
    Vec7<R> w;
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            const auto& e = kCrossTable[i][j];
            if (e.sign == 0) continue;
            if (e.sign > 0)
                w[e.index] += u[i] * v[j];
            else
                w[e.index] -= u[i] * v[j];
        }
    }
    return w;
}

/// Symmetric bilinear form (u, v) = Σ u_k v_k.
template <class R>
R bilinear(const Vec7<R>& u, const Vec7<R>& v) {
    R s{};
    for (int k = 0; k < 7; ++k) s += u[k] * v[k];
    return s;
}

/// Hermitian product ⟨u, v⟩ = Σ u_k conj(v_k), conjugate-linear in v.
template <class R>
R hermitian(const Vec7<R>& u, const Vec7<R>& v) {
    R s{};
    for (int k = 0; k < 7; ++k) s += u[k] * conj_of(v[k]);
    return s;
}

template <class R>
Vec7<R> conj_vec(const Vec7<R>& v) {
    return v.map([](const R& x) { return conj_of(x); });
}

/// Components of u ∧ v in the order (0,1), (0,2), ..., (5,6).
template <class R>
std::vector<R> wedge2(const Vec7<R>& u, const Vec7<R>& v) {
    std::vector<R> w;
    w.reserve(21);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) w.push_back(u[i] * v[j] - u[j] * v[i]);
    return w;
}

template <class R>
bool all_zero(const std::vector<R>& xs) {
    for (const auto& x : xs)
        if (!x.is_zero()) return false;
    return true;
}

template <class R>
bool is_zero_vec(const Vec7<R>& v) {
    for (int k = 0; k < 7; ++k)
        if (!v[k].is_zero()) return false;
    return true;
}

inline Vec7<BiPoly> to_bipoly(const Vec7<Poly>& v) {
    return v.map([](const Poly& p) { return BiPoly::holomorphic(p); });
}

inline Vec7<Complex> to_float(const Vec7<AlgScalar>& v) {
    return v.map([](const AlgScalar& x) { return x.to_complex(); });
}

inline double norm(const Vec7<Complex>& v) {
    double s = 0.0;
    for (int k = 0; k < 7; ++k) s += std::norm(v[k]);
    return std::sqrt(s);
}

/// 7×7 matrix over a scalar field; entry (row, col).
template <class S>
struct Mat7 {
    std::array<std::array<S, 7>, 7> m{};

    S& operator()(int r, int c) { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const S& operator()(int r, int c) const { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    static Mat7 identity() {
        Mat7 a;
        for (int k = 0; k < 7; ++k) a(k, k) = ScalarField<S>::from_int(1);
        return a;
    }

    /// Matrix whose columns are the given vectors.
    static Mat7 from_columns(const std::array<Vec7<S>, 7>& cols) {
        Mat7 a;
        for (int c = 0; c < 7; ++c)
            for (int r = 0; r < 7; ++r) a(r, c) = cols[c][r];
        return a;
    }

    Vec7<S> column(int c) const {
        Vec7<S> v;
        for (int r = 0; r < 7; ++r) v[r] = (*this)(r, c);
        return v;
    }

    Mat7 transpose() const {
        Mat7 t;
        for (int r = 0; r < 7; ++r)
            for (int c = 0; c < 7; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Mat7 conjugate_transpose() const {
        Mat7 t;
        for (int r = 0; r < 7; ++r)
            for (int c = 0; c < 7; ++c) t(c, r) = ScalarField<S>::conj((*this)(r, c));
        return t;
    }

    friend Mat7 operator*(const Mat7& a, const Mat7& b) {
        Mat7 p;
        for (int r = 0; r < 7; ++r)
            for (int c = 0; c < 7; ++c) {
                S s{};
                for (int k = 0; k < 7; ++k) s += a(r, k) * b(k, c);
                p(r, c) = s;
            }
        return p;
    }

    friend Mat7 operator-(const Mat7& a) {
        Mat7 r;
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) r(i, j) = -a(i, j);
        return r;
    }

    friend bool operator==(const Mat7& a, const Mat7& b) { return a.m == b.m; }

    /// M v for a vector over any ring R that scalars of S can multiply.
    template <class R>
    Vec7<R> apply(const Vec7<R>& v) const {
        Vec7<R> w;
        for (int r = 0; r < 7; ++r)
            for (int c = 0; c < 7; ++c)
                if (!ScalarField<S>::is_zero((*this)(r, c))) w[r] += (*this)(r, c) * v[c];
        return w;
    }
};

inline Mat7<Complex> to_float(const Mat7<AlgScalar>& a) {
    Mat7<Complex> f;
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 7; ++c) f(r, c) = a(r, c).to_complex();
    return f;
}

}  // namespace supermin
