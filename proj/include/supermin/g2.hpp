#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>

#include "supermin/vec7.hpp"

namespace supermin {

template <class S>
Vec7<S> basis_vector(int k) {
    return Vec7<S>::unit(k, ScalarField<S>::from_int(1));
}

namespace detail {

template <class S>
double deviation(const S& a, const S& b) {
    if constexpr (ScalarField<S>::exact)
        return a == b ? 0.0 : std::abs((a - b).to_complex());
    else
        return std::abs(a - b);
}

template <class S>
double deviation(const Vec7<S>& a, const Vec7<S>& b) {
    double m = 0.0;
    for (int k = 0; k < 7; ++k) m = std::max(m, deviation(a[k], b[k]));
    return m;
}

template <class S>
bool within(double dev, double tol) {
    if constexpr (ScalarField<S>::exact)
        return dev == 0.0;
    else
        return dev <= tol;
}

}  // namespace detail

/// The image of e_i × e_j under e_k ↦ f[k], i.e. what the table predicts for
/// f_i × f_j in a basis claiming to be a G2-basis.
template <class S>
Vec7<S> table_prediction(const std::array<Vec7<S>, 7>& f, int i, int j) {
    const auto& e = kCrossTable[i][j];
    if (e.sign == 0) return {};
    return e.sign > 0 ? f[e.index] : -f[e.index];
}

struct TableFailure {
    int i;
    int j;
    double deviation;
};

/// First (i, j) where f_i × f_j differs from the table, if any.
template <class S>
std::optional<TableFailure> check_table(const std::array<Vec7<S>, 7>& f, double tol = 1e-10) {
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            const double dev = detail::deviation(cross(f[i], f[j]), table_prediction(f, i, j));
            if (!detail::within<S>(dev, tol)) return TableFailure{i, j, dev};
        }
    return std::nullopt;
}

template <class S>
struct G2Basis {
    std::array<Vec7<S>, 7> f;
    std::array<Vec7<S>, 3> generators;  // (f1, f2, f4)

    Mat7<S> matrix() const { return Mat7<S>::from_columns(f); }
};

/// f3 = f1×f2, f5 = f1×f4, f6 = f2×f4, f7 = f3×f4.
template <class S>
G2Basis<S> complete_g2_basis(const Vec7<S>& f1, const Vec7<S>& f2, const Vec7<S>& f4, double tol = 1e-10) {
    const S one = ScalarField<S>::from_int(1);
    const S zero{};
    auto require = [&](const S& value, const S& expected, const std::string& what) {
        if (!detail::within<S>(detail::deviation(value, expected), tol))
            throw PreconditionError("complete_g2_basis: " + what);
    };
    require(bilinear(f1, f1), one, "f1 is not a unit vector");
    require(bilinear(f2, f2), one, "f2 is not a unit vector");
    require(bilinear(f4, f4), one, "f4 is not a unit vector");
    require(bilinear(f1, f2), zero, "f1 is not orthogonal to f2");
    require(bilinear(f1, f4), zero, "f1 is not orthogonal to f4");
    require(bilinear(f2, f4), zero, "f2 is not orthogonal to f4");
    const Vec7<S> f3 = cross(f1, f2);
    require(bilinear(f3, f4), zero, "f4 is not orthogonal to f1×f2");
    G2Basis<S> b;
    b.generators = {f1, f2, f4};
    b.f = {f1, f2, f3, f4, cross(f1, f4), cross(f2, f4), cross(f3, f4)};
    return b;
}

struct G2Membership {
    bool member = true;
    std::string reason;
    std::optional<std::pair<int, int>> failing;  // first failing (i, j), 0-based
    double residual = 0.0;
};

/// M ∈ G2^C: MᵀM = I and M(e_i)×M(e_j) = M(e_i×e_j) for all i ≤ j.
template <class S>
G2Membership g2c_membership(const Mat7<S>& m, double tol = 1e-10) {
    G2Membership out;
    std::array<Vec7<S>, 7> col;
    for (int c = 0; c < 7; ++c) col[c] = m.column(c);
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            const S expected = ScalarField<S>::from_int(i == j ? 1 : 0);
            const double dev = detail::deviation(bilinear(col[i], col[j]), expected);
            out.residual = std::max(out.residual, dev);
            if (!detail::within<S>(dev, tol) && out.member) {
                out.member = false;
                out.reason = "not orthogonal: (Me_i, Me_j) != delta_ij";
                out.failing = {i, j};
            }
        }
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            const double dev = detail::deviation(cross(col[i], col[j]), table_prediction(col, i, j));
            out.residual = std::max(out.residual, dev);
            if (!detail::within<S>(dev, tol) && out.member) {
                out.member = false;
                out.reason = "cross product not preserved";
                out.failing = {i, j};
            }
        }
    return out;
}

/// Basis u0..u6 of C⁷ adapted to the circle action; u3 = e4 and
/// u_j, u_{6-j} are conjugate up to sign. Orthonormal for ⟨,⟩.
inline std::array<Vec7<AlgScalar>, 7> u_basis() {
    const AlgScalar h = AlgScalar::sqrt(2).inverse();
    const AlgScalar ih = AlgScalar::i() * h;
    auto e = [](int k) { return basis_vector<AlgScalar>(k - 1); };
    return {
        -h * e(7) + ih * e(3),
        h * e(2) - ih * e(6),
        h * e(1) - ih * e(5),
        e(4),
        -h * e(1) - ih * e(5),
        h * e(2) + ih * e(6),
        h * e(7) + ih * e(3),
    };
}

/// Dictionary with u2 and u4 of the opposite sign. It does not reproduce the
/// u-table; kept as a negative control.
inline std::array<Vec7<AlgScalar>, 7> u_basis_uncorrected() {
    auto u = u_basis();
    u[2] = -u[2];
    u[4] = -u[4];
    return u;
}

/// Coordinates of w in an orthonormal basis b: c_k = ⟨w, b_k⟩.
template <class S>
Vec7<S> coordinates_in(const std::array<Vec7<S>, 7>& b, const Vec7<S>& w) {
    Vec7<S> c;
    for (int k = 0; k < 7; ++k) c[k] = hermitian(w, b[k]);
    return c;
}

/// Unitary matrix with columns u0..u6 (maps u-coordinates to e-coordinates).
inline Mat7<AlgScalar> u_matrix() { return Mat7<AlgScalar>::from_columns(u_basis()); }

/// u_i × u_j in u-coordinates, for all i, j.
inline std::array<std::array<Vec7<AlgScalar>, 7>, 7> u_table(const std::array<Vec7<AlgScalar>, 7>& u) {
    std::array<std::array<Vec7<AlgScalar>, 7>, 7> t;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) t[i][j] = coordinates_in(u, cross(u[i], u[j]));
    return t;
}

/// Random element of G2 (float): a G2-basis completed from a random admissible triple.
template <class Rng>
G2Basis<Complex> random_g2_basis(Rng& rng) {
    std::normal_distribution<double> gauss;
    auto random_vec = [&] {
        Vec7<Complex> v;
        for (int k = 0; k < 7; ++k) v[k] = gauss(rng);
        return v;
    };
    auto orthonormalize = [](Vec7<Complex> v, std::initializer_list<Vec7<Complex>> against) {
        for (const auto& a : against) v = v - bilinear(v, a) * a;
        return (1.0 / norm(v)) * v;
    };
    const auto f1 = orthonormalize(random_vec(), {});
    const auto f2 = orthonormalize(random_vec(), {f1});
    const auto f3 = cross(f1, f2);
    const auto f4 = orthonormalize(random_vec(), {f1, f2, f3});
    return complete_g2_basis(f1, f2, f4);
}

}  // namespace supermin
