#pragma once

#include <array>
#include <optional>
#include <vector>

#include "supermin/curve.hpp"
#include "supermin/g2.hpp"
#include "supermin/linalg.hpp"

namespace supermin {

/// A point [x] of the quadric Q⁵ ⊂ CP⁶, held by a nonzero isotropic lift.
template <class S>
class QuadricPoint {
public:
    explicit QuadricPoint(Vec7<S> x, double tol = 1e-10) : x_(std::move(x)) {
        const double n = magnitude(hermitian(x_, x_));
        if (n == 0.0) throw PreconditionError("quadric point: zero lift");
        const S q = bilinear(x_, x_);
        if constexpr (ScalarField<S>::exact) {
            if (!q.is_zero()) throw PreconditionError("quadric point: (x,x) != 0");
        } else {
            if (std::abs(q) > tol * n) throw PreconditionError("quadric point: (x,x) != 0");
        }
    }

    const Vec7<S>& lift() const { return x_; }
    S norm2() const { return hermitian(x_, x_); }

private:
    static double magnitude(const S& s) { return ScalarField<S>::magnitude(s); }
    Vec7<S> x_;
};

/// π[x] = (i/|x|²) x̄×x, a real unit vector.
template <class S>
Vec7<S> project(const QuadricPoint<S>& p) {
    const auto& x = p.lift();
    const S factor = ScalarField<S>::i() / p.norm2();
    return factor * cross(conj_vec(x), x);
}

/// π_*(v) = (i/|x|²)(x̄×v − x×v̄) for v tangent at [x].
template <class S>
Vec7<S> pushforward(const QuadricPoint<S>& p, const Vec7<S>& v, double tol = 1e-9) {
    const auto& x = p.lift();
    const S h = hermitian(v, x);
    const S b = bilinear(v, x);
    if constexpr (ScalarField<S>::exact) {
        if (!h.is_zero() || !b.is_zero()) throw PreconditionError("pushforward: vector not tangent");
    } else {
        const double scale = std::sqrt(std::abs(hermitian(x, x)) * std::abs(hermitian(v, v)));
        if (std::abs(h) > tol * scale || std::abs(b) > tol * scale)
            throw PreconditionError("pushforward: vector not tangent");
    }
    const S factor = ScalarField<S>::i() / p.norm2();
    return factor * (cross(conj_vec(x), v) - cross(x, conj_vec(v)));
}

template <class S>
struct TangentSplit {
    std::array<Vec7<S>, 2> vertical;         // x × v̄ = 0
    std::array<Vec7<S>, 2> superhorizontal;  // x × v = 0
    Vec7<S> d_line;                          // π[x]
};

/// Solves x × v = 0, ⟨v, x⟩ = 0 for H′; V = conj(H′); D = span π[x].
template <class S>
TangentSplit<S> split_tangent(const QuadricPoint<S>& p, double tol = 1e-10) {
    const auto& x = p.lift();
    Matrix<S> rows;
    for (int k = 0; k < 7; ++k) {
        std::vector<S> row(7);
        for (int j = 0; j < 7; ++j) row[j] = cross(x, basis_vector<S>(j))[k];
        rows.push_back(std::move(row));
    }
    std::vector<S> ortho(7);
    for (int j = 0; j < 7; ++j) ortho[j] = ScalarField<S>::conj(x[j]);
    rows.push_back(std::move(ortho));
    const auto ns = nullspace(rows, 7, tol);
    if (ns.size() != 2) throw PreconditionError("split_tangent: degenerate lift (dim H' = " + std::to_string(ns.size()) + ")");
    TangentSplit<S> t;
    for (int a = 0; a < 2; ++a) {
        Vec7<S> h;
        for (int j = 0; j < 7; ++j) h[j] = ns[a][j];
        t.superhorizontal[a] = h;
        t.vertical[a] = conj_vec(h);
    }
    t.d_line = project(p);
    return t;
}

/// Fubini–Study length of a tangent vector: 2|v_⊥|/|x| with v_⊥ the part
/// Hermitian-orthogonal to x.
inline double fs_norm(const QuadricPoint<Complex>& p, const Vec7<Complex>& v) {
    const auto& x = p.lift();
    const double n2 = hermitian(x, x).real();
    const Vec7<Complex> perp = v - (hermitian(v, x) / n2) * x;
    return 2.0 * norm(perp) / std::sqrt(n2);
}

/// Almost complex structure of S⁶ at the base point: J(w) = π[x] × w.
inline Vec7<Complex> almost_complex_j(const QuadricPoint<Complex>& p, const Vec7<Complex>& w) {
    return cross(project(p), w);
}

struct LemmaReport {
    double ratio_superhorizontal = 0.0;      // |π_* v| / ‖v‖ on H′, expected 1
    double ratio_d = 0.0;                    // on D, expected 1/√2
    double linearity_residual = 0.0;         // |π_*(iv) − J π_*(v)| on H′
    double antilinearity_residual = 0.0;     // |π_*(iv) + J π_*(v)| on D
    double vertical_residual = 0.0;          // |π_* v| on V
    double finite_difference_residual = 0.0; // π_* vs central difference of π
};

/// Lemma-level numerics at one point, using a generic vector of H′ given by
/// the coefficients (c0, c1) in the computed basis.
inline LemmaReport lemma_checks(const QuadricPoint<Complex>& p, Complex c0 = {0.6, 0.3}, Complex c1 = {-0.2, 0.7}) {
    const auto split = split_tangent(p);
    const Vec7<Complex> h = c0 * split.superhorizontal[0] + c1 * split.superhorizontal[1];
    const Vec7<Complex> d = split.d_line;
    const Complex i{0.0, 1.0};
    LemmaReport r;

    const auto ph = pushforward(p, h);
    const auto pd = pushforward(p, d);
    r.ratio_superhorizontal = norm(ph) / fs_norm(p, h);
    r.ratio_d = norm(pd) / fs_norm(p, d);
    r.linearity_residual = norm(pushforward(p, i * h) - almost_complex_j(p, ph)) / norm(ph);
    r.antilinearity_residual = norm(pushforward(p, i * d) + almost_complex_j(p, pd)) / norm(pd);
    for (const auto& v : split.vertical) r.vertical_residual = std::max(r.vertical_residual, norm(pushforward(p, v)) / norm(v));

    // Central difference of x ↦ (i/|x|²) x̄×x along x + t h.
    const double step = 1e-5;
    auto pi_raw = [](const Vec7<Complex>& y) {
        return (Complex(0.0, 1.0) / hermitian(y, y)) * cross(conj_vec(y), y);
    };
    const auto& x = p.lift();
    const auto fd = (1.0 / (2.0 * step)) * (pi_raw(x + step * h) - pi_raw(x - step * h));
    r.finite_difference_residual = norm(fd - ph) / norm(ph);
    return r;
}

template <class S>
struct SuperhorizontalResult {
    bool superhorizontal = true;
    int component = -1;  // first nonzero entry of f × f′
    int exponent = -1;
    S coefficient{};
};

/// f × f′ ≡ 0 for a quadric-valued polynomial curve; throws if (f,f) ≢ 0.
inline SuperhorizontalResult<AlgScalar> is_superhorizontal(const CurveC7& c) {
    if (!bilinear(c.f, c.f).is_zero()) throw PreconditionError("not a quadric curve");
    const auto w = cross(c.f, c.derivative().f);
    SuperhorizontalResult<AlgScalar> r;
    for (int k = 0; k < 7; ++k) {
        if (w[k].is_zero()) continue;
        r.superhorizontal = false;
        r.component = k;
        r.exponent = w[k].ord0();
        r.coefficient = w[k].coeff(r.exponent);
        return r;
    }
    return r;
}

/// max |f × f′| / (|f| |f′|) and max |(f,f)| / |f|² over the sample points.
struct FloatCurveResidual {
    double cross = 0.0;
    double quadric = 0.0;
};

inline FloatCurveResidual superhorizontal_residual(const CurveF& c, const std::vector<Complex>& points) {
    const auto d = c.derivative();
    FloatCurveResidual r;
    for (Complex z : points) {
        const auto f = c.evaluate(z);
        const auto fp = d.evaluate(z);
        const double nf = norm(f);
        r.cross = std::max(r.cross, norm(cross(f, fp)) / (nf * norm(fp)));
        r.quadric = std::max(r.quadric, std::abs(bilinear(f, f)) / (nf * nf));
    }
    return r;
}

}  // namespace supermin
