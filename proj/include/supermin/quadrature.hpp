#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include "supermin/bipoly.hpp"
#include "supermin/error.hpp"
#include "supermin/rational_fn.hpp"

namespace supermin {

/// Float evaluation of a real-valued rational function of (z, z̄), with
/// coefficients converted once.
class FloatDensity {
public:
    FloatDensity() = default;
    explicit FloatDensity(const RationalFn& f) : num_(convert(f.num())), den_(convert(f.den())) {}

    double operator()(Complex z) const {
        const int n = std::max(num_.max_a, den_.max_a);
        const int m = std::max(num_.max_b, den_.max_b);
        thread_local std::vector<Complex> pz, pw;
        pz.assign(static_cast<std::size_t>(n) + 1, 1.0);
        pw.assign(static_cast<std::size_t>(m) + 1, 1.0);
        for (int k = 1; k <= n; ++k) pz[k] = pz[k - 1] * z;
        const Complex zb = std::conj(z);
        for (int k = 1; k <= m; ++k) pw[k] = pw[k - 1] * zb;
        return (eval(num_, pz, pw) / eval(den_, pz, pw)).real();
    }

private:
    struct Term {
        int a;
        int b;
        Complex c;
    };
    struct Terms {
        std::vector<Term> terms;
        int max_a = 0;
        int max_b = 0;
    };

    static Terms convert(const BiPoly& p) {
        Terms t;
        for (const auto& [e, c] : p.terms()) {
            t.terms.push_back({e.first, e.second, c.to_complex()});
            t.max_a = std::max(t.max_a, e.first);
            t.max_b = std::max(t.max_b, e.second);
        }
        return t;
    }

    static Complex eval(const Terms& t, const std::vector<Complex>& pz, const std::vector<Complex>& pw) {
        Complex acc{0.0, 0.0};
        for (const auto& term : t.terms) acc += term.c * pz[term.a] * pw[term.b];
        return acc;
    }

    Terms num_;
    Terms den_;
};

/// g(1/w) / |w|⁴: the same area density written in the chart w = 1/z.
inline RationalFn chart_at_infinity(const RationalFn& g) {
    const auto [an, bn] = g.num().max_degrees();
    const auto [ad, bd] = g.den().max_degrees();
    BiPoly num = g.num().reversed(an, bn);
    BiPoly den = g.den().reversed(ad, bd);
    const int ea = ad - an - 2;
    const int eb = bd - bn - 2;
    num = num.shifted(std::max(ea, 0), std::max(eb, 0));
    den = den.shifted(std::max(-ea, 0), std::max(-eb, 0));
    return {num, den};
}

/// `grid` sets the resolution in both directions: θ points, and a radial
/// budget of grid/4 Gauss–Kronrod panels per chart.
struct QuadratureParams {
    int grid = 64;      // ≥ 8
    double tol = 0.01;  // relative tolerance on the result
    int max_panels() const { return std::max(1, grid / 4); }
};

struct QuadratureResult {
    double estimate = 0.0;
    double error = 0.0;      // radial (Kronrod) + angular (grid halving) estimate
    long evaluations = 0;
};

namespace detail {

// Gauss–Kronrod 7/15 on [-1, 1]: Kronrod abscissae (nonnegative half) and
// weights; Gauss weights apply to the odd-indexed abscissae.
inline constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace detail

/// ∬_{|z|≤1} g dx dy in polar coordinates: trapezoid in θ with `grid` points,
/// adaptive Gauss–Kronrod in r. Returns the value and an error estimate.
inline QuadratureResult integrate_unit_disk(const std::function<double(Complex)>& g, const QuadratureParams& qp,
                                            double abs_target) {
    if (qp.grid < 8) throw PreconditionError("quadrature grid must be at least 8");
    QuadratureResult res;
    auto ring = [&](double r, int n) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += g(std::polar(r, 2.0 * M_PI * j / n));
        res.evaluations += n;
        return r * s * (2.0 * M_PI / n);
    };
    auto gk = [&](double a, double b, int n) {
        const double c = 0.5 * (a + b);
        const double h = 0.5 * (b - a);
        const double fc = ring(c, n);
        double kron = detail::kWgk[7] * fc;
        double gauss = detail::kWg[3] * fc;
        for (int k = 0; k < 7; ++k) {
            const double f1 = ring(c - h * detail::kXgk[k], n);
            const double f2 = ring(c + h * detail::kXgk[k], n);
            kron += detail::kWgk[k] * (f1 + f2);
            if (k % 2 == 1) gauss += detail::kWg[k / 2] * (f1 + f2);
        }
        return detail::Panel{a, b, kron * h, std::abs((kron - gauss) * h)};
    };

    std::priority_queue<detail::Panel> panels;
    panels.push(gk(0.0, 1.0, qp.grid));
    double total = panels.top().value;
    double err = panels.top().error;
    int count = 1;
    while (err > abs_target && count < qp.max_panels()) {
        const auto worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const auto left = gk(worst.a, mid, qp.grid);
        const auto right = gk(mid, worst.b, qp.grid);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++count;
    }
    // Angular error: repeat the final panels with half the θ points.
    double coarse = 0.0;
    double radial = 0.0;
    std::vector<detail::Panel> final_panels;
    while (!panels.empty()) {
        final_panels.push_back(panels.top());
        panels.pop();
    }
    std::sort(final_panels.begin(), final_panels.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
    total = 0.0;
    for (const auto& p : final_panels) {
        total += p.value;
        radial += p.error;
        coarse += gk(p.a, p.b, qp.grid / 2).value;
    }
    res.estimate = total;
    res.error = radial + std::abs(total - coarse);
    return res;
}

}  // namespace supermin
