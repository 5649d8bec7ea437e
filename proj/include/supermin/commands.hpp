#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "supermin/catalog.hpp"
#include "supermin/json_io.hpp"
#include "supermin/plucker.hpp"

namespace supermin::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2, kIoError = 3 };

class IoError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::string command;
    int k1 = 1;
    int k2 = 1;
    std::string input;
    std::string output;  // empty: standard output
    double tol = 0.01;
    int grid = 64;
    int samples = 32;
    int p = 0;
    std::string format = "json";

    /// Throws PreconditionError on a violated invariant.
    void validate() const {
        if (!(tol > 0.0)) throw PreconditionError("--tol must be positive");
        if (grid < 8) throw PreconditionError("--grid must be at least 8");
        if (samples < 8) throw PreconditionError("sample count must be at least 8");
        if (k1 < 1 || k2 < 1) throw PreconditionError("--k1 and --k2 must be at least 1");
        if (p < 0 || p > 5) throw PreconditionError("--p must be in 0..5");
        if (format != "json" && format != "csv" && format != "obj")
            throw PreconditionError("--format must be json, csv or obj");
    }
};

struct Streams {
    std::ostream& out = std::cout;
    std::ostream& err = std::cerr;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes to the configured file, or to `out` when no path is given.
inline void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw IoError("cannot write " + cfg.output);
    f << text;
    if (!f) throw IoError("write failed: " + cfg.output);
}

inline json_io::CurveFile load_curve(const RunConfig& cfg) {
    if (cfg.input.empty()) throw PreconditionError("an input curve file is required");
    return json_io::parse_curve(read_file(cfg.input));
}

/// Maps library exceptions onto the exit-code contract.
inline int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const PreconditionError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ConvergenceError& e) {
        err << "not converged: estimate " << e.estimate() << ", achieved error " << e.error() << "\n";
        return kVerificationFailure;
    } catch (const Error& e) {
        err << "verification failure: " << e.what() << "\n";
        return kVerificationFailure;
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// gen

inline int cmd_gen(const RunConfig& cfg, Streams io = {}) {
    return detail::guarded(io.err, [&] {
        cfg.validate();
        const auto c = example_family(cfg.k1, cfg.k2);
        detail::emit(cfg, io.out, json_io::dump(json_io::curve_to_json(c, std::make_pair(cfg.k1, cfg.k2))));
        return kOk;
    });
}

// ---------------------------------------------------------------------------
// verify

struct CheckOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Every identity check on one curve. A check that cannot run (for example a
/// sequence on a degenerate curve) is recorded as failed with the reason.
inline std::vector<CheckOutcome> verify_curve(const json_io::CurveFile& file) {
    std::vector<CheckOutcome> out;
    const CurveC7& c = file.curve;
    auto run = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
        CheckOutcome o{name, false, ""};
        try {
            std::tie(o.pass, o.detail) = fn();
        } catch (const Error& e) {
            o.detail = e.what();
        }
        out.push_back(o);
        return o.pass;
    };

    const bool quadric = run("quadric", [&] {
        const bool ok = bilinear(c.f, c.f).is_zero();
        return std::make_pair(ok, std::string(ok ? "" : "(f,f) is not identically zero"));
    });
    run("superhorizontal", [&] {
        if (!quadric) return std::make_pair(false, std::string("requires a quadric curve"));
        const auto r = is_superhorizontal(c);
        if (r.superhorizontal) return std::make_pair(true, std::string());
        return std::make_pair(false, "f x f' has coefficient " + r.coefficient.pretty() + " at z^" +
                                         std::to_string(r.exponent) + " in e" + std::to_string(r.component + 1));
    });

    std::optional<HarmonicSequence> seq;
    run("terminates", [&] {
        seq = build_sequence(c);
        return std::make_pair(seq->terminates(), std::string(seq->terminates() ? "" : "f7 is not identically zero"));
    });
    auto with_seq = [&](const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
        if (!seq) {
            out.push_back({name, false, "harmonic sequence unavailable"});
            return;
        }
        run(name, fn);
    };
    with_seq("orthogonality", [&] {
        const auto r = check_orthogonality(*seq);
        std::string d;
        if (!r.failing.empty())
            d = "<f" + std::to_string(r.failing[0].first) + ", f" + std::to_string(r.failing[0].second) + "> fails";
        return std::make_pair(r.pass, d);
    });
    with_seq("reality", [&] {
        const auto r = check_reality(*seq);
        std::string d;
        for (int k = 1; k <= 3; ++k)
            if (!r.proportional[k - 1]) {
                d = "conj(f" + std::to_string(3 + k) + ") and f" + std::to_string(3 - k) + " are not proportional";
                break;
            }
        return std::make_pair(r.pass(), d);
    });
    with_seq("norm_products", [&] {
        const auto r = check_norm_products(*seq);
        std::string d;
        for (int k = 1; k <= 3 && d.empty(); ++k)
            if (!r.balance[k - 1] || *r.balance[k - 1] != AlgScalar(1))
                d = "a" + std::to_string(3 + k) + " a" + std::to_string(3 - k) + " != a3^2";
        if (d.empty() && (!r.su10 || *r.su10 != AlgScalar(2))) d = "a4 a5 != 2 a3 a6";
        return std::make_pair(r.pass(), d);
    });
    with_seq("cross_table", [&] {
        const auto r = check_cross_table(*seq, sample_points(*seq, 10));
        std::string d;
        for (int i = 0; i < 7 && d.empty(); ++i)
            for (int j = 0; j < 7 && d.empty(); ++j)
                if (!r.exact[i][j]) d = "f" + std::to_string(i) + " x f" + std::to_string(j) + " does not match the table";
        if (d.empty() && !r.pass()) d = "unit-gauge scalar error " + std::to_string(r.max_scalar_error);
        return std::make_pair(r.pass(), d);
    });
    run("normal_form_reality", [&] {
        if (!file.k) return std::make_pair(true, std::string("skipped: no singularity type in file"));
        const SingularityTypeSpec spec(file.k->first, file.k->second);
        const auto r = reality_check(normal_form_from_curve(c, spec), spec);
        std::string d = "mu = " + r.mu.pretty();
        if (r.failing) d = "(v" + std::to_string(r.failing->first) + ", v" + std::to_string(r.failing->second) + ") fails";
        return std::make_pair(r.real, d);
    });
    return out;
}

inline int cmd_verify(const RunConfig& cfg, Streams io = {}) {
    return detail::guarded(io.err, [&] {
        const auto file = detail::load_curve(cfg);
        const auto checks = verify_curve(file);
        json_io::Json report;
        json_io::Json list = json_io::Json::array();
        bool all = true;
        for (const auto& c : checks) {
            list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            if (!c.pass && all) io.err << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            all = all && c.pass;
        }
        report["checks"] = list;
        report["pass"] = all;
        detail::emit(cfg, io.out, json_io::dump(report));
        return all ? kOk : kVerificationFailure;
    });
}

// ---------------------------------------------------------------------------
// report

inline int cmd_report(const RunConfig& cfg, Streams io = {}) {
    return detail::guarded(io.err, [&] {
        cfg.validate();
        const auto file = detail::load_curve(cfg);
        auto report = singularity_report(file.curve);
        try {
            attach_numeric_degrees(report, build_sequence(file.curve), QuadratureParams{cfg.grid, cfg.tol});
        } catch (const ConvergenceError& e) {
            io.err << "quadrature: " << e.what() << " (achieved error " << e.error() << ")\n";
            report.numeric_agrees = false;
        }
        detail::emit(cfg, io.out, json_io::dump(json_io::to_json(report)));
        const bool ok = report.formula_agrees && report.plucker_holds && report.numeric_agrees;
        return ok ? kOk : kVerificationFailure;
    });
}

// ---------------------------------------------------------------------------
// integrate

inline int cmd_integrate(const RunConfig& cfg, Streams io = {}) {
    return detail::guarded(io.err, [&] {
        cfg.validate();
        const auto file = detail::load_curve(cfg);
        const int exact = degrees_exact(file.curve)[cfg.p];
        const auto seq = build_sequence(file.curve);
        const auto r = degrees_numeric(seq, cfg.p, QuadratureParams{cfg.grid, cfg.tol});
        const bool ok = std::abs(r.estimate - exact) <= cfg.tol * exact;
        json_io::Json j{{"p", cfg.p},
                        {"estimate", json_io::number(r.estimate)},
                        {"exact", exact},
                        {"error", json_io::number(r.error)},
                        {"evaluations", r.evaluations},
                        {"pass", ok}};
        detail::emit(cfg, io.out, json_io::dump(j));
        return ok ? kOk : kVerificationFailure;
    });
}

// ---------------------------------------------------------------------------
// sample

struct SurfaceSample {
    int n = 0;
    std::vector<int> chart;  // 0: z-chart, 1: w = 1/z chart
    std::vector<Complex> param;
    std::vector<std::array<double, 7>> point;
};

/// n×n polar grid on each chart: radii i/n (i < n), angles 2πj/n. The charts
/// meet only on |z| = 1, which neither grid reaches, so no point is repeated
/// across charts. Vertex (chart, i, j) has index chart·n² + i·n + j.
inline SurfaceSample sample_surface(const CurveC7& c, int n) {
    if (n < 8) throw PreconditionError("sample count must be at least 8");
    const std::array<CurveF, 2> charts{to_float(c), to_float(c.reversed())};
    SurfaceSample s;
    s.n = n;
    const std::size_t total = 2 * static_cast<std::size_t>(n) * n;
    s.chart.resize(total);
    s.param.resize(total);
    s.point.resize(total);
    parallel_for(total, [&](std::size_t idx) {
        const int ch = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
        const int rem = static_cast<int>(idx % (static_cast<std::size_t>(n) * n));
        const int i = rem / n;
        const int j = rem % n;
        const Complex z = std::polar(static_cast<double>(i) / n, 2.0 * M_PI * j / n);
        const QuadricPoint<Complex> x(charts[ch].evaluate(z), 1e-8);
        const auto pi = project(x);
        s.chart[idx] = ch;
        s.param[idx] = z;
        for (int k = 0; k < 7; ++k) s.point[idx][k] = pi[k].real();
    });
    return s;
}

/// Triangles of the two polar grids (1-based OBJ indices). Rings i and i+1 are
/// joined; the centre ring collapses to a point, so it contributes one triangle
/// per sector. The outer rings of the two charts are stitched through w = 1/z:
/// z-angle j meets w-angle (n − j) mod n.
inline std::vector<std::array<int, 3>> surface_faces(int n) {
    std::vector<std::array<int, 3>> f;
    auto v = [n](int ch, int i, int j) { return ch * n * n + i * n + ((j % n) + n) % n + 1; };
    for (int ch = 0; ch < 2; ++ch)
        for (int i = 0; i + 1 < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == 0) {
                    f.push_back({v(ch, 0, 0), v(ch, 1, j), v(ch, 1, j + 1)});
                    continue;
                }
                f.push_back({v(ch, i, j), v(ch, i + 1, j), v(ch, i + 1, j + 1)});
                f.push_back({v(ch, i, j), v(ch, i + 1, j + 1), v(ch, i, j + 1)});
            }
    for (int j = 0; j < n; ++j) {
        const int a = v(0, n - 1, j);
        const int b = v(0, n - 1, j + 1);
        f.push_back({a, b, v(1, n - 1, n - j)});
        f.push_back({b, v(1, n - 1, n - j - 1), v(1, n - 1, n - j)});
    }
    return f;
}

inline std::string format_sample(const SurfaceSample& s, const std::string& format) {
    std::ostringstream os;
    char buf[64];
    auto num = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return std::string(buf);
    };
    if (format == "json") {
        json_io::Json pts = json_io::Json::array();
        for (std::size_t k = 0; k < s.point.size(); ++k) {
            json_io::Json x = json_io::Json::array();
            for (double c : s.point[k]) x.push_back(json_io::number(c));
            pts.push_back({{"chart", s.chart[k] == 0 ? "z" : "w"}, {"param", json_io::to_json(s.param[k])}, {"x", x}});
        }
        os << json_io::dump({{"n", s.n}, {"count", s.point.size()}, {"points", pts}});
    } else if (format == "csv") {
        os << "chart,param_re,param_im,x1,x2,x3,x4,x5,x6,x7\n";
        for (std::size_t k = 0; k < s.point.size(); ++k) {
            os << (s.chart[k] == 0 ? "z" : "w") << ',' << num(s.param[k].real()) << ',' << num(s.param[k].imag());
            for (double c : s.point[k]) os << ',' << num(c);
            os << '\n';
        }
    } else {
        os << "# orthogonal projection of the sampled surface onto (x1, x2, x3)\n";
        for (const auto& p : s.point) os << "v " << num(p[0]) << ' ' << num(p[1]) << ' ' << num(p[2]) << '\n';
        for (const auto& t : surface_faces(s.n)) os << "f " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    }
    return os.str();
}

inline int cmd_sample(const RunConfig& cfg, Streams io = {}) {
    return detail::guarded(io.err, [&] {
        cfg.validate();
        const auto file = detail::load_curve(cfg);
        const auto s = sample_surface(file.curve, cfg.samples);
        detail::emit(cfg, io.out, format_sample(s, cfg.format));
        return kOk;
    });
}

}  // namespace supermin::cli
