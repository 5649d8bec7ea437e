#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "supermin/curve.hpp"
#include "supermin/harmonic_sequence.hpp"
#include "supermin/plucker.hpp"

namespace supermin::json_io {

using Json = nlohmann::ordered_json;

/// A JSON number printed with 17 significant digits; null if not finite.
inline Json number(double x) {
    if (!std::isfinite(x)) return nullptr;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return Json::parse(buf);
}

inline Json to_json(const AlgScalar& s) { return s.to_strings(); }

inline AlgScalar scalar_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("scalar must be an array of 16 strings");
    std::vector<std::string> s;
    for (const auto& x : j) {
        if (!x.is_string()) throw ParseError("scalar coordinates must be strings");
        s.push_back(x.get<std::string>());
    }
    return AlgScalar::from_strings(s);
}

inline Json to_json(const Complex& z) { return Json::array({number(z.real()), number(z.imag())}); }

/// [[exponent, scalar], …] in increasing exponent.
inline Json to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, to_json(c)}));
    return out;
}

inline Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of [exponent, scalar] pairs");
    Poly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            throw ParseError("polynomial term must be [exponent, scalar]");
        const int e = t[0].get<int>();
        if (e < 0) throw ParseError("negative exponent");
        p.add_term(e, scalar_from_json(t[1]));
    }
    return p;
}

/// [[a, b, scalar], …] for the monomial z^a z̄^b.
inline Json to_json(const BiPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e.first, e.second, to_json(c)}));
    return out;
}

template <class R>
Json vec_to_json(const Vec7<R>& v) {
    Json out = Json::array();
    for (int k = 0; k < 7; ++k) out.push_back(to_json(v[k]));
    return out;
}

/// Row-major.
template <class S>
Json mat_to_json(const Mat7<S>& m) {
    Json out = Json::array();
    for (int r = 0; r < 7; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 7; ++c) row.push_back(to_json(m(r, c)));
        out.push_back(row);
    }
    return out;
}

/// {"k": [k1, k2], "basis": "e", "components": [Poly × 7]}; "k" may be null.
struct CurveFile {
    CurveC7 curve;
    std::optional<std::pair<int, int>> k;
};

inline Json curve_to_json(const CurveC7& c, std::optional<std::pair<int, int>> k) {
    Json out;
    out["k"] = k ? Json::array({k->first, k->second}) : Json(nullptr);
    out["basis"] = c.basis;
    Json comps = Json::array();
    for (int i = 0; i < 7; ++i) comps.push_back(to_json(c.f[i]));
    out["components"] = comps;
    return out;
}

inline CurveFile curve_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("curve file must be a JSON object");
    CurveFile out;
    if (j.contains("k") && !j["k"].is_null()) {
        const auto& k = j["k"];
        if (!k.is_array() || k.size() != 2 || !k[0].is_number_integer() || !k[1].is_number_integer())
            throw ParseError("\"k\" must be [k1, k2]");
        out.k = std::make_pair(k[0].get<int>(), k[1].get<int>());
        if (out.k->first < 1 || out.k->second < 1) throw ParseError("\"k\" entries must be positive");
    }
    const std::string basis = j.value("basis", "e");
    if (basis != "e") throw ParseError("only the e-basis is supported, got \"" + basis + "\"");
    if (!j.contains("components") || !j["components"].is_array() || j["components"].size() != 7)
        throw ParseError("\"components\" must hold 7 polynomials");
    for (int i = 0; i < 7; ++i) out.curve.f[i] = poly_from_json(j["components"][i]);
    return out;
}

inline CurveFile parse_curve(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return curve_from_json(j);
}

template <std::size_t N>
Json int_array(const std::array<int, N>& a) {
    Json out = Json::array();
    for (int x : a) out.push_back(x);
    return out;
}

inline Json to_json(const SingularityReport& r) {
    Json out;
    out["type0"] = int_array(r.type0);
    out["typeInf"] = int_array(r.type_inf);
    out["T"] = int_array(r.T);
    out["delta"] = int_array(r.delta);
    out["area_pi"] = std::to_string(r.area_pi);
    Json formula = Json::array();
    for (const auto& d : r.delta_formula) formula.push_back(d.get_str());
    out["delta_formula"] = formula;
    out["plucker_rhs"] = int_array(r.plucker);
    out["formula_agrees"] = r.formula_agrees;
    out["plucker_holds"] = r.plucker_holds;
    out["symmetric"] = r.symmetric;
    out["palindromic"] = r.palindromic;
    if (r.delta_numeric) {
        Json est = Json::array();
        for (double x : *r.delta_numeric) est.push_back(number(x));
        out["delta_numeric"] = est;
        out["numeric_agrees"] = r.numeric_agrees;
    }
    out["degrees_agree"] = r.formula_agrees && r.numeric_agrees;
    return out;
}

/// Degrees of a_p = D_p / D_{p−1} and per-identity status.
inline Json sequence_summary(const HarmonicSequence& s, const OrthogonalityReport& orth, const RealityReport& real,
                             const NormProductReport& norms) {
    Json out;
    Json a = Json::array();
    for (int p = 0; p < 7; ++p) {
        const auto [nz, nzb] = s.D[p].max_degrees();
        const auto [dz, dzb] = s.d(p - 1).max_degrees();
        a.push_back(Json{{"p", p}, {"num_degree", Json::array({nz, nzb})}, {"den_degree", Json::array({dz, dzb})}});
    }
    out["a"] = a;
    out["terminates"] = s.terminates();
    out["orthogonality"] = orth.pass;
    Json reality = Json::array();
    for (bool b : real.proportional) reality.push_back(b);
    out["reality"] = reality;
    Json balance = Json::array();
    for (const auto& b : norms.balance) balance.push_back(b ? to_json(*b) : Json(nullptr));
    out["balance"] = balance;
    out["su10"] = norms.su10 ? to_json(*norms.su10) : Json(nullptr);
    out["norm_products"] = norms.pass();
    return out;
}

inline Json to_json(const LemmaReport& r) {
    return Json{{"ratio_superhorizontal", number(r.ratio_superhorizontal)},
                {"ratio_d", number(r.ratio_d)},
                {"linearity_residual", number(r.linearity_residual)},
                {"antilinearity_residual", number(r.antilinearity_residual)},
                {"vertical_residual", number(r.vertical_residual)},
                {"finite_difference_residual", number(r.finite_difference_residual)}};
}

/// Two-space indentation and a trailing newline, so files diff cleanly.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace supermin::json_io
