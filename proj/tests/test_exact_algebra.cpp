#include <gtest/gtest.h>

#include <random>

#include "supermin/catalog.hpp"
#include "supermin/json_io.hpp"
#include "supermin/rational_fn.hpp"
#include "test_support.hpp"

using namespace supermin;
using supermin::testing::random_bipoly;
using supermin::testing::random_nonzero;
using supermin::testing::random_poly;
using supermin::testing::random_scalar;

namespace {
const AlgScalar I = AlgScalar::i();
AlgScalar rt(long n) { return AlgScalar::sqrt(n); }
Poly z(int e) { return Poly::monomial(AlgScalar(1), e); }
BiPoly zz(int a, int b) { return BiPoly::monomial(AlgScalar(1), a, b); }
}  // namespace

TEST(AlgScalar, RadicalClosure) {
    EXPECT_EQ(rt(2) * rt(3), rt(6));
    EXPECT_EQ(rt(6) * rt(10), AlgScalar(2) * rt(15));
    EXPECT_EQ(rt(30) * rt(30), AlgScalar(30));
    EXPECT_EQ(rt(90), AlgScalar(3) * rt(10));
    EXPECT_EQ(rt(-4), AlgScalar(2) * I);
}

TEST(AlgScalar, GaussianProduct) { EXPECT_EQ((AlgScalar(1) + I) * (AlgScalar(1) - I), AlgScalar(2)); }

TEST(AlgScalar, Conjugation) {
    const AlgScalar x = I * rt(30) / AlgScalar(2);
    EXPECT_EQ(x.conj(), -I * rt(30) / AlgScalar(2));
    EXPECT_EQ(rt(15).conj(), rt(15));
}

TEST(AlgScalar, RationalsAreCanonical) {
    EXPECT_EQ(AlgScalar::rational(6, 12), AlgScalar::rational(1, 2));
    EXPECT_EQ(AlgScalar::rational(-3, -9), AlgScalar::rational(1, 3));
    EXPECT_THROW(AlgScalar::rational(1, 0), PreconditionError);
}

TEST(AlgScalar, DivisionByZeroIsAnError) {
    EXPECT_THROW(AlgScalar(1) / AlgScalar(0), DivisionByZero);
    EXPECT_THROW(AlgScalar().inverse(), DivisionByZero);
}

TEST(AlgScalar, RadicalsOutsideTheFieldAreRejected) { EXPECT_THROW(AlgScalar::sqrt(7), PreconditionError); }

TEST(AlgScalar, FieldAxiomsOnRandomPairs) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        const AlgScalar x = random_nonzero(rng);
        const AlgScalar y = random_scalar(rng);
        const AlgScalar w = random_scalar(rng);
        ASSERT_EQ((x * y) * w, x * (y * w));
        ASSERT_EQ(x * (y + w), x * y + x * w);
        ASSERT_EQ(x * x.inverse(), AlgScalar(1));
        ASSERT_EQ(x.conj().conj(), x);
        ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
    }
}

TEST(AlgScalar, FloatImageIsMultiplicative) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        AlgScalar x = random_nonzero(rng);
        AlgScalar y = random_nonzero(rng);
        // unit magnitude up to rounding: scale by the rational nearest 1/|x|
        x = x * AlgScalar(Rational(1.0 / std::abs(x.to_complex())));
        y = y * AlgScalar(Rational(1.0 / std::abs(y.to_complex())));
        const Complex prod = x.to_complex() * y.to_complex();
        EXPECT_LE(std::abs((x * y).to_complex() - prod), 1e-12 * std::abs(prod));
    }
}

TEST(AlgScalar, StringRoundTrip) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        const AlgScalar x = random_scalar(rng, 8);
        EXPECT_EQ(AlgScalar::from_strings(x.to_strings()), x);
    }
    EXPECT_THROW(AlgScalar::from_strings({"1/2"}), ParseError);
    std::vector<std::string> bad(16, "0/1");
    bad[3] = "x";
    EXPECT_THROW(AlgScalar::from_strings(bad), ParseError);
}

TEST(Poly, Derivative) { EXPECT_EQ(z(3).derivative(), AlgScalar(3) * z(2)); }

TEST(Poly, CatalogComponentOrder) { EXPECT_EQ(example_family(1, 2).f[3].ord0(), 4); }

TEST(Poly, NoStoredZeros) {
    Poly p = z(2) + z(5);
    p.add_term(5, AlgScalar(-1));
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.terms().size(), 1u);
}

TEST(Poly, DegreeAndOrderAreAdditive) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        const Poly p = random_poly(rng);
        const Poly q = random_poly(rng);
        if (p.is_zero() || q.is_zero()) continue;
        const Poly pq = p * q;
        ASSERT_EQ(pq.degree(), p.degree() + q.degree());
        ASSERT_EQ(pq.ord0(), p.ord0() + q.ord0());
    }
}

TEST(Poly, ProductRule) {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 100; ++t) {
        const Poly p = random_poly(rng);
        const Poly q = random_poly(rng);
        ASSERT_EQ((p * q).derivative(), p.derivative() * q + p * q.derivative());
    }
}

TEST(Poly, EvaluateMatchesTerms) {
    std::mt19937_64 rng(23);
    const Complex at{0.3, -0.7};
    for (int t = 0; t < 50; ++t) {
        const Poly p = random_poly(rng);
        Complex sum{0.0, 0.0};
        for (const auto& [e, c] : p.terms()) sum += c.to_complex() * std::pow(at, e);
        EXPECT_NEAR(std::abs(p.evaluate(at) - sum), 0.0, 1e-12 * (1.0 + std::abs(sum)));
    }
}

TEST(Poly, Gcd) {
    const Poly a = (z(1) - Poly(AlgScalar(1))) * (z(1) + Poly(rt(2)));
    const Poly b = (z(1) - Poly(AlgScalar(1))) * (z(2) + Poly(AlgScalar(3)));
    EXPECT_EQ(gcd(a, b), z(1) - Poly(AlgScalar(1)));
    EXPECT_EQ(gcd(z(2) + Poly(AlgScalar(1)), z(1)).degree(), 0);
}

TEST(BiPoly, ConjugateSwapsExponents) { EXPECT_EQ(zz(2, 1).conj(), zz(1, 2)); }

TEST(BiPoly, ConjugationIsAnInvolution) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        const BiPoly p = random_bipoly(rng);
        ASSERT_EQ(p.conj().conj(), p);
    }
}

TEST(BiPoly, SelfConjugateValuesAreReal) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 50; ++t) {
        const BiPoly p = random_bipoly(rng);
        const BiPoly h = p + p.conj();
        const Complex v = h.evaluate({0.4, 1.1});
        EXPECT_LE(std::abs(v.imag()), 1e-12 * (1.0 + std::abs(v)));
    }
}

TEST(BiPoly, ConjugationCommutesWithDerivatives) {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 100; ++t) {
        const BiPoly p = random_bipoly(rng);
        ASSERT_EQ(p.dz().conj(), p.conj().dzbar());
    }
}

TEST(BiPoly, MonomialContent) {
    const BiPoly p = zz(3, 2) + AlgScalar(5) * zz(2, 4);
    EXPECT_EQ(p.monomial_content(), std::make_pair(2, 2));
}

TEST(RationalFn, EqualityIsCrossMultiplication) {
    const RationalFn a(zz(1, 0), zz(1, 1));
    const RationalFn b(BiPoly(AlgScalar(1)), zz(0, 1));
    EXPECT_EQ(a, b);
    EXPECT_NE(a, RationalFn(BiPoly(AlgScalar(1)), zz(1, 0)));
    EXPECT_THROW(RationalFn(zz(1, 0), BiPoly()), DivisionByZero);
}

TEST(RationalFn, QuotientRuleAndConstants) {
    const BiPoly q = zz(1, 1) + BiPoly(AlgScalar(1));
    const RationalFn f(zz(1, 0), q);
    EXPECT_EQ(f.dz(), RationalFn(BiPoly(AlgScalar(1)), q * q));
    EXPECT_EQ(RationalFn(AlgScalar(3) * q, q).constant_value(), AlgScalar(3));
    EXPECT_FALSE(f.constant_value().has_value());
    EXPECT_EQ(f.conj().conj(), f);
}

TEST(Serialization, PolyRoundTrip) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        const Poly p = random_poly(rng);
        EXPECT_EQ(json_io::poly_from_json(json_io::to_json(p)), p);
    }
    EXPECT_THROW(json_io::poly_from_json(json_io::Json::parse("[[-1, []]]")), ParseError);
}
