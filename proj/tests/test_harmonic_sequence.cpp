#include <gtest/gtest.h>

#include <random>

#include "supermin/catalog.hpp"
#include "supermin/harmonic_sequence.hpp"
#include "supermin/json_io.hpp"

using namespace supermin;

namespace {

const HarmonicSequence& seq11() {
    static const HarmonicSequence s = build_sequence(example_family(1, 1));
    return s;
}

/// Σ s_p C_p z^{K_p} u_p with s = (1, 2, 1, 1, 1, 1/2, 1): still quadric and
/// ladder-shaped, but no longer superhorizontal.
CurveC7 scaled_ladder_control() {
    auto c = example_u_coefficients(1, 1);
    c[1] = c[1] * AlgScalar(2);
    c[5] = c[5] * AlgScalar::rational(1, 2);
    return u_ladder_curve(SingularityTypeSpec(1, 1), c);
}

CurveC7 generic_curve(unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-4, 4);
    CurveC7 c;
    for (int p = 0; p < 7; ++p)
        for (int k = 0; k < 7; ++k) c.f[k].add_term(p, AlgScalar(d(rng)) + AlgScalar(d(rng)) * AlgScalar::i());
    return c;
}

}  // namespace

TEST(Sequence, TerminatesOnCatalogCurve) { EXPECT_TRUE(seq11().terminates()); }

TEST(Sequence, DirectrixIsHolomorphic) {
    for (int k = 0; k < 7; ++k) EXPECT_TRUE(seq11().N[0][k].dzbar().is_zero());
}

TEST(Sequence, Orthogonality) {
    const auto r = check_orthogonality(seq11());
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.failing.empty());
    EXPECT_TRUE(hermitian(seq11().N[2], seq11().N[5]).is_zero());
}

TEST(Sequence, RecursionIdentities) {
    EXPECT_TRUE(check_recursion(seq11(), 0));
    EXPECT_TRUE(check_recursion(seq11(), 3));
    EXPECT_THROW(check_recursion(seq11(), 6), PreconditionError);
}

TEST(Sequence, NormsArePositiveAtSamplePoints) {
    for (Complex z : sample_points(seq11(), 10))
        for (int p = 0; p < 7; ++p) EXPECT_GT(seq11().a(p).evaluate(z).real(), 0.0);
}

TEST(Sequence, RequiresLinearlyFullCurve) {
    CurveC7 c = example_family(1, 1);
    c.f[6] = Poly();
    c.f[5] = Poly();
    c.f[4] = Poly();
    try {
        build_sequence(c);
        FAIL() << "expected an error";
    } catch (const PreconditionError& err) {
        EXPECT_NE(std::string(err.what()).find("linearly full"), std::string::npos);
    }
}

TEST(Reality, ConjugatePairsAreProportional) {
    const auto r = check_reality(seq11());
    EXPECT_TRUE(r.pass());
    EXPECT_TRUE(all_zero(wedge2(conj_vec(seq11().N[6]), seq11().N[0])));
}

TEST(Reality, FailsForGenericCurve) {
    const auto s = build_sequence(generic_curve(7));
    EXPECT_FALSE(check_reality(s).pass());
}

TEST(NormProducts, ExactConstants) {
    const auto r = check_norm_products(seq11());
    for (const auto& b : r.balance) {
        ASSERT_TRUE(b.has_value());
        EXPECT_EQ(*b, AlgScalar(1));
    }
    ASSERT_TRUE(r.su10.has_value());
    EXPECT_EQ(*r.su10, AlgScalar(2));
    EXPECT_TRUE(r.pass());
}

TEST(NormProducts, OracleAgreesAtTenPoints) {
    const auto pts = sample_points(seq11(), 10);
    for (Complex z : pts) {
        const auto o = oracle_at(seq11().f0, z);
        for (double b : o.balance) EXPECT_NEAR(b, 1.0, 1e-8);
        EXPECT_NEAR(o.su10, 2.0, 1e-8);
    }
}

TEST(CrossTable, ExactAndUnitGauge) {
    const auto r = check_cross_table(seq11(), sample_points(seq11(), 10));
    EXPECT_TRUE(r.exact_pass());
    EXPECT_LT(r.max_scalar_error, 1e-8);
    EXPECT_TRUE(is_zero_vec(cross(seq11().N[0], seq11().N[1])));
    EXPECT_TRUE(all_zero(wedge2(cross(seq11().N[0], seq11().N[3]), seq11().N[0])));
}

TEST(CrossTable, UnitGaugeScalarForZeroFour) {
    const Complex z{0.4, 0.3};
    const auto fr = unit_gauge_frame(seq11().f0, z);
    const auto w = cross(fr.f[0], fr.f[4]);
    const Complex c = hermitian(w, fr.f[1]) / hermitian(fr.f[1], fr.f[1]);
    EXPECT_LT(std::abs(c - Complex(0.0, -2.0)), 1e-8);
    EXPECT_NEAR(fr.a[3], 1.0, 1e-10);
    EXPECT_LT(fr.next_norm, 1e-8);
}

TEST(CrossTable, TableIsAntisymmetric) {
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            const auto& a = kTableF[i][j];
            const auto& b = kTableF[j][i];
            EXPECT_EQ(a.k, b.k);
            EXPECT_EQ(a.re, -b.re);
            EXPECT_EQ(a.im, -b.im);
        }
}

TEST(Gauge, PolynomialRescalingIsCovariant) {
    const Poly lambda = Poly::monomial(AlgScalar(1), 1) + Poly(AlgScalar(1));
    CurveC7 g = example_family(1, 1);
    for (int k = 0; k < 7; ++k) g.f[k] = lambda * g.f[k];
    const auto s = build_sequence(g);
    const BiPoly l = BiPoly::holomorphic(lambda);
    const RationalFn mod2(l * l.conj());
    for (int p = 0; p < 7; ++p) {
        EXPECT_EQ(s.a(p), mod2 * seq11().a(p)) << "a_" << p;
        const auto fp = s.section(p);
        const auto old = seq11().section(p);
        for (int k = 0; k < 7; ++k) EXPECT_EQ(fp[k], RationalFn(l) * old[k]);
    }
    for (int p = 0; p < 6; ++p) EXPECT_EQ(s.gamma(p), seq11().gamma(p));
    EXPECT_TRUE(check_norm_products(s).pass());
    EXPECT_TRUE(s.terminates());
}

TEST(Sequence, SecondCatalogCurve) {
    const auto s = build_sequence(example_family(1, 2));
    EXPECT_TRUE(s.terminates());
    EXPECT_TRUE(check_orthogonality(s).pass);
    EXPECT_TRUE(check_reality(s).pass());
    EXPECT_TRUE(check_norm_products(s).pass());
    EXPECT_TRUE(check_cross_table(s, sample_points(s, 10)).pass());
}

TEST(NegativeControl, QuadricButNotSuperhorizontal) {
    const auto c = scaled_ladder_control();
    EXPECT_TRUE(bilinear(c.f, c.f).is_zero());
    EXPECT_FALSE(is_superhorizontal(c).superhorizontal);
    const auto s = build_sequence(c);
    EXPECT_TRUE(s.terminates());
    const auto r = check_norm_products(s);
    EXPECT_FALSE(r.pass());
    EXPECT_FALSE(r.su10.has_value() && *r.su10 == AlgScalar(2));
}

TEST(Summary, JsonFields) {
    const auto& s = seq11();
    const auto j = json_io::sequence_summary(s, check_orthogonality(s), check_reality(s), check_norm_products(s));
    EXPECT_EQ(j["a"].size(), 7u);
    EXPECT_TRUE(j["terminates"].get<bool>());
    EXPECT_TRUE(j["norm_products"].get<bool>());
    EXPECT_EQ(j["su10"][0], "2/1");
}
