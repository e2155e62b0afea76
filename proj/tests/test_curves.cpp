#include <gtest/gtest.h>

#include <random>

#include "fq/cli.hpp"
#include "fq/curves.hpp"

namespace fq {
namespace {

TEST(ParseLambda, Forms) {
    EXPECT_TRUE(parse_lambda("1/3").exact);
    EXPECT_EQ(parse_lambda("1/3").value, CycNum(Rat(1, 3)));
    EXPECT_TRUE(parse_lambda("i").exact);
    EXPECT_EQ(parse_lambda("i").value, cyclotomic(4, 1));
    EXPECT_EQ(parse_lambda("3/4-2/5i").value,
              CycNum(Rat(3, 4)) - CycNum(Rat(2, 5)) * cyclotomic(4, 1));
    EXPECT_EQ(parse_lambda("-1").value, CycNum(-1));
    LambdaValue dec = parse_lambda("0.3+0.1i");
    EXPECT_FALSE(dec.exact);
    EXPECT_LT(std::abs(dec.approx_d() - std::complex<double>(0.3, 0.1)), 1e-15);
    EXPECT_THROW(parse_lambda("foo"), std::invalid_argument);
    EXPECT_THROW(parse_lambda(""), std::invalid_argument);
}

TEST(CurveModel, CoefficientExamples) {
    // lambda = -1 -> c = 0, the x(x^2q + 1) limit curve.
    EXPECT_EQ(curve_coefficient_exact(CycNum(-1)), CycNum(0));
    // lambda = 3 -> c = 2*4/(-2) = -4.
    EXPECT_EQ(curve_coefficient_exact(CycNum(3)), CycNum(-4));
    EXPECT_THROW(curve_coefficient_exact(CycNum(1)), std::domain_error);

    RatFunC c = curve_coefficient_symbolic();
    EXPECT_TRUE(c.den().is_monic());
    EXPECT_EQ(c.eval(CycNum(3)), CycNum(-4));

    CurveModel warn = curve_model(5, parse_lambda("2"));
    EXPECT_FALSE(warn.admissible);
    EXPECT_EQ(warn.warning, "excluded: extra automorphisms");
    EXPECT_TRUE(curve_model(5, parse_lambda("1/3")).admissible);
}

TEST(CurveModel, Squarefreeness) {
    EXPECT_TRUE(curve_squarefree_symbolic(5));
    EXPECT_TRUE(curve_squarefree_symbolic(7));
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> num(-30, 30), den(3, 17);
    int tested = 0;
    while (tested < 100) {
        LambdaValue l = LambdaValue::from_rat(Rat(num(rng), den(rng)));
        if (!lambda_admissible(l)) continue;
        ++tested;
        EXPECT_TRUE(curve_squarefree_exact(5, curve_coefficient_exact(l.value)));
        EXPECT_TRUE(curve_squarefree_numeric(5, to_complex_double(curve_coefficient_exact(l.value))));
    }
}

TEST(VerifyAutomorphisms, PassesSymbolically) {
    for (long q : {5, 7}) {
        auto rep = verify_automorphisms(q);
        EXPECT_TRUE(rep.pass()) << "q = " << q;
        for (const auto& it : rep.items) EXPECT_TRUE(it.pass) << it.name << ": " << it.residual;
    }
}

TEST(VerifyCoveringMap, PassesOnExactSamples) {
    auto rep = verify_covering_map(5, parse_lambda("1/3"));
    EXPECT_TRUE(rep.pass());
    for (const auto& it : rep.items) EXPECT_TRUE(it.pass) << it.name;

    EXPECT_TRUE(verify_covering_map(7, parse_lambda("-2/7")).pass());
    EXPECT_TRUE(verify_covering_map(5, parse_lambda("1/2+1/2i")).pass());

    EXPECT_THROW(verify_covering_map(5, parse_lambda("0.25")), std::invalid_argument);
    EXPECT_THROW(verify_covering_map(5, parse_lambda("2")), std::invalid_argument);
}

TEST(VerifyCoveringMap, RandomExactSamples) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(-20, 20), den(3, 13);
    int tested = 0;
    while (tested < 20) {
        LambdaValue l = LambdaValue::from_exact(CycNum(Rat(num(rng), den(rng))) +
                                                CycNum(Rat(num(rng), den(rng))) * cyclotomic(4, 1));
        if (!lambda_admissible(l)) continue;
        ++tested;
        EXPECT_TRUE(verify_covering_map(5, l).pass()) << l.to_string();
    }
}

TEST(JInvariant, ExactValuesAndS3Invariance) {
    EXPECT_EQ(j_exact(CycNum(-1)), CycNum(1728));
    EXPECT_EQ(j_exact(CycNum(2)), CycNum(1728));
    EXPECT_EQ(j_exact(CycNum(Rat(1, 2))), CycNum(1728));
    EXPECT_EQ(j_exact(cyclotomic(6, 1)), CycNum(0));
    EXPECT_EQ(j_exact(cyclotomic(6, 5)), CycNum(0));
    EXPECT_EQ(j_exact(cyclotomic(4, 1)), CycNum(128));

    RatFun<Rat> j = j_ratfun();
    RatFun<Rat> lam = RatFun<Rat>::x(), one(Rat(1));
    EXPECT_EQ(j.compose(one / lam), j);
    EXPECT_EQ(j.compose(one / (one - lam)), j);
    EXPECT_EQ(j.compose(one - lam), j);
    EXPECT_EQ(j.compose(lam / (lam - one)), j);
}

TEST(EllipticQuotient, LegendreCurve) {
    auto e = elliptic_quotient(parse_lambda("-1"));
    // y^2 = x(x-1)(x+1) = x^3 - x.
    ASSERT_EQ(e.coeffs.size(), 4u);
    EXPECT_EQ(e.coeffs[3].value, CycNum(1));
    EXPECT_EQ(e.coeffs[2].value, CycNum(0));
    EXPECT_EQ(e.coeffs[1].value, CycNum(-1));
    EXPECT_EQ(e.j.value, CycNum(1728));
    EXPECT_THROW(elliptic_quotient(parse_lambda("0")), std::domain_error);
    EXPECT_THROW(elliptic_quotient(parse_lambda("1")), std::domain_error);
    // Orbit mates share j.
    EXPECT_EQ(elliptic_quotient(parse_lambda("2")).j.value, CycNum(1728));
    EXPECT_EQ(elliptic_quotient(parse_lambda("1/2")).j.value, CycNum(1728));
}

TEST(ClassifyLambda, Examples) {
    auto real_rat = classify_lambda(parse_lambda("1/3"));
    EXPECT_TRUE(real_rat.admissible);
    EXPECT_TRUE(real_rat.real_surface);
    EXPECT_TRUE(real_rat.conditions[0]);

    // e^(2 pi i / 5): on the unit circle, lambda = 1/conj(lambda).
    auto circle = classify_lambda(LambdaValue::from_exact(cyclotomic(5, 1)));
    EXPECT_TRUE(circle.admissible);
    EXPECT_TRUE(circle.real_surface);
    EXPECT_TRUE(circle.conditions[2]);
    EXPECT_TRUE(circle.exact_classification);

    auto excluded = classify_lambda(parse_lambda("2"));
    EXPECT_FALSE(excluded.admissible);
    EXPECT_EQ(excluded.excluded_tag, "excluded: extra automorphisms");

    auto degenerate = classify_lambda(parse_lambda("0"));
    EXPECT_FALSE(degenerate.admissible);
    EXPECT_TRUE(degenerate.orbit.empty());

    // Generic non-real point.
    auto generic = classify_lambda(parse_lambda("3+2i"));
    EXPECT_TRUE(generic.admissible);
    EXPECT_FALSE(generic.real_surface);
    ASSERT_EQ(generic.orbit.size(), 6u);
    ASSERT_TRUE(generic.fundamental.has_value());
    auto z = generic.fundamental->approx_d();
    EXPECT_LE(std::abs(z), 1 + 1e-9);
    EXPECT_LE(z.real(), 0.5 + 1e-9);
}

TEST(ClassifyLambda, OrbitClosedUnderGenerators) {
    auto cls = classify_lambda(parse_lambda("5/7+2/3i"));
    ASSERT_EQ(cls.orbit.size(), 6u);
    std::vector<CycNum> orbit;
    for (const auto& l : cls.orbit) orbit.push_back(l.value);
    for (const auto& z : orbit) {
        CycNum a = CycNum(1) / z, b = CycNum(1) / (CycNum(1) - z);
        EXPECT_NE(std::find(orbit.begin(), orbit.end(), a), orbit.end());
        EXPECT_NE(std::find(orbit.begin(), orbit.end(), b), orbit.end());
    }
    // j constant on the orbit.
    for (const auto& z : orbit) EXPECT_EQ(j_exact(z), cls.j->value);
}

TEST(ClassifyLambda, RealTestEquivariantOnSeededSamples) {
    EXPECT_TRUE(real_test_equivariant(equivariance_samples(200, 2026)));
}

TEST(ClassifyLambda, LocusPointsAreRealFlagged) {
    // A point on |z - 1| = 1 away from the other loci: only condition 4.
    Rat t(1, 3);
    Rat d = 1 + t * t;
    CycNum z = CycNum(1) + CycNum((1 - t * t) / d) + CycNum(2 * t / d) * cyclotomic(4, 1);
    auto cls = classify_lambda(LambdaValue::from_exact(z));
    EXPECT_TRUE(cls.real_surface);
    EXPECT_FALSE(cls.conditions[0]);
    EXPECT_FALSE(cls.conditions[1]);
    EXPECT_FALSE(cls.conditions[2]);
    EXPECT_TRUE(cls.conditions[3]);
}

TEST(ModuliBounds, Examples) {
    auto b = moduli_field_bounds(parse_lambda("1/3"));
    EXPECT_EQ(b.degree_lambda, 1);
    EXPECT_EQ(b.degree_j, 1);
    EXPECT_EQ(b.j, CycNum(Rat(21952, 9)));

    auto bi = moduli_field_bounds(parse_lambda("i"));
    EXPECT_EQ(bi.degree_lambda, 2);
    EXPECT_EQ(bi.degree_j, 1);
    EXPECT_EQ(bi.j, CycNum(128));

    auto bm = moduli_field_bounds(parse_lambda("-1"));
    EXPECT_EQ(bm.degree_lambda, 1);
    EXPECT_EQ(bm.j, CycNum(1728));

    auto bz = moduli_field_bounds(LambdaValue::from_exact(cyclotomic(5, 1)));
    EXPECT_EQ(bz.degree_lambda, 4);

    EXPECT_THROW(moduli_field_bounds(parse_lambda("0.5")), std::invalid_argument);
}

TEST(Wiman, IdentityAndNegativeControl) {
    for (long q : {5, 7}) {
        auto rep = wiman_check(q);
        EXPECT_TRUE(rep.pass()) << "q = " << q;
    }
}

TEST(MonomialMaps, ComposeAndPow) {
    long q = 5;
    MonomialMap r{1, cyclotomic(2 * q, 2), cyclotomic(2 * q, 1), 0};
    MonomialMap s{-1, CycNum(1), CycNum(1), -(q + 1)};
    EXPECT_EQ(r.pow(2 * q), MonomialMap::identity());
    EXPECT_EQ(compose(s, s), MonomialMap::identity());
    MonomialMap sr = compose(s, r);
    EXPECT_EQ(compose(sr, sr), MonomialMap::identity());
    // s r s = r^-1 as point maps.
    EXPECT_EQ(compose(s, compose(r, s)), r.pow(2 * q - 1));
}

}  // namespace
}  // namespace fq
