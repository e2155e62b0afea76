#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "fq/cyclotomic.hpp"
#include "fq/numeric.hpp"
#include "fq/rational_function.hpp"

namespace fq {
namespace {

TEST(Rat, CanonicalForm) {
    Rat r(6, -8);
    EXPECT_EQ(numerator(r), -3);
    EXPECT_EQ(denominator(r), 4);
    EXPECT_EQ(rat_from_string("-3/4"), r);
    EXPECT_EQ(rat_to_string(r), "-3/4");
    EXPECT_THROW(rat_from_string("1/0"), std::invalid_argument);
    EXPECT_THROW(rat_from_string("x"), std::invalid_argument);
}

TEST(Cyclotomic, RootOfUnityExamples) {
    EXPECT_EQ(cyclotomic(1, 0), CycNum(1));
    CycNum i = cyclotomic(4, 1);
    ASSERT_EQ(i.coords().size(), 2u);
    EXPECT_EQ(i.coords()[0], 0);
    EXPECT_EQ(i.coords()[1], 1);
    EXPECT_EQ(i * i, CycNum(-1));  // minimal polynomial x^2 + 1

    // Oracle for zeta_10^5: evaluate exp(2 pi i 5/10) numerically.
    std::complex<double> num = std::polar(1.0, 2 * 3.14159265358979323846 * 5 / 10);
    EXPECT_LT(std::abs(num - std::complex<double>(-1.0, 0.0)), 1e-12);
    EXPECT_EQ(cyclotomic(10, 5), CycNum(-1));
}

TEST(Cyclotomic, PowerAndConjugation) {
    for (long n : {2, 3, 4, 5, 6, 8, 12, 30, 200}) {
        CycNum z = cyclotomic(n, 1);
        EXPECT_EQ(z.pow(n), CycNum(1)) << "n = " << n;
        EXPECT_EQ(z * z.conj(), CycNum(1)) << "n = " << n;
    }
}

TEST(Cyclotomic, CyclotomicPolynomialVanishes) {
    for (long n = 1; n <= 200; ++n) {
        CycNum z = cyclotomic(n, 1);
        EXPECT_TRUE(cyclotomic_polynomial(n).eval<CycNum>(z).is_zero()) << "n = " << n;
        EXPECT_EQ(z.pow(n), CycNum(1)) << "n = " << n;
    }
}

TEST(Cyclotomic, MixedConductorArithmeticAndDescent) {
    CycNum a = cyclotomic(6, 1) + cyclotomic(4, 1);  // conductor 12
    EXPECT_EQ(a.conductor(), 12);
    CycNum b = a - cyclotomic(4, 1);
    EXPECT_EQ(b, cyclotomic(6, 1));
    EXPECT_EQ(b.simplify().conductor(), 6);
    EXPECT_EQ(cyclotomic(12, 6).simplify().conductor(), 1);  // zeta_12^6 = -1
    EXPECT_EQ(cyclotomic(8, 2).simplify(), cyclotomic(4, 1));
}

TEST(Cyclotomic, GaloisPermutesRoots) {
    CycNum z = cyclotomic(7, 1);
    EXPECT_EQ(z.galois(3), cyclotomic(7, 3));
    EXPECT_THROW(cyclotomic(6, 1).galois(2), std::invalid_argument);
}

TEST(NumericEmbedding, Examples) {
    Cplx i = cyc_to_complex(cyclotomic(4, 1), 15);
    EXPECT_LT(static_cast<double>(abs(i - Cplx(0, 1))), 1e-15);

    // 2 cos(pi/3) = 1 by direct evaluation.
    Cplx c = cyc_to_complex(cyclotomic(6, 1) + cyclotomic(6, 1).conj(), 12);
    EXPECT_LT(static_cast<double>(abs(c - Cplx(1, 0))), 1e-12);

    EXPECT_LT(static_cast<double>(abs(cyc_to_complex(CycNum(0), 12))), 1e-30);
    EXPECT_THROW(cyc_to_complex(CycNum(1), 64), std::invalid_argument);
    EXPECT_THROW(cyc_to_complex(CycNum(1), 0), std::invalid_argument);
}

TEST(NumericEmbedding, RingHomomorphismOnRandomPairs) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> conduct(1, 24);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int iter = 0; iter < 200; ++iter) {
        long n = conduct(rng), m = conduct(rng);
        CycNum a = CycNum(coeff(rng)) + CycNum(coeff(rng)) * cyclotomic(n, 1);
        CycNum b = CycNum(coeff(rng)) + CycNum(coeff(rng)) * cyclotomic(m, 1);
        Cplx ea = cyc_to_complex(a, 20), eb = cyc_to_complex(b, 20);
        EXPECT_LT(static_cast<double>(abs(cyc_to_complex(a + b, 20) - (ea + eb))), 1e-18);
        EXPECT_LT(static_cast<double>(abs(cyc_to_complex(a * b, 20) - (ea * eb))), 1e-16);
    }
}

template <class K, class Gen>
void field_axioms(Gen make, int cases) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < cases; ++i) {
        K a = make(rng), b = make(rng), c = make(rng);
        EXPECT_TRUE((a + b) + c == a + (b + c));
        EXPECT_TRUE(a * (b + c) == a * b + a * c);
        EXPECT_TRUE(a * b == b * a);
        if (!(a == K(0))) {
            EXPECT_TRUE(a * (K(1) / a) == K(1));
        }
        EXPECT_TRUE(a + (K(0) - a) == K(0));
    }
}

TEST(FieldAxioms, Rat) {
    field_axioms<Rat>(
        [](std::mt19937_64& rng) {
            std::uniform_int_distribution<long> d(-50, 50);
            long den = 0;
            while (den == 0) den = d(rng);
            return Rat(d(rng), den);
        },
        1000);
}

TEST(FieldAxioms, CycNum) {
    field_axioms<CycNum>(
        [](std::mt19937_64& rng) {
            std::uniform_int_distribution<long> n(1, 20), c(-4, 4);
            CycNum z = cyclotomic(n(rng), 1);
            return CycNum(c(rng)) + CycNum(c(rng)) * z + CycNum(c(rng)) * z * z;
        },
        1000);
}

TEST(FieldAxioms, RatFun) {
    using F = RatFun<CycNum>;
    field_axioms<F>(
        [](std::mt19937_64& rng) {
            std::uniform_int_distribution<long> c(-3, 3), d(0, 2);
            auto poly = [&] {
                std::vector<CycNum> v(d(rng) + 1, CycNum(0));
                for (auto& x : v) x = CycNum(c(rng));
                return Poly<CycNum>(v);
            };
            Poly<CycNum> den = poly();
            if (den.is_zero()) den = Poly<CycNum>(CycNum(1));
            return F(poly(), den);
        },
        1000);
}

TEST(Poly, DivisionProperty) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-9, 9), d(0, 8);
    for (int iter = 0; iter < 500; ++iter) {
        auto poly = [&](int deg) {
            std::vector<Rat> v(deg + 1);
            for (auto& x : v) x = Rat(c(rng));
            return Poly<Rat>(v);
        };
        Poly<Rat> f = poly(d(rng)), g = poly(d(rng));
        if (g.is_zero()) continue;
        auto [quot, rem] = Poly<Rat>::divmod(f, g);
        EXPECT_TRUE(quot * g + rem == f);
        EXPECT_LT(rem.degree(), g.degree());
    }
}

TEST(RatFun, NormalizationExamples) {
    using F = RatFun<CycNum>;
    // (2 l^2 - 2)/(2 l - 2) -> l + 1.
    F f(Poly<CycNum>({CycNum(-2), CycNum(0), CycNum(2)}), Poly<CycNum>({CycNum(-2), CycNum(2)}));
    EXPECT_EQ(f, F(Poly<CycNum>({CycNum(1), CycNum(1)})));
    EXPECT_TRUE(f.den().is_monic());

    // Idempotent.
    F g = ratfun_normalize(f.num(), f.den());
    EXPECT_EQ(g, f);

    // (1 + l)/(1 - l) at 0 and at 3.
    F h(Poly<CycNum>({CycNum(1), CycNum(1)}), Poly<CycNum>({CycNum(1), CycNum(-1)}));
    EXPECT_EQ(h.eval(CycNum(0)), CycNum(1));
    EXPECT_EQ(h.eval(CycNum(3)), CycNum(-2));

    EXPECT_THROW(F(Poly<CycNum>(CycNum(1)), Poly<CycNum>()), std::domain_error);
}

}  // namespace
}  // namespace fq
