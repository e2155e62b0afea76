#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "fq/numeric.hpp"
#include "fq/reps.hpp"

namespace fq {
namespace {

TEST(CharacterTable, StructureAtQ5) {
    auto t = character_table(5);
    EXPECT_EQ(t.irreps.size(), 8u);  // 4 + (q - 1)
    long sum_sq = 0;
    for (const auto& rep : t.irreps) sum_sq += rep.degree * rep.degree;
    EXPECT_EQ(sum_sq, 20);  // 4*1 + 4*4 = 4q
}

TEST(CharacterTable, DegreeOneValues) {
    for (long q : {5, 7}) {
        auto t = character_table(q);
        for (long e = 0; e < 2 * q; ++e) {
            EXPECT_EQ(t.character(1, GroupElement::rotation(q, e)), CycNum(1));
            EXPECT_EQ(t.character(1, GroupElement::reflection(q, e)), CycNum(-1));
        }
    }
}

TEST(CharacterTable, DegreeTwoValues) {
    for (long q : {5, 7}) {
        auto t = character_table(q);
        // chi_V5(r^q) = zeta_2q^q + zeta_2q^-q = -2.
        EXPECT_EQ(t.character(4, GroupElement::rotation(q, q)), CycNum(-2));
        EXPECT_EQ(t.character(4, GroupElement::reflection(q, 3)), CycNum(0));
        EXPECT_EQ(t.character(4, GroupElement::rotation(q, 1)),
                  cyclotomic(2 * q, 1) + cyclotomic(2 * q, -1));
    }
}

TEST(CharacterTable, OrthogonalityExact) {
    for (long q : {5, 7, 11, 13}) EXPECT_TRUE(characters_orthogonal(character_table(q))) << q;
}

TEST(RationalIrreps, GaloisOrbitsAtQ5) {
    auto rats = rational_irreducibles(5);
    ASSERT_EQ(rats.size(), 6u);
    EXPECT_EQ(rats[0].constituents, std::vector<int>{0});  // W1 = trivial alone
    // W5 = {V5, V7} (k odd), W6 = {V6, V8} (k even).
    EXPECT_EQ(rats[4].constituents, (std::vector<int>{4, 6}));
    EXPECT_EQ(rats[5].constituents, (std::vector<int>{5, 7}));
    EXPECT_EQ(rats[4].degree, 4);
    EXPECT_EQ(rats[5].degree, 4);
    // k5 = k6 = (q - 1)/2 = 2 at q = 5.
    EXPECT_EQ(rats[4].field_degree, 2);
    EXPECT_EQ(rats[5].field_degree, 2);
    for (const auto& w : rats) EXPECT_EQ(w.schur_index, 1);
    EXPECT_EQ(rats[4].multiplicity, 2);
}

TEST(FixedDim, PaperTableExamples) {
    long q = 5;
    auto t = character_table(q);
    EXPECT_EQ(fixed_dim(t, 4, cyclic_subgroup(GroupElement::reflection(q, 0))), 1);  // (V5, <s>)
    EXPECT_EQ(fixed_dim(t, 5, cyclic_subgroup(GroupElement::rotation(q, q))), 2);    // (V6, <r^q>)
    EXPECT_EQ(fixed_dim(t, 1, cyclic_subgroup(GroupElement::reflection(q, 1))), 0);  // (V2, <sr>)
}

TEST(FixedDim, FullTableAgainstNumericOracle) {
    // Independent oracle: average the numerically embedded character over the
    // subgroup and round.
    for (long q : {5, 7, 11}) {
        auto t = character_table(q);
        std::vector<Subgroup> cols = {cyclic_subgroup(GroupElement::reflection(q, 0)),
                                      cyclic_subgroup(GroupElement::reflection(q, 1)),
                                      cyclic_subgroup(GroupElement::reflection(q, -2)),
                                      cyclic_subgroup(GroupElement::reflection(q, -1)),
                                      cyclic_subgroup(GroupElement::rotation(q, q)),
                                      cyclic_subgroup(GroupElement::rotation(q, q + 2))};
        for (std::size_t vi = 0; vi < t.irreps.size(); ++vi) {
            for (const auto& H : cols) {
                std::complex<double> avg = 0;
                for (const auto& h : H.elements()) avg += to_complex_double(t.character(vi, h));
                avg /= static_cast<double>(H.order());
                EXPECT_LT(std::abs(avg.imag()), 1e-9);
                EXPECT_EQ(fixed_dim(t, vi, H), std::lround(avg.real()));
            }
        }
    }
}

TEST(FixedDim, BoundsAndMonotonicity) {
    long q = 7;
    auto t = character_table(q);
    Subgroup trivial = trivial_subgroup(q);
    Subgroup rot_q = cyclic_subgroup(GroupElement::rotation(q, q));   // order 2
    Subgroup rot_2 = cyclic_subgroup(GroupElement::rotation(q, 2));   // order q
    Subgroup rot = cyclic_subgroup(GroupElement::rotation(q, 1));     // order 2q, contains both
    Subgroup g = full_group(q);
    for (std::size_t vi = 0; vi < t.irreps.size(); ++vi) {
        long d = t.irreps[vi].degree;
        EXPECT_EQ(fixed_dim(t, vi, trivial), d);
        EXPECT_LE(fixed_dim(t, vi, rot), fixed_dim(t, vi, rot_q));
        EXPECT_LE(fixed_dim(t, vi, rot), fixed_dim(t, vi, rot_2));
        EXPECT_LE(fixed_dim(t, vi, g), fixed_dim(t, vi, rot));
        EXPECT_LE(fixed_dim(t, vi, g), d);
    }
    EXPECT_EQ(fixed_dim(t, 0, g), 1);  // trivial representation
}

TEST(FixedDim, PaperTableForAllDeskPrimes) {
    const long expected[5][6] = {{0, 0, 0, 0, 1, 1},
                                 {1, 0, 1, 0, 0, 0},
                                 {0, 1, 0, 1, 0, 0},
                                 {1, 1, 1, 1, 0, 0},
                                 {1, 1, 1, 1, 2, 0}};
    for (long q : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        auto t = character_table(q);
        std::vector<Subgroup> cols = {cyclic_subgroup(GroupElement::reflection(q, 0)),
                                      cyclic_subgroup(GroupElement::reflection(q, 1)),
                                      cyclic_subgroup(GroupElement::reflection(q, -2)),
                                      cyclic_subgroup(GroupElement::reflection(q, -1)),
                                      cyclic_subgroup(GroupElement::rotation(q, q)),
                                      cyclic_subgroup(GroupElement::rotation(q, q + 2))};
        for (int row = 0; row < 5; ++row)
            for (int col = 0; col < 6; ++col)
                EXPECT_EQ(fixed_dim(t, row + 1, cols[col]), expected[row][col])
                    << "q=" << q << " row=" << row << " col=" << col;
    }
}

}  // namespace
}  // namespace fq
