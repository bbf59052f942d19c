#include <gtest/gtest.h>

#include <vector>

#include "bvhodge/closed_forms.hpp"
#include "bvhodge/error.hpp"
#include "bvhodge/orbifold_engine.hpp"
#include "support/generators.hpp"

using namespace bvhodge;

namespace {

Order4Invariants first_type(int r, int m, int k, int a, int b, int n1, int g_D) {
    Order4Invariants inv;
    inv.r = r;
    inv.m = m;
    inv.k = k;
    inv.a = a;
    inv.b = b;
    inv.n1 = n1;
    inv.g_D = g_D;
    inv.d_type = DType::first;
    return inv;
}

Order6Invariants order6_base() {
    Order6Invariants inv;
    inv.r = 2;
    inv.m = 4;
    return inv;
}

}  // namespace

TEST(HodgeOrder2, Substitution) {
    EXPECT_EQ(hodge_order2(9, 13, 2, 3), (HodgePair{18, 24}));
    EXPECT_EQ(hodge_order2(14, 8, 0, 0), (HodgePair{15, 7}));
    EXPECT_EQ(hodge_order2(10, 12, 1, 1), (HodgePair{15, 15}));
}

TEST(HodgeOrder2, Preconditions) {
    EXPECT_THROW(hodge_order2(10, 13, 0, 0), ValidationError);
    EXPECT_THROW(hodge_order2(0, 22, 0, 0), ValidationError);
    EXPECT_THROW(hodge_order2(22, 0, 0, 0), ValidationError);
}

TEST(ClassicBV, Values) {
    EXPECT_EQ(classic_bv(2, 3), (HodgePair{18, 24}));
    EXPECT_EQ(classic_bv(0, 0), (HodgePair{11, 11}));
    EXPECT_EQ(classic_bv(10, 0), (HodgePair{61, 1}));
}

TEST(ClassicBV, AgreesWithOrder2UnderLatticeRelation) {
    for (int N = 0; N <= 12; ++N)
        for (int Np = 0; Np <= 12; ++Np) {
            const int r = 10 + N - Np;
            if (r < 1 || r > 21) continue;
            EXPECT_EQ(classic_bv(N, Np), hodge_order2(r, 22 - r, N, Np)) << N << "," << Np;
        }
}

TEST(HodgeOrder3, Substitution) {
    EXPECT_EQ(hodge_order3(4, 9, 2, 3, 2), (HodgePair{26, 20}));
    EXPECT_EQ(hodge_order3(8, 7, 0, 0, 0), (HodgePair{9, 6}));
    EXPECT_THROW(hodge_order3(4, 8, 2, 3, 2), ValidationError);
}

TEST(HodgeOrder3, EachPointAddsThree) {
    const auto base = hodge_order3(8, 7, 2, 3, 2);
    const auto more = hodge_order3(8, 7, 2, 4, 2);
    EXPECT_EQ(more.h11 - base.h11, 3);
    EXPECT_EQ(more.h21, base.h21);
}

TEST(HodgeOrder4, WorkedFirstType) {
    EXPECT_EQ(hodge_order4(first_type(11, 3, 2, 1, 3, 6, 1)), (HodgePair{51, 9}));
}

TEST(HodgeOrder4, DegenerateFirstType) {
    const auto lattice = aas_relations_order4(1, 0, 3, 0, 1);
    EXPECT_EQ(lattice, (LatticeDims{10, 4}));
    // 1 + 10 + 7 + 9 + 12 + 0 = 39.
    EXPECT_EQ(hodge_order4(first_type(10, 4, 1, 0, 3, 6, 0)), (HodgePair{39, 3}));
}

TEST(HodgeOrder4, SecondTypeN2Coefficient) {
    Order4Invariants inv;
    inv.d_type = DType::second;
    inv.r = 10;
    inv.m = 4;
    inv.k = 1;
    inv.g_D = 3;
    inv.n1 = 6;
    inv.n2 = 0;
    inv.b = 4;
    const auto base = hodge_order4(inv);
    EXPECT_EQ(base.h21, inv.m + 2 * inv.g_D);
    inv.n1 = 4;
    inv.n2 = 2;
    inv.b = 3;
    const auto shifted = hodge_order4(inv);
    EXPECT_EQ(base.h21 - shifted.h21, 1);
}

TEST(HodgeOrder4, SecondTypeOddN2Throws) {
    Order4Invariants inv;
    inv.d_type = DType::second;
    inv.r = 10;
    inv.m = 4;
    inv.k = 0;
    inv.g_D = 1;
    inv.n1 = 3;
    inv.n2 = 1;
    inv.b = 1;
    EXPECT_THROW(hodge_order4(inv), ValidationError);
}

TEST(HodgeOrder4, RelationViolationThrows) {
    auto inv = first_type(11, 3, 2, 1, 3, 6, 1);
    inv.n1 = 8;
    EXPECT_THROW(hodge_order4(inv), ValidationError);
}

TEST(AasRelations, Values) {
    EXPECT_EQ(aas_relations_order4(2, 1, 3, 1, 1), (LatticeDims{11, 3}));
    const auto zero = aas_relations_order4(0, 0, 0, 0, 0);
    EXPECT_EQ(zero, (LatticeDims{6, 6}));
    EXPECT_EQ(22 - zero.r - 2 * zero.m, 4);
    EXPECT_THROW(aas_relations_order4(1, 0, 0, 0, 0), ValidationError);
    EXPECT_THROW(aas_relations_order4(0, 6, 2, 0, 0), ValidationError);  // m < 0
}

TEST(AasRelations, GeneratedOrder4TuplesAreConsistent) {
    bvtest::Rng rng(31);
    for (int it = 0; it < 200; ++it) {
        const auto inv = bvtest::random_order4(rng);
        const int h = inv.d_type == DType::first ? inv.k - inv.g_D : inv.k;
        EXPECT_EQ(aas_relations_order4(inv.k, inv.a, inv.b, inv.g_D, h), (LatticeDims{inv.r, inv.m}));
    }
}

TEST(HodgeOrder6, GenusOneD) {
    auto inv = order6_base();
    inv.g_D = 1;
    inv.g_G = inv.g_G_quot = inv.g_F1 = inv.g_F1_quot = 1;
    inv.l = inv.k = inv.N = 1;
    EXPECT_EQ(hodge_order6(inv).h21, 4 - 1 + 8);
    EXPECT_EQ(hodge_order6(inv), (HodgePair{11, 11}));
}

TEST(HodgeOrder6, EmptyDegenerate) {
    EXPECT_EQ(hodge_order6(order6_base()), (HodgePair{3, 3}));
}

TEST(HodgeOrder6, PointCoefficients) {
    auto inv = order6_base();
    const auto base = hodge_order6(inv);
    inv.p25 = 1;
    EXPECT_EQ(hodge_order6(inv).h11 - base.h11, 3);
    inv.p25 = 0;
    inv.p34 = 1;
    EXPECT_EQ(hodge_order6(inv).h11 - base.h11, 1);
}

TEST(HodgeOrder6, Preconditions) {
    auto inv = order6_base();
    inv.r = 3;
    EXPECT_THROW(hodge_order6(inv), ValidationError);
    inv = order6_base();
    inv.g_D = 2;
    EXPECT_THROW(hodge_order6(inv), ValidationError);
    inv = order6_base();
    inv.g_D = 1;
    EXPECT_THROW(hodge_order6(inv), ValidationError);  // G and F1 must be D
}

TEST(EulerFormula, Reductions) {
    const std::vector<Count> four{8, 12};
    EXPECT_EQ(euler_formula(4, four), 84);
    const std::vector<Count> two{-2};
    EXPECT_EQ(euler_formula(2, two), -12);
    const std::vector<Count> three{5};
    EXPECT_EQ(euler_formula(3, three), 40);
    EXPECT_EQ(euler_formula(6, std::vector<Count>{1, 0, 0}), 4);
    EXPECT_EQ(euler_formula(6, std::vector<Count>{0, 1, 0}), 4);
    EXPECT_EQ(euler_formula(6, std::vector<Count>{0, 0, 1}), 2);
    EXPECT_THROW(euler_formula(5, std::vector<Count>{1}), ValidationError);
    EXPECT_THROW(euler_formula(4, std::vector<Count>{1}), ValidationError);
}

TEST(CyEulerRelation, Values) {
    EXPECT_EQ(cy_euler_relation(51, 84), 9);
    EXPECT_EQ(cy_euler_relation(7, 0), 7);
    EXPECT_EQ(cy_euler_relation(18, -12), 24);
    EXPECT_THROW(cy_euler_relation(5, 3), ValidationError);
}

TEST(Corollary, DirectEvaluation) {
    EXPECT_EQ(corollary_order6(4, 4, 0, 0, 0, 0, 0, 0, 0, 0), 2);
    EXPECT_EQ(corollary_order6(2, 4, 0, 0, 0, 1, 1, 2, 3, 0), -4);
}

TEST(Corollary, InvariantOverloadUsesDerivedN) {
    auto inv = order6_base();
    inv.p25 = 1;
    inv.n_prime = 2;
    EXPECT_EQ(corollary_order6(inv), corollary_order6(2, 4, 0, 0, 0, 2, 1, 0, 5, 0));
    inv.n = 7;
    EXPECT_EQ(corollary_order6(inv), corollary_order6(2, 4, 0, 0, 0, 2, 1, 0, 7, 0));
}

TEST(ClosedFormHodge, DispatchesOnOrder) {
    EXPECT_EQ(closed_form_hodge(Order2Invariants{9, {3, 0}}), (HodgePair{18, 24}));
    EXPECT_EQ(closed_form_hodge(Order3Invariants{4, 9, 2, 3, 2}), (HodgePair{26, 20}));
    EXPECT_EQ(closed_form_hodge(first_type(11, 3, 2, 1, 3, 6, 1)), (HodgePair{51, 9}));
    EXPECT_EQ(closed_form_hodge(order6_base()), (HodgePair{3, 3}));
}

// The closed formulas agree with the orbifold computation on consistent tuples.
TEST(ClosedFormHodge, AgreesWithEngine) {
    bvtest::Rng rng(41);
    for (int order : {2, 3, 4, 6})
        for (int it = 0; it < 60; ++it) {
            const auto inv = bvtest::random_invariants(rng, order);
            const auto diamond = orbifold_hodge_diamond(from_invariants(inv));
            const auto cf = closed_form_hodge(inv);
            EXPECT_EQ(cf.h11, diamond.at(1, 1)) << "order " << order;
            EXPECT_EQ(cf.h21, diamond.at(2, 1)) << "order " << order;
        }
}

TEST(EulerFormula, AgreesWithPairSum) {
    bvtest::Rng rng(43);
    for (int order : {2, 3, 4, 6})
        for (int it = 0; it < 60; ++it) {
            const auto cfg = from_invariants(bvtest::random_invariants(rng, order));
            EXPECT_EQ(euler_formula(order, fixed_euler_numbers(cfg)), orbifold_euler_pairsum(cfg));
        }
}
