#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "bvhodge/cyclic_action.hpp"
#include "bvhodge/error.hpp"
#include "support/generators.hpp"

using namespace bvhodge;

TEST(GroupElement, ReducesAndReportsOrder) {
    EXPECT_EQ(GroupElement(6, 8).residue(), 2);
    EXPECT_EQ(GroupElement(6, -1).residue(), 5);
    EXPECT_EQ(GroupElement(6, 2).order(), 3);
    EXPECT_EQ(GroupElement(6, 0).order(), 1);
    EXPECT_TRUE(GroupElement(4, 4).is_identity());
    EXPECT_THROW(GroupElement(0, 1), ValidationError);
}

TEST(SupportedOrders, OnlyEllipticAutomorphismOrders) {
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(is_supported_order(n), n == 2 || n == 3 || n == 4 || n == 6) << n;
}

TEST(Age, Order3Sectors) {
    EXPECT_EQ(age(LocalAction(3, {0, 1, 2})), Rational(1));
    EXPECT_EQ(age(LocalAction(3, {2, 2, 2})), Rational(2));
}

TEST(Age, IdentityAndOrder4Point) {
    EXPECT_EQ(age(LocalAction(5, {0, 0, 0})), Rational(0));
    EXPECT_EQ(age(LocalAction(4, {2, 3, 3})), Rational(2));
}

TEST(Age, ExponentsReducedBeforeSumming) {
    EXPECT_EQ(LocalAction(4, {6, -1}).exponents(), (std::vector<int>{2, 3}));
    EXPECT_EQ(age(LocalAction(4, {6, -1})), Rational(5, 4));
}

TEST(Unimodular, PrintedExamples) {
    auto check = [](int n, std::vector<int> e, bool expected) {
        const auto r = age_is_integral_iff_unimodular(LocalAction(n, std::move(e)));
        EXPECT_EQ(r.age_is_integral, expected);
        EXPECT_EQ(r.determinant_is_one, expected);
    };
    check(6, {1, 4, 1}, true);
    check(2, {1}, false);
    check(4, {1, 1}, false);
}

TEST(Unimodular, PredicatesAgreeEverywhere) {
    for (int n = 1; n <= 7; ++n)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    const auto r = age_is_integral_iff_unimodular(LocalAction(n, {a, b, c}));
                    EXPECT_EQ(r.age_is_integral, r.determinant_is_one);
                    EXPECT_EQ(r.age_is_integral, (a + b + c) % n == 0);
                }
}

TEST(PowerTransport, PrintedMatrices) {
    EXPECT_EQ(power_transport(LocalAction(6, {4, 4, 4}), 2), LocalAction(6, {2, 2, 2}));
    EXPECT_EQ(power_transport(LocalAction(4, {2, 3}), 3), LocalAction(4, {2, 1}));
    const LocalAction l(5, {1, 3, 4});
    EXPECT_EQ(power_transport(l, 1), l);
}

TEST(PowerTransport, AgeOfInverseIsComplementary) {
    for (int n : {2, 3, 4, 5, 6})
        for (int a = 1; a < n; ++a)
            for (int b = 1; b < n; ++b) {
                const LocalAction l(n, {a, b});
                EXPECT_EQ(age(l) + age(power_transport(l, n - 1)), Rational(l.nonzero_count()));
            }
}

TEST(IntersectionClass, Order4TableEntry) {
    EXPECT_EQ(intersection_class(GroupElement(4, 2), GroupElement(4, 1)), GroupElement(4, 1));
    EXPECT_TRUE(intersection_class(GroupElement(4, 0), GroupElement(4, 0)).is_identity());
    EXPECT_THROW(intersection_class(GroupElement(4, 1), GroupElement(6, 1)), ValidationError);
}

TEST(IntersectionClass, Order6PairMultiset) {
    std::map<int, int> classes;
    for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) ++classes[intersection_class(GroupElement(6, j), GroupElement(6, k)).residue()];
    EXPECT_EQ(classes, (std::map<int, int>{{0, 1}, {1, 24}, {2, 8}, {3, 3}}));
}

TEST(IntersectionClass, CommutativeIdempotentWithZeroAsUnit) {
    for (int n : {2, 3, 4, 6})
        for (int j = 0; j < n; ++j) {
            const GroupElement gj(n, j);
            EXPECT_EQ(intersection_class(gj, gj).residue(), std::gcd(j, n) % n);
            EXPECT_EQ(intersection_class(gj, GroupElement(n, 0)).residue(), std::gcd(j, n) % n);
            for (int k = 0; k < n; ++k) {
                const GroupElement gk(n, k);
                EXPECT_EQ(intersection_class(gj, gk), intersection_class(gk, gj));
            }
        }
}

TEST(EllipticExponent, CotangentConvention) {
    // Order 4: alpha_E^{3} acts on dz by zeta_4^3 = -i.
    EXPECT_EQ(elliptic_exponent(4, 1), 3);
    EXPECT_EQ(elliptic_exponent(4, 2), 2);
    EXPECT_EQ(elliptic_exponent(6, 5), 1);
    for (int n : {2, 3, 4, 6})
        for (int j = 1; j < n; ++j) {
            // Curve directions (0, j) plus the E direction always have age 1.
            EXPECT_EQ(age(LocalAction(n, {0, j, elliptic_exponent(n, j)})), Rational(1));
        }
}

TEST(GeneratedSubgroup, Orders) {
    EXPECT_EQ(generated_subgroup_order(6, 3), 2);
    EXPECT_EQ(generated_subgroup_order(6, 4), 3);
    EXPECT_EQ(generated_subgroup_order(4, 0), 1);
}
