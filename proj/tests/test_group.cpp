#include "innerpost/group.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace innerpost;
using namespace innerpost::testing;

namespace {

std::vector<Element> all(const FiniteGroup& g) {
    std::vector<Element> out(g.order());
    for (Element a = 0; a < g.order(); ++a)
        out[a] = a;
    return out;
}

std::vector<FiniteGroup> sample_groups() {
    return {z2(), z4(), s3(), d4(), direct_product(z2(), z4()), direct_product(z2(), s3())};
}

}  // namespace

TEST(Group, ValidTables) {
    EXPECT_TRUE(check_group(z2()));
    EXPECT_TRUE(check_group(s3()));
    EXPECT_TRUE(check_group(d4()));
    EXPECT_TRUE(check_group(direct_product(z2(), s3())));
    EXPECT_EQ(s3().identity(), 0u);
    for (Element a = 0; a < 6; ++a)
        EXPECT_EQ(s3().mul(a, s3().inverse(a)), 0u);
}

TEST(Group, SwappedCellFails) {
    std::vector<Element> t = s3().table();
    std::swap(t[1 * 6 + 1], t[1 * 6 + 2]);
    const FiniteGroup bad(6, t);
    EXPECT_FALSE(check_group(bad));
    EXPECT_TRUE(find_group_violation(bad));
}

TEST(Group, ConstructionValidatesShape) {
    EXPECT_THROW(FiniteGroup(2, {0, 1, 1}), std::invalid_argument);
    EXPECT_THROW(FiniteGroup(2, {0, 1, 1, 2}), std::invalid_argument);
    EXPECT_THROW(FiniteGroup(2, {0, 1, 1, 0}, {"e"}), std::invalid_argument);
    EXPECT_EQ(FiniteGroup(2, {0, 1, 1, 0}, {"e", "s"}).name(1), "s");
}

TEST(Group, Centers) {
    EXPECT_EQ(center_group(z4()), all(z4()));
    EXPECT_EQ(center_group(s3()), (std::vector<Element>{0}));
    EXPECT_EQ(center_group(d4()), (std::vector<Element>{0, 2}));
}

TEST(Group, InnerAutomorphisms) {
    const FiniteGroup g = s3();
    EXPECT_EQ(inner_automorphism(g, 0), all(g));
    for (Element c = 0; c < 4; ++c)
        EXPECT_EQ(inner_automorphism(z4(), c), all(z4()));
    // Reflection s (index 3) in r^k s^m indexing: s r s = r^2, s r^2 s = r, reflections permuted.
    const GroupMap ad = inner_automorphism(g, 3);
    EXPECT_EQ(ad[1], 2u);
    EXPECT_EQ(ad[2], 1u);
    for (Element b = 0; b < 6; ++b)
        EXPECT_EQ(ad[b], g.mul(g.mul(3, b), 3));
}

TEST(GroupProperty, InnerAutomorphismsAreAutomorphisms) {
    for (const auto& g : sample_groups())
        for (Element c = 0; c < g.order(); ++c) {
            const GroupMap ad = inner_automorphism(g, c);
            EXPECT_TRUE(is_group_homomorphism(g, g, ad));
            EXPECT_TRUE(is_bijection(ad, g.order()));
        }
}

TEST(GroupProperty, AdjointKernelIsCenter) {
    for (const auto& g : sample_groups()) {
        std::vector<Element> kernel;
        for (Element c = 0; c < g.order(); ++c)
            if (inner_automorphism(g, c) == all(g))
                kernel.push_back(c);
        EXPECT_EQ(kernel, center_group(g));
    }
}

TEST(AbelianDecomposition, Factors) {
    const std::vector<Element> trivial{0};
    EXPECT_TRUE(abelian_decomposition(s3(), trivial).invariant_factors().empty());
    const auto z4all = all(z4());
    EXPECT_EQ(abelian_decomposition(z4(), z4all).invariant_factors(), (std::vector<std::size_t>{4}));
    const auto zd4 = center_group(d4());
    EXPECT_EQ(abelian_decomposition(d4(), zd4).invariant_factors(), (std::vector<std::size_t>{2}));
    const FiniteGroup z2z4 = direct_product(z2(), z4());
    EXPECT_EQ(abelian_decomposition(z2z4, all(z2z4)).invariant_factors(), (std::vector<std::size_t>{2, 4}));
    const FiniteGroup z2z2 = direct_product(z2(), z2());
    EXPECT_EQ(abelian_decomposition(z2z2, all(z2z2)).invariant_factors(), (std::vector<std::size_t>{2, 2}));
    const FiniteGroup z2z3 = direct_product(z2(), FiniteGroup::cyclic(3));
    EXPECT_EQ(abelian_decomposition(z2z3, all(z2z3)).invariant_factors(), (std::vector<std::size_t>{6}));
}

TEST(AbelianDecomposition, RejectsBadSubsets) {
    const std::vector<Element> not_closed{0, 1};
    EXPECT_THROW(abelian_decomposition(z4(), not_closed), std::invalid_argument);
    EXPECT_THROW(abelian_decomposition(s3(), all(s3())), std::invalid_argument);
    const std::vector<Element> no_identity{2};
    EXPECT_THROW(abelian_decomposition(z4(), no_identity), std::invalid_argument);
}

TEST(AbelianDecompositionProperty, RoundTripAndGroupLaw) {
    std::vector<std::pair<FiniteGroup, std::vector<Element>>> cases;
    for (const auto& g : sample_groups())
        cases.emplace_back(g, center_group(g));
    const FiniteGroup big = direct_product(direct_product(z2(), z4()), FiniteGroup::cyclic(6));
    cases.emplace_back(big, all(big));
    for (const auto& [g, subset] : cases) {
        const AbelianDecomposition d = abelian_decomposition(g, subset);
        std::size_t product = 1;
        for (std::size_t k = 0; k < d.invariant_factors().size(); ++k) {
            const std::size_t f = d.invariant_factors()[k];
            EXPECT_GT(f, 1u);
            if (k + 1 < d.invariant_factors().size())
                EXPECT_EQ(d.invariant_factors()[k + 1] % f, 0u);
            product *= f;
        }
        EXPECT_EQ(product, subset.size());
        std::set<AbelianDecomposition::Coords> seen;
        for (Element x : subset) {
            EXPECT_EQ(d.from_coords(d.to_coords(x)), x);
            seen.insert(d.to_coords(x));
            EXPECT_EQ(d.from_coords(d.negate(d.to_coords(x))), g.inverse(x));
            for (Element y : subset)
                EXPECT_EQ(d.from_coords(d.add(d.to_coords(x), d.to_coords(y))), g.mul(x, y));
        }
        EXPECT_EQ(seen.size(), subset.size());
    }
}
