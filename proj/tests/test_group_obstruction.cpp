#include "innerpost/group_obstruction.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace innerpost;
using namespace innerpost::testing;

namespace {

GroupMap constant_e(const FiniteGroup& g) { return GroupMap(g.order(), g.identity()); }

GroupMap inverse_map(const FiniteGroup& g) {
    GroupMap m(g.order());
    for (Element a = 0; a < g.order(); ++a)
        m[a] = g.inverse(a);
    return m;
}

PostGroup trivial_post(const FiniteGroup& g) { return from_rb_group(g, constant_e(g)); }

// Cocycle condition evaluated directly on all triples.
bool cocycle_oracle(const FiniteGroup& g, const FiniteGroup& circ, const std::vector<Element>& w) {
    const std::size_t n = g.order();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (g.mul(w[b * n + c], w[a * n + circ.mul(b, c)]) != g.mul(w[a * n + b], w[circ.mul(a, b) * n + c]))
                    return false;
    return true;
}

// All maps z: G -> Z(G) with z(e) = e and z(a o b) = z(a) z(b).
std::vector<GroupMap> central_homomorphisms(const FiniteGroup& g, const FiniteGroup& circ) {
    const auto z = center_group(g);
    const std::size_t n = g.order();
    std::vector<std::size_t> choice(n, 0);
    std::vector<GroupMap> out;
    for (;;) {
        GroupMap m(n);
        for (Element a = 0; a < n; ++a)
            m[a] = z[choice[a]];
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a)
            for (Element b = 0; b < n && ok; ++b)
                ok = m[circ.mul(a, b)] == g.mul(m[a], m[b]);
        if (ok)
            out.push_back(m);
        std::size_t pos = 0;
        while (pos < n && ++choice[pos] == z.size())
            choice[pos++] = 0;
        if (pos == n)
            return out;
    }
}

GroupTwoCocycle coboundary_of(const FiniteGroup& g, const FiniteGroup& circ, const GroupMap& zeta) {
    const std::size_t n = g.order();
    std::vector<Element> w(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            w[a * n + b] = g.mul(g.mul(zeta[a], zeta[b]), g.inverse(zeta[circ.mul(a, b)]));
    return GroupTwoCocycle(g, w);
}

}  // namespace

TEST(GroupObstruction, CocycleValidation) {
    EXPECT_TRUE(GroupTwoCocycle::trivial(s3()).is_trivial());
    // Non-central value.
    std::vector<Element> w(36, 0);
    w[1 * 6 + 1] = 3;
    EXPECT_THROW(GroupTwoCocycle(s3(), w), std::invalid_argument);
    // Not normalized.
    std::vector<Element> v(4, 0);
    v[0 * 2 + 1] = 1;
    EXPECT_THROW(GroupTwoCocycle(z2(), v), std::invalid_argument);
}

TEST(GroupObstruction, OmegaTrivialCases) {
    EXPECT_TRUE(obstruction_cocycle_group(trivial_post(d4()), constant_e(d4())).is_trivial());
    const PostGroup conj = from_rb_group(s3(), inverse_map(s3()));
    EXPECT_TRUE(obstruction_cocycle_group(conj, inverse_map(s3())).is_trivial());
    EXPECT_THROW(obstruction_cocycle_group(conj, constant_e(s3())), std::invalid_argument);
}

TEST(GroupObstruction, ExtensionCocycleOfZ4OverZ2) {
    const FiniteGroup g = z2();
    const std::vector<Element> w{0, 0, 0, 1};
    const GroupTwoCocycle omega(g, w);
    EXPECT_TRUE(cocycle_oracle(g, g, w));
    EXPECT_TRUE(verify_group_2cocycle(omega, g));
    EXPECT_TRUE(brute_force_coboundaries(g, g, w).empty());
    EXPECT_FALSE(coboundary_solve_group(omega, g));
    EXPECT_FALSE(is_group_coboundary_of(omega, g, {0, 0}));
    EXPECT_FALSE(is_group_coboundary_of(omega, g, {0, 1}));
}

TEST(GroupObstruction, PerturbedCellBreaksCocycle) {
    const FiniteGroup g = d4();
    std::vector<Element> w(64, 0);
    w[1 * 8 + 1] = 2;
    const GroupTwoCocycle omega(g, w);
    EXPECT_FALSE(cocycle_oracle(g, g, w));
    EXPECT_FALSE(verify_group_2cocycle(omega, g));
    const auto triple = find_group_2cocycle_violation(omega, g);
    ASSERT_TRUE(triple);
}

TEST(GroupObstruction, CoboundarySolveTrivialAndD4) {
    EXPECT_EQ(coboundary_solve_group(GroupTwoCocycle::trivial(d4()), d4()), constant_e(d4()));
    for (const auto& b : enumerate_rb_operators(d4(), 10'000'000)) {
        const PostGroup p = from_rb_group(d4(), b);
        const FiniteGroup circ = sub_adjacent_group(p);
        const GroupTwoCocycle omega = obstruction_cocycle_group(p, *innerness_witness_group(p));
        EXPECT_TRUE(verify_group_2cocycle(omega, circ));
        const auto zeta = coboundary_solve_group(omega, circ);
        ASSERT_TRUE(zeta);
        EXPECT_TRUE(is_group_coboundary_of(omega, circ, *zeta));
        EXPECT_EQ((*zeta)[d4().identity()], d4().identity());
    }
}

TEST(GroupObstruction, ConstructSimpleCases) {
    const GroupObstructionResult t = construct_rb_from_obstruction_group(trivial_post(d4()));
    ASSERT_EQ(t.status, GroupObstructionStatus::induced);
    EXPECT_EQ(*t.rota_baxter, constant_e(d4()));
    const GroupObstructionResult c = construct_rb_from_obstruction_group(from_rb_group(s3(), inverse_map(s3())));
    ASSERT_EQ(c.status, GroupObstructionStatus::induced);
    EXPECT_EQ(*c.rota_baxter, inverse_map(s3()));
}

TEST(GroupObstruction, ConstructNotInner) {
    const FiniteGroup g = z4();
    std::vector<Element> t(16);
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b)
            t[a * 4 + b] = a % 2 ? g.inverse(b) : b;
    const GroupObstructionResult r = construct_rb_from_obstruction_group(PostGroup(g, t));
    EXPECT_EQ(r.status, GroupObstructionStatus::not_inner);
    EXPECT_EQ(r.outer_element, std::optional<Element>(1));
    EXPECT_STREQ(to_string(r.status), "not-inner");
}

TEST(GroupObstruction, PullbackOrders) {
    for (const auto& g : {z2(), z4(), direct_product(z2(), z2())}) {
        const PullbackGroup pb = pullback_group(trivial_post(g));
        EXPECT_EQ(pb.group.order(), g.order() * g.order());
        EXPECT_TRUE(check_group(pb.group));
    }
    const PullbackGroup s = pullback_group(from_rb_group(s3(), inverse_map(s3())));
    EXPECT_EQ(s.group.order(), 6u);
    EXPECT_TRUE(check_group(s.group));
    for (const auto& b : enumerate_rb_operators(d4(), 10'000'000)) {
        const PostGroup p = from_rb_group(d4(), b);
        const PullbackGroup pb = pullback_group(p);
        EXPECT_EQ(pb.group.order(), 16u);
        EXPECT_TRUE(check_group(pb.group));
        for (const auto& [x, y] : pb.pairs)
            EXPECT_EQ(p.left_multiplication(x), inner_automorphism(d4(), y));
    }
}

TEST(GroupObstruction, DifferenceCocycle) {
    const auto same = rb_difference_cocycle_group(d4(), inverse_map(d4()), inverse_map(d4()));
    ASSERT_TRUE(same.zeta);
    EXPECT_EQ(*same.zeta, constant_e(d4()));
    const auto differ = rb_difference_cocycle_group(s3(), constant_e(s3()), inverse_map(s3()));
    EXPECT_FALSE(differ.zeta);
    EXPECT_FALSE(differ.diagnostic.empty());
}

TEST(GroupObstruction, DifferenceRecoversConstructedCocycle) {
    const FiniteGroup g = d4();
    int nontrivial = 0;
    for (const auto& b : enumerate_rb_operators(g, 10'000'000)) {
        const FiniteGroup circ = sub_adjacent_group(from_rb_group(g, b));
        for (const auto& z : central_homomorphisms(g, circ)) {
            GroupMap b2(g.order());
            for (Element a = 0; a < g.order(); ++a)
                b2[a] = g.mul(b[a], z[a]);
            ASSERT_TRUE(check_rb_group(g, b2));
            const auto d = rb_difference_cocycle_group(g, b, b2);
            ASSERT_TRUE(d.zeta) << d.diagnostic;
            EXPECT_EQ(*d.zeta, z);
            nontrivial += z != constant_e(g);
        }
    }
    EXPECT_GT(nontrivial, 0);
}

TEST(GroupTower, ConstantIdentityLevelsEqual) {
    const GroupTower t = group_tower(d4(), constant_e(d4()), 3);
    ASSERT_EQ(t.levels.size(), 4u);
    for (const auto& l : t.levels)
        EXPECT_EQ(l.table(), d4().table());
    EXPECT_TRUE(t.certified());
}

TEST(GroupTower, InverseOnS3) {
    const FiniteGroup g = s3();
    const GroupTower t = group_tower(g, inverse_map(g), 2);
    ASSERT_EQ(t.levels.size(), 3u);
    for (Element a = 0; a < 6; ++a)
        for (Element b = 0; b < 6; ++b)
            EXPECT_EQ(t.levels[1].mul(a, b), g.mul(b, a));
    // Level 2 by hand: a o2 b = a o1 (B(a) o1 b o1 inv1(B(a))) with o1 the opposite product.
    const FiniteGroup& l1 = t.levels[1];
    for (Element a = 0; a < 6; ++a)
        for (Element b = 0; b < 6; ++b) {
            const Element ba = g.inverse(a);
            EXPECT_EQ(t.levels[2].mul(a, b), l1.mul(a, l1.mul(l1.mul(ba, b), l1.inverse(ba))));
        }
    EXPECT_TRUE(t.certified());
    EXPECT_THROW(group_tower(g, {0, 0, 0, 0, 0, 1}, 2), std::invalid_argument);
}

TEST(GroupTower, AllD4OperatorsDepthThree) {
    for (const auto& b : enumerate_rb_operators(d4(), 10'000'000)) {
        const GroupTower t = group_tower(d4(), b, 3);
        ASSERT_EQ(t.levels.size(), 4u);
        for (const auto& l : t.levels)
            EXPECT_TRUE(check_group(l));
        EXPECT_TRUE(t.certified());
        for (std::size_t i = 1; i < t.levels.size(); ++i) {
            EXPECT_TRUE(check_rb_group(t.levels[i], b));
            EXPECT_TRUE(is_group_homomorphism(t.levels[i], t.levels[i - 1], b));
            GroupMap tilde(8);
            for (Element a = 0; a < 8; ++a)
                tilde[a] = t.levels[i - 1].mul(a, b[a]);
            EXPECT_TRUE(is_group_homomorphism(t.levels[i], t.levels[i - 1], tilde));
        }
    }
}

TEST(GroupObstructionProperty, RoundTripOverEnumerations) {
    for (const auto& g : {s3(), d4()})
        for (const auto& b : enumerate_rb_operators(g, 10'000'000)) {
            const PostGroup p = from_rb_group(g, b);
            const GroupObstructionResult r = construct_rb_from_obstruction_group(p);
            ASSERT_EQ(r.status, GroupObstructionStatus::induced);
            EXPECT_TRUE(check_rb_group(g, *r.rota_baxter));
            EXPECT_EQ(from_rb_group(g, *r.rota_baxter), p);
            EXPECT_TRUE(rb_difference_cocycle_group(g, b, *r.rota_baxter).zeta);
        }
}

TEST(GroupObstructionProperty, WitnessIndependence) {
    const FiniteGroup g = d4();
    const auto z = center_group(g);
    std::mt19937_64 rng(71);
    for (const auto& b : enumerate_rb_operators(g, 10'000'000)) {
        const PostGroup p = from_rb_group(g, b);
        const FiniteGroup circ = sub_adjacent_group(p);
        const GroupMap phi1 = *innerness_witness_group(p);
        GroupMap phi2 = phi1;
        for (Element a = 0; a < g.order(); ++a)
            if (a != g.identity())
                phi2[a] = g.mul(phi1[a], z[rng() % z.size()]);
        ASSERT_TRUE(is_inner_witness_group(p, phi2));
        const GroupTwoCocycle w1 = obstruction_cocycle_group(p, phi1), w2 = obstruction_cocycle_group(p, phi2);
        EXPECT_TRUE(verify_group_2cocycle(w2, circ));
        std::vector<Element> ratio(64);
        for (std::size_t k = 0; k < 64; ++k)
            ratio[k] = g.mul(w1.values()[k], g.inverse(w2.values()[k]));
        const GroupTwoCocycle r(g, ratio);
        EXPECT_TRUE(coboundary_solve_group(r, circ));
        EXPECT_FALSE(brute_force_coboundaries(g, circ, ratio).empty());
    }
}

TEST(GroupObstructionProperty, SolverAgreesWithOracle) {
    std::mt19937_64 rng(72);
    // Abelian groups with trivial action: coboundaries of random zeta times powers of the carry cocycle.
    for (const std::size_t n : {2u, 3u, 4u, 6u}) {
        const FiniteGroup g = FiniteGroup::cyclic(n);
        for (int trial = 0; trial < 12; ++trial) {
            GroupMap zeta(n, 0);
            for (Element a = 1; a < n; ++a)
                zeta[a] = rng() % n;
            const Element c = rng() % n;
            std::vector<Element> w = coboundary_of(g, g, zeta).values();
            for (Element a = 0; a < n; ++a)
                for (Element b = 0; b < n; ++b)
                    if (a + b >= n)
                        w[a * n + b] = (w[a * n + b] + c) % n;
            const GroupTwoCocycle omega(g, w);
            ASSERT_TRUE(cocycle_oracle(g, g, w));
            EXPECT_TRUE(verify_group_2cocycle(omega, g));
            const auto solved = coboundary_solve_group(omega, g);
            EXPECT_EQ(solved.has_value(), !brute_force_coboundaries(g, g, w).empty()) << "n=" << n << " c=" << c;
            EXPECT_EQ(solved.has_value(), c == 0);
            if (solved)
                EXPECT_TRUE(is_group_coboundary_of(omega, g, *solved));
        }
    }
    // Z/2 x Z/2 with random normalized central tables: oracle decides the cocycle condition too.
    const FiniteGroup k4 = direct_product(z2(), z2());
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Element> w(16, 0);
        for (Element a = 1; a < 4; ++a)
            for (Element b = 1; b < 4; ++b)
                w[a * 4 + b] = rng() % 4;
        const GroupTwoCocycle omega(k4, w);
        const bool cocycle = cocycle_oracle(k4, k4, w);
        EXPECT_EQ(verify_group_2cocycle(omega, k4), cocycle);
        if (!cocycle)
            continue;
        EXPECT_EQ(coboundary_solve_group(omega, k4).has_value(), !brute_force_coboundaries(k4, k4, w).empty());
    }
}
