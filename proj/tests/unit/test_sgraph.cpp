#include "quatcong/sgraph.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace quatcong;

namespace {

Involution make_involution(long p, std::vector<size_t> perm) {
    Involution s;
    s.prime = p;
    s.permutation = std::move(perm);
    for (size_t i = 0; i < s.permutation.size(); ++i) s.fixed_count += s.permutation[i] == i;
    return s;
}

// sigma_2 = (0 1), sigma_3 = (2 3), everything else fixed.
std::vector<Involution> toy_involutions() {
    return {make_involution(2, {1, 0, 2, 3}), make_involution(3, {0, 1, 3, 2})};
}

long walk_sign(const std::vector<SignedEdge>& walk) {
    long s = 1;
    for (const auto& e : walk) s *= e.sign.value();
    return s;
}

}  // namespace

TEST(SignPattern, ParseAndPrint) {
    auto s = SignPattern::parse(26, "+-");
    EXPECT_EQ(s.sign(2).value(), 1);
    EXPECT_EQ(s.sign(13).value(), -1);
    EXPECT_EQ(s.to_string(), "2+13-");
    EXPECT_EQ(SignPattern::parse(26, "13:-,2:+"), s);
    EXPECT_EQ(SignPattern::parse(1, "").to_string(), "1");
    EXPECT_THROW(SignPattern::parse(26, "+"), std::invalid_argument);
    EXPECT_THROW(SignPattern::parse(26, "+*"), std::invalid_argument);
    EXPECT_THROW(SignPattern::parse(26, "3:+,2:-"), std::invalid_argument);
    EXPECT_THROW(SignPattern::parse(26, "2:+"), std::invalid_argument);
}

TEST(SignPattern, IndexEnumeration) {
    auto all = SignPattern::all_patterns(30);
    ASSERT_EQ(all.size(), 8u);
    EXPECT_EQ(all.front(), SignPattern::all_plus(30));
    EXPECT_EQ(all.back(), SignPattern::all_minus(30));
    std::set<std::string> seen;
    for (size_t k = 0; k < all.size(); ++k) {
        EXPECT_EQ(all[k], SignPattern::from_index(30, k));
        seen.insert(all[k].to_string());
    }
    EXPECT_EQ(seen.size(), 8u);
    EXPECT_EQ(SignPattern::from_index(30, 1).sign(2).value(), -1);
    EXPECT_EQ(SignPattern::from_index(30, 4).sign(5).value(), -1);
}

TEST(SignedGraph, ToyAdmissibility) {
    auto invs = toy_involutions();
    auto chi = SignPattern::parse(6, "-+");
    SignedGraph g = build_graph(4, invs, chi);
    SIdealClassSet comps = components(g);
    ASSERT_EQ(comps.t(), 2u);
    EXPECT_EQ(comps.components[0], (std::vector<size_t>{0, 1}));
    EXPECT_EQ(comps.components[1], (std::vector<size_t>{2, 3}));

    Admissibility a0 = admissible(g, comps.components[0]);
    EXPECT_TRUE(a0.admissible);
    EXPECT_EQ(a0.plus, (std::vector<size_t>{0}));
    EXPECT_EQ(a0.minus, (std::vector<size_t>{1}));

    Admissibility a1 = admissible(g, comps.components[1]);
    EXPECT_FALSE(a1.admissible);
    ASSERT_FALSE(a1.negative_cycle.empty());
    EXPECT_EQ(walk_sign(a1.negative_cycle), -1);

    EXPECT_EQ(joint_eigenspace_dim(4, invs, chi), 1u);
    EXPECT_EQ(joint_eigenspace_dim(4, invs, SignPattern::all_plus(6)), 2u);
    EXPECT_EQ(joint_eigenspace_dim(4, invs, SignPattern::all_minus(6)), 0u);
}

TEST(SignedGraph, RejectsComponentOfOddSize) {
    // A path on three vertices is a component of size 3.
    SignedGraph g;
    g.vertex_count = 3;
    g.modulus = 2;
    g.edges = {{0, 1, SignValue::minus(), 2}, {1, 2, SignValue::minus(), 2}};
    EXPECT_ANY_THROW(components(g));
}

TEST(SignedGraph, AdmissibleCountEqualsJointEigenspace) {
    for (long n = 2; n <= 60; ++n) {
        if (!is_admissible_level(n)) continue;
        ClassSet cs = class_set(build_algebra(n));
        std::vector<Involution> invs;
        for (long p : prime_factors(n)) invs.push_back(ramified_involution(cs, p));
        for (long m : divisors(n)) {
            SClassNumbers sc = sclass_numbers(cs, invs, m);
            ASSERT_EQ(sc.admissible_counts.size(), size_t(1) << omega(m));
            for (const auto& [chi, count] : sc.admissible_counts) {
                EXPECT_EQ(count, joint_eigenspace_dim(cs.size(), invs, chi)) << n << " " << chi.to_string();
                EXPECT_LE(count, sc.h_bs);
            }
            // The all-plus pattern admits every component.
            EXPECT_EQ(sc.admissible_counts[0].second, sc.h_bs);
        }
        EXPECT_EQ(type_number(cs, invs), sclass_numbers(cs, invs, n).h_bs);
    }
}

TEST(SignedGraph, ComponentSizesArePowersOfTwo) {
    for (long n : {30L, 42L, 66L, 70L, 105L, 110L}) {
        ClassSet cs = class_set(build_algebra(n));
        std::vector<Involution> invs;
        for (long p : prime_factors(n)) invs.push_back(ramified_involution(cs, p));
        SIdealClassSet comps = components(build_graph(cs, invs, SignPattern::all_plus(n)));
        size_t total = 0;
        for (const auto& c : comps.components) {
            EXPECT_EQ(c.size() & (c.size() - 1), 0u);
            EXPECT_LE(c.size(), size_t(1) << omega(n));
            total += c.size();
        }
        EXPECT_EQ(total, cs.size());
    }
}
