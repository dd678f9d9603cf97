#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hyperhall;
using namespace hhtest;

TEST(Solvable, SingletonHasTheEmptyChain)
{
    Hypergroup one = validate_hypergroup({{{0}}});
    auto c = solvable_chain(one);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->chain.size(), 1u);
    EXPECT_TRUE(c->step_primes.empty());
}

TEST(Solvable, CyclicGroupOfOrderSix)
{
    Group g = group_file("c6");
    auto c = solvable_chain(g.hypergroup());
    ASSERT_TRUE(c.has_value());
    ASSERT_EQ(c->chain.size(), 3u);
    EXPECT_EQ(c->chain.front(), trivial(g.hypergroup()));
    EXPECT_EQ(c->chain.back(), whole(g.hypergroup()));
    std::vector<int> primes = c->step_primes;
    std::sort(primes.begin(), primes.end());
    EXPECT_EQ(primes, (std::vector<int>{2, 3}));
    // deterministic: the lexicographically first cover is the subgroup of order 2
    EXPECT_EQ(c->chain[1].size(), 2);
}

TEST(Solvable, PentagonIsNotSolvable)
{
    Pentagon p;
    EXPECT_FALSE(solvable_chain(p.h).has_value());
    EXPECT_FALSE(is_solvable(p.h));
}

TEST(Solvable, PGroupsAreSolvable)
{
    for (const char *name : {"c4", "c8", "d8", "q8", "d16"}) {
        Group g = group_file(name);
        EXPECT_TRUE(is_solvable(g.hypergroup())) << name;
    }
}

TEST(Solvable, BundledGroupsAreSolvable)
{
    for (const auto &g : groups())
        EXPECT_TRUE(is_solvable_group(g.group)) << g.name;
}

TEST(Solvable, TheOrder28Example)
{
    AssociationScheme s = scheme_file("hm176_28");
    auto c = solvable_chain(s.hypergroup());
    ASSERT_TRUE(c.has_value());
    for (std::size_t i = 1; i < c->chain.size(); ++i)
        EXPECT_EQ(thin_step_order(s.hypergroup(), c->chain[i - 1], c->chain[i]), c->step_primes[i - 1]);
}

TEST(Solvable, ThinStepOrder)
{
    Group g = group_file("s3");
    const Hypergroup &h = g.hypergroup();
    auto lattice = enumerate_closed_subsets(h);
    const ClosedSubset &two = lattice[1], &three = lattice[4];
    ASSERT_EQ(two.size(), 2);
    ASSERT_EQ(three.size(), 3);
    EXPECT_EQ(thin_step_order(h, trivial(h), two), 2);
    EXPECT_EQ(thin_step_order(h, three, whole(h)), 2);
    EXPECT_EQ(thin_step_order(h, two, whole(h)), 0); // not normal, so no thin step
}

TEST(Solvable, ChainsAreValidAndMatchTheOracle)
{
    for (const auto &s : catalogue_up_to(10)) {
        const Hypergroup &h = s.scheme.hypergroup();
        auto closed = oracle::closed_subsets(h);
        auto c = solvable_chain(h);
        ASSERT_EQ(c.has_value(), oracle::solvable(h, detail::full_mask(h.order()), closed)) << s.name;
        if (!c)
            continue;
        ASSERT_EQ(c->chain.front(), trivial(h));
        ASSERT_EQ(c->chain.back(), whole(h));
        for (std::size_t i = 1; i < c->chain.size(); ++i) {
            auto lo = c->chain[i - 1].bits(), hi = c->chain[i].bits();
            EXPECT_TRUE(oracle::strongly_normal(h, lo, hi)) << s.name;
            EXPECT_EQ(static_cast<int>(oracle::double_cosets(h, lo, lo, hi).size()), c->step_primes[i - 1]);
            EXPECT_TRUE(oracle::is_prime(c->step_primes[i - 1]));
        }
    }
}
