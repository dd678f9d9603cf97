#include <gtest/gtest.h>

#include <set>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hyperhall;
using namespace hhtest;

namespace
{

ErrorKind scheme_error(const LabelMatrix &m)
{
    try {
        (void)validate_scheme(m);
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::InternalInconsistency;
}

/// Every nonempty subset of {2,3,5,7}.
std::vector<PrimeSet> small_prime_sets()
{
    const int p[4] = {2, 3, 5, 7};
    std::vector<PrimeSet> out;
    for (int m = 1; m < 16; ++m) {
        std::vector<int> v;
        for (int i = 0; i < 4; ++i)
            if (m & (1 << i))
                v.push_back(p[i]);
        out.emplace_back(v);
    }
    return out;
}

/// Involutions of a group in index order.
std::vector<int> involutions(const Group &g)
{
    std::vector<int> out;
    for (int x = 1; x < g.order(); ++x)
        if (g.mul(x, x) == 0)
            out.push_back(x);
    return out;
}

} // namespace

TEST(Scheme, OnePointScheme)
{
    AssociationScheme s = validate_scheme({{0}});
    EXPECT_EQ(s.rank(), 1);
    EXPECT_EQ(s.n_points(), 1);
    EXPECT_EQ(s.hypergroup().order(), 1);
}

TEST(Scheme, CycleValencies)
{
    Pentagon p;
    EXPECT_EQ(p.s.valencies(), (std::vector<int>{1, 2, 2}));
    FourCycle f;
    std::vector<int> v = f.sch.valencies();
    EXPECT_EQ(v[0], 1);
    EXPECT_EQ(v[f.r], 2);
    EXPECT_EQ(v[f.s], 1);
}

TEST(Scheme, ValidationErrors)
{
    EXPECT_EQ(scheme_error({{0, 1}, {1}}), ErrorKind::NotSquare);
    EXPECT_EQ(scheme_error({{0, 2}, {2, 0}}), ErrorKind::NotPartition);
    EXPECT_EQ(scheme_error({{0, 0}, {0, 0}}), ErrorKind::IdentityViolation);
    EXPECT_EQ(scheme_error({{0, 1}, {1, 1}}), ErrorKind::IdentityViolation);
    EXPECT_EQ(scheme_error({{0, 1, 1}, {1, 0, 2}, {2, 1, 0}}), ErrorKind::StarViolation);
    // the path on three points: the middle point has two neighbours
    EXPECT_EQ(scheme_error({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}), ErrorKind::RegularityViolation);
}

TEST(Scheme, RegularityViolationCarriesAWitness)
{
    try {
        (void)validate_scheme({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::RegularityViolation);
        EXPECT_EQ(e.witness().size(), 5u);
    }
}

TEST(Scheme, ComplexProducts)
{
    Pentagon p;
    for (int a = 0; a < 3; ++a)
        EXPECT_EQ(complex_product(p.s, a, 0), p.h.singleton(a));
    EXPECT_EQ(complex_product(p.s, p.r, p.r), p.h.subset({0, p.t}));
    FourCycle f;
    EXPECT_EQ(complex_product(f.sch, f.r, f.r), f.h.subset({0, f.s}));
}

TEST(Scheme, IntersectionNumbersAgreeWithPointCounts)
{
    for (const auto &n : catalogue_up_to(12)) {
        const auto &s = n.scheme;
        const int k = s.rank();
        int total = 0;
        for (int r = 0; r < k; ++r)
            total += s.valency(r);
        ASSERT_EQ(total, s.n_points()) << n.name;
        for (int p = 0; p < k; ++p) {
            ASSERT_EQ(s.valency(p), s.a(p, s.star(p), 0)) << n.name;
            for (int q = 0; q < k; ++q) {
                long row = 0;
                for (int r = 0; r < k; ++r)
                    row += static_cast<long>(s.a(p, q, r)) * s.valency(r);
                ASSERT_EQ(row, static_cast<long>(s.valency(p)) * s.valency(q)) << n.name;
                ASSERT_EQ(s.hypergroup().product_mask(p, q), oracle::complex_product(s, p, q)) << n.name;
            }
        }
        // a_pqr by direct counting at one pair per relation
        for (int y = 0; y < s.n_points(); ++y)
            for (int z = 0; z < s.n_points(); ++z)
                if (y == 0 || z == 0)
                    for (int p = 0; p < k; ++p)
                        for (int q = 0; q < k; ++q) {
                            int count = 0;
                            for (int x = 0; x < s.n_points(); ++x)
                                count += s.rel(y, x) == p && s.rel(x, z) == q;
                            ASSERT_EQ(count, s.a(p, q, s.rel(y, z))) << n.name;
                        }
    }
}

TEST(Scheme, ThinSchemeOfAGroupIsTheGroup)
{
    for (const auto &g : groups()) {
        AssociationScheme s = from_group(g.group);
        EXPECT_TRUE(is_thin(s.hypergroup())) << g.name;
        EXPECT_EQ(s.hypergroup().table(), g.group.hypergroup().table()) << g.name;
    }
}

TEST(Scheme, FromGroupExamples)
{
    AssociationScheme c2 = from_group(cyclic_table(2));
    EXPECT_EQ(c2.n_points(), 2);
    EXPECT_EQ(c2.rank(), 2);
    EXPECT_EQ(c2.valencies(), (std::vector<int>{1, 1}));
    AssociationScheme s3 = from_group(group_file("s3"));
    EXPECT_EQ(s3.n_points(), 6);
    EXPECT_EQ(s3.rank(), 6);
    EXPECT_TRUE(is_thin(s3.hypergroup()));
    AssociationScheme c1 = from_group(cyclic_table(1));
    EXPECT_EQ(c1.n_points(), 1);
    EXPECT_EQ(c1.rank(), 1);
}

TEST(Scheme, FromGroupRejectsNonGroups)
{
    try {
        (void)from_group(std::vector<std::vector<int>>{{0, 1}, {1, 1}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAGroup);
    }
}

TEST(Scheme, ClosedSubsetExamples)
{
    Pentagon p;
    auto pc = scheme_closed_subsets(p.s);
    ASSERT_EQ(pc.size(), 2u);
    EXPECT_EQ(pc[0].valency, 1);
    EXPECT_EQ(pc[1].valency, 5);
    AssociationScheme c6 = from_group(group_file("c6"));
    std::vector<std::int64_t> v;
    for (const auto &t : scheme_closed_subsets(c6))
        v.push_back(t.valency);
    EXPECT_EQ(v, (std::vector<std::int64_t>{1, 2, 3, 6}));
}

TEST(Scheme, Order28ExampleValencies)
{
    AssociationScheme s = scheme_file("hm176_28");
    EXPECT_EQ(s.n_points(), 28);
    std::set<std::int64_t> v;
    for (const auto &t : scheme_closed_subsets(s))
        v.insert(t.valency);
    EXPECT_TRUE(v.count(4));
    EXPECT_FALSE(v.count(7));
    EXPECT_TRUE(is_solvable_scheme(s));
}

TEST(Scheme, ValencyDividesContainingValency)
{
    for (const auto &n : catalogue_up_to(12)) {
        auto lattice = scheme_closed_subsets(n.scheme);
        for (const auto &t : lattice)
            for (const auto &u : lattice)
                if (t.relations.elements().is_subset_of(u.relations))
                    EXPECT_EQ(u.valency % t.valency, 0) << n.name;
    }
}

TEST(Scheme, Solvability)
{
    EXPECT_TRUE(is_solvable_scheme(from_group(group_file("c12"))));
    EXPECT_TRUE(is_solvable_scheme(from_group(group_file("c24"))));
    Pentagon p;
    EXPECT_FALSE(is_solvable_scheme(p.s));
    EXPECT_TRUE(is_solvable_scheme(scheme_file("hm176_28")));
    EXPECT_FALSE(is_solvable_scheme(scheme_file("petersen")));
}

TEST(Scheme, QuotientExamples)
{
    Pentagon p;
    QuotientScheme q1 = quotient_scheme(p.s, scheme_trivial(p.s));
    EXPECT_EQ(q1.scheme.matrix(), p.s.matrix());
    QuotientScheme qall = quotient_scheme(p.s, scheme_whole(p.s));
    EXPECT_EQ(qall.scheme.n_points(), 1);
    FourCycle f;
    QuotientScheme q = quotient_scheme(f.sch, make_scheme_closed(f.sch, f.h.subset({0, f.s})));
    EXPECT_EQ(q.scheme.n_points(), 2);
    EXPECT_TRUE(is_thin(q.scheme.hypergroup()));
    EXPECT_EQ(q.point_class, (std::vector<int>{0, 1, 0, 1}));
}

TEST(Scheme, QuotientRejectsOpenSets)
{
    Pentagon p;
    SchemeClosedSubset bogus{ClosedSubsetAccess::trusted(p.h.subset({0, p.r})), 3};
    try {
        (void)quotient_scheme(p.s, bogus);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotClosed);
    }
}

TEST(Scheme, QuotientsCoincideAndObeyTheValencyLaw)
{
    for (const auto &n : catalogue_up_to(10)) {
        const auto &s = n.scheme;
        for (const auto &t : scheme_closed_subsets(s)) {
            QuotientScheme q = quotient_scheme(s, t);
            const auto &qh = q.hypergroup_quotient;
            ASSERT_EQ(q.scheme.hypergroup().table(), qh.hypergroup.table()) << n.name;
            ASSERT_EQ(q.scheme.n_points() * t.valency, s.n_points()) << n.name;
            for (int r = 0; r < s.rank(); ++r) {
                const int c = q.relation_class[r];
                ASSERT_EQ(c, qh.coset_of[r]);
                ASSERT_EQ(q.scheme.valency(c) * t.valency, s.valency(qh.cosets[c])) << n.name;
            }
        }
    }
}

TEST(Scheme, ValencyTransferThroughNestedQuotients)
{
    for (const auto &n : catalogue_up_to(10)) {
        const auto &s = n.scheme;
        auto lattice = scheme_closed_subsets(s);
        for (const auto &o : lattice) {
            QuotientScheme so = quotient_scheme(s, o);
            for (const auto &u : lattice) {
                if (!o.relations.elements().is_subset_of(u.relations))
                    continue;
                ClosedSubset uo = project_closed(so.hypergroup_quotient, u.relations);
                SchemeClosedSubset uo_s = make_scheme_closed(so.scheme, so.scheme.hypergroup().from_bits(uo.bits()));
                QuotientScheme nested = quotient_scheme(so.scheme, uo_s);
                QuotientScheme direct = quotient_scheme(s, u);
                ASSERT_EQ(direct.scheme.n_points(), s.n_points() / u.valency) << n.name;
                ASSERT_EQ(nested.scheme.n_points(), direct.scheme.n_points()) << n.name;
            }
        }
    }
}

TEST(Scheme, PiValencedQuotientElements)
{
    // s pi-valenced and n_T a pi-number imply s^T pi-valenced.
    const auto pis = small_prime_sets();
    for (const auto &n : catalogue_up_to(12)) {
        const auto &s = n.scheme;
        for (const auto &t : scheme_closed_subsets(s)) {
            QuotientScheme q = quotient_scheme(s, t);
            for (const auto &pi : pis) {
                if (!is_pi_number(t.valency, pi))
                    continue;
                for (int r = 0; r < s.rank(); ++r)
                    if (is_pi_number(s.valency(r), pi))
                        ASSERT_TRUE(is_pi_number(q.scheme.valency(q.relation_class[r]), pi))
                            << n.name << " T=" << to_string(t.relations.elements()) << " s=" << r;
            }
        }
    }
}

TEST(Scheme, ThinWhenNoThinPiSubnormalSubsets)
{
    // Solvable, pi-valenced, and {1} is the only thin subnormal closed subset
    // with pi-number valency: then the scheme is thin.
    const auto pis = small_prime_sets();
    int applicable = 0;
    for (const auto &n : catalogue_up_to(12)) {
        const auto &s = n.scheme;
        if (!is_solvable_scheme(s))
            continue;
        const Hypergroup &h = s.hypergroup();
        auto lattice = enumerate_closed_subsets(h);
        for (const auto &pi : pis) {
            if (!is_pi_valenced(s, pi))
                continue;
            bool only_trivial = true;
            for (const auto &t : lattice)
                if (t.size() > 1 && is_thin(h, t) && is_pi_number(t.size(), pi) &&
                    is_subnormal(h, t, whole(h), &lattice))
                    only_trivial = false;
            if (only_trivial) {
                ++applicable;
                EXPECT_TRUE(is_thin(h)) << n.name << " " << to_string(pi);
            }
        }
    }
    EXPECT_GT(applicable, 0);
}

TEST(Scheme, QuotientsBySubnormalSubsetsOfSolvableSchemes)
{
    for (const auto &n : catalogue_up_to(12)) {
        const auto &s = n.scheme;
        if (!is_solvable_scheme(s))
            continue;
        auto lattice = scheme_closed_subsets(s);
        for (const auto &t : lattice) {
            if (!scheme_is_subnormal(s, t, scheme_whole(s)))
                continue;
            QuotientScheme q = quotient_scheme(s, t);
            ASSERT_TRUE(is_solvable_scheme(q.scheme)) << n.name << " T=" << to_string(t.relations.elements());
            // subnormality lifts from S//T
            for (const auto &u : lattice) {
                if (!t.relations.elements().is_subset_of(u.relations))
                    continue;
                ClosedSubset uq = project_closed(q.hypergroup_quotient, u.relations);
                auto uq_s = make_scheme_closed(q.scheme, q.scheme.hypergroup().from_bits(uq.bits()));
                if (scheme_is_subnormal(q.scheme, uq_s, scheme_whole(q.scheme)))
                    ASSERT_TRUE(scheme_is_subnormal(s, u, scheme_whole(s))) << n.name;
            }
        }
    }
}

TEST(Scheme, Conjugation)
{
    AssociationScheme s3 = from_group(group_file("s3"));
    Group g = group_file("s3");
    auto inv = involutions(g);
    ASSERT_EQ(inv.size(), 3u);
    const Hypergroup &h = s3.hypergroup();
    ElementSubset t = h.subset({0, inv[0]});
    EXPECT_EQ(conjugate_subset(s3, t, 0), t);
    // conjugating one transposition by another gives the third
    EXPECT_EQ(conjugate_subset(s3, h.subset({0, inv[0]}), inv[2]), h.subset({0, inv[1]}));
    auto rep = conjugacy(s3, h.subset({0, inv[0]}), h.subset({0, inv[1]}));
    EXPECT_FALSE(rep.t_to_u.empty());
    EXPECT_FALSE(rep.u_to_t.empty());
}

TEST(Scheme, StronglyNormalSubsetsAreFixedByConjugation)
{
    for (const auto &n : catalogue_up_to(9)) {
        const auto &s = n.scheme;
        for (const auto &t : scheme_closed_subsets(s))
            if (scheme_is_strongly_normal(s, t, scheme_whole(s)))
                for (int r = 0; r < s.rank(); ++r)
                    EXPECT_TRUE(conjugate_subset(s, t.relations, r).is_subset_of(t.relations)) << n.name;
    }
}

TEST(Scheme, PiPredicates)
{
    AssociationScheme c6 = from_group(group_file("c6"));
    auto lattice = scheme_closed_subsets(c6);
    auto two = pi_predicates(c6, lattice[1], PrimeSet{2});
    EXPECT_TRUE(two.pi_valenced);
    EXPECT_TRUE(two.closed_pi_subset);
    EXPECT_TRUE(two.hall_pi_subset);
    EXPECT_EQ(scheme_index(lattice[1], scheme_whole(c6)), 3);
    auto one = pi_predicates(c6, scheme_trivial(c6), PrimeSet{5});
    EXPECT_TRUE(one.closed_pi_subset);
    EXPECT_TRUE(is_pi_valenced(scheme_file("hm176_28"), PrimeSet{2}));
    EXPECT_FALSE(is_pi_valenced(scheme_file("pentagon"), PrimeSet{3}));
}
