// Acceptance runner: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <hyperhall/hyperhall.hpp>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

using namespace hyperhall;
using namespace hhtest;

namespace
{

/// Collects the first few problems of a criterion.
struct Outcome
{
    std::size_t checks = 0;
    std::vector<std::string> problems;
    std::string summary;

    void expect(bool ok, const std::string &what)
    {
        ++checks;
        if (!ok && problems.size() < 5)
            problems.push_back(what);
        else if (!ok)
            problems.emplace_back();
    }
    bool passed() const { return problems.empty(); }
};

std::vector<PrimeSet> prime_sets_up_to_seven()
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

/// Every subset of the primes dividing n, the empty set included.
std::vector<PrimeSet> prime_subsets(int n)
{
    const std::vector<int> primes = prime_divisors(n);
    std::vector<PrimeSet> out;
    for (std::uint32_t m = 0; m < (1u << primes.size()); ++m) {
        std::vector<int> v;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (m & (1u << i))
                v.push_back(primes[i]);
        out.emplace_back(v);
    }
    return out;
}

/// Valency of a relation mask, summed directly from the scheme.
std::int64_t mask_valency(const AssociationScheme &s, oracle::Mask m)
{
    std::int64_t v = 0;
    for (int r = 0; r < s.rank(); ++r)
        if (m & oracle::bit(r))
            v += s.valency(r);
    return v;
}

bool pi_number(std::int64_t n, const PrimeSet &pi) { return pi_part(n, pi) == n; }

/// Every scheme the corpus provides: the catalogue files and the named schemes.
std::vector<NamedScheme> all_schemes()
{
    std::vector<NamedScheme> out = catalogue_up_to(12);
    for (const auto &s : catalogue(28))
        out.push_back(s);
    for (const char *name : {"c4cycle", "hm176_28", "pentagon", "petersen"})
        out.push_back({name, scheme_file(name)});
    for (const auto &g : groups())
        out.push_back({g.name, from_group(g.group)});
    return out;
}

Outcome order28_example()
{
    Outcome o;
    const auto target = scheme_file("hm176_28").matrix();
    int matches = 0;
    bool target_matches = false;
    for (const auto &n : catalogue(28)) {
        const auto &s = n.scheme;
        if (!is_pi_valenced(s, PrimeSet{2}) || !is_solvable_scheme(s))
            continue;
        std::set<std::int64_t> v;
        for (const auto &t : scheme_closed_subsets(s))
            v.insert(t.valency);
        if (!v.count(4) || v.count(7))
            continue;
        ++matches;
        target_matches = target_matches || s.matrix() == target;
        HallCertificate c = find_hall(s, PrimeSet{2});
        o.expect(c.hall.valency == 4, n.name + ": n_T = " + std::to_string(c.hall.valency));
        o.expect(c.index == 7, n.name + ": index = " + std::to_string(c.index));
        o.expect(pi_predicates(s, c.hall, PrimeSet{2}).hall_pi_subset, n.name + ": certificate not a Hall subset");
        if (s.matrix() == target)
            o.summary = n.name + " matches; n_T 4, index 7";
    }
    o.expect(matches >= 1, "no order-28 scheme has the stated properties");
    o.expect(target_matches, "the bundled example is not among the matches");
    o.summary += "; " + std::to_string(matches) + " catalogue scheme(s) match";
    return o;
}

Outcome hall_suite()
{
    Outcome o;
    int instances = 0;
    for (const auto &n : catalogue_up_to(12)) {
        const auto &s = n.scheme;
        if (!is_solvable_scheme(s))
            continue;
        const auto closed = oracle::closed_subsets(s.hypergroup());
        for (const auto &pi : prime_sets_up_to_seven()) {
            if (!is_pi_valenced(s, pi))
                continue;
            ++instances;
            const std::string where = n.name + " " + to_string(pi);
            // Hall and closed pi-subsets straight from the oracle lattice
            int oracle_halls = 0;
            for (auto m : closed) {
                const std::int64_t v = mask_valency(s, m);
                oracle_halls += pi_number(v, pi) && pi_part(s.n_points() / v, pi) == 1;
            }
            auto halls = hall_subsets_exhaustive(s, pi);
            o.expect(static_cast<int>(halls.size()) == oracle_halls, where + ": Hall count differs from the oracle");
            o.expect(oracle_halls > 0, where + ": no Hall subset");
            HallCertificate c = find_hall(s, pi);
            o.expect(pi_predicates(s, c.hall, pi).hall_pi_subset, where + ": find_hall result is not Hall");
            for (const auto &t : halls)
                for (const auto &u : halls) {
                    auto r = conjugating_element(s, pi, t, u);
                    o.expect(conjugate_subset(s, t.relations, r.conjugator) == u.relations.elements(),
                             where + ": conjugator does not conjugate");
                }
            for (auto m : closed) {
                if (!pi_number(mask_valency(s, m), pi))
                    continue;
                auto t = make_scheme_closed(s, s.hypergroup().from_bits(m));
                HallCertificate e = extend_to_hall(s, pi, t);
                o.expect(t.relations.elements().is_subset_of(e.hall.relations) &&
                             pi_predicates(s, e.hall, pi).hall_pi_subset,
                         where + ": extension of " + to_string(t.relations.elements()) + " failed");
            }
        }
    }
    o.summary = std::to_string(instances) + " (scheme, pi) instances";
    return o;
}

Outcome group_correspondence()
{
    Outcome o;
    for (const auto &g : groups()) {
        AssociationScheme s = from_group(g.group);
        const auto brute = oracle::subgroups(g.group);
        for (const auto &pi : prime_subsets(g.group.order())) {
            const std::int64_t part = pi_part(g.group.order(), pi);
            const std::string where = g.name + " " + to_string(pi);
            HallCertificate c = find_hall(s, pi);
            o.expect(c.hall.valency == part, where + ": |Hall| = " + std::to_string(c.hall.valency));
            // relation labels of a group scheme are the group elements
            o.expect(std::find(brute.begin(), brute.end(), c.hall.relations.bits()) != brute.end(),
                     where + ": result is not a subgroup");
        }
    }
    Group s4 = group_file("s4");
    AssociationScheme s = from_group(s4);
    auto halls = hall_subsets_exhaustive(s, PrimeSet{2});
    int oracle_count = 0;
    for (auto m : oracle::subgroups(s4))
        oracle_count += oracle::popcount(m) == 8;
    o.expect(oracle_count == 3, "oracle finds " + std::to_string(oracle_count) + " subgroups of order 8 in S4");
    o.expect(halls.size() == 3, "S4 has " + std::to_string(halls.size()) + " Hall {2}-subsets");
    for (const auto &t : halls)
        for (const auto &u : halls) {
            bool conj = false;
            for (int x = 0; x < s4.order(); ++x)
                conj = conj || oracle::conjugate(s4, t.relations.bits(), x) == u.relations.bits();
            o.expect(conj, "S4 Hall {2}-subsets not conjugate in the group");
            o.expect(!conjugacy(s, t.relations, u.relations).t_to_u.empty(), "S4 Hall {2}-subsets not scheme-conjugate");
        }
    o.summary = std::to_string(groups().size()) + " groups; S4 has 3 conjugate Hall {2}-subsets";
    return o;
}

Outcome isomorphism_theorems()
{
    Outcome o;
    std::size_t first = 0, second = 0, third = 0;
    for (const auto &n : catalogue_up_to(10)) {
        const Hypergroup &h = n.scheme.hypergroup();
        const auto lattice = enumerate_closed_subsets(h);
        const ClosedSubset all = whole(h);
        for (const auto &f : lattice)
            if (is_normal(h, f, all)) {
                ++first;
                o.expect(first_isomorphism(projection(quotient(h, f))).search.status == IsoStatus::Found,
                         n.name + ": first theorem fails for " + to_string(f.elements()));
            }
        for (const auto &d : lattice)
            for (const auto &e : lattice) {
                if (normalizes(h, d, e)) {
                    ++second;
                    o.expect(product_isomorphism(h, d, e).search.status == IsoStatus::Found,
                             n.name + ": product theorem fails");
                }
                if (d.elements().is_subset_of(e) && is_normal(h, e, all)) {
                    ++third;
                    o.expect(correspondence_isomorphism(h, d, e).search.status == IsoStatus::Found,
                             n.name + ": correspondence theorem fails");
                }
            }
    }
    o.summary = std::to_string(first) + " kernel, " + std::to_string(second) + " product and " + std::to_string(third) +
                " correspondence instances";
    return o;
}

Outcome quotient_coincidence()
{
    Outcome o;
    std::size_t pairs = 0;
    for (const auto &n : all_schemes()) {
        const auto &s = n.scheme;
        for (const auto &t : scheme_closed_subsets(s)) {
            ++pairs;
            QuotientScheme q = quotient_scheme(s, t);
            const auto &qh = q.hypergroup_quotient;
            o.expect(q.scheme.hypergroup().table() == qh.hypergroup.table(), n.name + ": quotients differ");
            for (int r = 0; r < s.rank(); ++r) {
                const int c = q.relation_class[r];
                o.expect(c == qh.coset_of[r], n.name + ": relation classes differ");
                // T s T as a union of relations, from the oracle product
                const auto tst = oracle::product(s.hypergroup(),
                                                 oracle::product(s.hypergroup(), t.relations.bits(), oracle::bit(r)),
                                                 t.relations.bits());
                o.expect(q.scheme.valency(c) * t.valency == mask_valency(s, tst),
                         n.name + ": valency law fails for relation " + std::to_string(r));
            }
        }
    }
    o.summary = std::to_string(pairs) + " (scheme, closed subset) pairs";
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    std::vector<NamedHypergroup> inputs;
    for (const auto &n : all_schemes())
        if (n.scheme.rank() <= 12)
            inputs.push_back({n.name, n.scheme.hypergroup()});
    for (auto &h : hypergroup_corpus(12))
        inputs.push_back(std::move(h));
    for (const auto &in : inputs) {
        const Hypergroup &h = in.h;
        auto brute = oracle::closed_subsets(h);
        std::vector<oracle::Mask> fast;
        for (const auto &c : enumerate_closed_subsets(h))
            fast.push_back(c.bits());
        std::sort(fast.begin(), fast.end());
        std::sort(brute.begin(), brute.end());
        o.expect(fast == brute, in.name + ": closed subsets differ");
        for (oracle::Mask a = 1; a <= detail::full_mask(h.order()); ++a)
            o.expect(closure(h, h.from_bits(a)).bits() == oracle::closure(brute, a),
                     in.name + ": closure differs at " + std::to_string(a));
    }
    o.summary = std::to_string(inputs.size()) + " hypergroups of rank <= 12";
    return o;
}

Outcome property_battery()
{
    Outcome o;
    const auto corpus = hypergroup_corpus(8);
    for (const auto &n : corpus) {
        auto failures = props::run_all(n.name, n.h);
        o.checks += props::all_properties().size();
        for (const auto &f : failures)
            if (o.problems.size() < 5)
                o.problems.push_back(f.property + " on " + f.hypergroup + ": " + f.witness);
            else
                o.problems.emplace_back();
    }
    o.summary = std::to_string(props::all_properties().size()) + " properties on " + std::to_string(corpus.size()) +
                " hypergroups";
    return o;
}

} // namespace

int main()
{
    struct Criterion
    {
        int number;
        const char *title;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "order-28 example: solvable, {2}-valenced, Hall {2}-subset of valency 4 and index 7", order28_example},
        {2, "Hall existence, conjugacy and extension on all schemes of order <= 12", hall_suite},
        {3, "Hall subsets of bundled groups match classical Hall subgroups", group_correspondence},
        {4, "isomorphism theorems on hypergroups of schemes of order <= 10", isomorphism_theorems},
        {5, "scheme and hypergroup quotients coincide; valency law", quotient_coincidence},
        {6, "closure and closed-subset enumeration match the subset oracle for rank <= 12", oracle_equivalence},
        {7, "structural property battery on the order <= 8 hypergroup corpus", property_battery},
    };
    bool all_passed = true;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all_passed = all_passed && o.passed();
        std::ostringstream line;
        line << "criterion " << c.number << ": " << (o.passed() ? "PASS" : "FAIL") << " - " << c.title << " ("
             << o.summary << "; " << o.checks << " checks; " << std::fixed;
        line.precision(1);
        line << secs << " s)";
        std::cout << line.str() << std::endl;
        std::size_t shown = 0;
        for (const auto &p : o.problems)
            if (!p.empty() && shown++ < 5)
                std::cout << "    " << p << "\n";
        if (o.problems.size() > shown)
            std::cout << "    ... " << o.problems.size() - shown << " more\n";
    }
    return all_passed ? 0 : 1;
}
