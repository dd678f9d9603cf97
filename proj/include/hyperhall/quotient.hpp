#ifndef HYPERHALL_QUOTIENT_HPP
#define HYPERHALL_QUOTIENT_HPP

#include <vector>

#include "closed.hpp"

namespace hyperhall
{

/// H//F: the double cosets FhF as opaque indices. Coset i has the smallest
/// parent element of FhF as representative, and cosets are numbered by
/// representative, so 1^F = F is coset 0.
struct QuotientHypergroup
{
    Hypergroup parent;
    ClosedSubset kernel;
    std::vector<ElementSubset> cosets;
    std::vector<int> coset_of;
    std::vector<Element> representatives;
    Hypergroup hypergroup;
};

/// a^F b^F = { h^F : h in aFb }
inline QuotientHypergroup quotient(const Hypergroup &h, const ClosedSubset &f)
{
    h.check_owns(f);
    HYPERHALL_REQUIRE(is_closed(h, f), "quotient over a subset that is not closed");
    const int k = h.order();
    std::vector<int> coset_of(k, -1);
    std::vector<ElementSubset> cosets;
    std::vector<Element> reps;
    for (Element x = 0; x < k; ++x) {
        if (coset_of[x] >= 0)
            continue;
        ElementSubset c = subset_product(h, f, h.singleton(x), f);
        for (Element y : c.members()) {
            HYPERHALL_REQUIRE(coset_of[y] < 0, "double cosets overlap");
            coset_of[y] = static_cast<int>(cosets.size());
        }
        cosets.push_back(c);
        reps.push_back(x);
    }

    const int m = static_cast<int>(cosets.size());
    HyperTable table(m, std::vector<std::vector<int>>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            ElementSubset afb = subset_product(h, h.singleton(reps[i]), f, h.singleton(reps[j]));
            std::vector<bool> hit(m, false);
            for (Element y : afb.members())
                hit[coset_of[y]] = true;
            for (int c = 0; c < m; ++c)
                if (hit[c])
                    table[i][j].push_back(c);
        }
    Hypergroup q = validate_hypergroup(table);
    for (int i = 0; i < m; ++i) {
        HYPERHALL_REQUIRE(q.input_index()[i] == i, "quotient neutral element is not F");
        HYPERHALL_REQUIRE(q.inverse(i) == coset_of[h.inverse(reps[i])], "quotient inverse is not (h*)^F");
    }
    return QuotientHypergroup{h, f, std::move(cosets), std::move(coset_of), std::move(reps), std::move(q)};
}

/// A//F as a subset of the quotient.
inline ElementSubset project(const QuotientHypergroup &q, const ElementSubset &a)
{
    q.parent.check_owns(a);
    std::uint64_t bits = 0;
    for (Element x : a.members())
        bits |= std::uint64_t{1} << q.coset_of[x];
    return q.hypergroup.from_bits(bits);
}

/// Union of the cosets in `c`.
inline ElementSubset lift(const QuotientHypergroup &q, const ElementSubset &c)
{
    q.hypergroup.check_owns(c);
    ElementSubset out = q.parent.empty_subset();
    for (Element i : c.members())
        out = out | q.cosets[i];
    return out;
}

/// E//F for a closed E containing F.
inline ClosedSubset project_closed(const QuotientHypergroup &q, const ClosedSubset &e)
{
    require_subset(q.kernel, e);
    ElementSubset p = project(q, e);
    HYPERHALL_INVARIANT(is_closed(q.hypergroup, p), "image of a closed subset in the quotient is not closed");
    return ClosedSubsetAccess::trusted(p);
}

/// The unique closed E containing F with E//F = c.
inline ClosedSubset lift_closed(const QuotientHypergroup &q, const ClosedSubset &c)
{
    q.hypergroup.check_owns(c);
    if (!is_closed(q.hypergroup, c))
        throw Error(ErrorKind::NotClosed, "subset of the quotient is not closed", c.members());
    ElementSubset e = lift(q, c);
    HYPERHALL_INVARIANT(is_closed(q.parent, e), "lift of a closed subset is not closed");
    HYPERHALL_INVARIANT(project(q, e) == c.elements(), "lift does not project back");
    return ClosedSubsetAccess::trusted(e);
}

/// Whether every element of H//F is thin; equivalent to F being strongly
/// normal in H, which is cross-checked when invariants are enabled.
inline bool is_thin_quotient(const QuotientHypergroup &q)
{
    const bool thin = is_thin(q.hypergroup);
    HYPERHALL_INVARIANT(thin == is_strongly_normal(q.parent, q.kernel, whole(q.parent)),
                        "thin quotient disagrees with strong normality");
    return thin;
}

/// A closed subset viewed as a hypergroup in its own right. Sub-element i is
/// the i-th smallest member of the subset, so the neutral element stays 0.
struct Restriction
{
    Hypergroup parent;
    ClosedSubset domain;
    std::vector<Element> to_parent_index;
    std::vector<int> to_sub_index; // -1 outside the domain
    Hypergroup hypergroup;

    ElementSubset to_sub(const ElementSubset &a) const
    {
        parent.check_owns(a);
        if (!a.is_subset_of(domain))
            throw Error(ErrorKind::NotSubset, "subset leaves the restriction domain");
        std::uint64_t bits = 0;
        for (Element x : a.members())
            bits |= std::uint64_t{1} << to_sub_index[x];
        return hypergroup.from_bits(bits);
    }
    ElementSubset to_parent(const ElementSubset &a) const
    {
        hypergroup.check_owns(a);
        std::uint64_t bits = 0;
        for (Element x : a.members())
            bits |= std::uint64_t{1} << to_parent_index[x];
        return parent.from_bits(bits);
    }
    ClosedSubset to_sub(const ClosedSubset &c) const { return ClosedSubsetAccess::trusted(to_sub(c.elements())); }
    ClosedSubset to_parent(const ClosedSubset &c) const
    {
        return ClosedSubsetAccess::trusted(to_parent(c.elements()));
    }
};

inline Restriction restrict_to(const Hypergroup &h, const ClosedSubset &f)
{
    h.check_owns(f);
    std::vector<Element> members = f.members();
    std::vector<int> index(h.order(), -1);
    for (int i = 0; i < static_cast<int>(members.size()); ++i)
        index[members[i]] = i;
    const int m = static_cast<int>(members.size());
    HyperTable table(m, std::vector<std::vector<int>>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (Element y : h.product(members[i], members[j]).members()) {
                HYPERHALL_REQUIRE(index[y] >= 0, "closed subset is not closed under products");
                table[i][j].push_back(index[y]);
            }
    Hypergroup sub = validate_hypergroup(table);
    HYPERHALL_REQUIRE(sub.input_index()[0] == 0, "restriction moved the neutral element");
    return Restriction{h, f, std::move(members), std::move(index), std::move(sub)};
}

} // namespace hyperhall

#endif // HYPERHALL_QUOTIENT_HPP
