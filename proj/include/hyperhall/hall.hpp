#ifndef HYPERHALL_HALL_HPP
#define HYPERHALL_HALL_HPP

#include <optional>
#include <vector>

#include "group.hpp"
#include "scheme.hpp"

namespace hyperhall
{

namespace detail
{

inline void require_solvable_pi_valenced(const AssociationScheme &s, const PrimeSet &pi)
{
    if (!is_solvable_scheme(s))
        throw Error(ErrorKind::NotSolvable, "scheme is not solvable");
    if (!is_pi_valenced(s, pi)) {
        std::vector<int> bad;
        for (Relation r = 0; r < s.rank(); ++r)
            if (!is_pi_number(s.valency(r), pi))
                bad.push_back(r);
        throw Error(ErrorKind::NotPiValenced, "scheme is not " + to_string(pi) + "-valenced", bad);
    }
}

} // namespace detail

/// Closed subsets of S that are Hall pi-subsets, by filtering the lattice.
inline std::vector<SchemeClosedSubset> hall_subsets_exhaustive(const AssociationScheme &s, const PrimeSet &pi)
{
    std::vector<SchemeClosedSubset> out;
    for (const auto &t : scheme_closed_subsets(s))
        if (pi_predicates(s, t, pi).hall_pi_subset)
            out.push_back(t);
    return out;
}

inline std::vector<SchemeClosedSubset> closed_pi_subsets(const AssociationScheme &s, const PrimeSet &pi)
{
    std::vector<SchemeClosedSubset> out;
    for (const auto &t : scheme_closed_subsets(s))
        if (pi_predicates(s, t, pi).closed_pi_subset)
            out.push_back(t);
    return out;
}

/// O_pi(S): the largest subnormal closed pi-subset. Throws NotSolvable or
/// NotPiValenced.
inline SchemeClosedSubset compute_o_pi(const AssociationScheme &s, const PrimeSet &pi)
{
    detail::require_solvable_pi_valenced(s, pi);
    const Hypergroup &h = s.hypergroup();
    const std::vector<ClosedSubset> lattice = enumerate_closed_subsets(h);
    const ClosedSubset all = whole(h);
    std::vector<SchemeClosedSubset> candidates;
    for (const auto &c : lattice) {
        SchemeClosedSubset t = with_valency(s, c);
        if (pi_predicates(s, t, pi).closed_pi_subset && is_subnormal(h, c, all, &lattice))
            candidates.push_back(t);
    }
    HYPERHALL_REQUIRE(!candidates.empty(), "no subnormal closed pi-subset, not even {1}");
    SchemeClosedSubset best = candidates.front();
    for (const auto &t : candidates)
        if (t.valency > best.valency)
            best = t;
    for (const auto &t : candidates)
        HYPERHALL_REQUIRE(t.relations.elements().is_subset_of(best.relations),
                          "subnormal closed pi-subsets have no largest member");
    HYPERHALL_REQUIRE(is_strongly_normal(h, best.relations, all), "O_pi is not strongly normal");
    HYPERHALL_REQUIRE(is_thin_quotient(quotient(h, best.relations)), "S//O_pi is not thin");
    return best;
}

struct HallCertificate
{
    PrimeSet pi;
    SchemeClosedSubset hall;
    SchemeClosedSubset o_pi;
    QuotientHypergroup thin_quotient; // S//O_pi
    Group thin_quotient_group;   // the group of S//O_pi
    ClosedSubset lifted_subgroup; // Hall subgroup of that group, lifted to `hall`
    std::int64_t index;          // n_S / n_T
};

namespace detail
{

struct HallContext
{
    SchemeClosedSubset o;
    QuotientHypergroup q;
    Group g;
};

inline HallContext hall_context(const AssociationScheme &s, const PrimeSet &pi)
{
    SchemeClosedSubset o = compute_o_pi(s, pi);
    QuotientHypergroup q = quotient(s.hypergroup(), o.relations);
    Group g = group_from_thin(q.hypergroup);
    return {o, q, g};
}

/// The lexicographically least lift among the Hall subgroups accepted by `keep`.
template <class Keep>
inline HallCertificate certify(const AssociationScheme &s, const PrimeSet &pi, HallContext ctx, Keep keep)
{
    std::optional<ClosedSubset> best_subgroup;
    std::optional<ClosedSubset> best_lift;
    for (const auto &sub : hall_subgroups(ctx.g, pi)) {
        if (!keep(sub))
            continue;
        ClosedSubset lifted = lift_closed(ctx.q, sub);
        if (!best_lift || closed_subset_less(lifted, *best_lift)) {
            best_lift = lifted;
            best_subgroup = sub;
        }
    }
    if (!best_lift)
        throw Error(ErrorKind::InternalInconsistency, "no Hall subgroup of the thin quotient qualifies");
    SchemeClosedSubset hall = with_valency(s, *best_lift);
    PiPredicates pred = pi_predicates(s, hall, pi);
    HYPERHALL_REQUIRE(pred.hall_pi_subset, "lifted Hall subgroup is not a Hall pi-subset");
    HYPERHALL_REQUIRE(ctx.o.relations.elements().is_subset_of(hall.relations), "O_pi is not inside the Hall subset");
    const std::int64_t index = scheme_index(hall, scheme_whole(s));
    return HallCertificate{pi, hall, ctx.o, std::move(ctx.q), std::move(ctx.g), *best_subgroup, index};
}

} // namespace detail

/// A Hall pi-subset built through the thin quotient S//O_pi: a Hall subgroup
/// of its group, lifted back. Among the candidates the lexicographically
/// least relation set is returned. Throws NotSolvable or NotPiValenced.
inline HallCertificate find_hall(const AssociationScheme &s, const PrimeSet &pi)
{
    HallCertificate cert =
        detail::certify(s, pi, detail::hall_context(s, pi), [](const ClosedSubset &) { return true; });
#if HYPERHALL_INVARIANTS_ENABLED
    bool listed = false;
    for (const auto &t : hall_subsets_exhaustive(s, pi))
        listed = listed || t == cert.hall;
    HYPERHALL_INVARIANT(listed, "constructed Hall subset is missing from the exhaustive filter");
#endif
    return cert;
}

inline void require_hall(const AssociationScheme &s, const SchemeClosedSubset &t, const PrimeSet &pi)
{
    if (!is_closed(s.hypergroup(), t.relations) || !pi_predicates(s, t, pi).hall_pi_subset)
        throw Error(ErrorKind::NotHall, to_string(t.relations.elements()) + " is not a Hall " + to_string(pi) + "-subset",
                    t.relations.members());
}

struct ConjugatorResult
{
    Relation conjugator;           // from the quotient route
    Element quotient_element;      // its image in S//O_pi
    std::vector<Relation> all;     // every s with s*Ts = U, by direct scan
};

/// s with s*Ts = U for Hall pi-subsets T and U, found through the group of
/// S//O_pi and cross-checked by scanning all relations. Throws NotSolvable,
/// NotPiValenced, NotHall, or NoConjugatorFound.
inline ConjugatorResult conjugating_element(const AssociationScheme &s, const PrimeSet &pi,
                                            const SchemeClosedSubset &t, const SchemeClosedSubset &u)
{
    detail::require_solvable_pi_valenced(s, pi);
    require_hall(s, t, pi);
    require_hall(s, u, pi);
    detail::HallContext ctx = detail::hall_context(s, pi);
    ElementSubset tq = project(ctx.q, t.relations);
    ElementSubset uq = project(ctx.q, u.relations);
    std::optional<Element> g = conjugating_group_element(ctx.g, tq, uq);
    ConjugatorResult out{-1, -1, conjugacy(s, t.relations, u.relations).t_to_u};
    if (g) {
        out.quotient_element = *g;
        for (Relation r : ctx.q.cosets[*g].members())
            if (conjugate_subset(s, t.relations, r) == u.relations.elements()) {
                out.conjugator = r;
                break;
            }
    }
    if (out.conjugator < 0)
        throw Error(ErrorKind::NoConjugatorFound, "quotient route produced no conjugator",
                    {g ? *g : -1});
    HYPERHALL_INVARIANT(std::find(out.all.begin(), out.all.end(), out.conjugator) != out.all.end(),
                        "conjugator missing from the direct scan");
    return out;
}

/// A Hall pi-subset containing the closed pi-subset T, built from OT in the
/// thin quotient. Throws NotSolvable, NotPiValenced, or NotClosedPiSubset.
inline HallCertificate extend_to_hall(const AssociationScheme &s, const PrimeSet &pi, const SchemeClosedSubset &t)
{
    detail::require_solvable_pi_valenced(s, pi);
    if (!is_closed(s.hypergroup(), t.relations) || !pi_predicates(s, t, pi).closed_pi_subset)
        throw Error(ErrorKind::NotClosedPiSubset,
                    to_string(t.relations.elements()) + " is not a closed " + to_string(pi) + "-subset",
                    t.relations.members());
    detail::HallContext ctx = detail::hall_context(s, pi);
    const Hypergroup &h = s.hypergroup();
    ElementSubset ot = subset_product(h, ctx.o.relations, t.relations);
    HYPERHALL_REQUIRE(is_closed(h, ot), "OT is not closed");
    ElementSubset otq = project(ctx.q, ot);
    HYPERHALL_REQUIRE(is_pi_number(otq.size(), pi), "OT//O is not a pi-subgroup");
    HallCertificate cert =
        detail::certify(s, pi, std::move(ctx), [&](const ClosedSubset &sub) { return otq.is_subset_of(sub); });
    HYPERHALL_REQUIRE(ot.is_subset_of(cert.hall.relations), "Hall subset does not contain OT");
    return cert;
}

} // namespace hyperhall

#endif // HYPERHALL_HALL_HPP
