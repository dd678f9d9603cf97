#ifndef HYPERHALL_SCHEME_HPP
#define HYPERHALL_SCHEME_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "group.hpp"
#include "primes.hpp"
#include "solvable.hpp"

namespace hyperhall
{

using Relation = int;
using LabelMatrix = std::vector<std::vector<int>>;

/// A finite association scheme on points 0..n-1 with relations 0..rank-1,
/// relation 0 the identity. Relations double as elements of the hypergroup
/// of complex multiplication, so relation sets are ElementSubsets of
/// hypergroup().
class AssociationScheme
{
public:
    int n_points() const noexcept { return n_; }
    int rank() const noexcept { return rank_; }
    Relation rel(int y, int z) const { return rel_[static_cast<std::size_t>(y) * n_ + z]; }
    Relation star(Relation s) const { return star_.at(s); }
    /// a_pqr = |yp meet zq*| for any (y,z) in r.
    int a(Relation p, Relation q, Relation r) const
    {
        return a_[(static_cast<std::size_t>(p) * rank_ + q) * rank_ + r];
    }
    /// n_s = a_{s s* 0}
    int valency(Relation s) const { return valency_.at(s); }
    const std::vector<int> &valencies() const noexcept { return valency_; }
    std::int64_t valency(const ElementSubset &t) const
    {
        hypergroup_.check_owns(t);
        std::int64_t sum = 0;
        for (Relation s : t.members())
            sum += valency_[s];
        return sum;
    }
    const Hypergroup &hypergroup() const noexcept { return hypergroup_; }

    LabelMatrix matrix() const
    {
        LabelMatrix out(n_, std::vector<int>(n_));
        for (int y = 0; y < n_; ++y)
            for (int z = 0; z < n_; ++z)
                out[y][z] = rel(y, z);
        return out;
    }

private:
    friend AssociationScheme validate_scheme(const LabelMatrix &rel);

    AssociationScheme() = default;

    int n_ = 0;
    int rank_ = 0;
    std::vector<int> rel_;
    std::vector<int> star_;
    std::vector<int> a_;
    std::vector<int> valency_;
    Hypergroup hypergroup_ = validate_hypergroup({{{0}}});
};

/// pq = { s : a_pqs != 0 }
inline ElementSubset complex_product(const AssociationScheme &s, Relation p, Relation q)
{
    return s.hypergroup().product(p, q);
}

/// Validates a label matrix. Labels must be exactly 0..rank-1. Checks in
/// order: shape (NotSquare), labels (NotPartition, witness (label) or (y,z)),
/// identity (IdentityViolation, witness (y,z)), transposition (StarViolation,
/// witness (s,y,z)), regularity (RegularityViolation, witness (p,q,r,y,z)).
inline AssociationScheme validate_scheme(const LabelMatrix &rel)
{
    const int n = static_cast<int>(rel.size());
    if (n == 0)
        throw Error(ErrorKind::NotSquare, "empty matrix", {0});
    for (int y = 0; y < n; ++y)
        if (static_cast<int>(rel[y].size()) != n)
            throw Error(ErrorKind::NotSquare, "row " + std::to_string(y) + " has wrong length", {y});

    int rank = 0;
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
            if (rel[y][z] < 0)
                throw Error(ErrorKind::NotPartition, "negative relation label", {y, z});
            rank = std::max(rank, rel[y][z] + 1);
        }
    if (rank > kMaxOrder)
        throw Error(ErrorKind::NotPartition, "more than 64 relations", {rank});
    std::vector<bool> used(rank, false);
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
            used[rel[y][z]] = true;
    for (int s = 0; s < rank; ++s)
        if (!used[s])
            throw Error(ErrorKind::NotPartition, "relation label " + std::to_string(s) + " is unused", {s});

    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
            if ((y == z) != (rel[y][z] == 0))
                throw Error(ErrorKind::IdentityViolation, "relation 0 must be exactly the diagonal", {y, z});

    std::vector<int> star(rank, -1);
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
            int s = rel[y][z], t = rel[z][y];
            if (star[s] < 0)
                star[s] = t;
            else if (star[s] != t)
                throw Error(ErrorKind::StarViolation, "transpose of relation is not a relation", {s, y, z});
        }

    // Count x with (y,x) in p and (x,z) in q, i.e. x in yp and in zq*.
    const std::size_t r2 = static_cast<std::size_t>(rank) * rank;
    std::vector<int> a(r2 * rank, -1);
    std::vector<int> counts(r2);
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
            std::fill(counts.begin(), counts.end(), 0);
            for (int x = 0; x < n; ++x)
                ++counts[static_cast<std::size_t>(rel[y][x]) * rank + rel[x][z]];
            const int r = rel[y][z];
            for (std::size_t pq = 0; pq < r2; ++pq) {
                int &slot = a[pq * rank + r];
                if (slot < 0)
                    slot = counts[pq];
                else if (slot != counts[pq]) {
                    int p = static_cast<int>(pq / rank), q = static_cast<int>(pq % rank);
                    throw Error(ErrorKind::RegularityViolation, "intersection number depends on the pair",
                                {p, q, r, y, z});
                }
            }
        }

    AssociationScheme out;
    out.n_ = n;
    out.rank_ = rank;
    out.rel_.reserve(static_cast<std::size_t>(n) * n);
    for (int y = 0; y < n; ++y)
        out.rel_.insert(out.rel_.end(), rel[y].begin(), rel[y].end());
    out.star_ = star;
    out.a_ = std::move(a);
    out.valency_.resize(rank);
    for (int s = 0; s < rank; ++s)
        out.valency_[s] = out.a(s, star[s], 0);
    int total = 0;
    for (int s = 0; s < rank; ++s)
        total += out.valency_[s];
    HYPERHALL_INVARIANT(total == n, "valencies do not sum to the number of points");

    HyperTable table(rank, std::vector<std::vector<int>>(rank));
    for (int p = 0; p < rank; ++p)
        for (int q = 0; q < rank; ++q)
            for (int s = 0; s < rank; ++s)
                if (out.a(p, q, s) != 0)
                    table[p][q].push_back(s);
    try {
        out.hypergroup_ = validate_hypergroup(table);
    } catch (const Error &e) {
        throw Error(ErrorKind::InternalInconsistency,
                    std::string("complex multiplication is not a hypergroup: ") + e.what(), e.witness());
    }
    for (int s = 0; s < rank; ++s) {
        HYPERHALL_REQUIRE(out.hypergroup_.input_index()[s] == s, "identity relation is not neutral");
        HYPERHALL_REQUIRE(out.hypergroup_.inverse(s) == star[s], "hypergroup inverse differs from transposition");
    }
    return out;
}

/// The hypergroup of complex multiplication on the relations.
inline const Hypergroup &to_hypergroup(const AssociationScheme &s) { return s.hypergroup(); }

/// Thin scheme of a group: (x,y) in relation g iff y = xg.
inline AssociationScheme from_group(const Group &g)
{
    const int k = g.order();
    LabelMatrix rel(k, std::vector<int>(k));
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            rel[x][y] = g.mul(g.inverse(x), y);
    AssociationScheme s = validate_scheme(rel);
    for (int a = 0; a < k; ++a) {
        HYPERHALL_INVARIANT(s.valency(a) == 1, "relation of a group scheme is not thin");
        for (int b = 0; b < k; ++b)
            HYPERHALL_INVARIANT(complex_product(s, a, b) == s.hypergroup().singleton(g.mul(a, b)),
                                "group scheme product differs from the group");
    }
    return s;
}

inline AssociationScheme from_group(const std::vector<std::vector<int>> &cayley)
{
    return from_group(validate_group(cayley));
}

/// A closed set of relations together with its valency n_T.
struct SchemeClosedSubset
{
    ClosedSubset relations;
    std::int64_t valency;

    friend bool operator==(const SchemeClosedSubset &a, const SchemeClosedSubset &b)
    {
        return a.relations == b.relations;
    }
};

inline SchemeClosedSubset with_valency(const AssociationScheme &s, const ClosedSubset &c)
{
    return {c, s.valency(c.elements())};
}

inline SchemeClosedSubset make_scheme_closed(const AssociationScheme &s, const ElementSubset &t)
{
    return with_valency(s, make_closed(s.hypergroup(), t));
}

inline SchemeClosedSubset scheme_closure(const AssociationScheme &s, const ElementSubset &t)
{
    return with_valency(s, closure(s.hypergroup(), t));
}

inline SchemeClosedSubset scheme_whole(const AssociationScheme &s) { return with_valency(s, whole(s.hypergroup())); }
inline SchemeClosedSubset scheme_trivial(const AssociationScheme &s)
{
    return with_valency(s, trivial(s.hypergroup()));
}

/// n_U / n_T for closed T within U; the division is exact.
inline std::int64_t scheme_index(const SchemeClosedSubset &t, const SchemeClosedSubset &u)
{
    require_subset(t.relations, u.relations);
    HYPERHALL_INVARIANT(u.valency % t.valency == 0, "valency of a closed subset does not divide the larger one");
    return u.valency / t.valency;
}

inline std::vector<SchemeClosedSubset> scheme_closed_subsets(const AssociationScheme &s)
{
    std::vector<SchemeClosedSubset> out;
    for (const auto &c : enumerate_closed_subsets(s.hypergroup()))
        out.push_back(with_valency(s, c));
    for (const auto &t : out)
        for (const auto &u : out)
            if (t.relations.elements().is_subset_of(u.relations))
                HYPERHALL_INVARIANT(u.valency % t.valency == 0,
                                    "valency of a closed subset does not divide the larger one");
    return out;
}

inline bool scheme_is_strongly_normal(const AssociationScheme &s, const SchemeClosedSubset &t,
                                      const SchemeClosedSubset &u)
{
    return is_strongly_normal(s.hypergroup(), t.relations, u.relations);
}

inline bool scheme_is_subnormal(const AssociationScheme &s, const SchemeClosedSubset &t,
                                const SchemeClosedSubset &u)
{
    return is_subnormal(s.hypergroup(), t.relations, u.relations);
}

struct SchemeSolvableChain
{
    std::vector<SchemeClosedSubset> chain;
    std::vector<std::int64_t> indices; // n_Ti / n_T(i-1), each prime
};

namespace detail
{

inline bool scheme_chain_dfs(const AssociationScheme &s, const std::vector<SchemeClosedSubset> &lattice,
                             SchemeSolvableChain &acc, std::unordered_set<std::uint64_t> &dead)
{
    const SchemeClosedSubset cur = acc.chain.back();
    if (cur.relations.elements() == s.hypergroup().all())
        return true;
    if (dead.count(cur.relations.bits()))
        return false;
    for (const auto &next : lattice) {
        if (next.valency <= cur.valency || !cur.relations.elements().is_subset_of(next.relations))
            continue;
        const std::int64_t index = next.valency / cur.valency;
        if (next.valency % cur.valency != 0 || !is_prime(index) || !scheme_is_strongly_normal(s, cur, next))
            continue;
        acc.chain.push_back(next);
        acc.indices.push_back(index);
        if (scheme_chain_dfs(s, lattice, acc, dead))
            return true;
        acc.chain.pop_back();
        acc.indices.pop_back();
    }
    dead.insert(cur.relations.bits());
    return false;
}

} // namespace detail

/// A chain T0 = {1}, ..., Tn = S with each T(i-1) strongly normal in Ti of
/// prime index, found over valencies independently of the hypergroup chain
/// search; the two verdicts are cross-checked.
inline std::optional<SchemeSolvableChain> solvable_scheme_chain(const AssociationScheme &s)
{
    std::vector<SchemeClosedSubset> lattice = scheme_closed_subsets(s);
    SchemeSolvableChain acc;
    acc.chain.push_back(scheme_trivial(s));
    std::unordered_set<std::uint64_t> dead;
    const bool found = detail::scheme_chain_dfs(s, lattice, acc, dead);
    HYPERHALL_INVARIANT(found == is_solvable(s.hypergroup()),
                        "scheme solvability disagrees with hypergroup solvability");
    if (!found)
        return std::nullopt;
    return acc;
}

inline bool is_solvable_scheme(const AssociationScheme &s) { return solvable_scheme_chain(s).has_value(); }

/// Every relation in `t` has pi-number valency.
inline bool is_pi_valenced(const AssociationScheme &s, const ElementSubset &t, const PrimeSet &pi)
{
    s.hypergroup().check_owns(t);
    for (Relation r : t.members())
        if (!is_pi_number(s.valency(r), pi))
            return false;
    return true;
}

inline bool is_pi_valenced(const AssociationScheme &s, const PrimeSet &pi)
{
    return is_pi_valenced(s, s.hypergroup().all(), pi);
}

struct PiPredicates
{
    bool pi_valenced;       // every member valency is a pi-number
    bool closed_pi_subset;  // and n_T is a pi-number
    bool hall_pi_subset;    // and n_S / n_T is a pi'-number
};

inline PiPredicates pi_predicates(const AssociationScheme &s, const SchemeClosedSubset &t, const PrimeSet &pi)
{
    PiPredicates out{};
    out.pi_valenced = is_pi_valenced(s, t.relations, pi);
    out.closed_pi_subset = out.pi_valenced && is_pi_number(t.valency, pi);
    out.hall_pi_subset = out.closed_pi_subset && is_pi_prime_number(scheme_index(t, scheme_whole(s)), pi);
    return out;
}

/// s* T s as a complex product.
inline ElementSubset conjugate_subset(const AssociationScheme &sch, const ElementSubset &t, Relation s)
{
    const Hypergroup &h = sch.hypergroup();
    return subset_product(h, h.singleton(h.inverse(s)), t, h.singleton(s));
}

struct ConjugacyReport
{
    std::vector<Relation> t_to_u; // s with s*Ts = U
    std::vector<Relation> u_to_t; // s with s*Us = T
};

inline ConjugacyReport conjugacy(const AssociationScheme &sch, const ElementSubset &t, const ElementSubset &u)
{
    ConjugacyReport out;
    for (Relation s = 0; s < sch.rank(); ++s) {
        if (conjugate_subset(sch, t, s) == u)
            out.t_to_u.push_back(s);
        if (conjugate_subset(sch, u, s) == t)
            out.u_to_t.push_back(s);
    }
    return out;
}

} // namespace hyperhall

#endif // HYPERHALL_SCHEME_HPP
