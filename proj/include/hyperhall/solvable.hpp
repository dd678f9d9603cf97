#ifndef HYPERHALL_SOLVABLE_HPP
#define HYPERHALL_SOLVABLE_HPP

#include <optional>
#include <unordered_set>
#include <vector>

#include "primes.hpp"
#include "quotient.hpp"

namespace hyperhall
{

/// F0 = {1} within ... within Fn = the ambient closed subset, each Fi//F(i-1)
/// thin of prime order step_primes[i-1].
struct SolvableChain
{
    std::vector<ClosedSubset> chain;
    std::vector<int> step_primes;
};

/// Order of G//F when F is strongly normal in G (so G//F is thin), else 0.
/// Thinness is decided on the quotient of the restriction to G.
inline int thin_step_order(const Hypergroup &h, const ClosedSubset &f, const ClosedSubset &g)
{
    require_subset(f, g);
    Restriction r = restrict_to(h, g);
    QuotientHypergroup q = quotient(r.hypergroup, r.to_sub(f));
    return is_thin_quotient(q) ? q.hypergroup.order() : 0;
}

/// Closed subsets of `lattice` that cover `f` inside `within`.
inline std::vector<ClosedSubset> covers(const ClosedSubset &f, const ClosedSubset &within,
                                        const std::vector<ClosedSubset> &lattice)
{
    std::vector<ClosedSubset> above;
    for (const auto &c : lattice)
        if (c.size() > f.size() && f.elements().is_subset_of(c) && c.elements().is_subset_of(within))
            above.push_back(c);
    std::vector<ClosedSubset> out;
    for (const auto &c : above) {
        bool minimal = true;
        for (const auto &d : above)
            if (d.size() < c.size() && d.elements().is_subset_of(c)) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(c);
    }
    return out;
}

namespace detail
{

inline bool chain_dfs(const Hypergroup &h, const ClosedSubset &top, const std::vector<ClosedSubset> &lattice,
                      SolvableChain &acc, std::unordered_set<std::uint64_t> &dead)
{
    const ClosedSubset cur = acc.chain.back(); // copy: the chain may reallocate below
    if (cur == top)
        return true;
    if (dead.count(cur.bits()))
        return false;
    // A thin quotient of prime order has no closed subsets strictly between,
    // so every valid step is a cover.
    for (const auto &next : covers(cur, top, lattice)) {
        int p = thin_step_order(h, cur, next);
        if (!is_prime(p))
            continue;
        acc.chain.push_back(next);
        acc.step_primes.push_back(p);
        if (chain_dfs(h, top, lattice, acc, dead))
            return true;
        acc.chain.pop_back();
        acc.step_primes.pop_back();
    }
    dead.insert(cur.bits());
    return false;
}

} // namespace detail

/// A solvable chain for the closed subset `top` of `h`, or nothing. Steps are
/// tried in lattice order, so the result is deterministic.
inline std::optional<SolvableChain> solvable_chain(const Hypergroup &h, const ClosedSubset &top,
                                                   const std::vector<ClosedSubset> *lattice = nullptr)
{
    h.check_owns(top);
    std::vector<ClosedSubset> owned;
    if (lattice == nullptr) {
        owned = enumerate_closed_subsets(h);
        lattice = &owned;
    }
    SolvableChain acc;
    acc.chain.push_back(trivial(h));
    std::unordered_set<std::uint64_t> dead;
    if (!detail::chain_dfs(h, top, *lattice, acc, dead))
        return std::nullopt;
    return acc;
}

inline std::optional<SolvableChain> solvable_chain(const Hypergroup &h)
{
    return solvable_chain(h, whole(h));
}

inline bool is_solvable(const Hypergroup &h) { return solvable_chain(h).has_value(); }

inline bool is_solvable(const Hypergroup &h, const ClosedSubset &top,
                        const std::vector<ClosedSubset> *lattice = nullptr)
{
    return solvable_chain(h, top, lattice).has_value();
}

} // namespace hyperhall

#endif // HYPERHALL_SOLVABLE_HPP
