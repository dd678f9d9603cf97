#ifndef HYPERHALL_CLOSED_HPP
#define HYPERHALL_CLOSED_HPP

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hypergroup.hpp"

namespace hyperhall
{

/// An ElementSubset known to be closed (non-empty with A*A contained in A).
class ClosedSubset
{
public:
    const ElementSubset &elements() const noexcept { return set_; }
    operator const ElementSubset &() const noexcept { return set_; }

    int size() const noexcept { return set_.size(); }
    bool contains(Element e) const noexcept { return set_.contains(e); }
    std::vector<Element> members() const { return set_.members(); }
    std::uint64_t bits() const noexcept { return set_.bits(); }
    std::uint64_t token() const noexcept { return set_.token(); }

    friend bool operator==(const ClosedSubset &a, const ClosedSubset &b) noexcept
    {
        return a.set_ == b.set_;
    }

private:
    explicit ClosedSubset(ElementSubset s) : set_(s) {}

    friend ClosedSubset make_closed(const Hypergroup &, const ElementSubset &);
    friend ClosedSubset closure(const Hypergroup &, const ElementSubset &);
    friend struct ClosedSubsetAccess;

    ElementSubset set_;
};

/// Library-internal construction of subsets already proven closed.
struct ClosedSubsetAccess
{
    static ClosedSubset trusted(const ElementSubset &s) { return ClosedSubset(s); }
};

inline bool closed_subset_less(const ClosedSubset &a, const ClosedSubset &b)
{
    return subset_less(a.elements(), b.elements());
}

/// Closed iff non-empty and A*A is contained in A. Equivalently (and checked
/// when invariants are enabled): 1 in A, A* = A and AA = A.
inline bool is_closed(const Hypergroup &h, const ElementSubset &a)
{
    h.check_owns(a);
    const bool by_definition = !a.empty() && subset_product(h, star(h, a), a).is_subset_of(a);
#if HYPERHALL_INVARIANTS_ENABLED
    const bool by_criterion = a.contains(Hypergroup::neutral()) && star(h, a) == a &&
                              subset_product(h, a, a) == a;
    HYPERHALL_INVARIANT(by_definition == by_criterion, "closedness criterion disagrees with definition");
#endif
    return by_definition;
}

inline ClosedSubset make_closed(const Hypergroup &h, const ElementSubset &a)
{
    if (!is_closed(h, a))
        throw Error(ErrorKind::NotClosed, "subset " + to_string(a) + " is not closed", a.members());
    return ClosedSubset(a);
}

/// Least closed subset containing `a`.
inline ClosedSubset closure(const Hypergroup &h, const ElementSubset &a)
{
    h.check_owns(a);
    if (a.empty())
        throw Error(ErrorKind::EmptyInput, "closure of the empty set is undefined");
    ElementSubset x = a.with(Hypergroup::neutral());
    while (true) {
        ElementSubset next = x | star(h, x) | subset_product(h, x, x);
        if (next == x)
            break;
        x = next;
    }
    return ClosedSubset(x);
}

/// Every closed subset of `h`, sorted by (size, member sequence). Built as
/// the join-closure of the single-element closures.
inline std::vector<ClosedSubset> enumerate_closed_subsets(const Hypergroup &h)
{
    std::vector<ClosedSubset> seeds;
    for (Element e = 0; e < h.order(); ++e)
        seeds.push_back(closure(h, h.singleton(e)));

    std::unordered_set<std::uint64_t> seen;
    std::vector<ClosedSubset> found;
    std::deque<ClosedSubset> work;
    auto add = [&](const ClosedSubset &c) {
        if (seen.insert(c.bits()).second) {
            found.push_back(c);
            work.push_back(c);
        }
    };
    add(seeds[Hypergroup::neutral()]);
    for (const auto &s : seeds)
        add(s);
    while (!work.empty()) {
        ClosedSubset c = work.front();
        work.pop_front();
        for (const auto &s : seeds)
            if (!s.elements().is_subset_of(c))
                add(closure(h, c.elements() | s.elements()));
    }
    std::sort(found.begin(), found.end(), closed_subset_less);
    return found;
}

/// D normalizes E iff Ed is contained in dE for every d in D.
inline bool normalizes(const Hypergroup &h, const ClosedSubset &d, const ClosedSubset &e)
{
    d.elements().check_same_parent(e.elements());
    h.check_owns(d);
    for (Element x : d.members()) {
        ElementSubset sx = h.singleton(x);
        if (!subset_product(h, e, sx).is_subset_of(subset_product(h, sx, e)))
            return false;
    }
    return true;
}

/// E is normal in F iff F normalizes E.
inline bool is_normal(const Hypergroup &h, const ClosedSubset &e, const ClosedSubset &in)
{
    return normalizes(h, in, e);
}

inline void require_subset(const ClosedSubset &inner, const ClosedSubset &outer)
{
    if (!inner.elements().is_subset_of(outer.elements()))
        throw Error(ErrorKind::NotSubset,
                    to_string(inner.elements()) + " is not contained in " + to_string(outer.elements()));
}

/// F is strongly normal in `in` iff h*Fh is contained in F for every h in `in`.
inline bool is_strongly_normal(const Hypergroup &h, const ClosedSubset &f, const ClosedSubset &in)
{
    require_subset(f, in);
    for (Element x : in.members()) {
        ElementSubset conj = subset_product(h, h.singleton(h.inverse(x)), f, h.singleton(x));
        if (!conj.is_subset_of(f))
            return false;
    }
    return true;
}

/// Shortest chain E = F0, ..., Fn = `in` of closed subsets with each F(i-1)
/// normal in Fi, or nothing. Uses `lattice` when given (the full output of
/// enumerate_closed_subsets), otherwise enumerates.
inline std::optional<std::vector<ClosedSubset>> subnormal_chain(const Hypergroup &h, const ClosedSubset &e,
                                                                const ClosedSubset &in,
                                                                const std::vector<ClosedSubset> *lattice = nullptr)
{
    require_subset(e, in);
    std::vector<ClosedSubset> owned;
    if (lattice == nullptr) {
        owned = enumerate_closed_subsets(h);
        lattice = &owned;
    }
    std::vector<ClosedSubset> nodes;
    for (const auto &c : *lattice)
        if (e.elements().is_subset_of(c) && c.elements().is_subset_of(in))
            nodes.push_back(c);

    std::unordered_map<std::uint64_t, int> parent;
    std::unordered_map<std::uint64_t, int> index;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        index[nodes[i].bits()] = i;
    std::deque<int> queue;
    queue.push_back(index.at(e.bits()));
    parent[e.bits()] = -1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (nodes[cur] == in) {
            std::vector<ClosedSubset> chain;
            for (int i = cur; i >= 0; i = parent.at(nodes[i].bits()))
                chain.push_back(nodes[i]);
            std::reverse(chain.begin(), chain.end());
            return chain;
        }
        for (int nxt = 0; nxt < static_cast<int>(nodes.size()); ++nxt) {
            const auto &cand = nodes[nxt];
            if (parent.count(cand.bits()) || cand.size() <= nodes[cur].size())
                continue;
            if (nodes[cur].elements().is_subset_of(cand) && is_normal(h, nodes[cur], cand)) {
                parent[cand.bits()] = cur;
                queue.push_back(nxt);
            }
        }
    }
    return std::nullopt;
}

inline bool is_subnormal(const Hypergroup &h, const ClosedSubset &e, const ClosedSubset &in,
                         const std::vector<ClosedSubset> *lattice = nullptr)
{
    return subnormal_chain(h, e, in, lattice).has_value();
}

inline ClosedSubset whole(const Hypergroup &h) { return ClosedSubsetAccess::trusted(h.all()); }
inline ClosedSubset trivial(const Hypergroup &h) { return ClosedSubsetAccess::trusted(h.singleton(0)); }

struct ThetaCoreReport
{
    ClosedSubset core;      // intersection of all strongly normal closed subsets
    ClosedSubset generated; // closure of the union of all h*h
    bool agrees;
};

/// O^theta(H) together with the closure of the union of the h*h, which is
/// computed independently and compared rather than assumed equal.
inline ThetaCoreReport theta_core_report(const Hypergroup &h)
{
    const ClosedSubset all = whole(h);
    ElementSubset meet = h.all();
    for (const auto &c : enumerate_closed_subsets(h))
        if (is_strongly_normal(h, c, all))
            meet = meet & c.elements();
    ClosedSubset core = ClosedSubsetAccess::trusted(meet);
    HYPERHALL_INVARIANT(is_closed(h, meet), "intersection of closed subsets is not closed");
    HYPERHALL_INVARIANT(is_strongly_normal(h, core, all), "theta core is not strongly normal");

    ElementSubset squares = h.empty_subset();
    for (Element x = 0; x < h.order(); ++x)
        squares = squares | h.product(h.inverse(x), x);
    HYPERHALL_INVARIANT(squares.is_subset_of(meet), "some h*h escapes the theta core");
    ClosedSubset generated = closure(h, squares);
    return ThetaCoreReport{core, generated, core == generated};
}

inline ClosedSubset theta_core(const Hypergroup &h) { return theta_core_report(h).core; }

inline bool is_metathin(const Hypergroup &h)
{
    return theta_core(h).elements().is_subset_of(thin_elements(h));
}

} // namespace hyperhall

#endif // HYPERHALL_CLOSED_HPP
