#ifndef HYPERHALL_HOMOMORPHISM_HPP
#define HYPERHALL_HOMOMORPHISM_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "quotient.hpp"

namespace hyperhall
{

/// A validated map phi with phi(ab) = phi(a)phi(b) as sets and phi(1) = 1.
class HypergroupHomomorphism
{
public:
    /// Throws NotHomomorphism; the witness is (a, b) for a failing product,
    /// (0) for phi(1) != 1, or (a) for an out-of-range image.
    static HypergroupHomomorphism make(const Hypergroup &source, const Hypergroup &target,
                                       std::vector<Element> map)
    {
        if (static_cast<int>(map.size()) != source.order())
            throw Error(ErrorKind::NotHomomorphism, "map length differs from source order",
                        {static_cast<int>(map.size())});
        for (int a = 0; a < source.order(); ++a)
            if (map[a] < 0 || map[a] >= target.order())
                throw Error(ErrorKind::NotHomomorphism, "image out of range", {a});
        if (map[Hypergroup::neutral()] != Hypergroup::neutral())
            throw Error(ErrorKind::NotHomomorphism, "phi(1) is not 1", {0});
        HypergroupHomomorphism phi(source, target, std::move(map));
        for (int a = 0; a < source.order(); ++a)
            for (int b = 0; b < source.order(); ++b)
                if (phi.image_mask(source.product_mask(a, b)) != target.product_mask(phi.map_[a], phi.map_[b]))
                    throw Error(ErrorKind::NotHomomorphism, "phi(ab) differs from phi(a)phi(b)", {a, b});
        for (int a = 0; a < source.order(); ++a)
            HYPERHALL_INVARIANT(phi.map_[source.inverse(a)] == target.inverse(phi.map_[a]),
                                "homomorphism does not commute with the inverse");
        return phi;
    }

    const Hypergroup &source() const noexcept { return source_; }
    const Hypergroup &target() const noexcept { return target_; }
    const std::vector<Element> &map() const noexcept { return map_; }
    Element operator()(Element a) const { return map_.at(a); }

    ElementSubset apply(const ElementSubset &a) const
    {
        source_.check_owns(a);
        return target_.from_bits(image_mask(a.bits()));
    }

    bool is_bijective() const
    {
        return source_.order() == target_.order() && image_mask(detail::full_mask(source_.order())) ==
                                                         detail::full_mask(target_.order());
    }

private:
    HypergroupHomomorphism(const Hypergroup &s, const Hypergroup &t, std::vector<Element> m)
      : source_(s), target_(t), map_(std::move(m))
    {
    }

    std::uint64_t image_mask(std::uint64_t bits) const
    {
        std::uint64_t out = 0;
        for (std::uint64_t b = bits; b != 0; b &= b - 1)
            out |= detail::bit(map_[std::countr_zero(b)]);
        return out;
    }

    Hypergroup source_;
    Hypergroup target_;
    std::vector<Element> map_;
};

/// ker(phi) = { h : phi(h) = 1 }; always a normal closed subset.
inline ClosedSubset kernel(const HypergroupHomomorphism &phi)
{
    const Hypergroup &h = phi.source();
    std::uint64_t bits = 0;
    for (Element a = 0; a < h.order(); ++a)
        if (phi(a) == Hypergroup::neutral())
            bits |= detail::bit(a);
    ElementSubset k = h.from_bits(bits);
    HYPERHALL_INVARIANT(is_closed(h, k), "kernel is not closed");
    ClosedSubset out = ClosedSubsetAccess::trusted(k);
    HYPERHALL_INVARIANT(is_normal(h, out, whole(h)), "kernel is not normal");
    return out;
}

/// im(phi) = phi(H); always a closed subset of the target.
inline ClosedSubset image(const HypergroupHomomorphism &phi)
{
    ElementSubset im = phi.apply(phi.source().all());
    HYPERHALL_INVARIANT(is_closed(phi.target(), im), "image is not closed");
    return ClosedSubsetAccess::trusted(im);
}

/// h -> h^F. A homomorphism exactly when F is normal; NotHomomorphism otherwise.
inline HypergroupHomomorphism projection(const QuotientHypergroup &q)
{
    return HypergroupHomomorphism::make(q.parent, q.hypergroup, q.coset_of);
}

/// h^D -> h^E for closed D contained in E, both quotients of the same parent.
inline HypergroupHomomorphism coarsening(const QuotientHypergroup &qd, const QuotientHypergroup &qe)
{
    qd.parent.check_owns(qe.kernel);
    require_subset(qd.kernel, qe.kernel);
    std::vector<Element> map;
    for (Element rep : qd.representatives)
        map.push_back(qe.coset_of[rep]);
    return HypergroupHomomorphism::make(qd.hypergroup, qe.hypergroup, std::move(map));
}

enum class IsoStatus
{
    Found,
    None,
    Overflow,
};

struct IsoSearch
{
    IsoStatus status;
    std::vector<Element> map; // h1 element -> h2 element when Found
};

/// Hypergroups above this order are not searched.
inline constexpr int kMaxIsomorphismOrder = 24;

namespace detail
{

struct Fingerprint
{
    int square = 0;      // |x*x|
    bool involution = false;
    std::vector<int> row; // sorted |xy|
    std::vector<int> col; // sorted |yx|

    friend bool operator==(const Fingerprint &, const Fingerprint &) = default;
};

inline std::vector<Fingerprint> fingerprints(const Hypergroup &h)
{
    const int k = h.order();
    std::vector<Fingerprint> out(k);
    for (int x = 0; x < k; ++x) {
        out[x].square = std::popcount(h.product_mask(h.inverse(x), x));
        out[x].involution = h.inverse(x) == x;
        for (int y = 0; y < k; ++y) {
            out[x].row.push_back(std::popcount(h.product_mask(x, y)));
            out[x].col.push_back(std::popcount(h.product_mask(y, x)));
        }
        std::sort(out[x].row.begin(), out[x].row.end());
        std::sort(out[x].col.begin(), out[x].col.end());
    }
    return out;
}

class IsoSearcher
{
public:
    IsoSearcher(const Hypergroup &a, const Hypergroup &b) : a_(a), b_(b), k_(a.order())
    {
        auto fa = fingerprints(a), fb = fingerprints(b);
        candidates_.resize(k_);
        for (int x = 0; x < k_; ++x)
            for (int y = 0; y < k_; ++y)
                if (fa[x] == fb[y])
                    candidates_[x].push_back(y);
        map_.assign(k_, -1);
        used_.assign(k_, false);
    }

    bool run() { return assign(0); }
    const std::vector<Element> &map() const { return map_; }

private:
    // Compatible with every earlier assignment on products touching x.
    bool consistent(int x) const
    {
        for (int a = 0; a <= x; ++a)
            for (auto [p, q] : std::array<std::pair<int, int>, 2>{{{a, x}, {x, a}}}) {
                std::uint64_t src = a_.product_mask(p, q);
                std::uint64_t dst = b_.product_mask(map_[p], map_[q]);
                if (std::popcount(src) != std::popcount(dst))
                    return false;
                for (std::uint64_t s = src; s != 0; s &= s - 1) {
                    int c = std::countr_zero(s);
                    if (map_[c] >= 0 && !((dst >> map_[c]) & 1u))
                        return false;
                }
                for (std::uint64_t d = dst; d != 0; d &= d - 1) {
                    int c = std::countr_zero(d);
                    if (used_[c] && !((src >> inverse_image(c)) & 1u))
                        return false;
                }
            }
        int xi = a_.inverse(x);
        if (map_[xi] >= 0 && map_[xi] != b_.inverse(map_[x]))
            return false;
        return true;
    }

    int inverse_image(int y) const
    {
        for (int x = 0; x < k_; ++x)
            if (map_[x] == y)
                return x;
        return -1;
    }

    bool assign(int x)
    {
        if (x == k_)
            return true;
        for (int y : candidates_[x]) {
            if (used_[y] || (x == 0 && y != 0))
                continue;
            map_[x] = y;
            used_[y] = true;
            if (consistent(x) && assign(x + 1))
                return true;
            map_[x] = -1;
            used_[y] = false;
        }
        return false;
    }

    const Hypergroup &a_;
    const Hypergroup &b_;
    int k_;
    std::vector<std::vector<int>> candidates_;
    std::vector<Element> map_;
    std::vector<bool> used_;
};

} // namespace detail

/// Backtracking search for a bijective homomorphism h1 -> h2 over
/// neutral-preserving, inverse-compatible bijections, pruned by product-size
/// fingerprints. The first map in lexicographic order is returned.
inline IsoSearch find_isomorphism(const Hypergroup &h1, const Hypergroup &h2)
{
    if (h1.order() != h2.order())
        return {IsoStatus::None, {}};
    if (h1.order() > kMaxIsomorphismOrder)
        return {IsoStatus::Overflow, {}};
    detail::IsoSearcher search(h1, h2);
    if (!search.run())
        return {IsoStatus::None, {}};
    HYPERHALL_INVARIANT(HypergroupHomomorphism::make(h1, h2, search.map()).is_bijective(),
                        "isomorphism search returned a non-isomorphism");
    return {IsoStatus::Found, search.map()};
}

/// Both sides of an isomorphism theorem, the explicit map from its proof, and
/// the independent search result.
struct IsomorphismWitness
{
    Hypergroup lhs;
    Hypergroup rhs;
    HypergroupHomomorphism construction; // the surjection whose kernel gives lhs
    IsoSearch search;                    // lhs -> rhs
};

/// H//ker(phi) ~ im(phi).
inline IsomorphismWitness first_isomorphism(const HypergroupHomomorphism &phi)
{
    QuotientHypergroup q = quotient(phi.source(), kernel(phi));
    Restriction im = restrict_to(phi.target(), image(phi));
    std::vector<Element> psi;
    for (Element rep : q.representatives)
        psi.push_back(im.to_sub_index[phi(rep)]);
    HypergroupHomomorphism induced = HypergroupHomomorphism::make(q.hypergroup, im.hypergroup, psi);
    HYPERHALL_INVARIANT(induced.is_bijective(), "induced map on the quotient is not bijective");
    return {q.hypergroup, im.hypergroup, induced, find_isomorphism(q.hypergroup, im.hypergroup)};
}

/// (H//D)//(E//D) ~ H//E for closed D contained in E, E normal in H.
inline IsomorphismWitness correspondence_isomorphism(const Hypergroup &h, const ClosedSubset &d,
                                                     const ClosedSubset &e)
{
    require_subset(d, e);
    QuotientHypergroup qd = quotient(h, d);
    QuotientHypergroup qe = quotient(h, e);
    HypergroupHomomorphism phi = coarsening(qd, qe);
    ClosedSubset ed = project_closed(qd, e);
    HYPERHALL_INVARIANT(kernel(phi) == ed, "kernel of h^D -> h^E is not E//D");
    HYPERHALL_INVARIANT(is_normal(qd.hypergroup, ed, whole(qd.hypergroup)), "E//D is not normal in H//D");
    QuotientHypergroup lhs = quotient(qd.hypergroup, ed);
    return {lhs.hypergroup, qe.hypergroup, phi, find_isomorphism(lhs.hypergroup, qe.hypergroup)};
}

/// ED//E ~ D//(E meet D) when D normalizes E.
inline IsomorphismWitness product_isomorphism(const Hypergroup &h, const ClosedSubset &d, const ClosedSubset &e)
{
    if (!normalizes(h, d, e))
        throw Error(ErrorKind::NotHomomorphism, "D does not normalize E, so d -> d^E is not a homomorphism");
    ElementSubset ed_set = subset_product(h, e, d);
    HYPERHALL_INVARIANT(is_closed(h, ed_set), "ED is not closed");
    ClosedSubset ed = ClosedSubsetAccess::trusted(ed_set);
    Restriction big = restrict_to(h, ed);
    ClosedSubset e_in_big = big.to_sub(e);
    HYPERHALL_INVARIANT(is_normal(big.hypergroup, e_in_big, whole(big.hypergroup)), "E is not normal in ED");
    QuotientHypergroup top = quotient(big.hypergroup, e_in_big);

    Restriction small = restrict_to(h, d);
    ElementSubset meet = e.elements() & d.elements();
    HYPERHALL_INVARIANT(is_closed(h, meet), "E meet D is not closed");
    ClosedSubset meet_in_small = small.to_sub(ClosedSubsetAccess::trusted(meet));
    HYPERHALL_INVARIANT(is_normal(small.hypergroup, meet_in_small, whole(small.hypergroup)),
                        "E meet D is not normal in D");

    std::vector<Element> psi;
    for (Element x : small.to_parent_index)
        psi.push_back(top.coset_of[big.to_sub_index[x]]);
    HypergroupHomomorphism map = HypergroupHomomorphism::make(small.hypergroup, top.hypergroup, psi);
    HYPERHALL_INVARIANT(kernel(map) == meet_in_small, "kernel of d -> d^E is not E meet D");
    HYPERHALL_INVARIANT(image(map).elements() == top.hypergroup.all(), "d -> d^E is not surjective");
    QuotientHypergroup bottom = quotient(small.hypergroup, meet_in_small);
    return {bottom.hypergroup, top.hypergroup, map, find_isomorphism(bottom.hypergroup, top.hypergroup)};
}

} // namespace hyperhall

#endif // HYPERHALL_HOMOMORPHISM_HPP
