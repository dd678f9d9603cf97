#ifndef HYPERHALL_HYPERGROUP_HPP
#define HYPERHALL_HYPERGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "element_subset.hpp"
#include "error.hpp"

namespace hyperhall
{

/// Set-valued multiplication table as supplied by a caller: entry [a][b] lists
/// the elements of the product ab (duplicates are ignored).
using HyperTable = std::vector<std::vector<std::vector<int>>>;

/// First violated axiom of a candidate table, with witnesses in input order.
struct Violation
{
    ErrorKind kind;
    std::vector<int> witness;
    std::string message;
};

class Hypergroup;
Hypergroup validate_hypergroup(const HyperTable &table);

/// A finite hypergroup: elements 0..k-1 with 0 the neutral element, a
/// set-valued associative product and the inverse involution h -> h*.
/// Instances are immutable and only obtainable through validate_hypergroup.
class Hypergroup
{
public:
    int order() const noexcept { return order_; }
    std::uint64_t token() const noexcept { return token_; }
    static constexpr Element neutral() noexcept { return 0; }

    Element inverse(Element h) const { return inverse_.at(h); }
    const std::vector<Element> &inverse_map() const noexcept { return inverse_; }

    /// Position of each element in the table that was validated.
    const std::vector<int> &input_index() const noexcept { return input_index_; }

    std::uint64_t product_mask(Element a, Element b) const noexcept
    {
        return masks_[static_cast<std::size_t>(a) * order_ + b];
    }

    ElementSubset product(Element a, Element b) const
    {
        return ElementSubset(token_, order_, product_mask(a, b));
    }

    ElementSubset empty_subset() const { return ElementSubset(token_, order_, 0); }
    ElementSubset all() const { return ElementSubset(token_, order_, detail::full_mask(order_)); }
    ElementSubset singleton(Element e) const
    {
        check_element(e);
        return ElementSubset(token_, order_, std::uint64_t{1} << e);
    }
    ElementSubset subset(std::span<const Element> elems) const
    {
        std::uint64_t bits = 0;
        for (Element e : elems) {
            check_element(e);
            bits |= std::uint64_t{1} << e;
        }
        return ElementSubset(token_, order_, bits);
    }
    ElementSubset subset(std::initializer_list<Element> elems) const
    {
        return subset(std::span<const Element>(elems.begin(), elems.size()));
    }
    ElementSubset from_bits(std::uint64_t bits) const { return ElementSubset(token_, order_, bits); }

    bool owns(const ElementSubset &s) const noexcept { return s.token() == token_; }
    void check_owns(const ElementSubset &s) const
    {
        if (!owns(s))
            throw Error(ErrorKind::ParentMismatch, "subset does not belong to this hypergroup");
    }

    /// The table as a HyperTable in this hypergroup's own indexing.
    HyperTable table() const
    {
        HyperTable t(order_, std::vector<std::vector<int>>(order_));
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                t[a][b] = product(a, b).members();
        return t;
    }

private:
    friend Hypergroup validate_hypergroup(const HyperTable &table);

    Hypergroup() = default;

    void check_element(Element e) const
    {
        if (e < 0 || e >= order_)
            throw Error(ErrorKind::MalformedTable, "element index out of range", {e});
    }

    int order_ = 0;
    std::uint64_t token_ = 0;
    std::vector<std::uint64_t> masks_;
    std::vector<Element> inverse_;
    std::vector<int> input_index_;
};

namespace detail
{

inline std::uint64_t bit(int e) { return std::uint64_t{1} << e; }

inline std::uint64_t left_mul(const std::vector<std::uint64_t> &m, int k, int p, std::uint64_t set)
{
    std::uint64_t out = 0;
    for (std::uint64_t b = set; b != 0; b &= b - 1)
        out |= m[static_cast<std::size_t>(p) * k + std::countr_zero(b)];
    return out;
}

inline std::uint64_t right_mul(const std::vector<std::uint64_t> &m, int k, std::uint64_t set, int r)
{
    std::uint64_t out = 0;
    for (std::uint64_t b = set; b != 0; b &= b - 1)
        out |= m[static_cast<std::size_t>(std::countr_zero(b)) * k + r];
    return out;
}

inline std::optional<Violation> check_inverse(const std::vector<std::uint64_t> &m, int k,
                                              const std::vector<int> &inv)
{
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            for (std::uint64_t b = m[static_cast<std::size_t>(p) * k + q]; b != 0; b &= b - 1) {
                int r = std::countr_zero(b);
                bool left = (m[static_cast<std::size_t>(inv[p]) * k + r] >> q) & 1u;
                bool right = (m[static_cast<std::size_t>(r) * k + inv[q]] >> p) & 1u;
                if (!left || !right)
                    return Violation{ErrorKind::NoInverse, {p, q, r},
                                     "inverse exchange fails for r in pq"};
            }
    return std::nullopt;
}

struct Checked
{
    std::vector<std::uint64_t> masks;
    int neutral = -1;
    std::vector<int> inverse;
};

inline std::optional<Violation> analyse(const HyperTable &table, Checked &out)
{
    const int k = static_cast<int>(table.size());
    if (k == 0 || k > kMaxOrder)
        return Violation{ErrorKind::MalformedTable, {k}, "order must be between 1 and 64"};
    out.masks.assign(static_cast<std::size_t>(k) * k, 0);
    for (int a = 0; a < k; ++a) {
        if (static_cast<int>(table[a].size()) != k)
            return Violation{ErrorKind::MalformedTable, {a}, "table row has wrong length"};
        for (int b = 0; b < k; ++b)
            for (int c : table[a][b]) {
                if (c < 0 || c >= k)
                    return Violation{ErrorKind::MalformedTable, {a, b, c}, "product entry out of range"};
                out.masks[static_cast<std::size_t>(a) * k + b] |= bit(c);
            }
    }
    const auto &m = out.masks;

    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (m[static_cast<std::size_t>(a) * k + b] == 0)
                return Violation{ErrorKind::EmptyProduct, {a, b}, "product ab is empty"};

    // H1: p(qr) = (pq)r
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            std::uint64_t pq = m[static_cast<std::size_t>(p) * k + q];
            for (int r = 0; r < k; ++r) {
                std::uint64_t lhs = left_mul(m, k, p, m[static_cast<std::size_t>(q) * k + r]);
                std::uint64_t rhs = right_mul(m, k, pq, r);
                if (lhs != rhs)
                    return Violation{ErrorKind::AssocViolation, {p, q, r}, "p(qr) differs from (pq)r"};
            }
        }

    // H2: se = {s}
    for (int e = 0; e < k && out.neutral < 0; ++e) {
        bool ok = true;
        for (int s = 0; s < k && ok; ++s)
            ok = m[static_cast<std::size_t>(s) * k + e] == bit(s);
        if (ok)
            out.neutral = e;
    }
    if (out.neutral < 0)
        return Violation{ErrorKind::NoNeutral, {}, "no element e with se = {s} for all s"};
    const int e = out.neutral;

    // H3: by the 1 in a*b <=> a = b criterion, a* must be an element c whose
    // row contains the neutral element exactly in column a.
    std::vector<std::vector<int>> candidates(k);
    for (int c = 0; c < k; ++c) {
        int hits = 0, col = -1;
        for (int b = 0; b < k; ++b)
            if ((m[static_cast<std::size_t>(c) * k + b] >> e) & 1u) {
                ++hits;
                col = b;
            }
        if (hits == 1)
            candidates[col].push_back(c);
    }
    for (int a = 0; a < k; ++a)
        if (candidates[a].empty())
            return Violation{ErrorKind::NoInverse, {a}, "no candidate inverse for element"};

    std::vector<int> choice(k, 0), inv(k);
    std::optional<Violation> first_failure;
    // Candidate lists are singletons for genuine hypergroups; the cap only
    // bounds the work spent on garbage tables.
    for (long attempts = 0; attempts < 1'000'000; ++attempts) {
        for (int a = 0; a < k; ++a)
            inv[a] = candidates[a][choice[a]];
        auto v = check_inverse(m, k, inv);
        if (!v) {
            out.inverse = inv;
            return std::nullopt;
        }
        if (!first_failure)
            first_failure = v;
        int a = 0;
        while (a < k && ++choice[a] == static_cast<int>(candidates[a].size()))
            choice[a++] = 0;
        if (a == k)
            break;
    }
    return first_failure;
}

} // namespace detail

/// Returns the first violated axiom of `table`, or nothing if it is a
/// hypergroup. Checks, in order: shape, empty products, H1, H2, H3.
inline std::optional<Violation> find_violation(const HyperTable &table)
{
    detail::Checked checked;
    return detail::analyse(table, checked);
}

/// Validates `table` and re-indexes it so that the neutral element is 0; the
/// remaining elements keep their relative input order. Throws Error carrying
/// the first violation otherwise.
inline Hypergroup validate_hypergroup(const HyperTable &table)
{
    detail::Checked checked;
    if (auto v = detail::analyse(table, checked))
        throw Error(v->kind, v->message, v->witness);

    const int k = static_cast<int>(table.size());
    std::vector<int> order;
    order.push_back(checked.neutral);
    for (int a = 0; a < k; ++a)
        if (a != checked.neutral)
            order.push_back(a);
    std::vector<int> position(k);
    for (int i = 0; i < k; ++i)
        position[order[i]] = i;

    Hypergroup h;
    h.order_ = k;
    h.token_ = detail::next_parent_token();
    h.input_index_ = order;
    h.inverse_.resize(k);
    h.masks_.assign(static_cast<std::size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i) {
        h.inverse_[i] = position[checked.inverse[order[i]]];
        for (int j = 0; j < k; ++j) {
            std::uint64_t src = checked.masks[static_cast<std::size_t>(order[i]) * k + order[j]];
            std::uint64_t dst = 0;
            for (std::uint64_t b = src; b != 0; b &= b - 1)
                dst |= detail::bit(position[std::countr_zero(b)]);
            h.masks_[static_cast<std::size_t>(i) * k + j] = dst;
        }
    }
    return h;
}

/// AB: union of the products ab with a in A and b in B.
inline ElementSubset subset_product(const Hypergroup &h, const ElementSubset &a, const ElementSubset &b)
{
    h.check_owns(a);
    h.check_owns(b);
    std::uint64_t out = 0;
    for (std::uint64_t x = a.bits(); x != 0; x &= x - 1) {
        int p = std::countr_zero(x);
        for (std::uint64_t y = b.bits(); y != 0; y &= y - 1)
            out |= h.product_mask(p, std::countr_zero(y));
    }
    return h.from_bits(out);
}

inline ElementSubset subset_product(const Hypergroup &h, const ElementSubset &a, const ElementSubset &b,
                                    const ElementSubset &c)
{
    return subset_product(h, subset_product(h, a, b), c);
}

/// A* = { a* : a in A }
inline ElementSubset star(const Hypergroup &h, const ElementSubset &a)
{
    h.check_owns(a);
    std::uint64_t out = 0;
    for (std::uint64_t x = a.bits(); x != 0; x &= x - 1)
        out |= detail::bit(h.inverse(std::countr_zero(x)));
    return h.from_bits(out);
}

inline bool is_thin_element(const Hypergroup &h, Element e)
{
    return h.product_mask(h.inverse(e), e) == detail::bit(Hypergroup::neutral());
}

/// O_theta(H): the elements h with h*h = {1}.
inline ElementSubset thin_elements(const Hypergroup &h)
{
    std::uint64_t out = 0;
    for (int e = 0; e < h.order(); ++e)
        if (is_thin_element(h, e))
            out |= detail::bit(e);
    return h.from_bits(out);
}

inline bool is_thin(const Hypergroup &h, const ElementSubset &a)
{
    h.check_owns(a);
    return a.is_subset_of(thin_elements(h));
}

inline bool is_thin(const Hypergroup &h) { return thin_elements(h) == h.all(); }

/// Text grid of the product table, one row per left factor.
inline std::string render(const Hypergroup &h)
{
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (int a = 0; a < h.order(); ++a)
        for (int b = 0; b < h.order(); ++b) {
            cells.push_back(to_string(h.product(a, b)));
            width = std::max(width, cells.back().size());
        }
    std::ostringstream os;
    os << "order " << h.order() << "\n";
    os << "inverse:";
    for (int a = 0; a < h.order(); ++a)
        os << " " << a << "->" << h.inverse(a);
    os << "\n";
    auto pad = [&](const std::string &s) { return s + std::string(width - s.size(), ' '); };
    os << pad("*") << " |";
    for (int b = 0; b < h.order(); ++b)
        os << " " << pad(std::to_string(b));
    os << "\n";
    for (int a = 0; a < h.order(); ++a) {
        os << pad(std::to_string(a)) << " |";
        for (int b = 0; b < h.order(); ++b)
            os << " " << pad(cells[static_cast<std::size_t>(a) * h.order() + b]);
        os << "\n";
    }
    return os.str();
}

} // namespace hyperhall

#endif // HYPERHALL_HYPERGROUP_HPP
