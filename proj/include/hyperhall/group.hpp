#ifndef HYPERHALL_GROUP_HPP
#define HYPERHALL_GROUP_HPP

#include <vector>

#include "primes.hpp"
#include "solvable.hpp"

namespace hyperhall
{

/// A finite group given by its Cayley table, element 0 the identity. The thin
/// hypergroup on the same indices is kept alongside; subgroups are its closed
/// subsets.
class Group
{
public:
    int order() const noexcept { return order_; }
    Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    Element inverse(Element a) const { return inverse_.at(a); }
    const Hypergroup &hypergroup() const noexcept { return hypergroup_; }
    /// Position of each element in the table that was validated.
    const std::vector<int> &input_index() const noexcept { return input_index_; }

    std::vector<std::vector<int>> table() const
    {
        std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                out[a][b] = mul(a, b);
        return out;
    }

private:
    friend Group validate_group(const std::vector<std::vector<int>> &table);
    friend Group group_from_thin(const Hypergroup &h);

    Group(int order, std::vector<int> table, std::vector<int> inverse, std::vector<int> input_index,
          Hypergroup h)
      : order_(order), table_(std::move(table)), inverse_(std::move(inverse)), input_index_(std::move(input_index)),
        hypergroup_(std::move(h))
    {
    }

    int order_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<int> input_index_;
    Hypergroup hypergroup_;
};

namespace detail
{

inline Hypergroup thin_hypergroup_of(const std::vector<std::vector<int>> &t)
{
    const int k = static_cast<int>(t.size());
    HyperTable table(k, std::vector<std::vector<int>>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            table[a][b] = {t[a][b]};
    Hypergroup h = validate_hypergroup(table);
    for (int a = 0; a < k; ++a)
        HYPERHALL_REQUIRE(h.input_index()[a] == a, "identity of a group table is not element 0");
    return h;
}

} // namespace detail

/// Checks closure, associativity, identity and inverses; re-indexes so that
/// the identity is 0 with the other elements in input order. Throws NotAGroup
/// with the offending indices (input order).
inline Group validate_group(const std::vector<std::vector<int>> &table)
{
    const int k = static_cast<int>(table.size());
    if (k == 0 || k > kMaxOrder)
        throw Error(ErrorKind::NotAGroup, "group order must be between 1 and 64", {k});
    for (int a = 0; a < k; ++a) {
        if (static_cast<int>(table[a].size()) != k)
            throw Error(ErrorKind::NotAGroup, "table row has wrong length", {a});
        for (int b = 0; b < k; ++b)
            if (table[a][b] < 0 || table[a][b] >= k)
                throw Error(ErrorKind::NotAGroup, "product out of range", {a, b});
    }
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error(ErrorKind::NotAGroup, "product is not associative", {a, b, c});
    int e = -1;
    for (int c = 0; c < k && e < 0; ++c) {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            ok = table[c][a] == a && table[a][c] == a;
        if (ok)
            e = c;
    }
    if (e < 0)
        throw Error(ErrorKind::NotAGroup, "no identity element");
    std::vector<int> inv_in(k, -1);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b)
            if (table[a][b] == e && table[b][a] == e)
                inv_in[a] = b;
        if (inv_in[a] < 0)
            throw Error(ErrorKind::NotAGroup, "element has no inverse", {a});
    }

    std::vector<int> order{e}, position(k);
    for (int a = 0; a < k; ++a)
        if (a != e)
            order.push_back(a);
    for (int i = 0; i < k; ++i)
        position[order[i]] = i;
    std::vector<int> flat(static_cast<std::size_t>(k) * k);
    std::vector<std::vector<int>> rows(k, std::vector<int>(k));
    std::vector<int> inverse(k);
    for (int i = 0; i < k; ++i) {
        inverse[i] = position[inv_in[order[i]]];
        for (int j = 0; j < k; ++j) {
            rows[i][j] = position[table[order[i]][order[j]]];
            flat[static_cast<std::size_t>(i) * k + j] = rows[i][j];
        }
    }
    return Group(k, std::move(flat), std::move(inverse), std::move(order), detail::thin_hypergroup_of(rows));
}

/// The group of a thin hypergroup. Throws NotAGroup when some element is not
/// thin.
inline Group group_from_thin(const Hypergroup &h)
{
    if (!is_thin(h))
        throw Error(ErrorKind::NotAGroup, "hypergroup is not thin", thin_elements(h).members());
    const int k = h.order();
    std::vector<int> flat(static_cast<std::size_t>(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            ElementSubset p = h.product(a, b);
            HYPERHALL_INVARIANT(p.size() == 1, "product of thin elements is not a singleton");
            flat[static_cast<std::size_t>(a) * k + b] = p.first();
        }
    std::vector<int> index(k);
    for (int a = 0; a < k; ++a)
        index[a] = a;
    return Group(k, std::move(flat), h.inverse_map(), std::move(index), h);
}

/// All subgroups, sorted by (size, member sequence).
inline std::vector<ClosedSubset> subgroups(const Group &g) { return enumerate_closed_subsets(g.hypergroup()); }

/// x^-1 A x
inline ElementSubset conjugate(const Group &g, const ElementSubset &a, Element x)
{
    g.hypergroup().check_owns(a);
    std::uint64_t bits = 0;
    for (Element y : a.members())
        bits |= detail::bit(g.mul(g.mul(g.inverse(x), y), x));
    return g.hypergroup().from_bits(bits);
}

/// Smallest x with x^-1 A x = B, or nothing.
inline std::optional<Element> conjugating_group_element(const Group &g, const ElementSubset &a,
                                                        const ElementSubset &b)
{
    for (Element x = 0; x < g.order(); ++x)
        if (conjugate(g, a, x) == b)
            return x;
    return std::nullopt;
}

inline bool is_solvable_group(const Group &g) { return is_solvable(g.hypergroup()); }

/// Every subgroup whose order is the pi-part of |G|. Throws NotSolvableGroup.
inline std::vector<ClosedSubset> hall_subgroups(const Group &g, const PrimeSet &pi)
{
    if (!is_solvable_group(g))
        throw Error(ErrorKind::NotSolvableGroup, "group of order " + std::to_string(g.order()) + " is not solvable");
    const std::int64_t target = pi_part(g.order(), pi);
    std::vector<ClosedSubset> out;
    for (const auto &s : subgroups(g))
        if (s.size() == target)
            out.push_back(s);
    HYPERHALL_REQUIRE(!out.empty(), "solvable group without a Hall subgroup");
    for (std::size_t i = 1; i < out.size(); ++i)
        HYPERHALL_INVARIANT(conjugating_group_element(g, out[0], out[i]).has_value(),
                            "Hall subgroups are not conjugate");
    return out;
}

} // namespace hyperhall

#endif // HYPERHALL_GROUP_HPP
