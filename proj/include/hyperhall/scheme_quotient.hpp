#ifndef HYPERHALL_SCHEME_QUOTIENT_HPP
#define HYPERHALL_SCHEME_QUOTIENT_HPP

#include <numeric>
#include <vector>

#include "scheme.hpp"

namespace hyperhall
{

/// S//T realised on the point classes xT. Quotient relation i is the double
/// coset T s T numbered as in the hypergroup quotient, so the two quotients
/// share indices.
struct QuotientScheme
{
    AssociationScheme scheme;
    QuotientHypergroup hypergroup_quotient; // quotient(S.hypergroup(), T)
    std::vector<int> point_class;           // point -> class, classes numbered by smallest point
    std::vector<int> relation_class;        // relation s -> s^T
};

namespace detail
{

class UnionFind
{
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

} // namespace detail

inline QuotientScheme quotient_scheme(const AssociationScheme &s, const SchemeClosedSubset &t)
{
    const Hypergroup &h = s.hypergroup();
    h.check_owns(t.relations);
    if (!is_closed(h, t.relations))
        throw Error(ErrorKind::NotClosed, "relation set is not closed", t.relations.members());
    QuotientHypergroup q = quotient(h, t.relations);

    const int n = s.n_points();
    detail::UnionFind uf(n);
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
            if (t.relations.contains(s.rel(y, z)))
                uf.unite(y, z);
    std::vector<int> root_class(n, -1), point_class(n);
    int classes = 0;
    for (int y = 0; y < n; ++y) {
        int r = uf.find(y);
        if (root_class[r] < 0)
            root_class[r] = classes++;
        point_class[y] = root_class[r];
    }
    HYPERHALL_INVARIANT(t.valency * classes == n, "point classes do not all have size n_T");

    LabelMatrix rel(classes, std::vector<int>(classes, -1));
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
            int &slot = rel[point_class[y]][point_class[z]];
            const int label = q.coset_of[s.rel(y, z)];
            if (slot < 0)
                slot = label;
            HYPERHALL_REQUIRE(slot == label, "relations between two point classes span several double cosets");
        }
    AssociationScheme qs = validate_scheme(rel);
    HYPERHALL_REQUIRE(qs.rank() == q.hypergroup.order(), "quotient scheme rank differs from the hypergroup quotient");

    for (int i = 0; i < qs.rank(); ++i) {
        HYPERHALL_INVARIANT(qs.valency(i) * t.valency == s.valency(q.cosets[i]), "valency law n_{s^T} n_T = n_{TsT} fails");
        for (int j = 0; j < qs.rank(); ++j)
            HYPERHALL_INVARIANT(qs.hypergroup().product_mask(i, j) == q.hypergroup.product_mask(i, j),
                                "quotient scheme and quotient hypergroup differ");
    }
    std::vector<int> relation_class = q.coset_of;
    return QuotientScheme{std::move(qs), std::move(q), std::move(point_class), std::move(relation_class)};
}

} // namespace hyperhall

#endif // HYPERHALL_SCHEME_QUOTIENT_HPP
