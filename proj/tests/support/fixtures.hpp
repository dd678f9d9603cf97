#ifndef HYPERHALL_TESTS_FIXTURES_HPP
#define HYPERHALL_TESTS_FIXTURES_HPP

// Small named structures used throughout the unit tests. Relation labels are
// looked up from point pairs rather than assumed.

#include <hyperhall/hyperhall.hpp>

#include "corpus.hpp"

namespace hhtest
{

/// The 5-cycle scheme: 1, r (distance 1), t (distance 2).
struct Pentagon
{
    AssociationScheme s = scheme_file("pentagon");
    const Hypergroup &h = s.hypergroup();
    int r = s.rel(0, 1);
    int t = s.rel(0, 2);
};

/// The 4-cycle scheme: 1, r (adjacent), s (opposite).
struct FourCycle
{
    AssociationScheme sch = scheme_file("c4cycle");
    const Hypergroup &h = sch.hypergroup();
    int r = sch.rel(0, 1);
    int s = sch.rel(0, 2);
};

/// Element orders of a group.
inline int element_order(const Group &g, int x)
{
    int n = 1;
    for (int y = x; y != 0; y = g.mul(y, x))
        ++n;
    return n;
}

inline int element_of_order(const Group &g, int n)
{
    for (int x = 0; x < g.order(); ++x)
        if (element_order(g, x) == n)
            return x;
    throw std::runtime_error("no element of the requested order");
}

/// Cayley table of Z/n.
inline std::vector<std::vector<int>> cyclic_table(int n)
{
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return t;
}

/// A group table read as a singleton-valued hypergroup table.
inline HyperTable as_hypertable(const std::vector<std::vector<int>> &t)
{
    HyperTable out(t.size(), std::vector<std::vector<int>>(t.size()));
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b)
            out[a][b] = {t[a][b]};
    return out;
}

/// Relations of a thin scheme from group elements: rel(1, g) is the relation of g.
inline int relation_of(const AssociationScheme &s, int g) { return s.rel(0, g); }

} // namespace hhtest

#endif // HYPERHALL_TESTS_FIXTURES_HPP
