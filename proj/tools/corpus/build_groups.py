#!/usr/bin/env python3
"""Writes the bundled Cayley tables under data/groups/ (row x, column g -> xg).

Groups are realized as permutation groups (or Z_n) and closed under
composition; element 0 is always the identity.
"""
import itertools
import pathlib
import sys


def close(gens, degree):
    ident = tuple(range(degree))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = tuple(g[a[i]] for i in range(degree))  # apply a then g
                if c not in seen:
                    seen.add(c)
                    elems.append(c)
                    nxt.append(c)
        frontier = nxt
    return elems


def table_of(elems):
    index = {e: i for i, e in enumerate(elems)}
    deg = len(elems[0])
    # xg = "x followed by g"
    return [[index[tuple(g[x[i]] for i in range(deg))] for g in elems] for x in elems]


def cyclic(n):
    return [[(x + g) % n for g in range(n)] for x in range(n)]


def dihedral(n):
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return table_of(close([rot, ref], n))


def symmetric(n):
    return table_of(close([tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])], n))


def alternating4():
    return table_of(close([(1, 2, 0, 3), (0, 2, 3, 1)], 4))


def quaternion():
    # Q8 as permutations of itself under right multiplication by i and j.
    # Elements encoded as (sign, unit) with unit in 1,i,j,k.
    units = ["1", "i", "j", "k"]
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for s in (1, -1) for u in units]
    index = {e: i for i, e in enumerate(elems)}

    def mul(a, b):
        s, u = mult[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    return [[index[mul(x, g)] for g in elems] for x in elems]


def write(out, name, table):
    lines = [f"# name: {name}", str(len(table))]
    lines.extend(" ".join(map(str, row)) for row in table)
    (out / f"{name}.grp").write_text("\n".join(lines) + "\n")


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/groups")
    out.mkdir(parents=True, exist_ok=True)
    for n in list(range(1, 13)) + [24]:
        write(out, f"c{n}", cyclic(n))
    for n in (3, 4, 5, 6, 8, 10, 12):
        write(out, f"d{2 * n}", dihedral(n))
    write(out, "s3", symmetric(3))
    write(out, "a4", alternating4())
    write(out, "s4", symmetric(4))
    write(out, "q8", quaternion())


if __name__ == "__main__":
    main()
