#!/usr/bin/env python3
"""Converts raw GAP orbital dumps into catalogue files data/catalogue/asNN.txt.

Each raw block is relabelled canonically (diagonal 0, other labels in order of
first appearance in row-major order) and the blocks of one order are sorted by
(rank, valency multiset, transitive-group id) before numbering.
"""
import argparse
import pathlib
import re


def read_raw(path):
    lines = path.read_text().splitlines()
    blocks = []
    i = 0
    while i < len(lines):
        line = lines[i].strip()
        if not line.startswith("#"):
            i += 1
            continue
        m = re.search(r"degree (\d+) twoclosure T(\d+)", line)
        tid = (int(m.group(1)), int(m.group(2))) if m else (0, 0)
        n = int(lines[i + 1])
        rows = [list(map(int, lines[i + 2 + j].split())) for j in range(n)]
        blocks.append((tid, rows))
        i += 2 + n
    return blocks


def canonical(rows):
    labels = {}
    labels[rows[0][0]] = 0
    for row in rows:
        for v in row:
            if v not in labels:
                labels[v] = len(labels)
    return [[labels[v] for v in row] for row in rows], len(labels)


def valencies(rows, rank):
    val = [0] * rank
    for v in rows[0]:
        val[v] += 1
    return val


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("raw_dir", type=pathlib.Path)
    ap.add_argument("out_dir", type=pathlib.Path)
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    orders = {1: [((1, 1), [[0]])]}
    for path in sorted(args.raw_dir.glob("raw_*.txt")):
        n = int(path.stem.split("_")[1])
        orders[n] = read_raw(path)

    for n, blocks in sorted(orders.items()):
        entries = []
        for tid, rows in blocks:
            rows, rank = canonical(rows)
            entries.append((rank, sorted(valencies(rows, rank)), tid, rows))
        entries.sort(key=lambda e: (e[0], e[1], e[2]))
        out = [
            f"# association schemes of order {n}: {len(entries)} isomorphism types",
            "# orbital schemes of the 2-closed transitive permutation groups of this degree",
        ]
        for k, (rank, _, tid, rows) in enumerate(entries, start=1):
            out.append(f"# name: as{n:02d}-{k:03d}")
            out.append(f"# two-closure: TransitiveGroup({tid[0]}, {tid[1]})")
            out.append(f"{n} {rank}")
            out.extend(" ".join(map(str, row)) for row in rows)
        (args.out_dir / f"as{n:02d}.txt").write_text("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
