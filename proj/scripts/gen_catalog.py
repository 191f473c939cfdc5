#!/usr/bin/env python3
"""Regenerate the real-form catalog under data/catalog/.

One JSON document per real form, grouped in one directory per family.
Node indices are 1-based Bourbaki numbering.  Every generated entry must
pass the library's own validation (run the selftest after regenerating).
"""

import json
import os
import shutil

OUT = os.path.normpath(os.path.join(os.path.dirname(__file__), "..", "data", "catalog"))

entries = []


def add(name, family, series, rank, black=(), arrows=()):
    entries.append({
        "family": family,
        "doc": {
            "name": name,
            "series": series,
            "rank": rank,
            "black": sorted(black),
            "arrows": sorted([sorted(p) for p in arrows]),
        },
    })


TYPES = (
    [("A", r) for r in range(1, 9)]
    + [("B", r) for r in range(2, 9)]
    + [("C", r) for r in range(2, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("E", r) for r in (6, 7, 8)]
    + [("F", 4), ("G", 2)]
)

for s, r in TYPES:
    add(f"{s}{r}-split", "split", s, r)
    add(f"{s}{r}-compact", "compact", s, r, black=range(1, r + 1))

# sl(n,R): the split form of A_{n-1}
for n in range(2, 9):
    add(f"sl({n},R)", "sl", "A", n - 1)

# su(p,q) on A_{p+q-1}: arrows i <-> n-i, middle nodes p+1..n-p-1 black
for n in range(2, 9):
    for q in range(1, n // 2 + 1):
        p = n - q  # larger signature first in the name
        black = range(q + 1, n - q)
        arrows = [(i, n - i) for i in range(1, q + 1) if i != n - i]
        add(f"su({p},{q})", "su", "A", n - 1, black, arrows)

# su*(2n) on A_{2n-1}: odd nodes black
for n in (2, 3, 4):
    add(f"su*({2 * n})", "sustar", "A", 2 * n - 1, black=range(1, 2 * n, 2))

# so(p,q), p+q odd, on B_l: nodes beyond p black
for total in (5, 7, 9):
    l = (total - 1) // 2
    for p in range(1, l + 1):
        add(f"so({p},{total - p})", "so", "B", l, black=range(p + 1, l + 1))

# so(p,q), p+q even, on D_l: tail black; q-p=2 swaps the fork instead
for total in (8,):
    l = total // 2
    for p in range(1, l + 1):
        if p <= l - 2:
            add(f"so({p},{total - p})", "so", "D", l, black=range(p + 1, l + 1))
        elif p == l - 1:
            add(f"so({p},{total - p})", "so", "D", l, arrows=[(l - 1, l)])
        else:
            add(f"so({p},{total - p})", "so", "D", l)

# sp(n,R) on C_n: split, plus its compact dual
for n in (2, 3, 4):
    add(f"sp({n},R)", "sp", "C", n)
    add(f"sp({n},R)-compact-dual", "sp", "C", n, black=range(1, n + 1))

# sp(p,q) on C_{p+q}: even nodes up to 2p white, everything else black
for n in (2, 3, 4):
    for p in range(1, n // 2 + 1):
        white = set(range(2, 2 * p + 1, 2))
        black = [i for i in range(1, n + 1) if i not in white]
        add(f"sp({p},{n - p})", "sp", "C", n, black=black)

# so*(2n) on D_n: odd nodes black (n = 4 is the smallest simple case)
add("so*(8)", "sostar", "D", 4, black=[1, 3])


def filename(name):
    return (
        name.replace("(", "_")
        .replace(")", "")
        .replace(",", "_")
        .replace("*", "s")
        + ".json"
    )


if os.path.isdir(OUT):
    shutil.rmtree(OUT)
for e in entries:
    d = os.path.join(OUT, e["family"])
    os.makedirs(d, exist_ok=True)
    path = os.path.join(d, filename(e["doc"]["name"]))
    with open(path, "w") as f:
        json.dump(e["doc"], f, indent=2)
        f.write("\n")

print(f"wrote {len(entries)} entries to {OUT}")
