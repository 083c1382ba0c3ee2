#!/usr/bin/env python3
"""Write maximal-class 3-groups as `pgrp v1` perm files.

R = Z[w]/(l^m) with w a primitive cube root of unity and l = 1 - w has order
3^m; the generator s of C3 acts on R by multiplication with w. The split
group is R x| <s>; the non-split one has s^3 = l^(m-1), the fixed socle of R.
Both are written as the right regular permutation action on their 3^(m+1)
elements.

    python3 tools/gen_maxclass.py catalog/groups
"""

import random
import sys
from pathlib import Path


def mul(x, y):
    # (a + b w)(c + d w) with w^2 = -1 - w
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c - b * d)


def power(x, k):
    r = (1, 0)
    for _ in range(k):
        r = mul(r, x)
    return r


def hermite(rows):
    """Row-style Hermite form [(d1, x), (0, d2)] of a rank-2 lattice in Z^2."""
    (a, b), (c, d) = rows
    while c != 0:
        q = a // c
        a, b, c, d = c, d, a - q * c, b - q * d
    if a < 0:
        a, b = -a, -b
    d = abs(d)
    return (a, b % d), (0, d)


class Ring:
    def __init__(self, m):
        lam = (1, -1)
        lm = power(lam, m)
        self.basis = hermite([lm, mul(lm, (0, 1))])
        (d1, _), (_, d2) = self.basis
        assert d1 * d2 == 3 ** m
        self.elements = [(a, b) for b in range(d2) for a in range(d1)]
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.socle = self.reduce(power(lam, m - 1))

    def reduce(self, x):
        (d1, x12), (_, d2) = self.basis
        a, b = x
        k = a // d1
        return (a - k * d1, (b - k * x12) % d2)

    def add(self, x, y):
        return self.reduce((x[0] + y[0], x[1] + y[1]))

    def omega(self, x, i):
        return self.reduce(mul(power((0, 1), i), x))


def group_table(m, split):
    ring = Ring(m)
    t = (0, 0) if split else ring.socle
    elems = [(r, i) for i in range(3) for r in ring.elements]
    index = {e: k for k, e in enumerate(elems)}

    def product(x, y):
        (r, i), (q, j) = x, y
        z = ring.add(r, ring.omega(q, i))
        if i + j >= 3:
            z = ring.add(z, t)
        return (z, (i + j) % 3)

    rng = random.Random(m * 2 + split)
    for _ in range(3000):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert product(product(a, b), c) == product(a, product(b, c))
    return elems, index, product


def cycles(images):
    seen = [False] * len(images)
    out = []
    for start in range(len(images)):
        if seen[start] or images[start] == start:
            seen[start] = True
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = images[x]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def write(path, m, split):
    elems, index, product = group_table(m, split)
    gens = [((0, 0), 1), ((1, 0), 0)]
    lines = ["pgrp v1", "p 3", "kind perm", f"degree {len(elems)}"]
    for g in gens:
        lines.append(cycles([index[product(x, g)] for x in elems]))
    path.write_text("\n".join(lines) + "\n")


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "catalog/groups")
    out.mkdir(parents=True, exist_ok=True)
    for m in (3, 4, 5):
        for split in (True, False):
            kind = "split" if split else "nonsplit"
            write(out / f"maxclass_{3 ** (m + 1)}_{kind}.grp", m, split)


if __name__ == "__main__":
    main()
