#!/usr/bin/env python3
# Naive dense integer homology oracle: builds boundary matrices for the
# CR/CD/CQ tuple complexes by direct enumeration and diagonalizes them with
# textbook row/column reduction over Z (python ints, so no overflow).
# Independent of the main library by construction; keep this file dumb.
import json, sys
from itertools import product
from math import gcd


def trivial(h):
    return [list(range(h)) for _ in range(h)]


def dihedral(n):
    return [[(2 * x - y) % n for y in range(n)] for x in range(n)]


def degenerate(t):
    return any(t[i] == t[i + 1] for i in range(len(t) - 1))


def boundary(op, n, keep):
    rows = [t for t in product(range(len(op)), repeat=n - 1) if keep(t)]
    cols = [t for t in product(range(len(op)), repeat=n) if keep(t)]
    ri = {t: i for i, t in enumerate(rows)}
    m = [[0] * len(cols) for _ in rows]
    for c, t in enumerate(cols):
        for j in range(1, n + 1):
            sign = -1 if j % 2 else 1
            d0 = t[: j - 1] + t[j:]
            d1 = t[: j - 1] + tuple(op[t[j - 1]][x] for x in t[j:])
            for row, coef in ((d0, sign), (d1, -sign)):
                if row in ri:
                    m[ri[row]][c] += coef
    return m, len(rows), len(cols)


def snf_divisors(m):
    m = [row[:] for row in m]
    nr, nc = len(m), len(m[0]) if m else 0
    divs, r = [], 0
    while True:
        nz = [(abs(m[i][j]), i, j) for i in range(r, nr) for j in range(r, nc) if m[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        m[r], m[pi] = m[pi], m[r]
        for row in m:
            row[r], row[pj] = row[pj], row[r]
        dirty = True
        while dirty:
            dirty = False
            for i in range(r + 1, nr):
                while m[i][r]:
                    q = m[i][r] // m[r][r]
                    for j in range(r, nc):
                        m[i][j] -= q * m[r][j]
                    if m[i][r]:
                        m[r], m[i] = m[i], m[r]
                        dirty = True
            for j in range(r + 1, nc):
                while m[r][j]:
                    q = m[r][j] // m[r][r]
                    for i in range(r, nr):
                        m[i][j] -= q * m[i][r]
                    if m[r][j]:
                        for i in range(r, nr):
                            m[i][r], m[i][j] = m[i][j], m[i][r]
                        dirty = True
        divs.append(abs(m[r][r]))
        r += 1
    while True:
        divs.sort()
        bad = [(i, j) for i in range(len(divs)) for j in range(i + 1, len(divs)) if divs[j] % divs[i]]
        if not bad:
            return divs
        i, j = bad[0]
        g = gcd(divs[i], divs[j])
        divs[i], divs[j] = g, divs[i] * divs[j] // g


def homology(op, keep, top):
    data = [boundary(op, n, keep) for n in range(1, top + 2)]
    snfs = [snf_divisors(m) for m, _, _ in data]
    ranks = [len(d) for d in snfs]
    return [[data[n][1] - (ranks[n - 1] if n else 0) - ranks[n],
             [str(d) for d in snfs[n] if d > 1]] for n in range(top + 1)]


if __name__ == "__main__":
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    result = {}
    for name, op in (("trivial2", trivial(2)), ("dihedral3", dihedral(3))):
        result[name] = {"HR": homology(op, lambda t: True, top),
                        "HD": homology(op, degenerate, top),
                        "HQ": homology(op, lambda t: not degenerate(t), top)}
    json.dump(result, sys.stdout, indent=1)
    print()
