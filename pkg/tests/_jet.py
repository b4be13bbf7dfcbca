"""Independent Tjurina-number oracle over a prime field.

tau = dim C{x,y} / (f, f_x, f_y) is computed as a stabilizing jet codimension:
truncate the ideal generators' monomial shifts below total degree N, take the
rank of the coefficient matrix mod p, and grow N until the codimension stops
moving.  Arithmetic mod 2^31 - 1 avoids coefficient blowup; the sampled
equations here have denominators prime to p, and a bad-reduction rank drop
would only ever overestimate tau, which the stabilization re-check catches in
practice for these sizes.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

P = (1 << 31) - 1


def fr_mod(c) -> int:
    c = Fraction(c)
    return (c.numerator % P) * pow(c.denominator % P, P - 2, P) % P


def poly_mod(f) -> dict:
    return {(i, j): fr_mod(c) for (i, j), c in f.terms.items()}


def deriv(t: dict, var: int) -> dict:
    out = {}
    for (i, j), c in t.items():
        if var == 0 and i:
            out[(i - 1, j)] = (out.get((i - 1, j), 0) + i * c) % P
        if var == 1 and j:
            out[(i, j - 1)] = (out.get((i, j - 1), 0) + j * c) % P
    return out


def rank_mod(rows: list, ncols: int) -> int:
    if not rows:
        return 0
    A = np.array(rows, dtype=np.int64)
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, A.shape[0]):
            if A[i, col]:
                piv = i
                break
        if piv is None:
            continue
        A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, col]), P - 2, P)
        A[r] = (A[r] * inv) % P
        mask = A[r + 1:, col] != 0
        if mask.any():
            A[r + 1:][mask] = (A[r + 1:][mask] - A[r + 1:][mask, col:col + 1] * A[r]) % P
        r += 1
        if r == A.shape[0]:
            break
    return r


def tau_jet(f, start: int = 24, step: int = 8) -> int:
    gens = [poly_mod(f)]
    gens.append(deriv(gens[0], 0))
    gens.append(deriv(gens[0], 1))
    prev = None
    N = start
    while True:
        mons = [(i, j) for i in range(N) for j in range(N - i)]
        idx = {m: t for t, m in enumerate(mons)}
        rows = []
        for g in gens:
            gmin = min(i + j for (i, j) in g)
            for (a, b) in mons:
                if a + b + gmin >= N:
                    continue
                row = [0] * len(mons)
                hit = False
                for (i, j), c in g.items():
                    if a + i + b + j < N:
                        row[idx[(a + i, b + j)]] = c
                        hit = True
                if hit:
                    rows.append(row)
        t = len(mons) - rank_mod(rows, len(mons))
        if prev == t:
            return t
        prev = t
        N += step
