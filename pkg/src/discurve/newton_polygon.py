"""Newton polygons of bivariate polynomials.

Points are (i, j) = (exponent of vars[0], exponent of vars[1]).  The polygon
is the chain of vertices of the lower-left convex hull of the support,
listed from the vertex with the highest j down to the vertex with the
lowest j.  An edge from (i0, j0) to (i1, j1) has inclination
(i1 - i0)/(j0 - j1) = p/q in lowest terms: along it, roots behave like
y ~ c * x^(p/q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .bipoly import BiPoly, udeg, ugcd, uderiv, unorm
from .coeffs import Ctx, cabs, is_exact
from .errors import InternalError
from .roots import complex_roots


def support_points(f: BiPoly, ctx: Ctx | None = None) -> set[tuple[int, int]]:
    """Support of f; numeric coefficients below the zero threshold are noise."""
    pts = set()
    numeric = any(not is_exact(c) for c in f.terms.values())
    if numeric and ctx is None:
        ctx = Ctx()
    for k, c in f.terms.items():
        if not is_exact(c):
            with ctx.workprec():
                if cabs(c) < ctx.zero_eps:
                    continue
        pts.add(k)
    return pts


def _hull(points: set[tuple[int, int]]) -> list[tuple[int, int]]:
    best: dict[int, int] = {}
    for i, j in points:
        if i not in best or j < best[i]:
            best[i] = j
    stair = []
    cur = None
    for i in sorted(best):
        if cur is None or best[i] < cur:
            stair.append((i, best[i]))
            cur = best[i]
    chain: list[tuple[int, int]] = []
    for p in stair:
        while len(chain) >= 2:
            a, b = chain[-2], chain[-1]
            cross = (b[0] - a[0]) * (p[1] - b[1]) - (b[1] - a[1]) * (p[0] - b[0])
            if cross <= 0:
                chain.pop()
            else:
                break
        chain.append(p)
    return chain


def polygon(f: BiPoly, ctx: Ctx | None = None) -> list[tuple[int, int]]:
    """Vertices of the Newton polygon, highest j first."""
    pts = support_points(f, ctx)
    if not pts:
        return []
    return _hull(pts)


@dataclass(frozen=True)
class Edge:
    """One compact edge of a Newton polygon."""

    top: tuple[int, int]
    bot: tuple[int, int]
    p: int  # reduced numerator of the inclination
    q: int  # reduced denominator (ramification contributed by the edge)
    steps: int  # number of lattice steps (p, -q) along the edge

    @property
    def incl(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def height(self) -> int:
        return self.top[1] - self.bot[1]


def edges(f: BiPoly, ctx: Ctx | None = None) -> list[Edge]:
    """Compact edges, ordered by increasing inclination."""
    verts = polygon(f, ctx)
    out = []
    for (i0, j0), (i1, j1) in zip(verts, verts[1:]):
        di, dj = i1 - i0, j0 - j1
        g = gcd(di, dj)
        out.append(Edge((i0, j0), (i1, j1), di // g, dj // g, g))
    return out


def edge_polynomial(f: BiPoly, edge: Edge) -> list:
    """The polynomial H with H(c^q) = 0 for edge roots y ~ c x^(p/q).

    Lowest-first like every univariate list here: H[t] is the coefficient
    of f at the lattice point t steps up from the bottom vertex, so that
    substituting y = c x^(p/q) into the edge part of f gives
    c^j1 * x^w * H(c^q) with w the weighted order on the edge.
    """
    i0, j0 = edge.top
    out = [f.coeff(i0 + t * edge.p, j0 - t * edge.q) for t in range(edge.steps + 1)]
    if out[0] == 0 or out[-1] == 0:
        raise InternalError("edge endpoints must lie in the support")
    out.reverse()
    return unorm(out)


def is_nondegenerate(f: BiPoly, ctx: Ctx | None = None) -> tuple[bool, dict | None]:
    """Whether every compact edge polynomial is squarefree.

    Returns (flag, witness); the witness names the offending edge and the
    repeated root (or the exact common factor of H and H')."""
    ctx = ctx or Ctx()
    for e in edges(f, ctx):
        h = edge_polynomial(f, e)
        if udeg(h) < 1:
            continue
        if all(is_exact(c) for c in h):
            g = ugcd(h, uderiv(h))
            if udeg(g) > 0:
                rep = complex_roots(g, ctx)
                return False, {
                    "edge": e,
                    "repeated_root": rep[0][0] if rep else None,
                    "common_factor": g,
                }
        else:
            rts = complex_roots(h, ctx)
            with ctx.workprec():
                for a in range(len(rts)):
                    if rts[a][1] > 1:
                        return False, {"edge": e, "repeated_root": rts[a][0],
                                       "common_factor": None}
                    for b in range(a + 1, len(rts)):
                        if abs(rts[a][0] - rts[b][0]) < ctx.cluster_eps:
                            return False, {"edge": e, "repeated_root": rts[a][0],
                                           "common_factor": None}
    return True, None


def minkowski(va: list[tuple[int, int]], vb: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Minkowski sum of two polygon vertex chains.

    The polygon of a product of polynomials is the sum of their polygons;
    tests rely on this, and the numeric lane assembles discriminant polygons
    from per-branch contributions with it.
    """
    if not va:
        return list(vb)
    if not vb:
        return list(va)

    def edge_vecs(v):
        return [(x1 - x0, y1 - y0) for (x0, y0), (x1, y1) in zip(v, v[1:])]

    vecs = edge_vecs(va) + edge_vecs(vb)
    # sort by inclination di / -dj ascending; dj < 0 along the chain
    vecs.sort(key=lambda d: Fraction(d[0], -d[1]))
    cur = (va[0][0] + vb[0][0], va[0][1] + vb[0][1])
    out = [cur]
    for di, dj in vecs:
        cur = (cur[0] + di, cur[1] + dj)
        out.append(cur)
    # merge collinear consecutive edges
    merged = [out[0]]
    for p in out[1:]:
        if len(merged) >= 2:
            a, b = merged[-2], merged[-1]
            if (b[0] - a[0]) * (p[1] - b[1]) == (b[1] - a[1]) * (p[0] - b[0]):
                merged.pop()
        merged.append(p)
    return merged
