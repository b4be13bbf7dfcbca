"""Discriminant curve of the projection (x, f) and its topology.

Two independent routes to the same curve:
  * exact: D(u, v) = Res_y(f_y, v - f), a polynomial identity;
  * composed: the branches v = f(u, gamma(u)) over the Puiseux roots
    gamma of the polar f_y.
The equisingularity type is read off the composed branches; the exact
polynomial is kept for cross-checks (Newton polygon, root agreement).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .bipoly import BiPoly
from .coeffs import Ctx
from .errors import (
    InsufficientTruncation,
    InternalError,
    InvalidInput,
    NumericAmbiguity,
)
from .invariants import SemigroupInfo, characteristic_exponents, milnor, semigroup_from_char
from .newton_polygon import polygon
from .puiseux import PuiseuxSeries, compose, puiseux_roots
from .resultants import res_list

_MAX_BOUND = Fraction(1 << 13)


def polar(f: BiPoly) -> BiPoly:
    """The polar curve of the projection: the y-derivative."""
    return f.deriv(f.vars[1])


# ---------------------------------------------------------------------------
# exact route


def _lift_to_uv(p: BiPoly, vars_uv: tuple[str, str]) -> BiPoly:
    """Embed a polynomial in x as a polynomial in (u, v) (x -> u)."""
    return BiPoly({(i, 0): c for (i, j), c in p.terms.items()}, vars_uv)


def discriminant_exact(f: BiPoly, out_vars: tuple[str, str] = ("u", "v")) -> BiPoly:
    """Res_y(f_y, v - f) as an exact polynomial, monic in v.

    For f monic of degree n in y this equals prod_j (v - f(u, gamma_j))
    over the n-1 polar roots gamma_j.
    """
    xv, yv = f.vars
    n = f.deg(yv)
    if n < 1:
        raise InvalidInput("input has no y term")
    fy = f.deriv(yv)
    a = [_lift_to_uv(c, out_vars) for c in fy.coeff_list(yv)]
    vpoly = BiPoly.var_poly(out_vars[1], out_vars)
    b = [-_lift_to_uv(c, out_vars) for c in f.coeff_list(yv)]
    b[0] = b[0] + vpoly
    d = res_list(a, b)
    if not isinstance(d, BiPoly):
        d = BiPoly.const(d, out_vars)
    if d.deg(out_vars[1]) != n - 1:
        raise InternalError("discriminant is not v-regular of degree n-1")
    lead = d.coeff_list(out_vars[1])[-1]
    if not lead.is_constant():
        raise InternalError("discriminant leading v-coefficient is not constant")
    return d.divexact(lead)


# ---------------------------------------------------------------------------
# composed route


@dataclass(frozen=True)
class DiscBranch:
    """One branch of the discriminant with its factor multiplicity."""

    series: PuiseuxSeries  # representative, ram reduced to the true value
    mult: int  # exponent of the irreducible factor in D

    @property
    def ram(self) -> int:
        return self.series.ram


def _reduce_ram(s: PuiseuxSeries, ctx: Ctx) -> tuple[PuiseuxSeries, int]:
    """Drop the series to its visible ramification; return (series, g)
    where g = old_ram / new_ram counts coincident conjugates."""
    g = s.ram
    sig = s.significant_terms(ctx)
    for e, _ in sig:
        g = gcd(g, int(e * s.ram))
        if g == 1:
            break
    if g <= 1:
        return s, 1
    return PuiseuxSeries(dict(sig), s.ram // g, s.trunc), g


def _same_branch(a: PuiseuxSeries, b: PuiseuxSeries, ctx: Ctx) -> bool:
    if a.ram != b.ram:
        return False
    for conj in b.conjugates(ctx):
        o, _limit = a.diff_order(conj, ctx)
        if o is None:
            return True
    return False


def discriminant_branches(f: BiPoly, bound: Fraction,
                          ctx: Ctx | None = None) -> list[DiscBranch]:
    """Branches of the discriminant via composition with the polar roots.

    Each polar root gamma contributes the branch v = f(u, gamma(u)); roots
    whose compositions coincide merge with added multiplicities.
    """
    ctx = ctx or Ctx()
    yv = f.vars[1]
    n = f.deg(yv)
    fy = f.deriv(yv)
    out: list[DiscBranch] = []
    for s, m in puiseux_roots(fy, bound, ctx):
        delta = compose(f, s, ctx)
        if delta.order(ctx) is None:
            if delta.entire:
                raise InvalidInput("input curve is not reduced")
            raise InsufficientTruncation("composition vanished to the bound")
        red, g = _reduce_ram(delta, ctx)
        k = m * g
        for i, br in enumerate(out):
            if _same_branch(br.series, red, ctx):
                keep = br.series if br.series.trunc is None else (
                    br.series if red.trunc is not None and br.series.trunc >= red.trunc
                    else red)
                out[i] = DiscBranch(keep, br.mult + k)
                break
        else:
            out.append(DiscBranch(red, k))
    if sum(b.ram * b.mult for b in out) != n - 1:
        raise InternalError("discriminant branch degrees do not sum to n-1")
    return out


# ---------------------------------------------------------------------------
# equisingularity type


@dataclass(frozen=True)
class BranchType:
    """Topological data of one discriminant branch."""

    char: tuple[int, ...]  # characteristic exponents, t-units
    generators: tuple[int, ...]
    conductor: int
    mult: int  # factor multiplicity in D

    @classmethod
    def make(cls, char: tuple[int, ...], mult: int = 1) -> "BranchType":
        sg = semigroup_from_char(tuple(char))
        return cls(sg.char, sg.generators, sg.conductor, mult)

    @property
    def smooth(self) -> bool:
        return self.char == (1,)

    def render(self) -> str:
        base = "smooth" if self.smooth else "<%s>" % ",".join(map(str, self.generators))
        return base if self.mult == 1 else "%s^%d" % (base, self.mult)


@dataclass(frozen=True)
class EquisingularityType:
    """Branch types plus the pairwise intersection matrix, canonically ordered."""

    branches: tuple[BranchType, ...]
    pairwise: tuple[tuple[int, ...], ...]  # symmetric, zero diagonal

    @classmethod
    def make(cls, specs: list[tuple[tuple[int, ...], int]],
             pairwise: list[list[int]] | None = None) -> "EquisingularityType":
        brs = [BranchType.make(ch, m) for ch, m in specs]
        k = len(brs)
        mat = pairwise or [[0] * k for _ in range(k)]
        return _canonicalize(brs, [list(r) for r in mat])

    def render(self) -> str:
        parts = " + ".join(b.render() for b in self.branches)
        pairs = []
        for i in range(len(self.branches)):
            for j in range(i + 1, len(self.branches)):
                pairs.append("i0(%d,%d)=%d" % (i + 1, j + 1, self.pairwise[i][j]))
        return parts + ("; " + ", ".join(pairs) if pairs else "")

    def to_dict(self) -> dict:
        return {
            "branches": [
                {
                    "char": list(b.char),
                    "generators": list(b.generators),
                    "conductor": b.conductor,
                    "mult": b.mult,
                }
                for b in self.branches
            ],
            "pairwise": [list(r) for r in self.pairwise],
        }


def _canonicalize(brs: list[BranchType], mat: list[list[int]]) -> EquisingularityType:
    from itertools import permutations

    k = len(brs)
    order = sorted(range(k), key=lambda i: (brs[i].char, brs[i].mult, brs[i].generators))
    best = None
    # permute only within groups of identical branch data
    groups: list[list[int]] = []
    for i in order:
        key = (brs[i].char, brs[i].mult, brs[i].generators)
        if groups and key == groups[-1][0]:
            groups[-1][1].append(i)
        else:
            groups.append([key, [i]])  # type: ignore[list-item]
    group_lists = [g[1] for g in groups]  # type: ignore[index]
    for perm_parts in _product_perms(group_lists):
        perm = [i for part in perm_parts for i in part]
        flat = tuple(mat[perm[i]][perm[j]] for i in range(k) for j in range(k))
        if best is None or flat < best[0]:
            best = (flat, perm)
    perm = best[1] if best else []
    newmat = tuple(tuple(mat[a][b] for b in perm) for a in perm)
    return EquisingularityType(tuple(brs[i] for i in perm), newmat)


def _product_perms(group_lists):
    from itertools import permutations, product

    pools = [list(permutations(g)) for g in group_lists]
    for combo in product(*pools):
        yield combo


def eq_type_of_branches(branches: list[DiscBranch], ctx: Ctx | None = None) -> EquisingularityType:
    """Extract the equisingularity type from discriminant branches."""
    ctx = ctx or Ctx()
    brs = []
    conj_lists = []
    for b in branches:
        ch = characteristic_exponents(b.series, ctx)
        brs.append(BranchType.make(ch, b.mult))
        conj_lists.append(list(b.series.conjugates(ctx)))
    k = len(branches)
    mat = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            total = Fraction(0)
            for sa in conj_lists[i]:
                for sb in conj_lists[j]:
                    o, limit = sa.diff_order(sb, ctx)
                    if o is None:
                        if limit is None:
                            raise InternalError("distinct branches share a root")
                        raise InsufficientTruncation(
                            "branch contact exceeds truncation %s" % limit)
                    total += o
            if total.denominator != 1:
                raise InternalError("fractional pairwise intersection")
            mat[i][j] = mat[j][i] = int(total)
    return _canonicalize(brs, mat)


# ---------------------------------------------------------------------------
# driver


def discriminant_type(f: BiPoly, bound: Fraction | None = None,
                      ctx: Ctx | None = None) -> EquisingularityType:
    """Equisingularity type of the discriminant, with certification.

    The type is computed at the working truncation and again at 3/2 of it;
    agreement is required.  Truncation shortfalls double the bound, numeric
    ambiguity escalates the precision; both have hard ceilings.
    """
    ctx = ctx or Ctx()
    if bound is None:
        yv = f.vars[1]
        n = f.deg(yv)
        mu = milnor(f, "resultant", ctx)
        bound = Fraction(2 * mu + 2 * n)
    cur = ctx
    b = Fraction(bound)
    while True:
        try:
            t1 = eq_type_of_branches(discriminant_branches(f, b, cur), cur)
            t2 = eq_type_of_branches(
                discriminant_branches(f, b + b // 2 + 1, cur), cur)
            if t1 == t2:
                return t1
            raise InsufficientTruncation("type unstable at bound %s" % b)
        except InsufficientTruncation:
            if b > _MAX_BOUND:
                raise
            b *= 2
        except NumericAmbiguity:
            cur = cur.escalate()


# ---------------------------------------------------------------------------
# polygon prediction


def merle_polygon(sg: SemigroupInfo) -> tuple[tuple[int, int], ...]:
    """Predicted Newton polygon of the discriminant from the semigroup.

    Edge i has horizontal extent (e_{i-1}/e_i - 1) s_i and height
    (e_{i-1}/e_i - 1) n/e_{i-1}; the edges are glued from (0, n-1) down.
    """
    n = sg.char[0]
    es = [n]
    for b in sg.char[1:]:
        es.append(gcd(es[-1], b))
    verts = [(0, n - 1)]
    x, y = 0, n - 1
    for i in range(1, len(sg.char)):
        q = es[i - 1] // es[i]
        x += (q - 1) * sg.generators[i]
        y -= (q - 1) * (n // es[i - 1])
        verts.append((x, y))
    if y != 0:
        raise InternalError("predicted polygon does not reach the axis")
    return tuple(verts)


def discriminant_polygon(f: BiPoly, ctx: Ctx | None = None) -> tuple[tuple[int, int], ...]:
    """Newton polygon of the exact discriminant (vertices, top first)."""
    d = discriminant_exact(f)
    return tuple(polygon(d, ctx or Ctx()))
