"""Normal-form families of plane branches and their descriptors.

Families with explicit parametrizations (multiplicity 2, 3, 4) build a
Parametrization; the Milnor-minus-Tjurina families (R1, R2A, R2B) build
the implicit equation directly.  Free coefficients left unset are filled
with small seeded rationals so runs are reproducible.
"""

from __future__ import annotations

import zlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .bipoly import BiPoly
from .coeffs import Coef, cis_zero, is_exact, make_sqrt, parse_coeff, render_coeff
from .errors import InvalidDescriptor
from .puiseux import Parametrization, implicitize

FAMILIES = ("Mult2", "Mult3", "Mult4G2", "NF4_1", "NF4_2", "NF4_3", "NF4_4",
            "NF4_5", "R1", "R2A", "R2B")

_INT_KEYS = ("s0", "s1", "s2", "lam", "j", "k", "s")


@dataclass(frozen=True)
class BranchDescriptor:
    """Identifier of a normal-form family member."""

    family: str
    params: tuple  # sorted tuple of (name, int)
    coeffs: tuple  # sorted tuple of (name, Coef)

    @classmethod
    def make(cls, family: str, coeffs: dict | None = None, **params) -> "BranchDescriptor":
        if family not in FAMILIES:
            raise InvalidDescriptor("unknown family %r" % family)
        for name in params:
            if name not in _INT_KEYS:
                raise InvalidDescriptor("unknown parameter %r" % name)
        pt = tuple(sorted((k, int(v)) for k, v in params.items() if v is not None))
        cc = {}
        for name, val in (coeffs or {}).items():
            if isinstance(val, str):
                val = parse_coeff(val)
            cc[str(name)] = val
        ct = tuple(sorted(cc.items()))
        return cls(family, pt, ct)

    @classmethod
    def from_dict(cls, doc: dict) -> "BranchDescriptor":
        doc = dict(doc)
        family = doc.pop("family", None)
        if not family:
            raise InvalidDescriptor("descriptor needs a 'family' key")
        coeffs = doc.pop("coeffs", {})
        if "lambda" in doc:
            doc["lam"] = doc.pop("lambda")
        params = {}
        for key, val in doc.items():
            if key not in _INT_KEYS:
                raise InvalidDescriptor("unknown descriptor key %r" % key)
            params[key] = val
        return cls.make(family, coeffs, **params)

    def get(self, name: str, default=None):
        for k, v in self.params:
            if k == name:
                return v
        return default

    def coeff(self, name: str, default=None):
        for k, v in self.coeffs:
            if k == name:
                return v
        return default

    def to_dict(self) -> dict:
        doc = {"family": self.family}
        for k, v in self.params:
            doc["lambda" if k == "lam" else k] = v
        if self.coeffs:
            doc["coeffs"] = {k: render_coeff(v) for k, v in self.coeffs}
        return doc

    def render(self) -> str:
        parts = ["%s=%d" % ("lambda" if k == "lam" else k, v) for k, v in self.params]
        parts += ["%s=%s" % (k, render_coeff(v)) for k, v in self.coeffs]
        return "%s(%s)" % (self.family, ", ".join(parts))


@dataclass(frozen=True)
class BuildResult:
    descriptor: BranchDescriptor
    par: Parametrization | None
    poly: BiPoly | None
    flags: tuple  # validity warnings that are not construction errors

    def equation(self) -> BiPoly:
        if self.poly is not None:
            return self.poly
        return implicitize(self.par)


def sample_coeff(key: str, seed: int = 0, nonzero: bool = True) -> Fraction:
    """Deterministic small rational; denominator at most 10."""
    rng = random.Random(((seed & 0xFFFFFFFF) << 32) ^ zlib.crc32(key.encode()))
    num = rng.randint(1, 9) * rng.choice((1, -1))
    den = rng.randint(1, 10)
    if not nonzero and rng.random() < 0.25:
        return Fraction(0)
    return Fraction(num, den)


def _fail(problems):
    raise InvalidDescriptor("; ".join(problems))


def _m4(s1: int) -> int:
    return s1 // 4


def mult3_lambda_range(s1: int) -> list[int]:
    """Admissible nonzero Zariski invariants for multiplicity 3."""
    if s1 % 3 == 2:
        e = (s1 - 2) // 3
        base = 3 * e + 4
    else:
        e = (s1 - 1) // 3
        base = 3 * e + 2
    return [base + 3 * k for k in range(max(e - 1, 0))]


def _nonzero(c) -> bool:
    return c is not None and not cis_zero(c)


def build(d: BranchDescriptor, strict: bool = True, seed: int = 0) -> BuildResult:
    """Construct the normal form; range violations raise InvalidDescriptor
    (collected as flags when strict is false)."""
    problems: list[str] = []
    flags: list[str] = []
    par = None
    poly = None
    fam = d.family
    one = Fraction(1)

    if fam == "Mult2":
        s1 = d.get("s1", 0)
        if s1 < 3 or s1 % 2 == 0:
            problems.append("Mult2 needs odd s1 >= 3")
        else:
            par = Parametrization.make(2, {s1: one})

    elif fam == "Mult3":
        s1 = d.get("s1", 0)
        lam = d.get("lam", 0)
        if s1 < 4 or s1 % 3 == 0:
            problems.append("Mult3 needs s1 > 3 not divisible by 3")
        elif lam != 0 and lam not in mult3_lambda_range(s1):
            problems.append("lambda %d not admissible for s1=%d (allowed: 0 or %s)"
                            % (lam, s1, mult3_lambda_range(s1)))
        else:
            terms = {s1: one}
            if lam:
                terms[lam] = one
            par = Parametrization.make(3, terms)

    elif fam == "Mult4G2":
        s1 = d.get("s1", 0)
        s2 = d.get("s2", 0)
        if s1 < 6 or s1 % 4 != 2:
            problems.append("Mult4G2 needs s1 = 2 mod 4, s1 >= 6")
        if s2 % 2 == 0 or s2 <= 2 * s1:
            problems.append("Mult4G2 needs odd s2 > 2*s1")
        if not problems:
            par = Parametrization.make(4, {s1: one, s2 - s1: one})

    elif fam == "NF4_1":
        s1 = d.get("s1", 0)
        if s1 < 5 or s1 % 2 == 0:
            problems.append("NF4_1 needs odd s1 >= 5 coprime to 4")
        else:
            par = Parametrization.make(4, {s1: one})

    elif fam in ("NF4_2", "NF4_3", "NF4_4"):
        s1 = d.get("s1", 0)
        j = d.get("j", 0)
        m4 = _m4(s1)
        if s1 < 5 or s1 % 2 == 0:
            problems.append("needs odd s1 >= 5")
        elif not 2 <= j <= m4:
            problems.append("needs 2 <= j <= [s1/4]")
        else:
            terms = {s1: one, 2 * s1 - 4 * j: one}
            if fam == "NF4_2":
                k = d.get("k", 1)
                if not 1 <= k <= m4 - j:
                    problems.append("NF4_2 needs 1 <= k <= [s1/4]-j")
                else:
                    a = d.coeff("a_k")
                    if a is None:
                        a = sample_coeff("NF4_2:%d:%d:%d:a" % (s1, j, k), seed)
                    if not _nonzero(a):
                        problems.append("NF4_2 needs a_k != 0")
                    terms[3 * s1 - (4 * m4 + j + 1 - k)] = a
            else:
                lead = Fraction(3 * s1 - 4 * j, 2 * s1)
                if fam == "NF4_3":
                    terms[3 * s1 - 8 * j] = lead
                else:
                    b = d.coeff("b")
                    if b is None:
                        b = sample_coeff("NF4_4:%d:%d:b" % (s1, j), seed)
                        if b == lead:
                            b += 1
                    if is_exact(b) and b == lead:
                        problems.append("NF4_4 needs the x^(3s1-8j) coefficient "
                                        "different from (3s1-4j)/(2s1)")
                    if _nonzero(b):
                        terms[3 * s1 - 8 * j] = b
                # trailing moduli at 3s1-4(2j-1), ..., 3s1-4(j+2)
                for i in range(j - 2):
                    a = d.coeff("a%d" % (m4 - j + 2 + i))
                    if _nonzero(a):
                        terms[3 * s1 - 4 * (2 * j - 1 - i)] = a
            if not problems:
                par = Parametrization.make(4, terms)

    elif fam == "NF4_5":
        s1 = d.get("s1", 0)
        j = d.get("j", 0)
        k = d.get("k")
        s = d.get("s")
        m4 = _m4(s1)
        if s1 < 5 or s1 % 2 == 0:
            problems.append("needs odd s1 >= 5")
        elif not 2 <= j <= s1 // 2:
            problems.append("needs 2 <= j <= [s1/2]")
        else:
            terms = {s1: one, 3 * s1 - 4 * j: one}
            a_k = d.coeff("a_k")
            a_ks = d.coeff("a_ks")
            if k is not None:
                if k < 1:
                    problems.append("NF4_5 needs k >= 1")
                if a_k is None:
                    a_k = sample_coeff("NF4_5:%d:%d:%d:a_k" % (s1, j, k), seed)
                if not _nonzero(a_k):
                    problems.append("NF4_5 with k set needs a_k != 0")
                else:
                    ek = 2 * s1 - 4 * (j - m4 - k)
                    if ek >= 3 * (s1 - 1):
                        flags.append("coefficient a_k sits at order %d beyond the "
                                     "conductor %d" % (ek, 3 * s1 - 3))
                    terms[ek] = a_k
                if s is not None:
                    if s < 1:
                        problems.append("NF4_5 needs s >= 1")
                    if a_ks is None:
                        a_ks = sample_coeff("NF4_5:%d:%d:%d:%d:a_ks" % (s1, j, k, s), seed)
                    if not _nonzero(a_ks):
                        problems.append("NF4_5 with s set needs a_{k+s} != 0")
                    else:
                        eks = 2 * s1 - 4 * (j - m4 - k - s)
                        if eks >= 3 * (s1 - 1):
                            flags.append("coefficient a_{k+s} sits at order %d beyond "
                                         "the conductor %d" % (eks, 3 * s1 - 3))
                        terms[eks] = a_ks
            elif s is not None or _nonzero(a_ks):
                problems.append("NF4_5 cannot set s without k")
            if not problems:
                par = Parametrization.make(4, terms)

    elif fam in ("R1", "R2A"):
        s0 = d.get("s0", 0)
        s1 = d.get("s1", 0)
        if not (3 <= s0 < s1) or gcd(s0, s1) != 1:
            problems.append("%s needs coprime 3 <= s0 < s1" % fam)
        else:
            off = 2 if fam == "R1" else 3
            # interior term below the (0,s0)-(s1,0) edge makes f reducible
            if Fraction(off, s1) + Fraction(2, s0) >= 1:
                flags.append("normal form is reducible for (s0,s1)=(%d,%d): the "
                             "x^%d*y^%d term lies on or below the Newton polygon edge"
                             % (s0, s1, s1 - off, s0 - 2))
            terms = {(0, s0): one, (s1, 0): -one, (s1 - off, s0 - 2): one}
            poly = BiPoly(terms, ("x", "y"))

    elif fam == "R2B":
        s0 = d.get("s0", 0)
        s1 = d.get("s1", 0)
        if not (4 <= s0 < s1) or gcd(s0, s1) != 1:
            problems.append("R2B needs coprime 4 <= s0 < s1")
        elif 2 * s0 >= s1 * (s0 - 3):
            problems.append("R2B needs 2*s0/(s0-3) < s1")
        else:
            m = s1 // s0
            terms = {(0, s0): one, (s1, 0): -one, (s1 - 2, s0 - 3): one}
            for kk in range(2, 2 + m + 1):
                a = d.coeff("a%d" % kk)
                if a is None:
                    a = sample_coeff("R2B:%d:%d:a%d" % (s0, s1, kk), seed)
                if _nonzero(a):
                    terms[(s1 - kk, s0 - 2)] = (terms.get((s1 - kk, s0 - 2), 0)) + a
            poly = BiPoly(terms, ("x", "y"))

    else:
        problems.append("unknown family %r" % fam)

    if problems:
        if strict:
            _fail(problems)
        flags = list(flags) + ["invalid: " + p for p in problems]
    return BuildResult(d, par, poly, tuple(flags))


def family_semigroup(d: BranchDescriptor) -> tuple[int, ...]:
    """Semigroup generators the descriptor claims for the branch."""
    fam = d.family
    if fam == "Mult2":
        return (2, d.get("s1"))
    if fam == "Mult3":
        return (3, d.get("s1"))
    if fam == "Mult4G2":
        return (4, d.get("s1"), d.get("s2"))
    if fam.startswith("NF4"):
        return (4, d.get("s1"))
    return (d.get("s0"), d.get("s1"))


def family_lambda(d: BranchDescriptor) -> int | None:
    """Claimed Zariski invariant, when the family fixes one."""
    fam = d.family
    s1 = d.get("s1")
    if fam == "Mult2":
        return None
    if fam == "Mult3":
        lam = d.get("lam", 0)
        return lam if lam else None
    if fam == "Mult4G2":
        return d.get("s2") - s1
    if fam == "NF4_1":
        return None
    if fam in ("NF4_2", "NF4_3", "NF4_4"):
        return 2 * s1 - 4 * d.get("j")
    if fam == "NF4_5":
        return 3 * s1 - 4 * d.get("j")
    return None
