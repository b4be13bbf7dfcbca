"""Command line front end.

Commands:
  analyze       numerical invariants of a branch
  discriminant  exact discriminant, Newton polygon, non-degeneracy, type
  classify      closed-form type prediction for a normal-form member
  verify        classify, recompute, and cross-check
  table N       regenerate one of the published tables over its sample grid

The curve input is a JSON family descriptor '{"family":"Mult3","s1":7,...}',
a parametrization "x = t^4; y = t^5 + t^7", or an equation "y^2 - x^5",
given as the positional argument or on stdin.  Exit codes: 0 ok, 2 parse
error, 3 invalid input or descriptor, 4 precision exhausted, 5 insufficient
truncation, 1 anything else.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bipoly import BiPoly, parse_poly
from .classifier import classify, verify
from .coeffs import Ctx, render_coeff
from .discriminant import discriminant_exact, discriminant_type
from .errors import (
    DiscurveError,
    InsufficientTruncation,
    InvalidDescriptor,
    InvalidInput,
    NumericAmbiguity,
    ParseError,
    PrecisionExhausted,
)
from .invariants import milnor, semigroup, tjurina, zariski_invariant
from .newton_polygon import is_nondegenerate, polygon
from .normal_forms import BranchDescriptor, build
from .puiseux import Parametrization, implicitize


def _parse_input(text: str):
    """Classify and parse the curve input.

    Returns (kind, value) with kind one of "descriptor", "parametrization",
    "equation".  A leading brace selects JSON, a semicolon selects the
    two-equation parametrization form, anything else is an equation, with
    an optional "= 0" tail.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty input")
    if text.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError("descriptor is not valid JSON: %s" % exc.msg,
                             position=exc.pos)
        if not isinstance(doc, dict):
            raise ParseError("descriptor JSON must be an object")
        return "descriptor", BranchDescriptor.from_dict(doc)
    if ";" in text:
        sides = {}
        for part in text.split(";"):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise ParseError("expected 'x = ...' or 'y = ...', got %r" % part)
            name, expr = part.split("=", 1)
            sides[name.strip()] = expr.strip()
        if set(sides) != {"x", "y"}:
            raise ParseError("parametrization needs exactly x = ... and y = ...")
        return "parametrization", Parametrization.parse(sides["x"], sides["y"])
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        if rhs.strip() != "0":
            raise ParseError("an equation must have the form f(x,y) = 0")
        text = lhs
    return "equation", parse_poly(text, ("x", "y"))


def _realize(kind: str, val, seed: int):
    """(parametrization or None, equation) for any input kind."""
    if kind == "descriptor":
        br = build(val, strict=True, seed=seed)
        return br.par, br.equation()
    if kind == "parametrization":
        return val, implicitize(val)
    return None, val


def _cmd_analyze(kind, val, ctx: Ctx, seed: int) -> dict:
    par, f = _realize(kind, val, seed)
    obj = par if par is not None else f
    sg = semigroup(obj, ctx)
    mu = milnor(f, "resultant", ctx)
    tau = tjurina(f, ctx)
    return {
        "multiplicity": sg.multiplicity,
        "char_exponents": list(sg.char),
        "generators": list(sg.generators),
        "conductor": sg.conductor,
        "genus": sg.genus,
        "q": sg.q,
        "milnor": mu,
        "tjurina": tau,
        "r": mu - tau,
        "zariski_lambda": zariski_invariant(obj, ctx),
    }


def _cmd_discriminant(kind, val, ctx: Ctx, bound, seed: int) -> dict:
    _, f = _realize(kind, val, seed)
    disc = discriminant_exact(f)
    flag, witness = is_nondegenerate(disc, ctx)
    et = discriminant_type(f, bound=bound, ctx=ctx)
    doc = {
        "discriminant": disc.render(),
        "polygon": [list(v) for v in polygon(disc, ctx)],
        "nondegenerate": flag,
        "type": et.to_dict(),
        "type_rendered": et.render(),
    }
    if witness is not None:
        doc["degeneracy_witness"] = {
            "edge": str(witness["edge"]),
            "repeated_root": None if witness["repeated_root"] is None
            else render_coeff(witness["repeated_root"]),
        }
    return doc


def _need_descriptor(kind, val) -> BranchDescriptor:
    if kind != "descriptor":
        raise InvalidDescriptor(
            "this command needs a normal-form descriptor, not a raw curve")
    return val


def _cmd_classify(kind, val, ctx: Ctx) -> dict:
    return classify(_need_descriptor(kind, val), ctx).to_dict()


def _cmd_verify(kind, val, ctx: Ctx, bound, seed: int) -> dict:
    rep = verify(_need_descriptor(kind, val), ctx=ctx, bound=bound, seed=seed)
    doc = rep.to_dict()
    doc["rendered"] = rep.render()
    return doc


# Sample grids for the table command, one per published table.  Rows are
# (family, integer parameters, coefficient overrides, minimum precision);
# rows that exercise the critical value a_k = 4*sqrt(6)/9 need at least
# 256 bits for the order detection, everything else runs at the default.
_S6 = "4/9*sqrt(6)"
_S6N = "-4/9*sqrt(6)"
_T81 = "-4/81*sqrt(6)"

TABLE_GRIDS: dict[int, list] = {
    1: [("Mult2", {"s1": s1}, {}, None) for s1 in (3, 5, 7, 9)],
    2: [("Mult3", {"s1": a, "lam": b}, {}, None)
        for a, b in ((7, 0), (7, 8), (8, 10), (10, 11), (10, 14), (11, 13))],
    3: [("Mult4G2", {"s1": a, "s2": b}, {}, None)
        for a, b in ((6, 13), (6, 15), (10, 21))],
    4: [("NF4_1", {"s1": 5}, {}, None),
        ("NF4_1", {"s1": 7}, {}, None),
        ("NF4_2", {"s1": 13, "j": 2, "k": 1}, {}, None),
        ("NF4_3", {"s1": 9, "j": 2}, {}, None),
        ("NF4_3", {"s1": 11, "j": 2}, {}, None),
        ("NF4_3", {"s1": 13, "j": 2}, {}, None),
        ("NF4_4", {"s1": 9, "j": 2}, {}, None),
        ("NF4_4", {"s1": 11, "j": 2}, {}, None),
        ("NF4_4", {"s1": 13, "j": 2}, {}, None)],
    5: [("NF4_5", {"s1": 5, "j": 2}, {}, None),
        ("NF4_5", {"s1": 7, "j": 3}, {}, None)],
    6: [("NF4_5", {"s1": 11, "j": 2, "k": 1}, {}, None),
        ("NF4_5", {"s1": 9, "j": 2, "k": 2}, {}, None),
        ("NF4_5", {"s1": 9, "j": 3, "k": 1}, {"a_k": "1"}, None),
        ("NF4_5", {"s1": 9, "j": 3, "k": 1}, {"a_k": _S6}, 256),
        ("NF4_5", {"s1": 9, "j": 3, "k": 1}, {"a_k": _S6N}, 256)],
    7: [("NF4_5", {"s1": 9, "j": 3, "k": 1, "s": 1},
         {"a_k": _S6, "a_ks": "1"}, 256),
        ("NF4_5", {"s1": 17, "j": 7, "k": 1, "s": 4},
         {"a_k": _S6, "a_ks": "1"}, 256),
        ("NF4_5", {"s1": 13, "j": 5, "k": 1, "s": 3},
         {"a_k": _S6, "a_ks": "1"}, 256),
        ("NF4_5", {"s1": 13, "j": 5, "k": 1, "s": 3},
         {"a_k": _S6, "a_ks": _T81}, 256)],
    8: [("R1", {"s0": 3, "s1": 4}, {}, None),
        ("R1", {"s0": 4, "s1": 5}, {}, None),
        ("R1", {"s0": 5, "s1": 6}, {}, None),
        ("Mult4G2", {"s1": 6, "s2": 13}, {}, None)],
    9: [("R2A", {"s0": 4, "s1": 5}, {}, None),
        ("R2A", {"s0": 5, "s1": 6}, {}, None)],
    10: [("R2B", {"s0": 4, "s1": 11}, {}, None),
         ("R2B", {"s0": 5, "s1": 7}, {}, None),
         ("R2B", {"s0": 5, "s1": 8}, {}, None),
         ("R2B", {"s0": 6, "s1": 11}, {}, None),
         ("R2B", {"s0": 6, "s1": 13}, {}, None),
         ("R2B", {"s0": 6, "s1": 13},
          {"a2": "0", "a3": "0", "a4": "0"}, None)],
}


def _cmd_table(num: int, ctx: Ctx, bound, seed: int) -> dict:
    rows = []
    for fam, params, coeffs, min_prec in TABLE_GRIDS[num]:
        d = BranchDescriptor.make(fam, coeffs=dict(coeffs), **params)
        row_ctx = ctx if min_prec is None or ctx.prec >= min_prec \
            else Ctx(prec=min_prec)
        rep = verify(d, ctx=row_ctx, bound=bound, seed=seed)
        rows.append({
            "descriptor": d.to_dict(),
            "descriptor_rendered": d.render(),
            "fired_case": rep.classification.fired_case,
            "predicted": rep.classification.eq_type.render(),
            "computed": rep.computed.render(),
            "match": rep.match,
            "notes": list(rep.notes),
            "flags": list(rep.flags),
        })
    return {"table": num, "rows": rows}


def _render_text(command: str, doc: dict) -> str:
    if command == "analyze":
        order = ["multiplicity", "char_exponents", "generators", "conductor",
                 "genus", "q", "milnor", "tjurina", "r", "zariski_lambda"]
        width = max(len(k) for k in order)
        lines = []
        for key in order:
            v = doc[key]
            if isinstance(v, list):
                v = "(%s)" % ", ".join(map(str, v))
            lines.append("%-*s  %s" % (width, key, v))
        return "\n".join(lines)
    if command == "discriminant":
        lines = ["D(u,v) = %s" % doc["discriminant"],
                 "polygon: %s" % " ".join("(%d,%d)" % tuple(v)
                                          for v in doc["polygon"]),
                 "nondegenerate: %s" % ("yes" if doc["nondegenerate"] else "no"),
                 "type: %s" % doc["type_rendered"]]
        if "degeneracy_witness" in doc:
            w = doc["degeneracy_witness"]
            lines.append("degenerate edge: %s, repeated root %s"
                         % (w["edge"], w["repeated_root"]))
        return "\n".join(lines)
    if command == "classify":
        lines = ["%s [%s]" % (doc["rendered"], doc["fired_case"])]
        for note in doc["notes"]:
            lines.append("note [%s] %s: computed %s, proof %s, table %s -> %s"
                         % (note["kind"], note["quantity"], note["computed"],
                            note["proof_formula"], note["table_formula"],
                            note["confirms"]))
        return "\n".join(lines)
    if command == "verify":
        return doc["rendered"]
    # table
    lines = ["table %d" % doc["table"]]
    for row in doc["rows"]:
        lines.append("%s [%s]" % (row["descriptor_rendered"],
                                  row["fired_case"]))
        lines.append("  predicted: %s" % row["predicted"])
        lines.append("  computed:  %s" % row["computed"])
        lines.append("  match: %s" % ("yes" if row["match"] else "NO"))
        for note in row["notes"]:
            lines.append("  note [%s] %s -> confirms %s"
                         % (note["kind"], note["quantity"], note["confirms"]))
        for fl in row["flags"]:
            lines.append("  flag: %s" % fl)
    return "\n".join(lines)


_ERROR_CODES = (
    (ParseError, "parse-error", 2),
    (InvalidDescriptor, "invalid-descriptor", 3),
    (InvalidInput, "invalid-input", 3),
    ((PrecisionExhausted, NumericAmbiguity), "precision-exhausted", 4),
    (InsufficientTruncation, "insufficient-truncation", 5),
)


def _error_doc(exc: Exception) -> tuple[dict, int]:
    for classes, code, status in _ERROR_CODES:
        if isinstance(exc, classes):
            err = {"code": code, "message": str(exc)}
            if isinstance(exc, ParseError) and exc.position is not None:
                err["position"] = exc.position
            return {"error": err}, status
    return {"error": {"code": "internal-error", "message": str(exc)}}, 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="discurve",
        description="discriminant curves of plane branches, exactly")
    ap.add_argument("command",
                    choices=["analyze", "discriminant", "classify",
                             "verify", "table"])
    ap.add_argument("input", nargs="?",
                    help="curve input (or table number); stdin when omitted")
    ap.add_argument("--precision", type=int, default=128, metavar="BITS",
                    help="working precision in bits, at least 64 (default 128)")
    ap.add_argument("--trunc-order", default="auto", metavar="P/Q",
                    help="series truncation order, 'auto' picks "
                         "2*conductor + 2*multiplicity")
    ap.add_argument("--format", choices=["json", "text"], default="text",
                    dest="fmt")
    ap.add_argument("--seed", type=int, default=0,
                    help="seed for sampled free coefficients")
    ns = ap.parse_args(argv)

    try:
        if ns.precision < 64:
            raise ParseError("precision must be at least 64 bits")
        ctx = Ctx(prec=ns.precision)
        bound = None
        if ns.trunc_order != "auto":
            try:
                bound = Fraction(ns.trunc_order)
            except (ValueError, ZeroDivisionError):
                raise ParseError("--trunc-order takes 'auto' or a rational p/q")
            if bound <= 0:
                raise ParseError("--trunc-order must be positive")
        text = ns.input if ns.input is not None else sys.stdin.read()

        if ns.command == "table":
            try:
                num = int(text.strip())
            except ValueError:
                raise ParseError("table takes a number, got %r" % text.strip())
            if num not in TABLE_GRIDS:
                raise ParseError("table number must be 1..10")
            doc = _cmd_table(num, ctx, bound, ns.seed)
        else:
            kind, val = _parse_input(text)
            if ns.command == "analyze":
                doc = _cmd_analyze(kind, val, ctx, ns.seed)
            elif ns.command == "discriminant":
                doc = _cmd_discriminant(kind, val, ctx, bound, ns.seed)
            elif ns.command == "classify":
                doc = _cmd_classify(kind, val, ctx)
            else:
                doc = _cmd_verify(kind, val, ctx, bound, ns.seed)
    except (DiscurveError, RecursionError, OverflowError) as exc:
        doc, status = _error_doc(exc)
        print(json.dumps(doc, sort_keys=True))
        return status

    if ns.fmt == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(_render_text(ns.command, doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
