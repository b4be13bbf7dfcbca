"""Closed-form classification: fired cases, rendered types, version notes."""

from __future__ import annotations

import pytest

from discurve.classifier import classify, verify
from discurve.coeffs import Ctx, parse_coeff
from discurve.errors import InvalidDescriptor
from discurve.normal_forms import BranchDescriptor


def _cls(fam, coeffs=None, **params):
    if coeffs:
        coeffs = {k: parse_coeff(v) for k, v in coeffs.items()}
    return classify(BranchDescriptor.make(fam, coeffs=coeffs, **params))


def _note(c, quantity):
    for n in c.notes:
        if n["quantity"] == quantity:
            return n
    raise AssertionError("no note %r in %r" % (quantity, [n["quantity"] for n in c.notes]))


FROZEN = [
    ("Mult2", dict(s1=3), None, "mult2", "smooth"),
    ("Mult2", dict(s1=9), None, "mult2", "smooth"),
    ("Mult3", dict(s1=7, lam=0), None, "mult3.lambda0", "smooth^2"),
    ("Mult3", dict(s1=7, lam=8), None, "mult3.branch", "<2,15>"),
    ("Mult3", dict(s1=8, lam=10), None, "mult3.split",
     "smooth + smooth; i0(1,2)=9"),
    ("Mult3", dict(s1=10, lam=11), None, "mult3.branch", "<2,21>"),
    ("Mult3", dict(s1=10, lam=14), None, "mult3.split",
     "smooth + smooth; i0(1,2)=12"),
    ("Mult3", dict(s1=11, lam=13), None, "mult3.split",
     "smooth + smooth; i0(1,2)=12"),
    ("Mult4G2", dict(s1=6, s2=13), None, "mult4.genus2",
     "smooth + <2,13>; i0(1,2)=12"),
    ("Mult4G2", dict(s1=10, s2=21), None, "mult4.genus2",
     "smooth + <2,21>; i0(1,2)=20"),
    ("NF4_1", dict(s1=5), None, "nf4.lambda0", "smooth^3"),
    ("NF4_2", dict(s1=13, j=2, k=1), None, "nf4.234.branch", "<3,44>"),
    ("NF4_3", dict(s1=9, j=2), None, "nf4.234.branch", "<3,28>"),
    ("NF4_3", dict(s1=11, j=2), None, "nf4.234.split",
     "smooth + smooth + smooth; i0(1,2)=12, i0(1,3)=12, i0(2,3)=12"),
    ("NF4_4", dict(s1=13, j=2), None, "nf4.234.branch", "<3,44>"),
    ("NF4_5", dict(s1=5, j=2), None, "A", "smooth + smooth^2; i0(1,2)=6"),
    ("NF4_5", dict(s1=11, j=2, k=1), None, "B.1",
     "smooth + smooth + smooth; i0(1,2)=16, i0(1,3)=16, i0(2,3)=16"),
    ("NF4_5", dict(s1=13, j=3, k=1), None, "B.1", "<3,56>"),
    ("NF4_5", dict(s1=9, j=2, k=2), None, "B.2", "smooth + <2,29>; i0(1,2)=28"),
    ("NF4_5", dict(s1=9, j=3, k=2), None, "B.2",
     "smooth + smooth + smooth; i0(1,2)=12, i0(1,3)=12, i0(2,3)=13"),
    ("NF4_5", dict(s1=9, j=3, k=1), None, "B.3.1",
     "smooth + smooth + smooth; i0(1,2)=12, i0(1,3)=12, i0(2,3)=12"),
    ("NF4_5", dict(s1=9, j=3, k=1), {"a_k": "4/9*sqrt(6)"}, "B.3.2",
     "smooth + <2,33>; i0(1,2)=24"),
    ("NF4_5", dict(s1=9, j=3, k=1), {"a_k": "-4/9*sqrt(6)"}, "B.3.3",
     "smooth + <2,33>; i0(1,2)=24"),
    ("NF4_5", dict(s1=13, j=5, k=1), {"a_k": "4/9*sqrt(6)"}, "B.3.2",
     "smooth + <2,41>; i0(1,2)=32"),
    ("NF4_5", dict(s1=9, j=3, k=1, s=1),
     {"a_k": "4/9*sqrt(6)", "a_ks": "1"}, "C.3.2.1",
     "smooth + <2,27>; i0(1,2)=24"),
    ("NF4_5", dict(s1=13, j=5, k=1, s=2),
     {"a_k": "4/9*sqrt(6)", "a_ks": "1"}, "C.3.2.1",
     "smooth + smooth + smooth; i0(1,2)=16, i0(1,3)=16, i0(2,3)=19"),
    ("NF4_5", dict(s1=17, j=7, k=1, s=4),
     {"a_k": "4/9*sqrt(6)", "a_ks": "1"}, "C.3.2.2",
     "smooth + <2,49>; i0(1,2)=40"),
    ("NF4_5", dict(s1=13, j=5, k=1, s=3),
     {"a_k": "4/9*sqrt(6)", "a_ks": "1"}, "C.3.2.3.1",
     "smooth + <2,41>; i0(1,2)=32"),
    ("NF4_5", dict(s1=13, j=5, k=1, s=3),
     {"a_k": "4/9*sqrt(6)", "a_ks": "-4/81*sqrt(6)"}, "C.3.2.3.2",
     "smooth + smooth + smooth; i0(1,2)=16, i0(1,3)=16, i0(2,3)=25"),
    ("R1", dict(s0=3, s1=4), None, "R1.split", "smooth + smooth; i0(1,2)=3"),
    ("R1", dict(s0=3, s1=5), None, "R1.branch", "<2,9>"),
    ("R1", dict(s0=4, s1=5), None, "R1.double", "smooth + smooth^2; i0(1,2)=6"),
    ("R1", dict(s0=5, s1=6), None, "R1.split",
     "smooth + smooth + smooth^2; i0(1,2)=10, i0(1,3)=10, i0(2,3)=10"),
    ("R1", dict(s0=5, s1=7), None, "R1.branch", "smooth^2 + <2,25>; i0(1,2)=25"),
    ("R2A", dict(s0=4, s1=5), None, "R2A.double",
     "smooth + smooth^2; i0(1,2)=4"),
    ("R2A", dict(s0=5, s1=6), None, "R2A.branch",
     "smooth^2 + <2,15>; i0(1,2)=15"),
    ("R2B", dict(s0=4, s1=11), None, "R2B.split",
     "smooth + smooth + smooth; i0(1,2)=12, i0(1,3)=12, i0(2,3)=12"),
    ("R2B", dict(s0=5, s1=7), None, "R2B.branch", "smooth + <3,25>; i0(1,2)=25"),
    ("R2B", dict(s0=5, s1=8), None, "R2B.split",
     "smooth + smooth + smooth + smooth; i0(1,2)=10, i0(1,3)=10, i0(1,4)=10, "
     "i0(2,3)=10, i0(2,4)=10, i0(3,4)=10"),
    ("R2B", dict(s0=6, s1=11), None, "R2B.split-deep",
     "smooth + smooth + smooth + smooth^2; i0(1,2)=20, i0(1,3)=20, i0(1,4)=18, "
     "i0(2,3)=20, i0(2,4)=18, i0(3,4)=18"),
    ("R2B", dict(s0=6, s1=11), {"a3": "0"}, "R2B.split-deep",
     "smooth + smooth + smooth + smooth^2; i0(1,2)=21, i0(1,3)=21, i0(1,4)=18, "
     "i0(2,3)=21, i0(2,4)=18, i0(3,4)=18"),
    ("R2B", dict(s0=6, s1=13), None, "R2B.branch-deep",
     "smooth^2 + <3,71>; i0(1,2)=66"),
    ("R2B", dict(s0=6, s1=13), {"a2": "0", "a3": "0", "a4": "0"}, "R2B.triple",
     "smooth^2 + smooth^3; i0(1,2)=22"),
]


@pytest.mark.parametrize("fam,params,coeffs,case,rendered", FROZEN,
                         ids=["%s-%d" % (row[0], i) for i, row in enumerate(FROZEN)])
def test_frozen_classifications(fam, params, coeffs, case, rendered):
    c = _cls(fam, coeffs, **params)
    assert c.fired_case == case
    assert c.eq_type.render() == rendered


def test_version_notes_where_table_and_proof_disagree():
    # the summary table's fused-branch row predicts <3,s1-2> for the r=1
    # family, the proof predicts the computed shapes; both versions carry
    # the same wrong i0 in the non-fused rows
    c = _cls("R1", None, s0=3, s1=4)
    assert _note(c, "branch structure (non-D1 part)")["confirms"] == "proof"
    c = _cls("R1", None, s0=4, s1=5)
    assert _note(c, "branch structure (non-D1 part)")["confirms"] == "neither"
    assert _note(c, "i0(D1,D2)")["confirms"] == "neither"
    c = _cls("R1", None, s0=5, s1=6)
    assert _note(c, "branch structure (non-D1 part)")["confirms"] == "proof"
    assert _note(c, "i0(D1,Dk)")["confirms"] == "neither"
    c = _cls("R2A", None, s0=4, s1=5)
    assert _note(c, "branch structure")["confirms"] == "neither"
    assert _note(c, "i0(D1,D2)")["confirms"] == "both"
    c = _cls("R2A", None, s0=5, s1=6)
    assert _note(c, "i0(D1,D2)")["confirms"] == "neither"


def test_version_notes_on_radical_cases():
    c = _cls("NF4_5", {"a_k": "4/9*sqrt(6)"}, s1=9, j=3, k=1)
    assert _note(c, "semigroup of D2")["confirms"] == "neither"
    c = _cls("NF4_5", {"a_k": "4/9*sqrt(6)", "a_ks": "-4/81*sqrt(6)"},
             s1=13, j=5, k=1, s=3)
    assert _note(c, "i0(D2,D3)")["confirms"] == "neither"
    assert _note(c, "degeneracy threshold for a_{k+s}")["confirms"] == "both"


def test_version_notes_on_deep_r2b():
    c = _cls("R2B", None, s0=6, s1=13)
    assert _note(c, "branch structure")["confirms"] == "neither"
    assert _note(c, "i0(D1,D2)")["confirms"] == "neither"
    c = _cls("R2B", None, s0=6, s1=11)
    assert _note(c, "i0 between the split sheets")["confirms"] == "neither"


def test_classification_to_dict_shape():
    c = _cls("Mult3", None, s1=7, lam=8)
    doc = c.to_dict()
    assert set(doc) == {"descriptor", "type", "rendered", "fired_case", "notes"}
    assert doc["fired_case"] == "mult3.branch"
    assert doc["rendered"] == "<2,15>"


def test_verify_runs_all_checks_on_small_case():
    rep = verify(BranchDescriptor.make("Mult3", s1=7, lam=8))
    assert rep.match
    names = {c["name"] for c in rep.checks}
    assert {"semigroup", "milnor-conductor", "merle-polygon",
            "nondegeneracy-law"} <= names
    assert all(c["ok"] for c in rep.checks)
    text = rep.render()
    assert "ok" in text


def test_verify_reports_tjurina_rank_for_low_codimension():
    rep = verify(BranchDescriptor.make("R1", s0=4, s1=5))
    byname = {c["name"]: c for c in rep.checks}
    assert byname["milnor-tjurina"]["ok"]


def test_invalid_descriptors_raise():
    with pytest.raises(InvalidDescriptor):
        BranchDescriptor.make("Mult2", s1=4)  # even s1
    with pytest.raises(InvalidDescriptor):
        BranchDescriptor.make("NoSuchFamily", s1=5)
    with pytest.raises(InvalidDescriptor):
        BranchDescriptor.make("NF4_2", s1=9, j=2, k=1)  # k exceeds [s1/4]-j
    with pytest.raises(InvalidDescriptor):
        BranchDescriptor.make("Mult3", s1=7, lam=7)  # lam out of range
