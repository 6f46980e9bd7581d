"""Certificate reports: coefficient audits, the residue certificate,
and the three classification drivers."""

import json
from fractions import Fraction

from multibrot.certificates import (
    CertificateReport,
    Step,
    case4_residue_certificate,
    discriminant_bound_check,
    leading_coeff_check,
    theorem_11_driver,
    theorem_12_driver,
    theorem_13_driver,
    valuation_check,
)
from multibrot.exact import IntPoly


def test_step_json_shape():
    s = Step("a claim", "a method", {"k": 1}, "pass")
    assert s.to_json() == {
        "claim": "a claim",
        "method": "a method",
        "inputs": {"k": 1},
        "verdict": "pass",
    }
    s = Step("c", "m", {}, "trusted", witness=[1, 2], ref="some-ref")
    rec = s.to_json()
    assert rec["witness"] == [1, 2] and rec["ref"] == "some-ref"


def test_report_verdict_logic():
    ok = Step("c", "m", {}, "pass")
    bad = Step("c", "m", {}, "fail")
    cited = Step("c", "m", {}, "trusted", ref="background")
    rep = CertificateReport("x", (ok, cited))
    assert rep.verdict == "pass"
    assert rep.trusted_refs == ("background",)
    assert CertificateReport("x", (ok, bad, cited)).verdict == "fail"
    rec = rep.to_json()
    assert rec["format"] == 1 and rec["theorem"] == "x"
    assert len(rec["steps"]) == 2


def test_leading_coeff_check():
    assert leading_coeff_check(IntPoly([-1, 4]), 2) == "pass"
    assert leading_coeff_check(IntPoly([-4, 0, 27]), 3) == "pass"
    assert leading_coeff_check(IntPoly([1, 0, 0, 256]), 4) == "pass"
    assert leading_coeff_check(IntPoly([-1, 2]), 2) == "fail"
    assert leading_coeff_check(IntPoly([1, 3]), 4) == "not_integer"
    assert leading_coeff_check(IntPoly([1, 1, 25]), 5) == "not_integer"
    try:
        leading_coeff_check(IntPoly([7]), 2)
        assert False
    except ValueError:
        pass


def test_valuation_check():
    assert valuation_check(IntPoly([-4, 0, 27]), 3) == "pass"
    assert valuation_check(IntPoly([-1, 4]), 2) == "pass"
    assert valuation_check(IntPoly([3, 4]), 2) == "pass"
    assert valuation_check(IntPoly([-1, 2]), 2) == "fail"
    # p-integrality at sampled primes away from d
    assert valuation_check(IntPoly([1, 3, 4]), 2) == "fail"
    try:
        valuation_check(IntPoly([0, 0, 4]), 2)
        assert False
    except ValueError:
        pass


def test_discriminant_bound_check_cubic_member():
    rec = discriminant_bound_check(IntPoly([-4, 0, 27]), 3)
    assert rec["degree"] == 2
    assert rec["discriminant"] == 432
    assert rec["lc_power"] == 27
    assert rec["divides"] and rec["lower"]
    assert rec["upper"] is None and rec["upper_holds"] is None
    assert rec["verdict"] == "pass"


def test_discriminant_bound_check_degree_one_vacuous():
    rec = discriminant_bound_check(IntPoly([-1, 4]), 2)
    assert rec["degree"] == 1 and rec["lc_power"] == 1
    assert rec["verdict"] == "pass"


def test_discriminant_bound_check_even_degree_window():
    # lc forced to 256 at d = 4, degree 3; this sample fails the lower
    # divisibility floor but sits inside the certified upper window
    rec = discriminant_bound_check(IntPoly([1, 0, 0, 256]), 4)
    assert rec["upper"] is not None
    assert Fraction(rec["upper"][1]) < 1 << 17
    assert rec["upper_holds"] is True
    assert rec["verdict"] == "fail"


def test_case4_residue_certificate():
    rep = case4_residue_certificate()
    assert rep.theorem == "case4"
    assert rep.verdict == "pass"
    assert len(rep.steps) == 6
    assert rep.trusted_refs == ()
    table = [s for s in rep.steps if s.ref == "residue-table"][0]
    assert len(table.witness) == 16
    assert all(row["delta_mod_2_19"] == 5 * 2**16 for row in table.witness)
    assert all(row["delta_mod_2_19"] != 2**16 for row in table.witness)
    seen = {(row["a0"], row["u"], row["v"]) for row in table.witness}
    assert len(seen) == 16
    contradiction = [s for s in rep.steps if s.ref == "window-contradiction"][0]
    assert contradiction.verdict == "pass"


def test_case4_report_deterministic_and_serializable():
    a = case4_residue_certificate().to_json()
    b = case4_residue_certificate().to_json()
    assert a == b
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_theorem_11_driver():
    rep = theorem_11_driver(2, 4)
    assert rep.verdict == "pass"
    enum = [s for s in rep.steps if s.ref == "candidate-enumeration"][0]
    assert enum.witness == ["-2", "-1", "0"]
    assert "pcf-candidate-reduction" in rep.trusted_refs
    kept = {
        s.inputs["d"]: s.witness["kept"]
        for s in rep.steps
        if s.ref == "orbit-filter"
    }
    assert kept == {2: ["-2", "-1", "0"], 3: ["0"], 4: ["-1", "0"]}
    json.dumps(rep.to_json())
    try:
        theorem_11_driver(4, 2)
        assert False
    except ValueError:
        pass


def test_theorem_12_driver():
    rep = theorem_12_driver()
    assert rep.verdict == "pass"
    search = [s for s in rep.steps if s.ref == "period-three-search"][0]
    assert search.witness == ["-7/4", "-5/4", "-3/4", "1/4"]
    audits = [s for s in rep.steps if s.ref == "member-audit"]
    assert len(audits) == 4
    for s in audits:
        assert s.verdict == "pass"
        assert s.witness["leading_coeff"] == "pass"
        assert s.witness["valuation"] == "pass"
        assert s.witness["unit"] is True
    neg = [s for s in rep.steps if s.ref == "negative-control"][0]
    assert neg.verdict == "pass"
    assert neg.witness["valuation_check"] == "fail"
    json.dumps(rep.to_json())


def test_theorem_13_driver_narrow_range():
    rep = theorem_13_driver(3, 4, 3)
    assert rep.verdict == "pass"
    refs = [s.ref for s in rep.steps]
    for wanted in (
        "corner-6-3",
        "corner-4-4",
        "corner-4-3",
        "sigma-monotone",
        "tau-monotone",
        "forced-leading-coeff",
        "forced-window",
        "residue-certificate",
        "small-degree-exponent",
        "endpoint-totally-real",
    ):
        assert wanted in refs
    assert "product-tail" in rep.trusted_refs
    assert "odd-endpoint-reduction" in rep.trusted_refs

    crosses = {s.inputs["d"]: s for s in rep.steps if s.ref == "search-cross-check"}
    assert set(crosses) == {3, 4}
    cubic = crosses[3].witness
    assert len(cubic) == 2
    assert all(w["minpoly"] == ["-4", "0", "27"] for w in cubic)
    assert crosses[4].witness == []

    corner43 = [s for s in rep.steps if s.ref == "corner-4-3"][0]
    assert corner43.witness["verdict"] == "holds"
    residue = [s for s in rep.steps if s.ref == "residue-certificate"][0]
    assert residue.witness["verdict"] == "pass"
    json.dumps(rep.to_json())


def test_theorem_13_driver_validation():
    for bad in [(2, 4, 3), (5, 4, 3), (3, 4, 0)]:
        try:
            theorem_13_driver(*bad)
            assert False
        except ValueError:
            pass
