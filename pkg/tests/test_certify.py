import copy
import json
from fractions import Fraction

import pytest

from forcinglab.catalog import catalog
from forcinglab.certificate import Certificate, MalformedCertificate
from forcinglab.certify import (
    FLAGS,
    classify_five_vertex,
    classify_six_vertex,
    named_rows,
    param_certificate,
    read_table_csv,
    table_csv,
    table_json,
    verify,
)
from forcinglab.stepton import TWIN_BOUND, twin_automorphism_certificate
from forcinglab.subcount import count_copies
from forcinglab.tournament import format_code, parse_code

import published


@pytest.fixture(scope="module")
def rows():
    return classify_six_vertex()


@pytest.fixture(scope="module")
def certificates(rows):
    return [c for r in rows for c in r.certificates]


def by_reason(certs, reason):
    return next(c.to_dict() for c in certs if c.reason == reason)


def test_every_row_matches_reference(rows):
    assert len(rows) == 55
    assert all(r.matches_reference for r in rows)
    names = named_rows(rows)
    assert {n for n, r in names.items() if r.flags["D"]} == published.D_NAMES
    assert {n for n, r in names.items() if r.flags["E"]} == published.E_NAMES


def test_each_row_has_a_certificate(rows):
    for r in rows:
        assert r.certificates, r.code
        reasons = {c.reason for c in r.certificates}
        if r.flags["D"]:
            assert "blowup_witness" in reasons
        if r.flags["E"]:
            assert "param_matrix" in reasons


def test_all_emitted_certificates_verify(certificates):
    assert certificates
    for c in certificates:
        assert verify(c).accepted, c.to_dict()
        assert verify(c.to_json()).accepted


def test_twin_and_automorphism_bound(certificates):
    assert TWIN_BOUND == Fraction(2, 46656) > Fraction(1, 32768)
    found = [c for c in certificates if c.reason in ("twins", "nontrivial_automorphism")]
    assert found
    for c in found:
        assert c.dstar >= TWIN_BOUND


def tamper_cases(certificates):
    split = by_reason(certificates, "split_weights")
    twins = by_reason(certificates, "twins")
    aut = by_reason(certificates, "nontrivial_automorphism")
    blow = by_reason(certificates, "blowup_witness")
    param = by_reason(certificates, "param_matrix")

    def mutate(base, fn):
        d = copy.deepcopy(base)
        fn(d)
        return d

    def flip_first_bit(d):
        # first position whose flip changes the copy count; some flips give another valid certificate
        code, host = d["tournament"], parse_code(d["witness"]["host"])
        for i, ch in enumerate(code):
            if ch in "01":
                cand = code[:i] + ("1" if ch == "0" else "0") + code[i + 1 :]
                if count_copies(parse_code(cand), host) != d["witness"]["copies"]:
                    d["tournament"] = cand
                    return
        raise AssertionError("no count-changing flip")

    def flip_host_bit(d):
        host = d["witness"]["host"]
        d["witness"]["host"] = ("1" if host[0] == "0" else "0") + host[1:]

    def bump_copies(d):
        d["witness"]["copies"] += 1
        d["dstar"] = f"{d['witness']['copies']}/1"

    def swap_partition(d):
        d["witness"]["partition"] = d["witness"]["partition"][::-1]

    def non_twins(d):
        u, v = d["witness"]["pair"]
        d["witness"]["pair"] = [u, (v + 1) % 6 if (v + 1) % 6 != u else (v + 2) % 6]

    def identity_perm(d):
        d["witness"]["automorphism"] = list(range(6))

    def boundary_x(d):
        d["witness"]["x"] = "1/2"

    def alpha_one(d):
        d["witness"]["alpha"] = "1/1"

    def dstar_off_by_one(d):
        v = Fraction(d["dstar"])
        d["dstar"] = f"{v.numerator + 1}/{v.denominator}"

    def lower_threshold(d):
        d["threshold"] = "1/65536"

    def half_matrix(d):
        n = len(d["witness"]["matrix"])
        d["witness"]["matrix"] = [["1/2"] * n for _ in range(n)]
        d["witness"].pop("matrix_name", None)

    def wrong_k(d):
        d["k"] = 5

    def drop_field(d):
        del d["witness"]

    return {
        "flipped pattern bit": mutate(blow, flip_first_bit),
        "flipped host bit": mutate(blow, flip_host_bit),
        "copies off by one": mutate(blow, bump_copies),
        "reversed partition": mutate(split, swap_partition),
        "alpha at boundary": mutate(split, alpha_one),
        "non-twin pair": mutate(twins, non_twins),
        "identity automorphism": mutate(aut, identity_perm),
        "x at domain boundary": mutate(param, boundary_x),
        "param dstar off by one": mutate(param, dstar_off_by_one),
        "split dstar off by one": mutate(split, dstar_off_by_one),
        "threshold lowered": mutate(param, lower_threshold),
        "constant half matrix": mutate(param, half_matrix),
        "vertex count mismatch": mutate(twins, wrong_k),
        "missing witness": mutate(param, drop_field),
    }


def test_tampered_certificates_are_rejected(certificates):
    cases = tamper_cases(certificates)
    assert len(cases) >= 10
    for label, payload in cases.items():
        result = verify(payload)
        assert not result.accepted, label
        assert result.trace[-1].startswith("REJECT")


def test_malformed_input():
    assert not verify("{not json").accepted
    assert not verify({"reason": "split_weights"}).accepted
    with pytest.raises(MalformedCertificate):
        Certificate.from_dict({"tournament": "10,1", "k": 3, "reason": "magic", "witness": {}, "dstar": "1", "threshold": "1"})


def test_serialization_roundtrip(certificates):
    for c in certificates[:10]:
        d = json.loads(c.to_json())
        assert Certificate.from_dict(d) == c
        assert "/" in d["dstar"] and "/" in d["threshold"]


def test_param_certificates_for_e_patterns():
    for name, matrix in [("H_6^14", "A_x"), ("H_6^9", "B_x"), ("H_6^7", "B_x"), ("H_6^6", "C_x"), ("H_6^1", "C_x")]:
        cert = param_certificate(catalog(name), matrix)
        assert verify(cert).accepted
        assert cert.dstar > Fraction(1, 32768)


def test_twin_certificate_kinds():
    h = catalog("H_6^1")
    with pytest.raises(Exception):
        twin_automorphism_certificate(h, "twins")


def test_table_formats(rows):
    text = table_csv(rows)
    back = read_table_csv(text)
    assert len(back) == 55
    for r, b in zip(rows, back):
        assert b["code"] == r.code and all(b[f] == r.flags[f] for f in FLAGS)
    data = json.loads(table_json(rows))
    assert all(d["matches_reference"] for d in data)


def test_five_vertex_classification():
    entries = classify_five_vertex()
    assert len(entries) == 11
    names = {e.name: e for e in entries if e.name}
    assert names["H_5"].certificate.reason == "blowup_witness"
    assert names["F_5"].status.startswith("quasirandom-forcing")
    for e in entries:
        assert verify(e.certificate).accepted
    assert format_code(catalog("H_5")) in {e.code for e in entries}
