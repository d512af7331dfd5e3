import json

import pytest

from weldkit.errors import BadGap, BadParameter, FingerprintMismatch, SchemaError
from weldkit.families import (
    TWIST_PAIR_START,
    catalog_by_name,
    catalog_dump,
    catalog_load,
    fingerprint,
    resolve_twist_pair,
    torus_2q,
    torus_welded_one,
    torus_welded_two,
    twist,
    twist_welded_one,
    twist_welded_two,
)
from weldkit.gaussdiag import (
    canonicalize,
    parse,
    rotate,
    serialize,
    supporting_genus,
    weld,
)
from weldkit.grouppres import (
    PROVED,
    coloring_count,
    is_infinite_cyclic_certificate,
    wirtinger,
)

from .oracles import brute_colorings, closed_braid

TREFOIL = parse("O1+ U2+ O3+ U1+ O2+ U3+")


def test_torus_codes():
    assert torus_2q(1) == TREFOIL
    assert torus_2q(2) == parse("O1+ U2+ O3+ U4+ O5+ U1+ O2+ U3+ O4+ U5+")


@pytest.mark.parametrize("n", range(1, 8))
def test_torus_shape(n):
    d = torus_2q(n)
    assert d.crossing_count == 2 * n + 1
    assert [p.role for p in d.code] == ["O", "U"] * (2 * n + 1)
    assert supporting_genus(d) == 0


def test_torus_trefoil_colorings():
    assert brute_colorings(torus_2q(1), 3) == 9 == coloring_count(torus_2q(1), 3).total_count


def test_bad_parameters():
    for f in (torus_2q, twist):
        with pytest.raises(BadParameter):
            f(0)
    with pytest.raises(BadParameter):
        torus_welded_two(1, 0)
    with pytest.raises(BadGap):
        torus_welded_two(3, 3)
    with pytest.raises(BadParameter):
        twist_welded_two(3)


def test_torus_welded_one():
    assert torus_welded_one(2).crossing_count == 4
    assert is_infinite_cyclic_certificate(wirtinger(torus_welded_one(3))) == PROVED


@pytest.mark.parametrize("n", [2, 3, 4])
def test_torus_weld_choice_immaterial(n):
    d = torus_2q(n)
    forms = {serialize(canonicalize(weld(d, c))) for c in d.crossings}
    assert len(forms) == 1


def test_torus_welded_two_examples():
    assert fingerprint(torus_welded_two(2, 0)) == fingerprint(torus_2q(1))
    assert brute_colorings(torus_welded_two(3, 1), 3) > 3
    assert is_infinite_cyclic_certificate(wirtinger(torus_welded_two(3, 2))) == PROVED


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_torus_welded_two_gap_zero(n):
    a, b = torus_welded_two(n, 0), torus_2q(n - 1)
    for m in (3, 5, 7, 9):
        assert coloring_count(a, m).total_count == coloring_count(b, m).total_count
    assert fingerprint(a).alexander == fingerprint(b).alexander


@pytest.mark.parametrize("n", range(1, 7))
def test_twist_shape(n):
    d = twist(n)
    assert d.crossing_count == n + 2
    assert supporting_genus(d) == 0


def test_twist_small_cases_match_known_knots():
    assert brute_colorings(twist(1), 3) == 9
    assert brute_colorings(twist(2), 5) == 25
    assert fingerprint(twist(1)) == fingerprint(TREFOIL)
    fig8 = closed_braid(3, [1, -2, 1, -2])
    assert fingerprint(twist(2)) == fingerprint(fig8)


def test_twist_welded_one_is_weld_of_first():
    assert twist_welded_one(4) == weld(twist(4), 1)


def test_twist_pair_resolution():
    assert resolve_twist_pair() == TWIST_PAIR_START
    assert twist_welded_two(5).crossing_count == 5
    assert coloring_count(twist_welded_two(5), 3).nontrivial_exists
    assert coloring_count(twist_welded_two(7), 7).nontrivial_exists


# --- catalog ---------------------------------------------------------------------


def test_bundled_catalog():
    entries = catalog_load()
    names = [e.name for e in entries]
    assert names == ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"]
    by = catalog_by_name(entries)
    assert by["3_1"].fingerprint.colorings[3] == 9
    assert [by[k].known_unknotting_number for k in names] == [1, 1, 2, 1, 1, 1, 1]


def test_catalog_fingerprints_match_brute_force():
    for e in catalog_load():
        for m, c in e.fingerprint.colorings.items():
            assert brute_colorings(e.diagram, m) == c
        assert supporting_genus(e.diagram) == 0


def test_catalog_six_crossing_alexander():
    by = catalog_by_name(catalog_load())
    assert by["6_1"].fingerprint.alexander == (2, -5, 2)
    assert by["6_2"].fingerprint.alexander == (1, -3, 3, -3, 1)
    assert by["6_3"].fingerprint.alexander == (1, -3, 5, -3, 1)


def test_catalog_roundtrip(tmp_path):
    entries = catalog_load()
    p = tmp_path / "cat.json"
    p.write_text(catalog_dump(entries))
    again = catalog_load(p)
    assert [e.to_json() for e in again] == [e.to_json() for e in entries]


def test_catalog_rotation_invariant_fingerprint():
    e = catalog_by_name(catalog_load())["6_2"]
    assert fingerprint(rotate(e.diagram, 5)) == e.fingerprint


def test_catalog_errors(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(SchemaError):
        catalog_load(p)
    p.write_text(json.dumps({"name": "x"}))
    with pytest.raises(SchemaError):
        catalog_load(p)
    p.write_text(json.dumps([{"name": "x"}]))
    with pytest.raises(SchemaError):
        catalog_load(p)
    obj = catalog_load()[0].to_json()
    obj["fingerprint"]["colorings"]["3"] = 3
    p.write_text(json.dumps([obj]))
    with pytest.raises(FingerprintMismatch):
        catalog_load(p)
    with pytest.raises(OSError):
        catalog_load(tmp_path / "missing.json")
