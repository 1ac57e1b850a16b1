"""Bracket values against independently derivable anchors.

The classical fixtures are checked against a separate planar Kauffman
bracket implementation (the oracle) rather than against values computed by
the code under test.
"""

import pytest

from polebracket.brackets import (
    BracketValue,
    assemble_from_table,
    double_bracket,
    normalized,
    specialize_bracket,
    surface_pole_bracket,
)
from polebracket.codes import parse_code
from polebracket.laurent import MultiLaurent, delta
from polebracket.oracle import classical_kauffman_oracle
from polebracket.verify import braid_closure, classical_fixtures

A = MultiLaurent.A
M = MultiLaurent.M
d = MultiLaurent.d


def test_unknot():
    assert double_bracket(parse_code("EMPTY")) == delta()
    assert normalized(parse_code("EMPTY")) == delta()


def test_kink_values_and_normalization():
    plus = parse_code("O1+ U1+")
    minus = parse_code("O1- U1-")
    assert double_bracket(plus) == -A(3) * delta()
    assert double_bracket(minus) == -A(-3) * delta()
    assert normalized(plus) == delta()
    assert normalized(minus) == delta()


def test_one_bar_loop_is_M():
    assert double_bracket(parse_code("B")) == M()
    assert normalized(parse_code("B")) == M()
    assert double_bracket(parse_code("B B")) == delta()


def test_trefoil_matches_jones_shape():
    # closure of three positive braid letters; standard bracket
    # -A^-4 - A^-12 + A^-16 times delta after normalization
    tref = braid_closure([(1, 1)] * 3, 2)
    expect = delta() * (-A(-16) + A(-12) + A(-4))
    assert normalized(tref) == expect
    # mirror via the all-negative code
    mirror = parse_code("O1- U2- O3- U1- O2- U3-")
    assert normalized(mirror) == delta() * (-A(16) + A(12) + A(4))


def test_virtual_trefoil_uses_d1():
    vt = double_bracket(parse_code("O1+ O2+ U1+ U2+"))
    assert vt == A(2) + d(1) * (1 - A(-4))
    assert vt.uses_d(1)
    assert normalized(parse_code("O1+ O2+ U1+ U2+")).uses_d(1)


def test_classical_fixture_oracle_equality():
    for name, code in classical_fixtures():
        value = double_bracket(code)
        assert value == classical_kauffman_oracle(code), name
        assert value.pure_A(), name


def test_surface_pole_bracket_kink():
    b = surface_pole_bracket(parse_code("O1+ U1+"))
    # no essential curves on the sphere: single empty-signature class
    assert list(b.classes) == [()]
    assert b.classes[()] == A(1) * delta() ** 2 + A(-1) * delta()


def test_surface_pole_bracket_virtual_trefoil_classes():
    b = surface_pole_bracket(parse_code("O1+ O2+ U1+ U2+"))
    sigs = list(b.classes)
    # every state leaves one essential non-separating curve on the torus,
    # of index 0 or 1; the index-1 class is what specializes to d_1
    assert len(sigs) == 2
    assert all(len(sig) == 1 for sig in sigs)
    assert {sig[0][0] for sig in sigs} == {0, 1}
    assert all(not sig[0][2] for sig in sigs)


def test_specialization_identity_fixtures():
    for text in ("EMPTY", "B", "B B", "O1+ U1+", "O1+ O2+ U1+ U2+", "B O1+ B U1+",
                 "O1- U2- O3- U1- O2- U3-"):
        code = parse_code(text)
        assert specialize_bracket(surface_pole_bracket(code)) == double_bracket(code)


def test_worker_determinism_small():
    code = parse_code("O1- U2- O3- U1- O2- U3-")
    assert double_bracket(code, workers=1) == double_bracket(code, workers=2)


def test_assemble_from_table_worked_example():
    rows = [
        (3, 0, "L1"),
        (1, 1, "L0"),
        (1, 1, "L0"),
        (1, 1, "L0"),
        (-3, 1, "L2"),
        (-1, 2, "L0"),
        (-1, 0, "L3"),
        (-1, 0, "L3"),
    ]
    out = assemble_from_table(rows)
    assert out["L0"] == (2 * A(1) - A(-3)) * delta()
    assert out["L1"] == A(3)
    assert out["L2"] == A(-3) * delta()
    assert out["L3"] == 2 * A(-1)


def test_bracket_value_equality_and_text():
    b1 = surface_pole_bracket(parse_code("O1+ U1+"))
    b2 = surface_pole_bracket(parse_code("O1+ U1+"))
    assert b1 == b2
    assert isinstance(b1.to_text(), str) and b1.to_text()
    assert isinstance(b1.to_json(), list)


def test_oracle_rejects_nonplanar():
    with pytest.raises(ValueError):
        classical_kauffman_oracle(parse_code("O1+ O2+ U1+ U2+"))
