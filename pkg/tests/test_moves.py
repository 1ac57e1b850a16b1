import random

import pytest

from polebracket.brackets import normalized
from polebracket.codes import canonicalize, parse_code, serialize, writhe
from polebracket.moves import (
    MoveError,
    MoveSpec,
    apply_move,
    insert_sites,
    r1_delete_sites,
    r2_delete_sites,
    r3_sites,
    t1_delete_sites,
    t3_sites,
)
from polebracket.verify import braid_closure


def _same_diagram(a, b):
    return canonicalize(a) == canonicalize(b)


# -- R1 ----------------------------------------------------------------------


def test_r1_insert_delete_round_trip():
    base = parse_code("O1+ U2+ U1+ O2+")
    for kind in ("R1+", "R1-"):
        for gap in range(5):
            for variant in (0, 1):
                kinked = apply_move(base, MoveSpec(kind, "insert", (0, gap), variant))
                assert writhe(kinked) == writhe(base) + (1 if kind == "R1+" else -1)
                sites = r1_delete_sites(kinked)
                assert sites
                undone = [apply_move(kinked, s) for s in sites if s.kind == kind]
                assert any(_same_diagram(u, base) for u in undone)


def test_r1_delete_wrong_sign_rejected():
    kinked = parse_code("O1+ U1+")
    with pytest.raises(MoveError):
        apply_move(kinked, MoveSpec("R1-", "delete", (0, 0)))


# -- R2 ----------------------------------------------------------------------


def test_r2_insert_on_empty_matches_contract():
    out = apply_move(parse_code("EMPTY"), MoveSpec("R2", "insert", (0, 0)))
    signs = {t.sign for c in out.components for t in c}
    assert len(out.crossing_ids) == 2
    assert signs == {1, -1}


def test_r2_insert_delete_round_trip():
    for text in ("EMPTY", "O1+ U1+", "O1+ O2+ U1+ U2+", "B", "B O1+ B U1+"):
        base = parse_code(text)
        for ci in range(len(base.components)):
            for gap in range(len(base.components[ci]) + 1):
                for variant in range(4):
                    poked = apply_move(base, MoveSpec("R2", "insert", (ci, gap), variant))
                    undone = [apply_move(poked, s) for s in r2_delete_sites(poked)]
                    assert any(_same_diagram(u, base) for u in undone)


def test_r2_insert_preserves_invariant_everywhere():
    base = parse_code("O1- U2- O3- U1- O2- U3-")
    before = normalized(base)
    for gap in range(7):
        for variant in range(4):
            poked = apply_move(base, MoveSpec("R2", "insert", (0, gap), variant))
            assert normalized(poked) == before


def test_r2_delete_accepts_cross_arc_planar_pair():
    # a poke whose finger lands across another arc, still planar
    code = parse_code("O1+ U2+ U3- U1+ O2+ O3-")
    sites = r2_delete_sites(code)
    assert sites
    results = [apply_move(code, s) for s in sites]
    kink = parse_code("O1+ U1+")
    assert any(_same_diagram(r, kink) for r in results)


def test_r2_delete_rejects_surface_changing_pattern():
    # interleaved parallel pairs: the token pattern of an R2 pair, but the
    # code realizes on a torus and deleting would change the link
    code = parse_code("U1+ U2- O1+ O2-")
    assert r2_delete_sites(code) == []
    for p1 in range(4):
        for p2 in range(4):
            with pytest.raises(MoveError):
                apply_move(code, MoveSpec("R2", "delete", (0, p1, 0, p2)))


def test_r2_delete_rejects_detour_poke():
    # bigon is a face of the realization, yet deleting it would
    # destabilize the torus to a sphere; must be refused
    code = parse_code("O1+ U3+ U2- U1+ O2- O3+")
    assert r2_delete_sites(code) == []


def test_r2_writhe_unchanged():
    base = parse_code("O1+ U1+")
    poked = apply_move(base, MoveSpec("R2", "insert", (0, 1), 2))
    assert writhe(poked) == writhe(base)


# -- R3 ----------------------------------------------------------------------


def test_r3_braid_relation():
    lhs = braid_closure([(1, 1), (2, 1), (1, 1)], 3)
    rhs = braid_closure([(2, 1), (1, 1), (2, 1)], 3)
    sites = r3_sites(lhs)
    assert sites
    assert any(_same_diagram(apply_move(lhs, s), rhs) for s in sites)


def test_r3_preserves_writhe_and_value():
    lhs = braid_closure([(1, 1), (2, -1), (1, 1)], 3)
    before = normalized(lhs)
    for s in r3_sites(lhs):
        moved = apply_move(lhs, s)
        assert writhe(moved) == writhe(lhs)
        assert normalized(moved) == before


def test_r3_rejects_cyclic_over_pattern():
    # three crossings where each strand goes over exactly one other in a
    # cycle; no plane triangle realizes that
    code = parse_code("O1+ U3+ O2+ U1+ O3+ U2+")
    assert r3_sites(code) == []


# -- T moves -----------------------------------------------------------------


def test_t1_round_trip_and_t2_identity():
    base = parse_code("O1+ U1+")
    barred = apply_move(base, MoveSpec("T1", "insert", (0, 1)))
    assert serialize(barred) == "O1+ B B U1+\n"
    sites = t1_delete_sites(barred)
    assert any(_same_diagram(apply_move(barred, s), base) for s in sites)
    assert apply_move(base, MoveSpec("T2", "rewrite", ())) == base


def test_t3_slide_swaps_roles_keeps_sign():
    code = parse_code("B O1+ B U1+")
    sites = t3_sites(code)
    assert sites
    moved = apply_move(code, sites[0])
    tokens = [t for c in moved.components for t in c]
    overs = [t for t in tokens if getattr(t, "over", None) is True]
    assert len(moved.crossing_ids) == 1
    assert all(t.sign == 1 for t in tokens if hasattr(t, "sign"))
    assert writhe(moved) == writhe(code)
    assert normalized(moved) == normalized(code)


def test_t3_requires_shared_crossing():
    code = parse_code("B O1+ B U2+ O2+ U1+")
    for spec in t3_sites(code):
        moved = apply_move(code, spec)
        assert normalized(moved) == normalized(code)
    with pytest.raises(MoveError):
        # bars adjacent to visits of different crossings
        apply_move(code, MoveSpec("T3", "rewrite", (0, 0, 1, 0, 2, 1)))


# -- harness ------------------------------------------------------------------


def test_insert_sites_sampling_is_seeded():
    code = parse_code("O1+ U1+")
    a = insert_sites(code, random.Random(5))
    b = insert_sites(code, random.Random(5))
    assert a == b
    kinds = {s.kind for s in a}
    assert {"R1+", "R1-", "R2", "T1", "T2"} <= kinds


def test_unknown_move_rejected():
    with pytest.raises(MoveError):
        apply_move(parse_code("EMPTY"), MoveSpec("R9", "insert", (0, 0)))
    with pytest.raises(MoveError):
        apply_move(parse_code("EMPTY"), MoveSpec("R2", "rewrite", ()))
