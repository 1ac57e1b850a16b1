import json

import pytest

from polebracket.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariant_one_bar_loop(capsys):
    code, out, _ = run(capsys, "invariant", "-i", "B")
    assert code == 0
    assert out.strip() == "M"


def test_info_virtual_trefoil_json(capsys):
    code, out, _ = run(capsys, "info", "-i", "O1+ O2+ U1+ U2+", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["euler"] == 0 and rep["orientable"] is True
    assert rep["pieces"] == [{"genus": 1, "orientable": True}]


def test_info_text_projective_plane(capsys):
    code, out, _ = run(capsys, "info", "-i", "B")
    assert code == 0
    assert "orientable false" in out
    assert "crosscaps 1" in out


def test_dbracket_and_bracket(capsys):
    code, out, _ = run(capsys, "dbracket", "-i", "O1+ O2+ U1+ U2+")
    assert code == 0 and "d_1" in out
    code, out, _ = run(capsys, "bracket", "-i", "O1+ U1+", "--json")
    assert code == 0
    assert json.loads(out)[0]["curves"] == []


def test_states_dump(capsys):
    code, out, _ = run(capsys, "states", "-i", "O1+ U1+", "--dump")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert all("state" in ln for ln in lines)


def test_move_subcommand(capsys):
    code, out, _ = run(capsys, "move", "-i", "EMPTY", "--kind", "R2", "--dir", "insert", "--site", "0,0")
    assert code == 0
    assert out == "U1+ U2- O2- O1+\n"


def test_move_rejection_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys, "move", "-i", "EMPTY", "--kind", "R1+", "--dir", "delete", "--site", "0,0")
    assert exc.value.code == 2


def test_parse_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys, "invariant", "-i", "O1+")
    assert exc.value.code == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys, "frobnicate")
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        run(capsys, "invariant")  # missing input
    assert exc.value.code == 1


def test_state_guard_refuses_large(capsys):
    # 25 crossings would be 2^25 states
    toks_o = " ".join(f"O{i}+" for i in range(1, 26))
    toks_u = " ".join(f"U{i}+" for i in range(1, 26))
    with pytest.raises(SystemExit) as exc:
        run(capsys, "dbracket", "-i", toks_o + " " + toks_u)
    assert exc.value.code == 1
    # info has no state sum and must not refuse
    code, _, _ = run(capsys, "info", "-i", toks_o + " " + toks_u)
    assert code == 0


def test_inline_semicolon_components(capsys):
    code, out, _ = run(capsys, "info", "-i", "O1+ U1+;EMPTY", "--json")
    assert code == 0
    assert len(json.loads(out)["pieces"]) == 2


def test_random_deterministic(capsys):
    _, out1, _ = run(capsys, "random", "--seed", "7", "--count", "3")
    _, out2, _ = run(capsys, "random", "--seed", "7", "--count", "3")
    assert out1 == out2
    _, out3, _ = run(capsys, "random", "--seed", "8", "--count", "3")
    assert out1 != out3


def test_random_output_parses(capsys):
    from polebracket.codes import parse_code

    _, out, _ = run(capsys, "random", "--seed", "3", "--count", "4")
    blocks = [b for b in out.split("\n\n") if b.strip()]
    assert len(blocks) == 4
    for b in blocks:
        parse_code(b)


def test_worker_flag_identical_output(capsys):
    _, out1, _ = run(capsys, "invariant", "-i", "O1- U2- O3- U1- O2- U3-", "--workers", "1")
    _, out2, _ = run(capsys, "invariant", "-i", "O1- U2- O3- U1- O2- U3-", "--workers", "2")
    assert out1 == out2


def test_check_small_battery(capsys):
    code, out, _ = run(capsys, "check", "--seed", "1", "--count", "6")
    assert code == 0
    assert "all checks passed" in out
    assert out.count("PASS") == 5
