"""End to end runs of the command line driver.

Everything is asserted through json.loads on captured stdout, never by eye:
the contract is byte-identical reports for identical inputs (sorted keys,
timing null unless --timing), machine-readable diagnostics on stderr, and
the exit codes 0 success / 1 selftest failure / 2 malformed input /
3 domain error / 4 bound exhausted.
"""

import io
import json
import sys

import pytest

from wittforge.cli import main

TOTALLY_RAMIFIED_SLOTS = {"slots": [[[1, 0, 0, 0], [0, 1, 0, 0]],
                                    [[0, 0, 1, 0], [0, 0, 0, 1]]]}

# <<5>> tensor <29, -18, 44, -5, 38, 44>, a valid decompose12 input
SPLIT12_ENTRIES = [29, -145, -18, 90, 44, -220, -5, 25, 38, -190, 44, -220]


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _write(tmp_path, name, payload) -> str:
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def _form_file(tmp_path, entries) -> str:
    return _write(tmp_path, "form.json",
                  {"entries": [str(e) for e in entries]})


def test_invariants_of_the_hyperbolic_plane(tmp_path, capsys):
    code, out, err = _run(capsys, "qf", "invariants",
                          _form_file(tmp_path, [1, -1]))
    assert code == 0 and err == ""
    report = json.loads(out)
    assert report["command"] == "qf invariants"
    assert report["outputs"] == {"dim": 2, "e1": "1", "e2": [],
                                 "signature": 0, "witt_index": 1, "e3": 0}
    assert report["timing_ms"] is None


def test_e2_is_null_outside_i2(tmp_path, capsys):
    # odd dimension
    code, out, _ = _run(capsys, "qf", "invariants",
                        _form_file(tmp_path, [1, 1, 1]))
    assert code == 0
    outputs = json.loads(out)["outputs"]
    assert outputs["e2"] is None and outputs["e3"] is None
    # even dimension but e1 = -1
    code, out, _ = _run(capsys, "qf", "invariants",
                        _form_file(tmp_path, [1, 1]))
    assert code == 0
    outputs = json.loads(out)["outputs"]
    assert outputs["e1"] == "-1"
    assert outputs["e2"] is None and outputs["e3"] is None


def test_reports_are_byte_identical_across_runs(tmp_path, capsys):
    path = _form_file(tmp_path, [3, -5, 7, -11])
    _, first, _ = _run(capsys, "qf", "invariants", path)
    _, second, _ = _run(capsys, "qf", "invariants", path)
    assert first == second
    # and canonically serialized: sorted keys, indent 2
    assert first == json.dumps(json.loads(first), indent=2,
                               sort_keys=True) + "\n"


def test_timing_flag_fills_the_slot(tmp_path, capsys):
    code, out, _ = _run(capsys, "--timing", "qf", "invariants",
                        _form_file(tmp_path, [1, -1]))
    assert code == 0
    timing = json.loads(out)["timing_ms"]
    assert isinstance(timing, int) and timing >= 0


def test_form_on_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin",
                        io.StringIO(json.dumps({"entries": ["1", "-1"]})))
    code, out, _ = _run(capsys, "qf", "invariants", "-")
    assert code == 0
    assert json.loads(out)["outputs"]["witt_index"] == 1


def test_decompose12_round_trips(tmp_path, capsys):
    code, out, _ = _run(capsys, "qf", "decompose12",
                        _form_file(tmp_path, SPLIT12_ENTRIES))
    assert code == 0
    report = json.loads(out)
    assert report["checks"]["round_trip"] is True
    assert len(report["outputs"]["alphas"]) == 3
    assert len(report["outputs"]["betas"]) == 3
    int(report["outputs"]["d"])  # a square class, not a float


def test_decompose12_rejects_wrong_dimension(tmp_path, capsys):
    code, out, err = _run(capsys, "qf", "decompose12",
                          _form_file(tmp_path, [1, -1]))
    assert code == 3 and out == ""
    assert json.loads(err)["error"] == "domain"


def test_hyper_over_quadratic_extension(tmp_path, capsys):
    path = _form_file(tmp_path, [1, -5])
    code, out, _ = _run(capsys, "qf", "hyper-over", path, "--d", "5")
    assert code == 0 and json.loads(out)["outputs"]["hyperbolic"] is True
    code, out, _ = _run(capsys, "qf", "hyper-over", path, "--d", "2")
    assert code == 0 and json.loads(out)["outputs"]["hyperbolic"] is False


def test_exists_witness_chains_into_f3(tmp_path, capsys):
    # dashes in the slot need the = form, which argparse accepts
    code, out, _ = _run(capsys, "alg", "exists", "--h1=-1,-1", "--h2=2,3")
    assert code == 0
    report = json.loads(out)
    assert report["outputs"]["status"] == "witness"
    assert report["checks"]["trivial_invariants"] is True
    pres = _write(tmp_path, "pres.json", report["outputs"]["presentation"])

    code, out, _ = _run(capsys, "alg", "f3", pres)
    assert code == 0
    outputs = json.loads(out)["outputs"]
    assert outputs["agree"] is True
    assert outputs["f3"] == outputs["f3_norms"] == outputs["f3_symbol"] == 0

    code, out, _ = _run(capsys, "alg", "additive", pres)
    assert code == 0
    report = json.loads(out)
    # always the eight classes {0, [A], H_i, Q_i}; distinct count varies
    group = report["outputs"]["group"]
    assert len(group) == 8
    assert report["checks"]["group_order"] == len({tuple(c) for c in group})
    for h_cls, q_cls in report["outputs"]["pairs"]:
        assert isinstance(h_cls, list) and isinstance(q_cls, list)


def test_obstruction_on_totally_ramified_slots(tmp_path, capsys):
    path = _write(tmp_path, "slots.json", TOTALLY_RAMIFIED_SLOTS)
    code, out, _ = _run(capsys, "val", "obstruction", path)
    assert code == 0
    outputs = json.loads(out)["outputs"]
    assert outputs["obstructed"] is True
    assert outputs["split_factor"] is False
    assert outputs["splittings"] == 560 == len(outputs["table"])
    row = outputs["table"][0]
    assert set(row) == {"s", "t", "intersection", "separated"}
    # obstruction means every candidate splitting fails the value test
    assert all(r["separated"] is True for r in outputs["table"])


def test_obstruction_reports_a_split_factor(tmp_path, capsys):
    slots = {"slots": [[[0, 0, 0, 0], [0, 1, 0, 0]],
                       [[0, 0, 1, 0], [0, 0, 0, 1]]]}
    path = _write(tmp_path, "slots.json", slots)
    code, out, _ = _run(capsys, "val", "obstruction", path)
    assert code == 0
    outputs = json.loads(out)["outputs"]
    assert outputs["split_factor"] is True
    assert outputs["obstructed"] is False
    assert outputs["table"] == []


def test_obstruction_rejects_dependent_monomials(tmp_path, capsys):
    slots = {"slots": [[[1, 0, 0, 0], [0, 1, 0, 0]],
                       [[1, 0, 0, 0], [0, 1, 0, 0]]]}
    path = _write(tmp_path, "slots.json", slots)
    code, out, err = _run(capsys, "val", "obstruction", path)
    assert code == 3 and out == ""
    assert json.loads(err)["error"] == "domain"


def test_missing_file_is_malformed_input(capsys):
    code, out, err = _run(capsys, "qf", "invariants", "/no/such/file.json")
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "malformed-input"


def test_broken_json_is_malformed_input(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, out, err = _run(capsys, "qf", "invariants", str(path))
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "malformed-input"


def test_bad_rational_is_malformed_input(tmp_path, capsys):
    path = _form_file(tmp_path, [1, -5])
    code, out, err = _run(capsys, "qf", "hyper-over", path, "--d", "sqrt2")
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "malformed-input"


def test_bad_symbol_pair_is_malformed_input(capsys):
    code, out, err = _run(capsys, "alg", "exists", "--h1=-1", "--h2=2,3")
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "malformed-input"


def test_factoring_failure_is_bound_exceeded(tmp_path, capsys):
    # two primes just above the trial division bound
    code, out, err = _run(capsys, "qf", "invariants",
                          _form_file(tmp_path, [1000003 * 1000033, 1]))
    assert code == 4 and out == ""
    assert json.loads(err)["error"] == "bound-exceeded"


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["qf", "frobnicate"])
    assert exc.value.code == 2


def test_selftest_is_deterministic(capsys):
    code, first, _ = _run(capsys, "selftest", "--seed", "3", "--count", "5")
    assert code == 0
    code, second, _ = _run(capsys, "selftest", "--seed", "3", "--count", "5")
    assert code == 0
    assert first == second
    outputs = json.loads(first)["outputs"]
    assert outputs["ok"] is True
    assert all(suite["ok"] for suite in outputs["suites"].values())
    assert set(outputs["suites"]) == {"reciprocity", "witt-identity",
                                      "hermitian-disc", "decompose12",
                                      "obstruction"}
