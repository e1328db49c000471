"""Smoke tests for the python bindings."""

import json
import math
import xml.etree.ElementTree as ET

import pytest

try:
    import diagsynth as ds
except ImportError:
    import _diagsynth as ds


def test_sequence_families():
    pbt = ds.pbt_sequence(4)
    assert pbt.entries == [[3], [2], [3], [1], [3], [2], [3], [1]]
    report = ds.validate(pbt)
    assert report.parity_ok and report.coverage_ok
    assert report.gap_count == 8

    nested = ds.nested_copy_sequence(3)
    assert nested.entries == [[2], [1, 2], [2], [1, 2]]
    assert ds.validate(nested).gap_count == 6

    assert ds.constant_gap_sequence(1).entries == [[2], [1], [2], [1]]


def test_sign_matrix_and_inverse():
    seq = ds.pbt_sequence(3)
    rows = ds.build_r(seq)
    assert rows == [
        [1, 1, 1, 1],
        [1, -1, -1, 1],
        [1, 1, -1, -1],
        [1, -1, 1, -1],
    ]
    gamma = [0.3, -0.1, 0.7, 0.2]
    beta = ds.invert_r(seq, gamma)
    back = ds.apply_r(seq, beta)
    assert back == pytest.approx(gamma, abs=1e-12)
    assert ds.kron_column_permutation(seq) == [0, 1, 3, 2]


def test_degenerate_sequence_raises():
    bad = ds.ControlSequence(3, [[1], [1], [2], [2]])
    assert not ds.validate(bad).coverage_ok
    with pytest.raises(ValueError):
        ds.invert_r(bad, [0.0, 0.0, 0.0, 0.0])


def test_decompose_and_verify():
    phases = [0.4, 0.2, -0.6, 0.8, 1.1]
    circuit = ds.decompose(phases, family="pbt")
    assert circuit.n == 3
    counts = ds.gate_counts(circuit)
    assert counts == {"controls": 6, "rotations": 7, "global_phases": 1}

    operator = ds.evaluate(circuit)
    assert ds.is_diagonal(operator)
    assert ds.max_phase_error(operator, phases) < 1e-9

    doc = json.loads(circuit.to_json())
    assert doc["order"] == "application"
    rebuilt = ds.Circuit.from_json(circuit.to_json())
    assert ds.max_phase_error(ds.evaluate(rebuilt), phases) < 1e-9


def test_qasm_export():
    circuit = ds.decompose([0.0, 1.0, 2.0, 3.0])
    text = ds.export_qasm(circuit)
    assert text.startswith("OPENQASM 3.0;")
    assert text.count("cx ") == 2
    assert text.count("rz(") == 3


def test_rendering():
    seq = ds.pbt_sequence(4)
    stats = ds.gap_stats(seq)
    assert stats.per_row_gaps == [2, 2, 4]
    assert stats.total == 8
    assert stats.doubling_ok

    svg = ds.render_svg(seq)
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    gaps = [el for el in root.iter() if el.get("class") == "gap"]
    assert len(gaps) == stats.total

    text = ds.render_text(seq)
    assert text == ds.render_text(seq)
    assert "m=3" in text


def test_pad_phases():
    n, padded = ds.pad_phases([0.3, -0.7, 1.1])
    assert n == 2
    assert padded == [0.3, -0.7, 1.1, 0.0]
    with pytest.raises(ValueError):
        ds.pad_phases([])


def test_wrap_angles_keeps_the_operator():
    phases = [7.0, -9.5, 3.25, 11.0]
    circuit = ds.decompose(phases)
    wrapped = ds.wrap_circuit_angles(circuit)
    assert ds.max_phase_error(ds.evaluate(wrapped), phases) < 1e-9
