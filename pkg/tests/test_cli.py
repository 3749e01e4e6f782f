import json
import math

import pytest
from click.testing import CliRunner

from curvrad.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, args):
    return runner.invoke(main, args, catch_exceptions=False)


def test_identities_pass(runner, tmp_path):
    out = tmp_path / "o"
    res = run(runner, ["identities", "--out", str(out), "--seed", "1"])
    assert res.exit_code == 0
    csv = (out / "identities.csv").read_text()
    lines = csv.splitlines()
    assert lines[0].startswith("# curvrad ")
    assert "seed=1" in lines[0]
    assert lines[1] == "curvature,max_identity_residual,max_pythagoras_gap"
    summary = json.loads((out / "identities_summary.json").read_text())
    assert summary["report"]["passed"] is True


def test_identities_self_test_is_negative_control(runner, tmp_path):
    res = run(runner, ["identities", "--out", str(tmp_path), "--self-test"])
    assert res.exit_code == 1


def test_transform_default_euclidean_demo(runner, tmp_path):
    res = run(runner, ["transform", "--out", str(tmp_path), "--seed", "3"])
    assert res.exit_code == 0
    lines = (tmp_path / "transform.csv").read_text().splitlines()
    header = lines[1].split(",")
    assert header == ["d", "raw", "weighted", "oracle_raw", "abs_diff"]
    # flat unit ball, k = 2: raw column must follow pi (1 - d^2)
    for line in lines[2:-1]:
        d, raw = (float(x) for x in line.split(",")[:2])
        expected = math.pi * max(0.0, 1.0 - d * d)
        assert raw == pytest.approx(expected, abs=1e-9)


def test_transform_sphere_config(runner, tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text(
        "transform:\n"
        "  space: {curvature: spherical, n: 3}\n"
        "  k: 2\n"
        "  profile: {breakpoints: [0.0, 3.141592653589793], values: [1.0]}\n"
        "  d_grid: {points: [0.0]}\n")
    res = run(runner, ["transform", "--config", str(cfg), "--out", str(tmp_path)])
    assert res.exit_code == 0
    row = (tmp_path / "transform.csv").read_text().splitlines()[2]
    assert float(row.split(",")[1]) == pytest.approx(4 * math.pi, rel=1e-9)


def test_malformed_config_exits_2(runner, tmp_path):
    cfg = tmp_path / "bad.yaml"
    cfg.write_text(
        "transform:\n"
        "  space: {curvature: flat, n: 3}\n"
        "  k: 2\n"
        "  profile: {breakpoints: [0.0, 1.0], values: []}\n"
        "  d_grid: {points: [0.0]}\n")
    res = run(runner, ["transform", "--config", str(cfg), "--out", str(tmp_path)])
    assert res.exit_code == 2
    assert "profile" in res.output


def test_unparsable_yaml_exits_2(runner, tmp_path):
    cfg = tmp_path / "bad.yaml"
    cfg.write_text("transform: [unclosed\n")
    res = run(runner, ["transform", "--config", str(cfg), "--out", str(tmp_path)])
    assert res.exit_code == 2


def test_domain_error_exits_2(runner, tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text(
        "endpoint:\n"
        "  space: {curvature: hyperbolic, n: 3}\n"
        "  k: 1\n"
        "  n_profiles: 1\n")
    res = run(runner, ["endpoint", "--config", str(cfg), "--out", str(tmp_path)])
    assert res.exit_code == 2
    assert "endpoint" in res.output


def test_endpoint_pass(runner, tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text(
        "endpoint:\n"
        "  space: {curvature: flat, n: 4}\n"
        "  k: 2\n"
        "  n_profiles: 2\n"
        "  scale_family: [0.5, 2.0, 8.0]\n")
    res = run(runner, ["endpoint", "--config", str(cfg), "--out", str(tmp_path),
                       "--seed", "4"])
    assert res.exit_code == 0
    summary = json.loads((tmp_path / "endpoint_summary.json").read_text())
    assert summary["report"]["probe_divergent"] is True


def test_lemma_pass_with_jobs(runner, tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text(
        "lemma:\n"
        "  curvatures: [flat]\n"
        "  p_values: [1.0, 2.0]\n"
        "  eta_values: [1.0]\n"
        "  n_cases: 20\n")
    res = run(runner, ["lemma", "--config", str(cfg), "--out", str(tmp_path),
                       "--jobs", "2"])
    assert res.exit_code == 0


def test_hypergeo_pass(runner, tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text("hypergeo: {samples: 8}\n")
    res = run(runner, ["hypergeo", "--config", str(cfg), "--out", str(tmp_path)])
    assert res.exit_code == 0


def test_fixed_seed_outputs_are_byte_identical(runner, tmp_path):
    outs = []
    for name in ("a", "b"):
        out = tmp_path / name
        res = run(runner, ["identities", "--out", str(out), "--seed", "9"])
        assert res.exit_code == 0
        outs.append(((out / "identities.csv").read_bytes(),
                     (out / "identities_summary.json").read_bytes()))
    assert outs[0] == outs[1]


def test_seed_changes_config_hash(runner, tmp_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    run(runner, ["identities", "--out", str(a), "--seed", "1"])
    run(runner, ["identities", "--out", str(b), "--seed", "2"])
    line_a = (a / "identities.csv").read_text().splitlines()[0]
    line_b = (b / "identities.csv").read_text().splitlines()[0]
    assert line_a != line_b
