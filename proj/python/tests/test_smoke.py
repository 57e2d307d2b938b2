import json
import math
import os
import subprocess

import pytest

import arbelos


def test_area_decomposition():
    report = arbelos.area_decomposition(arbelos.ArbelosConfig(1.0, 0.6))
    assert report.area_knife == pytest.approx(0.09 * math.pi, rel=1e-12)
    assert report.area_C1 + report.area_C2 + report.area_knife == pytest.approx(
        math.pi / 2, rel=1e-12
    )


def test_radii_and_branches():
    config = arbelos.validate_config(2.0, 1.0)
    plus = arbelos.radii_from_chord(config)
    minus = arbelos.radii_from_chord(config, arbelos.Branch.Minus)
    assert plus.R1 == pytest.approx(1.8660254037844386, rel=1e-12)
    assert (minus.R1, minus.R2) == (plus.R2, plus.R1)
    assert arbelos.chord_from_radii(plus.R1, plus.R2) == pytest.approx(1.0, rel=1e-12)
    c1, c2 = arbelos.semicircle_areas(config)
    assert c1 + c2 == pytest.approx(7 * math.pi / 4, rel=1e-12)


def test_renormalization_round_trip():
    state = arbelos.complete_state(0.5)
    config, radii = arbelos.denormalize(state, 2.0)
    assert config.T == 1.0
    assert radii.R1 == pytest.approx(1.8660254037844386, rel=1e-12)
    assert arbelos.solve_r1(1e-8, arbelos.Branch.Minus) == pytest.approx(2.5e-17, rel=1e-15)


def test_validation_errors():
    with pytest.raises(arbelos.ArbelosError, match="ChordOutOfRange"):
        arbelos.validate_config(1.0, 1.0000001)
    with pytest.raises(ValueError, match="PointOffDiameter"):
        arbelos.build_figure(1.0, 2.0)


def test_construction_and_predicates():
    fig = arbelos.build_figure(5.0, 3.0)
    assert (fig.T, fig.R1, fig.R2) == (4.0, 4.0, 1.0)
    assert tuple(fig.P) == (3.0, 4.0)
    assert arbelos.verify_right_angle(fig) <= 1e-9
    assert arbelos.verify_geometric_mean(fig) == 0.0
    sym = arbelos.build_figure(1.0, 0.0)
    assert arbelos.in_knife((0.0, 0.999), sym)
    assert not arbelos.in_knife((-0.5, 0.1), sym)
    assert arbelos.in_semicircle((0.0, 0.1), arbelos.Semicircle.C, sym)


def test_oracle_with_python_predicate():
    cfg = arbelos.OracleConfig(arbelos.OracleMethod.MonteCarlo, samples=20000, seed=3)
    est = arbelos.estimate_area(lambda x, y: x * x + y * y < 1.0, (-1.0, 1.0, 0.0, 1.0), cfg)
    assert abs(est.value - math.pi / 2) <= 4 * est.std_error
    again = arbelos.estimate_area(lambda x, y: x * x + y * y < 1.0, (-1.0, 1.0, 0.0, 1.0), cfg)
    assert again.value == est.value


def test_verify_config():
    report = arbelos.verify_config(
        arbelos.ArbelosConfig(1.0, 0.6),
        arbelos.OracleConfig(arbelos.OracleMethod.Grid, grid_resolution=512),
    )
    assert report.passed
    assert [r.region for r in report.regions] == [
        arbelos.Region.Knife,
        arbelos.Region.C1,
        arbelos.Region.C2,
        arbelos.Region.C,
    ]


def test_render_is_deterministic():
    fig = arbelos.build_figure(1.0, 0.0)
    opts = arbelos.RenderOptions()
    opts.shade_knife = True
    svg = arbelos.render_figure(fig, opts)
    assert svg == arbelos.render_figure(fig, opts)
    assert svg.count('<path class="arc"') == 3


@pytest.mark.skipif("ARBELOS_CLI" not in os.environ, reason="CLI path not provided")
@pytest.mark.parametrize(
    "args, code",
    [
        (["compute", "--R", "1", "--T", "0.6", "--format", "json"], 0),
        (["compute", "--R", "1", "--T", "2"], 2),
        (["verify", "--R", "1", "--T", "0"], 2),
        (["verify", "--R", "2", "--T", "1", "--samples", "3", "--seed", "5"], 1),
        (["render", "--R", "1", "--n", "2", "--out", "-"], 2),
        (["sweep", "--steps", "1"], 2),
    ],
)
def test_cli_exit_codes(args, code):
    proc = subprocess.run([os.environ["ARBELOS_CLI"], *args], capture_output=True, text=True)
    assert proc.returncode == code, proc.stderr


@pytest.mark.skipif("ARBELOS_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_compute_json_matches_module():
    proc = subprocess.run(
        [os.environ["ARBELOS_CLI"], "compute", "--R", "1", "--T", "0.6", "--format", "json"],
        capture_output=True,
        text=True,
        check=True,
    )
    out = json.loads(proc.stdout)
    assert list(out) == ["R", "T", "t", "r1", "r2", "area_C", "area_C1", "area_C2", "area_knife"]
    report = arbelos.area_decomposition(arbelos.ArbelosConfig(1.0, 0.6))
    assert out["area_knife"] == report.area_knife
