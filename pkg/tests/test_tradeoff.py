import numpy as np
import pytest
from pydantic import ValidationError

from catcluster.catcluster_model_factory import CatClusterModel
from catcluster.exceptions import EmptyScanError, NoCrossingError
from catcluster.metrics import ballistic_er
from catcluster.teleport import scan_outcomes
from catcluster.teleport.teleporter import TWO_QUBIT_GRAPH
from catcluster.tradeoff import (
    DEFAULT_ALPHA_GRID,
    ThresholdModel,
    ballistic_alpha_for,
    curve_crosses,
    find_crossing_alpha,
    photon_accounting,
    reported_alpha,
    summary_table,
    threshold_line,
    tradeoff_curve,
)


@pytest.fixture(scope="module")
def scan():
    """Ballistic teleporter scan at alpha = 2"""
    return scan_outcomes(2.0)


@pytest.fixture
def barrett():
    """Fixture for the Barrett-Stace threshold model"""
    return CatClusterModel("barrett").create_model()


@pytest.fixture
def generous():
    """A threshold every scan reaches once all outcomes are accepted"""
    return ThresholdModel(name="generous", comp_only=0.999, loss_only=0.999)


@pytest.fixture
def strict():
    """A threshold no small-amplitude scan can reach"""
    return ThresholdModel(name="strict", comp_only=1e-6, loss_only=1e-6)


def test_threshold_line(barrett):
    """Tests the straight line between the two single-species bounds"""
    line = threshold_line(barrett)
    assert line(0.0063) == pytest.approx(0.0)
    assert line(0.0) == pytest.approx(0.249)
    optimistic = CatClusterModel("optimistic").create_model()
    assert threshold_line(optimistic)(0.005) == pytest.approx(0.1245)
    np.testing.assert_allclose(line(np.array([0.0, 0.0063])), [0.249, 0.0], atol=1e-15)


def test_threshold_model_validation():
    """Tests bounds outside (0, 1)"""
    with pytest.raises(ValidationError):
        ThresholdModel(comp_only=0.0, loss_only=0.2)
    with pytest.raises(ValidationError):
        ThresholdModel(comp_only=0.01, loss_only=1.0)


def test_reported_alpha():
    """Tests the amplitude quoted with and without the Bell-source penalty"""
    assert reported_alpha(9.65) == pytest.approx(13.647, abs=1e-3)
    assert reported_alpha(9.65, penalty=False) == 9.65


def test_tradeoff_curve(scan):
    """Tests the greedy prefixes of a small-amplitude scan"""
    curve = tradeoff_curve(2.0, table=scan)
    assert len(curve) == len(scan)
    assert curve[0].set_size == 1 and curve[-1].set_size == len(scan)
    er_loss = np.array([point.er_loss for point in curve])
    f_av = np.array([point.f_av for point in curve])
    assert np.all(np.diff(er_loss) <= 1e-15)
    assert np.all(np.diff(f_av) <= 1e-12)
    assert curve[-1].er_loss == pytest.approx(0.0, abs=1e-6)
    assert curve[0].er_comp <= curve[-1].er_comp
    assert all(0.0 <= point.er_comp <= 0.75 for point in curve)


def test_tradeoff_curve_max_points(scan):
    """Tests thinning the curve to a fixed number of prefixes"""
    curve = tradeoff_curve(2.0, table=scan, max_points=5)
    assert 2 <= len(curve) <= 5
    assert curve[0].set_size == 1
    assert curve[-1].set_size == len(scan)


def test_tradeoff_curve_empty_scan(scan):
    """Tests a scan without records"""
    with pytest.raises(EmptyScanError):
        tradeoff_curve(2.0, table=scan.subset(np.zeros(len(scan), dtype=bool)))


def test_curve_crosses(scan, generous, strict):
    """Tests a threshold the full acceptance set reaches and one nothing reaches"""
    assert curve_crosses(generous, scan)
    assert not curve_crosses(strict, scan)


def test_find_crossing_alpha(generous, strict):
    """Tests a crossing at the bottom of the grid and a grid that never crosses"""
    assert find_crossing_alpha(generous, [2.5, 2.0]) == 2.0
    with pytest.raises(NoCrossingError, match="strict"):
        find_crossing_alpha(strict, [2.0, 2.5])


def test_default_alpha_grid():
    """Tests that the default grid reaches logical 14 in half steps so both threshold crossings are bracketed"""
    assert DEFAULT_ALPHA_GRID[0] == 5.0
    assert DEFAULT_ALPHA_GRID[-1] == 14.0
    np.testing.assert_allclose(np.diff(DEFAULT_ALPHA_GRID), 0.5)


def test_ballistic_alpha_for():
    """Tests that the bisected amplitude reproduces the target ER"""
    alpha = ballistic_alpha_for(0.05)
    assert 2.0 < alpha < 60.0
    assert ballistic_er(TWO_QUBIT_GRAPH, alpha) == pytest.approx(0.05, abs=1e-4)


def test_photon_accounting(barrett):
    """Tests the photon bookkeeping around a given crossing"""
    row = photon_accounting(barrett, crossing=5.0)
    assert row.logical_alpha == 5.0
    assert row.teleport_alpha == pytest.approx(5.0 * np.sqrt(2.0))
    assert row.photons_teleport == pytest.approx(12.5)
    assert row.photons_teleport_alt == pytest.approx(50.0)
    assert row.photons_ballistic == pytest.approx((row.ballistic_alpha / 2.0) ** 2)
    assert row.photon_reduction == pytest.approx(row.photons_ballistic - row.photons_teleport)
    assert ballistic_er(TWO_QUBIT_GRAPH, row.ballistic_alpha) == pytest.approx(0.0063, abs=1e-5)
    assert row.er_comp_at_teleport_alpha == pytest.approx(ballistic_er(TWO_QUBIT_GRAPH, row.teleport_alpha))


def test_photon_accounting_without_penalty(barrett):
    """Tests that the logical amplitude is quoted when the penalty is off"""
    row = photon_accounting(barrett, penalty=False, crossing=5.0)
    assert not row.penalty
    assert row.teleport_alpha == 5.0
    assert row.photons_teleport == pytest.approx(6.25)


def test_summary_table(barrett):
    """Tests the JSON-ready rows"""
    rows = summary_table([barrett], crossings={"barrett": 5.0})
    assert len(rows) == 1
    assert rows[0]["model"] == "barrett"
    assert rows[0]["logical_alpha"] == 5.0
    assert {"ballistic_alpha", "teleport_alpha", "photon_reduction"} <= set(rows[0])


@pytest.mark.slow
@pytest.mark.parametrize("model_name, comp_only, ballistic", [("barrett", 0.0063, 13.96), ("optimistic", 0.01, 11.07)])
def test_ballistic_equivalent_alpha(model_name, comp_only, ballistic):
    """Tests the ballistic amplitude each threshold model asks for"""
    model = CatClusterModel(model_name).create_model()
    assert model.comp_only == comp_only
    assert ballistic_alpha_for(model.comp_only) == pytest.approx(ballistic, abs=0.1)


@pytest.mark.slow
@pytest.mark.parametrize(
    "model_name, teleport, er_comp, reduction, no_penalty_reduction",
    [("barrett", 13.65, 0.0066, 2.16, 25.44), ("optimistic", 10.69, 0.0107, 2.06, 16.35)],
)
def test_threshold_crossings(model_name, teleport, er_comp, reduction, no_penalty_reduction):
    """Tests the teleported amplitudes at the threshold and their photon savings"""
    model = CatClusterModel(model_name).create_model()
    row = photon_accounting(model)
    assert row.teleport_alpha == pytest.approx(teleport, abs=0.2)
    assert row.er_comp_at_teleport_alpha == pytest.approx(er_comp, abs=0.001)
    assert row.photon_reduction == pytest.approx(reduction, abs=0.3)
    logical = photon_accounting(model, penalty=False, crossing=row.logical_alpha)
    assert logical.photon_reduction == pytest.approx(no_penalty_reduction, abs=0.5)
