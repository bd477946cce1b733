import numpy as np
import pytest

from catcluster.catcluster_graph_factory import preset_graph
from catcluster.clusters import GraphSpec, build_ballistic, build_ideal, cluster_fidelity
from catcluster.exceptions import ErInversionRangeError, InvalidOperatorPattern
from catcluster.metrics import (
    OperatorPattern,
    correlation,
    crossing_alpha,
    er_from_visibility,
    er_point,
    er_sweep,
    ideal_visibility,
    stabilizer_sign,
    visibility,
)
from catcluster.states import cat_state

ALPHA_GRID = np.arange(2.0, 22.01, 1.0)


@pytest.fixture
def two():
    """Fixture for the two-qubit preset"""
    return preset_graph("two")


@pytest.fixture
def three():
    """Fixture for the three-qubit line"""
    return preset_graph("three")


@pytest.fixture
def triangle():
    """Three qubits joined pairwise; X on all three is a stabilizer with eigenvalue -1"""
    return GraphSpec.from_edges(3, [[0, 1], [1, 2], [0, 2]], name="triangle")


def test_pattern_validation():
    """Tests labels outside I/X/Z and patterns with nothing measured"""
    assert OperatorPattern("xzi").labels == "XZI"
    with pytest.raises(InvalidOperatorPattern, match="letters"):
        OperatorPattern("XY")
    with pytest.raises(InvalidOperatorPattern, match="no measured"):
        OperatorPattern("II")


def test_pattern_properties():
    """Tests weight and measured vertex lists"""
    pattern = OperatorPattern("ZIXZ")
    assert pattern.weight == 3
    assert pattern.x_vertices == [2]
    assert pattern.z_vertices == [0, 3]
    assert str(pattern) == "ZIXZ"


def test_pattern_for_graph():
    """Tests reading short patterns as the center's local stabilizer"""
    assert OperatorPattern.for_graph("XZ", preset_graph("two")).labels == "XZ"
    assert OperatorPattern.for_graph("ZXZ", preset_graph("three")).labels == "ZXZ"
    assert OperatorPattern.for_graph("ZXZ", preset_graph("fiveLinear")).labels == "IZXZI"
    assert OperatorPattern.for_graph("ZZXZZ", preset_graph("fiveStar")).labels == "ZZXZZ"
    assert OperatorPattern.for_graph("ZZXZZ", preset_graph("seventeenStar")).labels == "XZZZZ" + "I" * 12


def test_pattern_for_graph_mismatch():
    """Tests shorthand that does not fit the center, and shorthand on a graph without one"""
    with pytest.raises(InvalidOperatorPattern):
        OperatorPattern.for_graph("XXZ", preset_graph("fiveLinear"))
    with pytest.raises(InvalidOperatorPattern):
        OperatorPattern.for_graph("ZXZ", preset_graph("fiveStar"))
    with pytest.raises(InvalidOperatorPattern, match="without a center"):
        OperatorPattern.for_graph("ZXZ", preset_graph("unitCell"))


def test_stabilizer_sign(two, three, triangle):
    """Tests generators, a product of generators and a negative eigenvalue"""
    assert stabilizer_sign(two, OperatorPattern("XZ")) == 1
    assert stabilizer_sign(two, OperatorPattern("ZX")) == 1
    assert stabilizer_sign(three, OperatorPattern("XIX")) == 1
    assert stabilizer_sign(triangle, OperatorPattern("XXX")) == -1


@pytest.mark.parametrize("labels", ["XX", "ZZ", "XI", "ZI"])
def test_stabilizer_sign_rejects_non_stabilizers(two, labels):
    """Tests patterns outside the two-qubit stabilizer group"""
    with pytest.raises(InvalidOperatorPattern, match="not an element"):
        stabilizer_sign(two, OperatorPattern(labels))


def test_stabilizer_sign_length(three):
    """Tests a pattern of the wrong length"""
    with pytest.raises(InvalidOperatorPattern):
        stabilizer_sign(three, OperatorPattern("XZ"))


@pytest.mark.parametrize("labels", ["ZXZ", "XZI", "XIX"])
def test_ideal_visibility_matches_state_evaluation(three, labels):
    """Tests the tensor contraction against the term-pair evaluation on the explicit ideal state"""
    alpha, pattern = 3.0, OperatorPattern(labels)
    direct = visibility(build_ideal(three, alpha), pattern, alpha, three)
    assert ideal_visibility(three, pattern, alpha) == pytest.approx(direct, abs=1e-10)


def test_ideal_visibility_large_alpha(two):
    """Tests that the ideal cluster becomes perfectly correlated"""
    assert ideal_visibility(two, OperatorPattern("XZ"), 10.0) > 0.999


def test_visibility_sign_from_graph(triangle):
    """Tests that a negative eigenvalue is read from the graph and matches the larger class"""
    alpha, pattern = 6.0, OperatorPattern("XXX")
    state = build_ideal(triangle, alpha)
    assert correlation(state, pattern, alpha) < 0
    assert visibility(state, pattern, alpha) == pytest.approx(visibility(state, pattern, alpha, triangle))


def test_visibility_in_range(two):
    """Tests that ballistic visibilities lie in [0, 1] and approach the ideal ones"""
    pattern = OperatorPattern("XZ")
    values = [visibility(build_ballistic(two, alpha), pattern, alpha, two) for alpha in (6.0, 10.0, 14.0)]
    assert all(0.0 <= v <= 1.0 for v in values)
    assert values[0] < values[-1]


@pytest.mark.parametrize(
    "graph_name, labels", [("two", "XZ"), ("three", "ZXZ"), ("fiveLinear", "ZXZ"), ("fiveStar", "ZZXZZ")]
)
def test_ballistic_quantities_increase_with_alpha(graph_name, labels):
    """Tests that ballistic fidelity and visibility rise strictly at every step of the alpha grid 2..22"""
    graph = preset_graph(graph_name)
    pattern = OperatorPattern.for_graph(labels, graph)
    fidelities = [cluster_fidelity(graph, alpha) for alpha in ALPHA_GRID]
    visibilities = [visibility(build_ballistic(graph, alpha), pattern, alpha, graph) for alpha in ALPHA_GRID]
    assert np.all(np.diff(fidelities) > 0)
    assert np.all(np.diff(visibilities) > 0)


def test_visibility_mode_mismatch(two):
    """Tests a pattern that does not match the state"""
    with pytest.raises(InvalidOperatorPattern):
        correlation(cat_state(3.0, 3), OperatorPattern("XZ"), 3.0)


def test_measured_qubits_only():
    """Tests that unmeasured neighbours do not change the ideal visibility at alpha = 6"""
    alpha = 6.0
    five_linear = preset_graph("fiveLinear")
    three = preset_graph("three")
    assert ideal_visibility(five_linear, OperatorPattern.for_graph("ZXZ", five_linear), alpha) == pytest.approx(
        ideal_visibility(three, OperatorPattern("ZXZ"), alpha), abs=1e-6
    )
    five_star, big_star = preset_graph("fiveStar"), preset_graph("seventeenStar")
    assert ideal_visibility(big_star, OperatorPattern.for_graph("ZZXZZ", big_star), alpha) == pytest.approx(
        ideal_visibility(five_star, OperatorPattern("ZZXZZ"), alpha), abs=1e-6
    )


def test_er_from_visibility():
    """Tests the weight-w inversion and the ratio variant"""
    pattern = OperatorPattern("ZXZ")
    p = 0.01
    attenuated = (1 - 4 * p / 3) ** 3
    assert er_from_visibility(pattern, attenuated) == pytest.approx(p, abs=1e-14)
    assert er_from_visibility(pattern, 1.0) == 0.0
    assert er_from_visibility(pattern, 0.5, reference=0.5) == 0.0
    assert er_from_visibility(pattern, 0.9 * attenuated, reference=0.9) == pytest.approx(p, abs=1e-14)
    np.testing.assert_allclose(er_from_visibility(pattern, np.array([1.0, attenuated])), [0.0, p], atol=1e-14)


@pytest.mark.parametrize("value, reference", [(0.0, None), (-0.2, None), (1.5, None), (0.5, 0.0)])
def test_er_from_visibility_range(value, reference):
    """Tests visibilities no depolarizing rate can explain"""
    with pytest.raises(ErInversionRangeError):
        er_from_visibility(OperatorPattern("XZ"), value, reference)


def test_er_point_visibility(two):
    """Tests visibility rows with and without the ratio variant"""
    pattern = OperatorPattern("XZ")
    plain = er_point(two, 10.0, "visibility", pattern)
    relative = er_point(two, 10.0, "visibility", pattern, relative=True)
    assert plain.value == relative.value
    assert plain.reference == pytest.approx(ideal_visibility(two, pattern, 10.0))
    assert relative.er <= plain.er


@pytest.mark.slow
@pytest.mark.parametrize(
    "graph_name, labels, expected, tolerance",
    [("two", "XZ", 11.7, 0.2), ("fiveLinear", "ZXZ", 15.56, 0.3), ("fiveStar", "ZZXZZ", 20.83, 0.4)],
)
def test_visibility_crossings(graph_name, labels, expected, tolerance):
    """Tests the 1% visibility ER crossings of the ballistic clusters"""
    graph = preset_graph(graph_name)
    pattern = OperatorPattern.for_graph(labels, graph)
    points = er_sweep(graph, np.arange(expected - 3.0, expected + 3.01, 0.05), "visibility", pattern)
    assert crossing_alpha(points, 0.01) == pytest.approx(expected, abs=tolerance)
