import pytest

from dist3.classifier import classify
from dist3.fixtures import fixture, fixtures
from dist3.graph import Graph
from dist3.oracle import oracle_d3_connected
from dist3.structure import build_template, detect_shape


def test_catalog_size_and_ids():
    ids = [fx.id for fx in fixtures()]
    assert len(ids) >= 13 and len(ids) == len(set(ids))
    assert sum(i.startswith("P5_") for i in ids) == 7
    assert sum(i.startswith("P6_") for i in ids) == 2


def test_g1_expected():
    assert fixture("G1").expected_d3_connected
    assert fixture("G1").graph == build_template("G1").graph


def test_first_pentagon_figure():
    # 5-cycle with pendant 2-paths at two non-adjacent cycle vertices
    g = fixture("P5_1").graph
    assert g == Graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (5, 6), (2, 7), (7, 8)])
    assert fixture("P5_1").expected_d3_connected


def test_unknown_fixture():
    with pytest.raises(KeyError):
        fixture("nope")


@pytest.mark.parametrize("fx", fixtures(), ids=lambda fx: fx.id)
def test_fixture_oracle_and_classifier(fx):
    assert oracle_d3_connected(fx.graph)[0] == fx.expected_d3_connected
    assert classify(fx.graph).connected == fx.expected_d3_connected
    assert detect_shape(fx.graph).kind in ("tree", "unicyclic")
