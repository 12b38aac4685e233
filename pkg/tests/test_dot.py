import re

from flockdukes.dot import to_dot
from flockdukes.dukes import duke_profile
from flockdukes.fixtures import FixtureName, fixture


def _counts(text):
    clusters = len(re.findall(r"subgraph cluster_\d+", text))
    nodes = len(re.findall(r"^\s+c\d+ \[label=", text, re.M))
    edges = len(re.findall(r"c\d+ -> c\d+;", text))
    return clusters, nodes, edges


def test_fig6_structure():
    assert _counts(to_dot(fixture(FixtureName.FIG6))) == (2, 4, 3)


def test_fig1_structure():
    assert _counts(to_dot(fixture(FixtureName.FIG1))) == (5, 5, 10)


def test_clusters_are_shaded():
    text = to_dot(fixture(FixtureName.FIG6))
    assert text.startswith("digraph ") and text.endswith("}\n")
    assert text.count("style=filled; color=lightgrey") == 2


def test_annotated_fig8_labels():
    g = fixture(FixtureName.FIG8)
    text = to_dot(g, duke_profile(g, 4))
    labels = re.findall(r'c\d+ \[label="([^"]*)"', text)
    assert sorted(labels) == ["-", "2", "2", "2"]


def test_unannotated_labels_are_ids():
    labels = re.findall(r'c\d+ \[label="([^"]*)"', to_dot(fixture(FixtureName.FIG7)))
    assert labels == [str(c) for c in range(6)]
