"""Smoke tests for the Python module."""

import os
import pathlib

import pytest

import evkg

DATA = pathlib.Path(os.environ.get("EVKG_TEST_DATA_DIR",
                                   pathlib.Path(__file__).resolve().parents[1] / "data"))

HUNGRY = (
    "1\ti\t_\tPRON\t_\t_\t3\tnsubj\t_\t_\n"
    "2\tam\t_\tAUX\t_\t_\t3\tcop\t_\t_\n"
    "3\thungry\t_\tADJ\t_\t_\t0\troot\t_\t_\n"
    "4\t,\t_\tPUNCT\t_\t_\t7\tpunct\t_\t_\n"
    "5\tso\t_\tADV\t_\t_\t7\tadvmod\t_\t_\n"
    "6\ti\t_\tPRON\t_\t_\t7\tnsubj\t_\t_\n"
    "7\thave\t_\tVERB\t_\t_\t3\tconj\t_\t_\n"
    "8\tlunch\t_\tNOUN\t_\t_\t7\tdobj\t_\t_\n\n"
)


def test_versions():
    assert evkg.__version__
    assert evkg.PATTERN_SET_VERSION.startswith("builtin-14")


def test_extract_and_seed():
    [events] = evkg.extract(HUNGRY)
    assert [e["pattern"] for e in events] == ["s-be-a", "s-v-o"]
    assert events[1]["words"] == ["i", "have", "lunch"]
    [pair] = evkg.seed(HUNGRY)
    assert pair["labels"] == ["Result"]


def test_patterns_fixture():
    text = (DATA / "patterns.conllu").read_text()
    codes = [e["pattern"] for sent in evkg.extract(text) for e in sent]
    assert len(codes) == 14
    assert len(set(codes)) == 14


def test_malformed_input_raises():
    with pytest.raises(ValueError):
        evkg.extract("1\ti\t_\tPRON\t_\t_\tx\tnsubj\t_\t_\n\n")


def test_anneal_threshold():
    assert evkg.anneal_threshold(0.5, 5, 10) == 0.75
    with pytest.raises(ValueError):
        evkg.anneal_threshold(1.5, 5, 10)


def test_graph_round_trip_and_query(tmp_path):
    g = evkg.KnowledgeGraph.load(DATA / "corrupt" / "valid")
    assert g.num_eventualities > 0
    g.save(tmp_path / "kg")
    back = evkg.KnowledgeGraph.load(tmp_path / "kg")
    assert back.num_edges == g.num_edges
    with pytest.raises(ValueError):
        evkg.KnowledgeGraph.load(DATA / "corrupt" / "bad_weight")
    with pytest.raises(KeyError):
        evkg.retrieve(g, "no such|", ["Result"])
    code, doc = evkg.query(g, "tails", "nobody at all", ["Result"])
    assert code == 3
    assert doc["error"]
