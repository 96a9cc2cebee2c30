"""Eventuality knowledge graph construction and inference."""

import json

from ._core import (  # noqa: F401
    PATTERN_SET_VERSION,
    SCHEMA_VERSION,
    Error,
    InvalidArgument,
    KnowledgeGraph,
    ParseError,
    UnknownEventuality,
    __version__,
    anneal_threshold,
    extract,
    relation_distribution,
    retrieve,
    seed,
)
from ._core import query as _query


def query(graph, mode, event, relations=(), topk=10, event2=""):
    """Runs a CLI-style query; returns (exit code, parsed JSON document)."""
    code, text = _query(graph, mode, event, list(relations), topk, event2)
    return code, json.loads(text)
