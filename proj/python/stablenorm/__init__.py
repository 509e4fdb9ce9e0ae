"""Exact stable-norm unit balls of weighted multigraphs.

Rationals are exchanged with the C++ core as "p/q" strings and surfaced here
as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from stablenorm import _core
from stablenorm._core import Graph, StableNormError

__all__ = [
    "Graph",
    "StableNormError",
    "circuits",
    "stable_ball",
    "stable_norm",
    "chain_from_coords",
    "dual_norm",
    "decompose",
    "merge_circuits",
    "verify_vertices",
    "oracle_ball",
    "norm_by_infimum",
    "export_plot",
]


def _encode(values: Iterable) -> list[str]:
    return [str(Fraction(v)) for v in values]


def _decode(values: Iterable[str]) -> list[Fraction]:
    return [Fraction(v) for v in values]


def circuits(graph: Graph, max_circuits: int = 1_000_000) -> list[tuple[str, Fraction]]:
    return [(steps, Fraction(length)) for steps, length in _core.circuits(graph, max_circuits)]


def stable_ball(graph: Graph) -> dict:
    doc = json.loads(_core.ball_json(graph))
    for v in doc["vertices"]:
        v["basis"] = _decode(v["basis"])
        v["chain"] = _decode(v["chain"])
        v["length"] = Fraction(v["length"])
    return doc


def stable_norm(graph: Graph, coords: Sequence) -> Fraction:
    return Fraction(_core.stable_norm(graph, _encode(coords)))


def chain_from_coords(graph: Graph, coords: Sequence) -> list[Fraction]:
    return _decode(_core.chain_from_coords(graph, _encode(coords)))


def dual_norm(graph: Graph, xi: Sequence) -> Fraction:
    return Fraction(_core.dual_norm(graph, _encode(xi)))


def decompose(graph: Graph, coords: Sequence[int]) -> list[tuple[str, Fraction, int]]:
    return [(c, Fraction(length), m) for c, length, m in _core.decompose(graph, _encode(coords))]


def merge_circuits(graph: Graph, first: str, second: str) -> list[str]:
    return _core.merge_circuits(graph, first, second)


def verify_vertices(graph: Graph) -> bool:
    return _core.verify_vertices(graph)


def oracle_ball(graph: Graph, max_edges: int = 12) -> list[list[Fraction]]:
    return [_decode(p) for p in _core.oracle_ball(graph, max_edges)]


def norm_by_infimum(graph: Graph, coords: Sequence) -> Fraction:
    return Fraction(_core.norm_by_infimum(graph, _encode(coords)))


def export_plot(graph: Graph) -> str:
    return _core.export_plot(graph)
