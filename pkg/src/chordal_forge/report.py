"""Extraction report types shared by the exact and asymptotic extractors."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .chordality import ChordalSubgraph

SCHEMA_VERSION = 1


class InternalInvariantError(RuntimeError):
    """A proof-guaranteed condition failed: transcription bug, not user error."""


class ExtractionInputError(ValueError):
    """Input outside an extraction algorithm's stated precondition."""


def invariant(cond: bool, msg: str) -> None:
    if not cond:
        raise InternalInvariantError(msg)


@dataclass(frozen=True)
class TraceStep:
    label: str
    deleted: tuple[int, ...] = ()
    added: tuple[tuple[int, int], ...] = ()
    removed: tuple[tuple[int, int], ...] = ()

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "deleted": list(self.deleted),
            "added": [list(e) for e in self.added],
            "removed": [list(e) for e in self.removed],
        }


def lift_trace(steps: list[TraceStep], vmap: list[int]) -> list[TraceStep]:
    """Translate trace vertex ids through an induced-subgraph map."""
    out = []
    for s in steps:
        out.append(TraceStep(
            s.label,
            tuple(vmap[v] for v in s.deleted),
            tuple(norm_edge(vmap[u], vmap[v]) for u, v in s.added),
            tuple(norm_edge(vmap[u], vmap[v]) for u, v in s.removed),
        ))
    return out


def norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass
class ExtractionReport:
    algorithm: str
    n: int
    m: int
    anchor: Optional[tuple[int, ...]]
    subgraph: ChordalSubgraph
    achieved: int
    guarantee: int
    trace: tuple[TraceStep, ...]
    elapsed_s: float = 0.0
    meta: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "algorithm": self.algorithm,
            "n": self.n,
            "m": self.m,
            "anchor": list(self.anchor) if self.anchor is not None else None,
            "achieved": self.achieved,
            "guarantee": self.guarantee,
            "edges": [list(e) for e in self.subgraph.edges],
            "certificate": [
                {"op": "add", "v": op[1], "clique": list(op[2])} if op[0] == "add"
                else {"op": "drop", "u": op[1], "v": op[2]}
                for op in self.subgraph.cert
            ],
            "trace": [s.to_json() for s in self.trace],
            "meta": self.meta,
            "elapsed_s": self.elapsed_s,
        }


def report_from_json(data: dict) -> ExtractionReport:
    cert = []
    for op in data["certificate"]:
        if op["op"] == "add":
            cert.append(("add", op["v"], tuple(op["clique"])))
        else:
            cert.append(("drop", op["u"], op["v"]))
    sub = ChordalSubgraph(
        data["n"],
        tuple(tuple(e) for e in data["edges"]),
        tuple(cert),
    )
    trace = tuple(
        TraceStep(s["label"], tuple(s["deleted"]),
                  tuple(tuple(e) for e in s["added"]),
                  tuple(tuple(e) for e in s.get("removed", [])))
        for s in data["trace"])
    return ExtractionReport(
        algorithm=data["algorithm"], n=data["n"], m=data["m"],
        anchor=tuple(data["anchor"]) if data["anchor"] is not None else None,
        subgraph=sub, achieved=data["achieved"], guarantee=data["guarantee"],
        trace=trace, elapsed_s=data.get("elapsed_s", 0.0),
        meta=data.get("meta", {}))
