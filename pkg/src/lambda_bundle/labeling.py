"""Labelings and the L(2,1) check."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from lambda_bundle.graph import Graph, distance2_pairs


@dataclass(frozen=True)
class Labeling:
    labels: tuple[int, ...]

    def __init__(self, labels: Sequence[int]):
        values = tuple(int(x) for x in labels)
        if any(x < 0 for x in values):
            raise ValueError("labels must be nonnegative")
        object.__setattr__(self, "labels", values)

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def shifted(self, c: int) -> "Labeling":
        return Labeling([x + c for x in self.labels])

    def reflected(self, s: int) -> "Labeling":
        """Return ``s - f``, which is valid whenever ``f`` is valid with span ``s``."""
        return Labeling([s - x for x in self.labels])

    def to_json(self) -> str:
        return json.dumps({"labels": list(self.labels)})

    @classmethod
    def from_json(cls, text: str) -> "Labeling":
        data = json.loads(text)
        try:
            return cls(data["labels"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed labeling JSON: {exc}") from exc


class ViolationKind(str, Enum):
    ADJACENT_GAP = "adjacent-gap"
    DISTANCE2_EQUAL = "distance2-equal"


@dataclass(frozen=True, order=True)
class Violation:
    pair: tuple[int, int]
    kind: ViolationKind
    labels: tuple[int, int]


def verify_l21(g: Graph, f: Labeling) -> list[Violation]:
    """Return every pair breaking the L(2,1) conditions, sorted by pair.

    Adjacent vertices need labels at least 2 apart; vertices at distance 2
    need distinct labels.  An empty list means ``f`` is an L(2,1)-labeling.
    """
    if len(f) != g.vertex_count:
        raise ValueError(f"labeling covers {len(f)} vertices, graph has {g.vertex_count}")
    out = []
    for u, v in g.edges():
        if abs(f[u] - f[v]) < 2:
            out.append(Violation((u, v), ViolationKind.ADJACENT_GAP, (f[u], f[v])))
    for u, v in distance2_pairs(g):
        if f[u] == f[v]:
            out.append(Violation((u, v), ViolationKind.DISTANCE2_EQUAL, (f[u], f[v])))
    out.sort()
    return out


def span(f: Labeling) -> int:
    if len(f) == 0:
        raise ValueError("span of an empty labeling is undefined")
    return max(f.labels) - min(f.labels)


def grid_view(f: Labeling, m: int, n: int) -> list[list[int]]:
    if len(f) != m * n:
        raise ValueError(f"labeling has {len(f)} entries, expected {m}x{n}")
    return [list(f.labels[i * n:(i + 1) * n]) for i in range(m)]


def grid_to_csv(grid: list[list[int]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(grid)
    return buf.getvalue()


def grid_from_csv(text: str) -> tuple[Labeling, int, int]:
    """Parse a grid CSV back into a flat labeling plus its ``(m, n)`` shape."""
    rows = [[int(x) for x in row] for row in csv.reader(io.StringIO(text)) if row]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("grid CSV must be a nonempty rectangle")
    return Labeling([x for r in rows for x in r]), len(rows), len(rows[0])
