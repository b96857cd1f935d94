"""Paths, cycles, strong products and strong bundles of cycles over cycles.

Vertices are flat integers.  Product and bundle graphs also carry
``coords``: vertex ``i * n + j`` sits at coordinate ``(i, j)``, where
``i`` indexes the base and ``j`` the fiber.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph stored as sorted adjacency tuples."""

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    coords: tuple[tuple[int, int], ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        if len(self.adjacency) != self.vertex_count:
            raise ValueError("adjacency must list every vertex")
        if self.coords is not None and len(self.coords) != self.vertex_count:
            raise ValueError("coords must name every vertex")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbors of {v} must be sorted and distinct")
            for u in nbrs:
                if not 0 <= u < self.vertex_count:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if v not in self.adjacency[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        coords: Sequence[tuple[int, int]] | None = None,
    ) -> "Graph":
        """Build a graph from an edge list; duplicates collapse, loops are rejected."""
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(
            vertex_count,
            tuple(tuple(sorted(s)) for s in nbrs),
            None if coords is None else tuple((int(i), int(j)) for i, j in coords),
        )

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def index(self, i: int, j: int) -> int:
        if self.coords is None:
            raise ValueError("graph has no coordinates")
        return self.coords.index((i, j))

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        data: dict = {"vertex_count": self.vertex_count, "edges": [list(e) for e in self.edges()]}
        if self.coords is not None:
            data["coords"] = [list(c) for c in self.coords]
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        try:
            n = int(data["vertex_count"])
            edges = [(int(u), int(v)) for u, v in data["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from exc
        coords = data.get("coords")
        return cls.from_edges(n, edges, None if coords is None else [tuple(c) for c in coords])

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.vertex_count):
            label = f"{self.coords[v][0]},{self.coords[v][1]}" if self.coords else str(v)
            lines.append(f'  {v} [label="{label}"];')
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def strong_product(g: Graph, h: Graph) -> Graph:
    """Return ``g ⊠ h``; vertex ``(a, b)`` gets flat index ``a * |h| + b``."""
    if g.vertex_count == 0 or h.vertex_count == 0:
        raise ValueError("strong product needs nonempty factors")
    nh = h.vertex_count
    edges = []
    for a in range(g.vertex_count):
        a_closed = (a,) + g.adjacency[a]
        for b in range(nh):
            b_closed = (b,) + h.adjacency[b]
            for a2 in a_closed:
                for b2 in b_closed:
                    if (a2, b2) != (a, b):
                        edges.append((a * nh + b, a2 * nh + b2))
    coords = [(a, b) for a in range(g.vertex_count) for b in range(nh)]
    return Graph.from_edges(g.vertex_count * nh, edges, coords)


@dataclass(frozen=True)
class CyclicShift:
    shift: int

    def images(self, n: int) -> tuple[int, ...]:
        return tuple((j + self.shift) % n for j in range(n))


@dataclass(frozen=True)
class ExplicitPermutation:
    perm: tuple[int, ...]

    def images(self, n: int) -> tuple[int, ...]:
        return self.perm


Automorphism = Union[CyclicShift, ExplicitPermutation]


@dataclass(frozen=True)
class BundleSpec:
    """``C_m ⊠^σ C_n``: base cycle of length m, fiber cycle of length n.

    The automorphism twists only the edges from fiber ``m-1`` back to fiber 0.
    A cyclic shift is stored reduced modulo ``n``.
    """

    m: int
    n: int
    automorphism: Automorphism = CyclicShift(0)

    def __post_init__(self) -> None:
        if self.m < 3 or self.n < 3:
            raise ValueError(f"cycle lengths must be >= 3, got m={self.m}, n={self.n}")
        aut = self.automorphism
        if isinstance(aut, CyclicShift):
            object.__setattr__(self, "automorphism", CyclicShift(aut.shift % self.n))
        elif isinstance(aut, ExplicitPermutation):
            perm = tuple(int(x) for x in aut.perm)
            if sorted(perm) != list(range(self.n)):
                raise ValueError("permutation must be a bijection on 0..n-1")
            n = self.n
            for j in range(n):
                if (perm[(j + 1) % n] - perm[j]) % n not in (1, n - 1):
                    raise ValueError("permutation is not an automorphism of the fiber cycle")
            object.__setattr__(self, "automorphism", ExplicitPermutation(perm))
        else:
            raise TypeError(f"unsupported automorphism {aut!r}")

    @classmethod
    def shifted(cls, m: int, n: int, shift: int) -> "BundleSpec":
        return cls(m, n, CyclicShift(shift))

    @property
    def shift(self) -> int | None:
        aut = self.automorphism
        return aut.shift if isinstance(aut, CyclicShift) else None


def make_bundle(spec: BundleSpec) -> Graph:
    m, n = spec.m, spec.n
    sigma = spec.automorphism.images(n)

    def idx(i: int, j: int) -> int:
        return i * n + j

    edges = []
    for i in range(m):
        for j in range(n):
            edges.append((idx(i, j), idx(i, (j + 1) % n)))
            for dj in (-1, 0, 1):
                if i < m - 1:
                    edges.append((idx(i, j), idx(i + 1, (j + dj) % n)))
                else:
                    edges.append((idx(i, j), idx(0, sigma[(j + dj) % n])))
    coords = [(i, j) for i in range(m) for j in range(n)]
    return Graph.from_edges(m * n, edges, coords)


def distance2_pairs(g: Graph) -> frozenset[tuple[int, int]]:
    """Unordered pairs ``(u, v)``, ``u < v``, at shortest-path distance exactly 2."""
    pairs = set()
    for u in range(g.vertex_count):
        near = set(g.adjacency[u])
        for v in g.adjacency[u]:
            for w in g.adjacency[v]:
                if w > u and w not in near:
                    pairs.add((u, w))
    return frozenset(pairs)


def is_isomorphic_edge_set(g1: Graph, g2: Graph) -> bool:
    """Edge-set equality under the identity vertex map (not general isomorphism)."""
    if g1.vertex_count != g2.vertex_count:
        raise ValueError("graphs must have the same vertex count")
    return g1.adjacency == g2.adjacency
