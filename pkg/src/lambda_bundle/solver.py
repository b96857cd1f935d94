"""Exact λ-numbers by backtracking, the Δ+2 lower bound, and theorem certificates."""

from __future__ import annotations

import json
import os
import random
import time
from dataclasses import dataclass
from enum import Enum

from lambda_bundle.graph import BundleSpec, Graph, distance2_pairs, make_bundle
from lambda_bundle.labeling import Labeling, span, verify_l21
from lambda_bundle.theorem import FormulaParams, UnqualifiedShiftError, generate_labeling

DEFAULT_BUDGET_NODES = 10**8
DEFAULT_BUDGET_SECS = 60.0
BUDGET_ENV = "LAMBDA_BUNDLE_BUDGET_SECS"


def default_budget_secs() -> float:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET_SECS
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be a number, got {raw!r}") from None


class Justification(str, Enum):
    LEMMA1 = "lemma1"
    DEGREE = "degree"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class Bound:
    value: int
    justification: Justification


def lemma1_applies(g: Graph) -> bool:
    """True when Δ >= 2 and some Δ-vertex has two Δ-neighbors."""
    delta = g.max_degree()
    if delta < 2:
        return False
    for v in range(g.vertex_count):
        if g.degree(v) == delta:
            if sum(1 for u in g.adjacency[v] if g.degree(u) == delta) >= 2:
                return True
    return False


def lower_bound(g: Graph) -> Bound:
    delta = g.max_degree()
    if lemma1_applies(g):
        return Bound(delta + 2, Justification.LEMMA1)
    if delta > 0:
        return Bound(delta + 1, Justification.DEGREE)
    return Bound(0, Justification.TRIVIAL)


class Status(str, Enum):
    EXACT = "exact"
    TIMEOUT = "timeout"
    ABOVE_MAX_SPAN = "above_max_span"


@dataclass(frozen=True)
class SolveResult:
    """Outcome of :func:`solve_lambda`.

    ``lambda_number`` is set only when ``status`` is exact.  ``lower`` and
    ``upper`` always bracket λ; ``witness`` is a valid labeling of span
    ``upper`` (the optimum when exact, a greedy labeling otherwise).
    """

    lambda_number: int | None
    witness: Labeling
    nodes_explored: int
    status: Status
    lower: int
    upper: int


def _greedy_labeling(order, near, far, count) -> list[int]:
    labels = [-1] * count
    for v in order:
        taken = set()
        for u in near[v]:
            if labels[u] >= 0:
                taken.update((labels[u] - 1, labels[u], labels[u] + 1))
        for u in far[v]:
            if labels[u] >= 0:
                taken.add(labels[u])
        x = 0
        while x in taken:
            x += 1
        labels[v] = x
    return labels


class _Budget(Exception):
    pass


def solve_lambda(
    g: Graph,
    max_span: int | None = None,
    budget_nodes: int | None = None,
    budget_secs: float | None = None,
    seed: int | None = None,
) -> SolveResult:
    """Compute λ(g) exactly by ascending-span depth-first search.

    Spans s are tried upward from :func:`lower_bound`.  For each s the search
    labels one vertex at a time with labels 0..s, keeping for every unlabeled
    vertex the set of labels still compatible with its labeled neighbors
    (distance 1 and 2) and backtracking as soon as one of those sets empties.
    The next vertex is the one with the fewest remaining labels; ties go to
    higher degree, then lower index (or a seeded random rank when ``seed`` is
    given).  The first vertex only takes labels up to s // 2, since ``s - f``
    is valid whenever ``f`` is.
    """
    n = g.vertex_count
    if n == 0:
        raise ValueError("graph must be nonempty")
    budget_nodes = DEFAULT_BUDGET_NODES if budget_nodes is None else budget_nodes
    budget_secs = default_budget_secs() if budget_secs is None else budget_secs
    deadline = time.monotonic() + budget_secs

    rank = list(range(n))
    if seed is not None:
        random.Random(seed).shuffle(rank)
    tiebreak = [(-g.degree(v), rank[v]) for v in range(n)]
    static_order = sorted(range(n), key=tiebreak.__getitem__)
    near = g.adjacency
    far: list[list[int]] = [[] for _ in range(n)]
    for u, v in distance2_pairs(g):
        far[u].append(v)
        far[v].append(u)

    greedy = _greedy_labeling(static_order, near, far, n)
    best_upper = max(greedy)
    labels = [-1] * n
    nodes = 0

    def feasible(s: int) -> bool:
        nonlocal nodes
        full = (1 << (s + 1)) - 1
        domain = [full] * n
        domain[static_order[0]] = (1 << (s // 2 + 1)) - 1
        labels[:] = [-1] * n
        unlabeled = set(range(n))

        def place(v: int, x: int) -> tuple[bool, list[tuple[int, int]]]:
            saved = []
            mask = ~((7 << x) >> 1)
            for group in (near[v], far[v]):
                for u in group:
                    if labels[u] < 0:
                        saved.append((u, domain[u]))
                        domain[u] &= mask
                        if not domain[u]:
                            return False, saved
                mask = ~(1 << x)
            return True, saved

        def choose() -> int:
            return min(unlabeled, key=lambda v: (domain[v].bit_count(), tiebreak[v]))

        # Each frame: (vertex, remaining candidate labels, saved domains of the current placement).
        v0 = static_order[0]
        unlabeled.discard(v0)
        stack = [[v0, [x for x in range(s, -1, -1) if domain[v0] >> x & 1], None]]
        while stack:
            frame = stack[-1]
            v, options, saved = frame
            if saved is not None:
                for u, d in reversed(saved):
                    domain[u] = d
                frame[2] = None
            if not options:
                labels[v] = -1
                unlabeled.add(v)
                stack.pop()
                continue
            x = options.pop()
            labels[v] = x
            nodes += 1
            if nodes >= budget_nodes or (nodes & 0xFFF == 0 and time.monotonic() > deadline):
                raise _Budget
            ok, frame[2] = place(v, x)
            if not ok:
                continue
            if not unlabeled:
                return True
            w = choose()
            unlabeled.discard(w)
            stack.append([w, [x for x in range(s, -1, -1) if domain[w] >> x & 1], None])
        return False

    s = lower_bound(g).value
    try:
        while max_span is None or s <= max_span:
            if s >= best_upper:
                # The greedy labeling already achieves this span.
                return SolveResult(s, Labeling(greedy), nodes, Status.EXACT, s, s)
            if feasible(s):
                witness = Labeling(labels)
                assert span(witness) == s and not verify_l21(g, witness)
                return SolveResult(s, witness, nodes, Status.EXACT, s, s)
            s += 1
    except _Budget:
        return SolveResult(None, Labeling(greedy), nodes, Status.TIMEOUT, s, best_upper)
    return SolveResult(None, Labeling(greedy), nodes, Status.ABOVE_MAX_SPAN, s, best_upper)


# -- theorem certificates -------------------------------------------------


class CertificationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Certificate:
    m: int
    n: int
    shift: int
    family: str
    a: int
    upper: int
    lower: int
    witness: Labeling

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "shift": self.shift,
            "family": self.family,
            "a": self.a,
            "upper": self.upper,
            "lower": self.lower,
            "witness": list(self.witness.labels),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def certify_theorem_instance(m: int, n: int, shift: int) -> Certificate:
    """Certify λ = 10 for a qualifying bundle: a verified span-10 labeling plus the Δ+2 bound."""
    params = FormulaParams.for_instance(m, n, shift)
    g = make_bundle(BundleSpec.shifted(m, n, shift))
    f = generate_labeling(params)
    violations = verify_l21(g, f)
    if violations:
        raise CertificationError(
            f"{params.name} labeling of ({m}, {n}, {shift}) has {len(violations)} violations; "
            f"first: {violations[0]}"
        )
    upper = span(f)
    bound = lower_bound(g)
    if bound.justification is not Justification.LEMMA1 or bound.value != upper:
        raise CertificationError(f"bounds disagree: upper {upper}, lower {bound.value}")
    return Certificate(m, n, shift, params.family.value, params.a, upper, bound.value, f)


__all__ = [
    "Bound",
    "Certificate",
    "CertificationError",
    "Justification",
    "SolveResult",
    "Status",
    "UnqualifiedShiftError",
    "certify_theorem_instance",
    "default_budget_secs",
    "lemma1_applies",
    "lower_bound",
    "solve_lambda",
]
