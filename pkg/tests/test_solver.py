import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from conftest import complete_graph
from lambda_bundle.graph import BundleSpec, Graph, distance2_pairs, make_bundle, make_cycle, make_path, strong_product
from lambda_bundle.labeling import Labeling, span, verify_l21
from lambda_bundle.solver import (
    BUDGET_ENV,
    CertificationError,
    Justification,
    Status,
    certify_theorem_instance,
    default_budget_secs,
    lemma1_applies,
    lower_bound,
    solve_lambda,
)
from lambda_bundle.theorem import UnqualifiedShiftError


def brute_force_lambda(g):
    """Smallest s admitting a labeling in 0..s, by trying every assignment."""
    n = g.vertex_count
    near = list(g.edges())
    far = list(distance2_pairs(g))
    s = 0
    while True:
        for f in itertools.product(range(s + 1), repeat=n):
            if all(abs(f[u] - f[v]) >= 2 for u, v in near) and all(f[u] != f[v] for u, v in far):
                return s
        s += 1


def star(k):
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def test_lemma1_cycle():
    assert lemma1_applies(make_cycle(5))


def test_lemma1_star():
    assert not lemma1_applies(star(3))


def test_lemma1_bundle():
    assert lemma1_applies(make_bundle(BundleSpec.shifted(4, 11, 7)))


def test_lower_bounds():
    assert lower_bound(make_bundle(BundleSpec.shifted(13, 11, 3))).value == 10
    assert lower_bound(make_path(2)).value == 2
    empty = Graph.from_edges(5, [])
    assert lower_bound(empty).value == 0
    assert lower_bound(empty).justification is Justification.TRIVIAL
    assert lower_bound(star(3)).justification is Justification.DEGREE


@pytest.mark.parametrize(
    "g,expected",
    [
        (make_cycle(5), 4),
        (complete_graph(4), 6),
        (strong_product(make_cycle(3), make_cycle(3)), 16),
        (make_path(1), 0),
        (make_path(2), 2),
        (make_path(3), 3),
        (make_path(4), 3),
        (make_path(5), 4),
        (star(3), 4),
    ],
    ids=["C5", "K4", "K9", "P1", "P2", "P3", "P4", "P5", "K1,3"],
)
def test_known_lambda(g, expected):
    r = solve_lambda(g)
    assert r.status is Status.EXACT
    assert r.lambda_number == expected
    assert span(r.witness) == expected
    assert verify_l21(g, r.witness) == []
    assert verify_l21(g, r.witness.reflected(expected)) == []


@pytest.mark.parametrize("n", range(3, 11))
def test_cycles_two_orders_agree(n):
    g = make_cycle(n)
    assert solve_lambda(g).lambda_number == 4
    assert solve_lambda(g, seed=n).lambda_number == 4


@pytest.mark.parametrize("n,expected", [(2, 2), (3, 3), (4, 3), (5, 4)])
def test_paths_two_orders_agree(n, expected):
    g = make_path(n)
    assert solve_lambda(g).lambda_number == expected
    assert solve_lambda(g, seed=11 * n).lambda_number == expected


def test_unqualified_instance_needs_more_than_ten():
    # Outside the closed-form family the search proves span 10 infeasible.
    r = solve_lambda(make_bundle(BundleSpec.shifted(4, 11, 4)), max_span=10)
    assert r.status is Status.ABOVE_MAX_SPAN
    assert r.lower == 11


@pytest.mark.parametrize("ell", [1, 2, 9, 10])
def test_qualifying_small_base_instances(ell):
    g = make_bundle(BundleSpec.shifted(3, 11, ell))
    r = solve_lambda(g, budget_secs=60)
    assert r.status is Status.EXACT and r.lambda_number == 10
    assert verify_l21(g, r.witness) == []
    assert verify_l21(g, r.witness.reflected(10)) == []


def test_timeout_reports_bracket():
    g = make_bundle(BundleSpec.shifted(13, 11, 3))
    r = solve_lambda(g, budget_nodes=5)
    assert r.status is Status.TIMEOUT
    assert r.lambda_number is None
    assert r.lower == 10
    assert r.upper >= 10
    assert verify_l21(g, r.witness) == [] and span(r.witness) == r.upper


def test_max_span_cutoff():
    r = solve_lambda(complete_graph(5), max_span=6)
    assert r.status is Status.ABOVE_MAX_SPAN
    assert r.lower == 7 and r.upper == 8


def test_deterministic_node_counts():
    g = make_bundle(BundleSpec.shifted(3, 11, 1))
    assert solve_lambda(g).nodes_explored == solve_lambda(g).nodes_explored


def test_empty_graph_rejected():
    with pytest.raises(ValueError):
        solve_lambda(Graph.from_edges(0, []))


def test_budget_env(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "2.5")
    assert default_budget_secs() == 2.5
    monkeypatch.setenv(BUDGET_ENV, "soon")
    with pytest.raises(ValueError):
        default_budget_secs()


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 5))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_matches_brute_force(g):
    r = solve_lambda(g)
    assert r.lambda_number == brute_force_lambda(g)
    assert r.lambda_number >= lower_bound(g).value
    assert verify_l21(g, r.witness) == []
    assert verify_l21(g, r.witness.reflected(r.lambda_number)) == []


@settings(max_examples=25, deadline=None)
@given(small_graphs(), st.integers(0, 1000))
def test_random_order_agrees(g, seed):
    assert solve_lambda(g, seed=seed).lambda_number == solve_lambda(g).lambda_number


class TestCertificate:
    def test_showcase_instance(self):
        cert = certify_theorem_instance(13, 11, 3)
        assert (cert.upper, cert.lower, cert.family, cert.a) == (10, 10, "F", 1)

    def test_small_base(self):
        cert = certify_theorem_instance(3, 11, 10)
        data = json.loads(cert.to_json())
        assert set(data) == {"m", "n", "shift", "family", "a", "upper", "lower", "witness"}
        assert data["upper"] == data["lower"] == 10
        assert len(data["witness"]) == 33

    def test_unqualified(self):
        with pytest.raises(UnqualifiedShiftError):
            certify_theorem_instance(13, 11, 7)

    def test_verification_failure_is_loud(self, monkeypatch):
        import lambda_bundle.solver as solver

        monkeypatch.setattr(solver, "generate_labeling", lambda params: Labeling([0] * 143))
        with pytest.raises(CertificationError):
            certify_theorem_instance(13, 11, 3)
