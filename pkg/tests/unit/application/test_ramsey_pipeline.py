from __future__ import annotations

import pytest

from application.services import validate_embedding
from application.usecases import STAGES, PipelineRequest, RamseyPipeline, best_rooting
from application.usecases.ramsey_pipeline import carrier_distance_limit, survivors_suffice
from domain.models import (
    BlockColouring,
    Colour,
    ConstantColouring,
    EdgeColouring,
    Graph,
    PartitionedHost,
    RootedTree,
    StepFailure,
    Witness,
)
from domain.services import graph_power, strong_product
from domain.value_objects import RngSeed, SearchBudget


def _host(base: Graph, clique_size: int) -> PartitionedHost:
    power = graph_power(base, 3)
    return PartitionedHost.from_cliques(strong_product(power, clique_size), base, power, clique_size)


def _path_tree(n: int) -> RootedTree:
    return RootedTree(root=0, parent=tuple(max(0, v - 1) for v in range(n)))


def _request(
    host: PartitionedHost,
    colouring: EdgeColouring,
    tree: RootedTree,
    *,
    k: int,
    d: int,
    t: int,
) -> PipelineRequest:
    return PipelineRequest(
        host=host,
        colouring=colouring,
        tree1=tree,
        tree2=tree,
        k=k,
        d=d,
        t=t,
        seed=RngSeed(7),
        budget=SearchBudget(node_budget=10**6, subset_budget=10**6, kss_budget=10**6),
    )


def _assert_valid(outcome: Witness, host: PartitionedHost, colouring: EdgeColouring) -> None:
    pattern = strong_product(outcome.tree.to_graph(), outcome.k)
    report = validate_embedding(pattern, host.graph, outcome.embedding, (colouring, outcome.colour))
    assert report.ok


def test_all_blue_host_yields_blue_witness() -> None:
    host = _host(Graph.cycle(5), 4)
    colouring = ConstantColouring(host.graph, Colour.BLUE)

    outcome = RamseyPipeline().execute(_request(host, colouring, _path_tree(2), k=2, d=1, t=4))

    assert isinstance(outcome, Witness)
    assert outcome.colour is Colour.BLUE
    assert outcome.embedding.size == 4
    _assert_valid(outcome, host, colouring)
    stages = [stage.stage for stage in outcome.step_log]
    assert stages[0] == "preconditions"
    assert stages[-1] == "validation"
    assert "chopping" in stages
    assert all(stage.status == "ok" for stage in outcome.step_log)
    assert set(stages) <= set(STAGES)


def test_blue_cliques_with_red_cross_edges_lift_red_copy() -> None:
    host = _host(Graph.complete(120), 2)
    colouring = BlockColouring(host.graph, 2, Colour.BLUE)
    tree = _path_tree(3)

    outcome = RamseyPipeline().execute(_request(host, colouring, tree, k=1, d=2, t=2))

    assert isinstance(outcome, Witness), outcome
    assert outcome.colour is Colour.RED
    _assert_valid(outcome, host, colouring)
    stages = {stage.stage: stage for stage in outcome.step_log}
    assert stages["truncated-tree-embedding"].detail["found"] is False
    assert stages["dichotomy"].detail["part_sizes"] == [8, 8, 8]
    assert stages["distance-check"].detail["max_inner_distance"] == 0
    assert 1 <= stages["distance-check"].detail["max_cross_distance"] <= 3
    assert "lift" in stages


def test_small_host_reports_dichotomy_precondition_failure() -> None:
    host = _host(Graph.complete(10), 2)
    colouring = BlockColouring(host.graph, 2, Colour.BLUE)

    outcome = RamseyPipeline().execute(_request(host, colouring, _path_tree(3), k=1, d=2, t=2))

    assert isinstance(outcome, StepFailure)
    assert outcome.stage == "dichotomy-precondition"
    assert outcome.diagnostics["required"] == 120
    assert outcome.step_log[-1].status == "failed"
    assert outcome.to_dict()["outcome"] == "step-failure"


def test_degree_above_bound_fails_preconditions() -> None:
    host = _host(Graph.cycle(5), 2)
    colouring = ConstantColouring(host.graph, Colour.RED)
    star = RootedTree(root=0, parent=(0, 0, 0, 0))

    outcome = RamseyPipeline().execute(_request(host, colouring, star, k=1, d=2, t=2))

    assert isinstance(outcome, StepFailure)
    assert outcome.stage == "preconditions"
    assert outcome.diagnostics["error"] == "PreconditionError"


def test_clique_size_below_t_fails_preconditions() -> None:
    host = _host(Graph.cycle(5), 2)
    colouring = ConstantColouring(host.graph, Colour.RED)

    outcome = RamseyPipeline().execute(_request(host, colouring, _path_tree(2), k=1, d=1, t=3))

    assert isinstance(outcome, StepFailure)
    assert outcome.diagnostics["error"] == "ParameterError"


def test_stage_clock_is_injectable() -> None:
    ticks = iter(range(1000))
    host = _host(Graph.cycle(5), 2)
    colouring = ConstantColouring(host.graph, Colour.RED)

    outcome = RamseyPipeline(clock=lambda: float(next(ticks))).execute(
        _request(host, colouring, _path_tree(2), k=1, d=1, t=2)
    )

    assert isinstance(outcome, Witness)
    assert outcome.colour is Colour.RED


def test_best_rooting_prefers_small_truncation() -> None:
    rooted, truncated, origin = best_rooting(_path_tree(3))

    assert rooted.root == 0
    assert truncated.n == 2
    assert origin == (0, 1)


@pytest.mark.parametrize(
    ("survivors", "first_layer", "k", "expected"),
    [(1, 4, 1, False), (2, 4, 1, True), (1, 16, 2, False), (1, 15, 2, True), (0, 1, 1, False)],
)
def test_survivor_share_must_strictly_exceed_bound(
    survivors: int, first_layer: int, k: int, expected: bool
) -> None:
    assert survivors_suffice(survivors, first_layer, k) is expected


@pytest.mark.parametrize(
    ("a", "b", "k", "expected"),
    [(0, 1, 2, 2), (2, 3, 2, 2), (0, 2, 2, 3), (1, 4, 2, 3), (0, 1, 1, 3), (3, 5, 3, 2)],
)
def test_carrier_distance_limit_is_tighter_inside_one_tree_vertex(
    a: int, b: int, k: int, expected: int
) -> None:
    assert carrier_distance_limit(a, b, k) == expected
