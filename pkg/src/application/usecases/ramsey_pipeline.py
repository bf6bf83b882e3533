"""
ホスト G = H³ ⊠ K_R と彩色 ψ から、赤い T₁ ⊠ K_k か青い T₂ ⊠ K_k を構成するパイプライン。

各段階は証明の 1 ステップに対応し、具体的なデータ上で保証が崩れた最初の段階を
``StepFailure`` として報告する。検証を通っていない ``Witness`` は返さない。
"""

from __future__ import annotations

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Protocol, Sequence

from application.observability import metrics_recorder, telemetry_span
from application.services.lifting import lift_density_threshold, lll_lift, super_edge_counts
from application.services.matching import max_bipartite_matching, minimum_vertex_cover
from application.services.product_ramsey import aux_colouring, chopping_embed, kst_bound
from application.services.tree_embedding import embed_tree, tree_or_multipartite
from application.services.verify import validate_dichotomy, validate_embedding
from domain.errors import (
    BudgetExceededError,
    ContractViolationError,
    GenerationError,
    InputError,
    LiftFailure,
    NotFoundError,
    ParameterError,
    PreconditionError,
    RamseyForgeError,
)
from domain.models import (
    BlueExpansion,
    Colour,
    EdgeColouring,
    Embedding,
    Graph,
    PartitionedHost,
    RootedTree,
    StageResult,
    StepFailure,
    TableColouring,
    Witness,
)
from domain.services import bfs_distances, strong_product, truncate_with_origin
from domain.value_objects import RngSeed, SearchBudget

logger = logging.getLogger("ramsey_forge.pipeline")

STAGES = (
    "preconditions",
    "monochromatic-cliques",
    "majority-colour",
    "aux-colouring",
    "truncated-tree-embedding",
    "chopping",
    "dichotomy-precondition",
    "dichotomy",
    "matchings",
    "survivor-size",
    "survivor-tree",
    "distance-check",
    "kst-density",
    "lift-density",
    "lift",
    "validation",
)


@dataclass(frozen=True)
class PipelineRequest:
    """
    パイプラインの入力。

    Attributes:
        host: ``build_host`` で構成した分割付きホスト（H・H³・R を保持）。
        colouring: G の辺彩色 ψ。
        tree1: 赤側の木 T₁。
        tree2: 青側の木 T₂。
        k: クリークの大きさ。
        d: 木の最大次数の上限。
        t: 各 A(v) で探す単色クリークの大きさ。
        seed: 持ち上げの乱択に使うシード。
        budget: 探索予算。
    """

    host: PartitionedHost
    colouring: EdgeColouring
    tree1: RootedTree
    tree2: RootedTree
    k: int
    d: int
    t: int
    seed: RngSeed
    budget: SearchBudget = field(default_factory=SearchBudget)

    @property
    def s(self) -> int:
        return (self.d + self.d * self.d) * self.k


PipelineOutcome = Witness | StepFailure


class RamseyPipelineUseCase(Protocol):
    def execute(self, request: PipelineRequest) -> PipelineOutcome:
        ...


class _StageAbort(Exception):
    def __init__(self, stage: str, message: str, diagnostics: dict[str, Any]) -> None:
        super().__init__(message)
        self.stage = stage
        self.message = message
        self.diagnostics = diagnostics


def _error_diagnostics(exc: RamseyForgeError) -> dict[str, Any]:
    diagnostics: dict[str, Any] = {"error": type(exc).__name__}
    if isinstance(exc, BudgetExceededError):
        diagnostics.update(budget=exc.budget, explored=exc.explored)
    elif isinstance(exc, LiftFailure):
        diagnostics.update(resamples=exc.resamples, **exc.statistics)
    elif isinstance(exc, GenerationError):
        diagnostics["attempts"] = exc.attempts
    return diagnostics


def _mono_clique(
    members: Sequence[int], colouring: EdgeColouring, colour: Colour, size: int
) -> tuple[int, ...] | None:
    """``members``（G のクリーク）内で辞書順最小の ``colour`` の K_size。"""

    chosen: list[int] = []

    def extend(start: int) -> bool:
        if len(chosen) == size:
            return True
        for index in range(start, len(members) - (size - len(chosen)) + 1):
            v = members[index]
            if all(colouring.colour(u, v) is colour for u in chosen):
                chosen.append(v)
                if extend(index + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None


def survivors_suffice(survivor_count: int, first_layer: int, k: int) -> bool:
    """|S| > 2^(-2k)|V_0| を整数演算で判定する。"""

    return survivor_count * 4**k > first_layer


def carrier_distance_limit(a: int, b: int, k: int) -> int:
    """
    パターン頂点 a, b（x·k + j 符号化）の担い手どうしの H 上距離の上限。
    同じ S(u) 内の組は 2、異なる木頂点の S(u), S(v) 間の組は 3。
    """

    return 2 if a // k == b // k else 3


def best_rooting(tree: RootedTree) -> tuple[RootedTree, RootedTree, tuple[int, ...]]:
    """
    |V(T')|·Δ(T') が最小となる根（同値なら最小番号）で根付け直し、
    (根付け直した木, 切り詰め T', T' から T への対応) を返す。
    """

    best: tuple[tuple[int, int], RootedTree] | None = None
    for root in range(tree.n):
        candidate = tree if root == tree.root else tree.rerooted(root)
        truncated, _ = truncate_with_origin(candidate)
        key = (truncated.n * truncated.max_degree, root)
        if best is None or key < best[0]:
            best = (key, candidate)
    assert best is not None
    rooted = best[1]
    truncated, origin = truncate_with_origin(rooted)
    return rooted, truncated, origin


class RamseyPipeline(RamseyPipelineUseCase):
    """
    段階を順に実行し、各段階の結果を step_log とメトリクスに記録する。
    """

    def __init__(self, *, clock: Callable[[], float] | None = None) -> None:
        self._clock = clock or time.perf_counter

    def execute(self, request: PipelineRequest) -> PipelineOutcome:
        run = _PipelineRun(request, self._clock)
        with telemetry_span("pipeline.execute", {"N": request.host.graph.n, "k": request.k}):
            return run.execute()


class _PipelineRun:
    def __init__(self, request: PipelineRequest, clock: Callable[[], float]) -> None:
        self._request = request
        self._clock = clock
        self._log: list[StageResult] = []

    def execute(self) -> PipelineOutcome:
        try:
            return self._run()
        except _StageAbort as abort:
            logger.warning("Pipeline stopped at stage %s: %s", abort.stage, abort.message)
            return StepFailure(
                stage=abort.stage,
                message=abort.message,
                diagnostics=abort.diagnostics,
                step_log=tuple(self._log),
            )

    @contextmanager
    def _stage(self, name: str) -> Iterator[dict[str, Any]]:
        detail: dict[str, Any] = {}
        started = self._clock()
        try:
            yield detail
        except RamseyForgeError as exc:
            self._finish(name, "failed", detail, started)
            raise _StageAbort(name, str(exc), {**detail, **_error_diagnostics(exc)}) from exc
        self._finish(name, "ok", detail, started)

    def _finish(self, name: str, status: str, detail: dict[str, Any], started: float) -> None:
        elapsed = self._clock() - started
        recorder = metrics_recorder()
        recorder.increment_stage(name, status)
        recorder.observe_stage_duration(name, elapsed)
        self._log.append(StageResult(stage=name, status=status, detail=dict(detail)))
        logger.debug("stage %s %s in %.3fs", name, status, elapsed)

    def _run(self) -> PipelineOutcome:
        request = self._request
        host = request.host
        graph = host.graph
        colouring = request.colouring
        budget = request.budget
        k, d, t, s = request.k, request.d, request.t, request.s

        with self._stage("preconditions") as detail:
            if host.base is None or host.power is None or host.clique_size is None:
                raise InputError("パイプラインには H・H³・R を保持するホストが必要です。")
            if colouring.graph.n != graph.n:
                raise InputError("彩色はホストグラフ G 上のものである必要があります。")
            if k < 1 or d < 1:
                raise ParameterError("k と d は 1 以上である必要があります。")
            if not host.clique_size >= t >= 1:
                raise ParameterError(f"R ≥ t ≥ 1 である必要があります (R={host.clique_size}, t={t})。")
            for label, tree in (("T1", request.tree1), ("T2", request.tree2)):
                if tree.max_degree > d:
                    raise PreconditionError(f"Δ({label}) = {tree.max_degree} が d = {d} を超えています。")
            detail.update(N=host.base.n, R=host.clique_size, k=k, d=d, t=t, s=s)
        base = host.base

        with self._stage("monochromatic-cliques") as detail:
            cliques: list[tuple[Colour, tuple[int, ...]]] = []
            for v in range(base.n):
                members = host.clique(v)
                for colour in (Colour.BLUE, Colour.RED):
                    found = _mono_clique(members, colouring, colour, t)
                    if found is not None:
                        cliques.append((colour, found))
                        break
                else:
                    detail["vertex"] = v
                    raise ContractViolationError(f"A({v}) に単色の K_{t} がありません。R を大きくしてください。")
            detail["blue"] = sum(1 for colour, _ in cliques if colour is Colour.BLUE)

        with self._stage("majority-colour") as detail:
            blue = [v for v in range(base.n) if cliques[v][0] is Colour.BLUE]
            if 2 * len(blue) >= base.n:
                colour, chosen = Colour.BLUE, blue
            else:
                colour, chosen = Colour.RED, [v for v in range(base.n) if cliques[v][0] is Colour.RED]
            detail.update(colour=colour.label, size=len(chosen))
        main_tree, other_tree = (
            (request.tree2, request.tree1) if colour is Colour.BLUE else (request.tree1, request.tree2)
        )
        parts = [cliques[v][1] for v in chosen]

        with self._stage("aux-colouring") as detail:
            aux = aux_colouring(graph, parts, colouring, s, colour=colour, budget=budget.kss_budget)
            detail.update(m=len(parts), s=s, pairs=aux.count(colour))

        rooted, truncated, _ = best_rooting(main_tree)
        with self._stage("truncated-tree-embedding") as detail:
            detail.update(root=rooted.root, truncated_vertices=truncated.n, truncated_degree=truncated.max_degree)
            try:
                g: Embedding | None = embed_tree(
                    aux.colour_class(colour),
                    truncated,
                    truncated.max_degree,
                    node_budget=budget.node_budget,
                )
            except NotFoundError:
                g = None
            detail["found"] = g is not None

        if g is not None:
            with self._stage("chopping") as detail:
                embedding = chopping_embed(
                    graph, parts, colouring, k, rooted, g, d=d, colour=colour, budget=budget.kss_budget
                )
                detail["image_size"] = embedding.size
            return self._validated(colour, rooted, embedding)

        return self._multipartite_branch(colour, chosen, cliques, aux, truncated, other_tree)

    def _multipartite_branch(
        self,
        colour: Colour,
        chosen: list[int],
        cliques: list[tuple[Colour, tuple[int, ...]]],
        aux: TableColouring,
        truncated: RootedTree,
        other_tree: RootedTree,
    ) -> PipelineOutcome:
        request = self._request
        host = request.host
        base = host.base
        assert base is not None
        budget = request.budget
        k, d, t, s = request.k, request.d, request.t, request.s
        q = 2 * k + 1
        tree_size = truncated.n
        tree_degree = max(1, truncated.max_degree)
        lift_colour = colour.other

        with self._stage("dichotomy-precondition") as detail:
            required = 20 * tree_size * tree_degree * q
            detail.update(N_prime=len(chosen), required=required, n=tree_size, d=tree_degree, q=q)
            if len(chosen) < required:
                raise PreconditionError(
                    f"N' = {len(chosen)} が 20n'd'q = {required} 未満のため二分法を適用できません。"
                )

        with self._stage("dichotomy") as detail:
            outcome = tree_or_multipartite(
                aux, tree_size, tree_degree, q, colour=colour, subset_budget=budget.subset_budget
            )
            if isinstance(outcome, BlueExpansion):
                detail["expansion_size"] = len(outcome.vertices)
                raise ContractViolationError(
                    f"{colour.label} クラスが拡張性を持つにもかかわらず T' の埋め込みが存在しません。"
                )
            report = validate_dichotomy(
                aux, tree_size, tree_degree, q, outcome, colour=colour, subset_budget=budget.subset_budget
            )
            detail["part_sizes"] = [len(part) for part in outcome.parts]
            if not report.ok:
                detail["violations"] = len(report.violations)
                raise ContractViolationError("多部グラフの証明書が検証を通りませんでした。")
        layers = [tuple(chosen[a] for a in part) for part in outcome.parts]

        with self._stage("matchings") as detail:
            survivors = set(layers[0])
            partners: list[dict[int, int]] = []
            sizes: list[int] = []
            for step in range(1, q):
                target = set(layers[step])
                edges = [(u, w) for u in sorted(survivors) for w in base.neighbours(u) if w in target]
                matching = max_bipartite_matching(survivors, target, edges)
                sizes.append(len(matching))
                detail["sizes"] = sizes
                if 2 * len(matching) < len(survivors):
                    left_cover, right_cover = minimum_vertex_cover(survivors, target, edges, matching)
                    x = sorted(survivors - left_cover)
                    y = sorted(target - right_cover)
                    detail.update(
                        step=step,
                        cover=len(left_cover) + len(right_cover),
                        X=len(x),
                        Y=len(y),
                        e_XY=base.count_edges_between(x, y),
                    )
                    raise ContractViolationError(
                        f"{step}-マッチング ({len(matching)} 辺) が |S_{step - 1}|/2 を覆えません。"
                    )
                survivors = set(matching)
                partners.append(matching)

        with self._stage("survivor-size") as detail:
            detail.update(S=len(survivors), V0=len(layers[0]))
            if not survivors_suffice(len(survivors), len(layers[0]), k):
                raise ContractViolationError(
                    f"|S| = {len(survivors)} が 2^(-2k)|V_0| 以下です。"
                )
            for index, matching in enumerate(partners, start=1):
                if not survivors.issubset(matching):
                    raise ContractViolationError(f"M_{index} が S を覆っていません。")

        with self._stage("survivor-tree") as detail:
            induced, ids = base.induced_subgraph(sorted(survivors))
            placed = embed_tree(induced, other_tree, d, node_budget=budget.node_budget)
            tree_image = [ids[h] for h in placed.image]
            detail["tree_vertices"] = other_tree.n

        depth = other_tree.depth
        carriers = [
            partners[(slot if depth[x] % 2 == 0 else k + slot)][tree_image[x]]
            for x in range(other_tree.n)
            for slot in range(k)
        ]
        pattern = strong_product(other_tree.to_graph(), k)
        index_in_aux = {v: i for i, v in enumerate(chosen)}

        with self._stage("distance-check") as detail:
            if len(set(carriers)) != len(carriers):
                raise ContractViolationError("S(v) の和が互いに素になっていません。")
            reach: dict[int, dict[int, int]] = {}
            farthest = {"max_inner_distance": 0, "max_cross_distance": 0}
            for a, b in pattern.edges():
                source, target_vertex = carriers[a], carriers[b]
                limit = carrier_distance_limit(a, b, k)
                if source not in reach:
                    reach[source] = bfs_distances(base, source, limit=3)
                distance = reach[source].get(target_vertex)
                if distance is None or distance > limit:
                    detail["pair"] = [source, target_vertex]
                    raise ContractViolationError(
                        f"H 上の距離 dist({source}, {target_vertex}) が {limit} を超えています。"
                    )
                key = "max_inner_distance" if limit == 2 else "max_cross_distance"
                farthest[key] = max(farthest[key], distance)
                if aux.colour(index_in_aux[source], index_in_aux[target_vertex]) is not lift_colour:
                    raise ContractViolationError(f"補助彩色で ({source}, {target_vertex}) が {lift_colour.label} ではありません。")
            detail.update(pairs=pattern.edge_count, **farthest)

        blocks = [cliques[v][1] for v in carriers]
        colouring = request.colouring
        with self._stage("kst-density") as detail:
            bound = kst_bound(s, 2 * t)
            worst = 0
            for a, b in pattern.edges():
                count = sum(
                    1 for x in blocks[a] for y in blocks[b] if colouring.colour(x, y) is colour
                )
                worst = max(worst, count)
            detail.update(bound=bound, worst=worst)
            if worst > bound:
                raise ContractViolationError(
                    f"{colour.label} 辺数 {worst} が K_{{s,s}} を含まない上限 {bound:.2f} を超えています。"
                )

        lifted = self._lifted_graph(pattern, blocks, t, lift_colour)
        with self._stage("lift-density") as detail:
            if pattern.edge_count:
                threshold = lift_density_threshold(pattern.max_degree, t)
                counts = super_edge_counts(pattern, lifted, t)
                low = sorted(edge for edge, count in counts.items() if count < threshold)
                detail.update(threshold=float(threshold), min_count=min(counts.values()), low_edges=len(low))
                if low:
                    raise PreconditionError(
                        f"{len(low)} 本の超辺で {lift_colour.label} 辺が (1 − 1/(8Δ))t² 未満です。"
                    )

        with self._stage("lift") as detail:
            lifted_embedding = lll_lift(
                pattern,
                lifted,
                t,
                request.seed.derive(3),
                resample_cap=budget.lll_resample_cap,
                check_density=False,
            )
            detail["pattern_vertices"] = pattern.n
        image = tuple(blocks[a][lifted_embedding[a] - a * t] for a in range(pattern.n))
        return self._validated(lift_colour, other_tree, Embedding(image))

    def _lifted_graph(
        self, pattern: Graph, blocks: Sequence[tuple[int, ...]], t: int, colour: Colour
    ) -> Graph:
        colouring = self._request.colouring
        rows: list[set[int]] = [set() for _ in range(pattern.n * t)]
        for a, b in pattern.edges():
            for i, x in enumerate(blocks[a]):
                for j, y in enumerate(blocks[b]):
                    if colouring.colour(x, y) is colour:
                        rows[a * t + i].add(b * t + j)
                        rows[b * t + j].add(a * t + i)
        return Graph(tuple(tuple(sorted(row)) for row in rows))

    def _validated(self, colour: Colour, tree: RootedTree, embedding: Embedding) -> Witness:
        request = self._request
        with self._stage("validation") as detail:
            pattern = strong_product(tree.to_graph(), request.k)
            report = validate_embedding(pattern, request.host.graph, embedding, (request.colouring, colour))
            detail.update(report.stats)
            detail["violations"] = len(report.violations)
            if not report.ok:
                raise ContractViolationError(
                    f"{colour.label} の埋め込みが検証を通りませんでした ({report.violations[0].kind})。"
                )
        logger.info("Pipeline produced a %s witness for a %s-vertex tree", colour.label, tree.n)
        return Witness(colour=colour, tree=tree, k=request.k, embedding=embedding, step_log=tuple(self._log))


__all__ = [
    "PipelineOutcome",
    "PipelineRequest",
    "RamseyPipeline",
    "RamseyPipelineUseCase",
    "STAGES",
    "best_rooting",
]
