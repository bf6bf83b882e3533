"""
ブローアップの部分グラフ F' への F の持ち上げ（局所再サンプリング）。
"""

from __future__ import annotations

import logging
from fractions import Fraction

from application.observability import metrics_recorder, telemetry_span
from domain.errors import ContractViolationError, InputError, LiftFailure, PreconditionError
from domain.models import Embedding, Graph
from domain.value_objects import RngSeed

logger = logging.getLogger("ramsey_forge.lifting")


def lift_density_threshold(max_degree: int, t: int) -> Fraction:
    """超辺ごとに必要な F' の辺数 (1 − 1/(8Δ))t²。"""

    return (1 - Fraction(1, 8 * max_degree)) * t * t


def super_edge_counts(pattern: Graph, lifted: Graph, t: int) -> dict[tuple[int, int], int]:
    """F の各辺 vw について I(v) と I(w) の間にある F' の辺数。"""

    counts: dict[tuple[int, int], int] = {}
    for v, w in pattern.edges():
        block = set(range(w * t, (w + 1) * t))
        counts[(v, w)] = sum(
            1 for a in range(v * t, (v + 1) * t) for b in lifted.neighbours(a) if b in block
        )
    return counts


def lll_lift(
    pattern: Graph,
    lifted: Graph,
    t: int,
    seed: RngSeed,
    *,
    resample_cap: int = 10**6,
    check_density: bool = True,
) -> Embedding:
    """
    各 v に I(v) = {v·t, ..., v·t + t − 1} の頂点 v' を一様に選び、
    v'w' が F' の辺でない F の辺 vw のうち辞書順最小のものの両端点を選び直す。

    Raises:
        InputError: F' の頂点数が t·|V(F)| と異なる場合。
        PreconditionError: 密度条件を満たさない超辺がある場合（``check_density`` 時）。
        LiftFailure: 再サンプリング回数が上限に達した場合。
    """

    if t < 1:
        raise InputError("t は 1 以上である必要があります。")
    if lifted.n != pattern.n * t:
        raise InputError(f"F' の頂点数 {lifted.n} は t·|V(F)| = {pattern.n * t} である必要があります。")
    edges = list(pattern.edges())
    delta = pattern.max_degree
    if edges:
        probability = Fraction(1, 8 * delta)
        if 4 * probability * (2 * delta) != 1:
            raise ContractViolationError("局所補題の条件 4pd ≤ 1 が成り立ちません。")
        if check_density:
            threshold = lift_density_threshold(delta, t)
            for edge, count in super_edge_counts(pattern, lifted, t).items():
                if count < threshold:
                    raise PreconditionError(
                        f"超辺 {edge} の F' 辺数 {count} が閾値 {float(threshold):.2f} 未満です。"
                    )

    rng = seed.generator()
    lifted_sets = lifted.neighbour_sets
    choice = [int(v) for v in rng.integers(t, size=pattern.n)]
    resampled: dict[tuple[int, int], int] = {}
    with telemetry_span("lifting.lll_lift", {"vertices": pattern.n, "t": t}):
        for resamples in range(resample_cap + 1):
            violated = next(
                (
                    (v, w)
                    for v, w in edges
                    if w * t + choice[w] not in lifted_sets[v * t + choice[v]]
                ),
                None,
            )
            if violated is None:
                metrics_recorder().increment_lll_resamples(resamples)
                logger.debug("lll_lift converged after %s resamples", resamples)
                return Embedding(tuple(v * t + choice[v] for v in range(pattern.n)))
            if resamples == resample_cap:
                break
            resampled[violated] = resampled.get(violated, 0) + 1
            v, w = violated
            choice[v] = int(rng.integers(t))
            choice[w] = int(rng.integers(t))
    metrics_recorder().increment_lll_resamples(resample_cap)
    still_violated = sum(
        1 for v, w in edges if w * t + choice[w] not in lifted_sets[v * t + choice[v]]
    )
    raise LiftFailure(
        "再サンプリング上限内に F' への持ち上げが見つかりませんでした。",
        resamples=resample_cap,
        statistics={
            "violated_edges": still_violated,
            "distinct_events": len(resampled),
            "max_event_resamples": max(resampled.values(), default=0),
        },
    )


__all__ = ["lift_density_threshold", "lll_lift", "super_edge_counts"]
