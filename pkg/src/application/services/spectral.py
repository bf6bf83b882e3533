"""
ランダム正則グラフの生成、スペクトルギャップの計算、混合補題と拡張性の検証。
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import eigsh

from application.observability import metrics_recorder, telemetry_span
from domain.errors import (
    BudgetExceededError,
    GenerationError,
    InputError,
    NotFoundError,
    ParameterError,
)
from domain.models import Graph
from domain.services import random_tree
from domain.value_objects import RngSeed, SpectralProfile, format_rational

from .tree_embedding import embed_tree
from .verify import validate_embedding

logger = logging.getLogger("ramsey_forge.spectral")

MIXING_TOLERANCE = 1e-9
# exp(-(D²-1)/4) は単純グラフが得られる漸近確率。これ未満なら完全棄却は非現実的。
REJECTION_PROBABILITY_FLOOR = 1e-3

SamplingMethod = Literal["auto", "rejection", "repair"]


@dataclass(frozen=True)
class ExpanderSample:
    """λ 受理判定済みの生成結果。"""

    graph: Graph
    profile: SpectralProfile
    seed: RngSeed
    attempts: int
    regenerations: int


@dataclass(frozen=True)
class MixingResidual:
    """
    Attributes:
        edges: e(S, T)（S ∩ T 内の辺は 2 回数える）。
        expectation: D|S||T|/N。
        bound: λ√(|S||T|(1 − |S|/N)(1 − |T|/N))。
    """

    edges: int
    expectation: float
    bound: float

    @property
    def deviation(self) -> float:
        return self.edges - self.expectation

    @property
    def violated(self) -> bool:
        return abs(self.deviation) > self.bound + MIXING_TOLERANCE


@dataclass(frozen=True)
class MixingSweep:
    pairs: int
    violations: int
    worst_slack: float


@dataclass(frozen=True)
class Feasibility:
    """
    普遍性補題の定数。

    Attributes:
        min_degree: 100d²/ε⁴ より大きい最小の偶数 D。
        min_vertices: N > 10d²n/ε² の右辺。
    """

    min_degree: int
    min_vertices: Fraction


@dataclass(frozen=True)
class SampleOutcome:
    index: int
    subset_size: int
    tree_size: int
    ok: bool
    reason: str = ""

    def to_dict(self) -> dict[str, object]:
        return {
            "index": self.index,
            "subset_size": self.subset_size,
            "tree_size": self.tree_size,
            "ok": self.ok,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class ExpanderCertificate:
    """
    Attributes:
        threshold: 集合サイズの閾値 2N/√D。
        analytic_lhs: λ·(2N/√D)。
        analytic_rhs: D·(2N/√D)²/N。
        samples: 性質 (2) の経験的検証結果。
        feasibility: 普遍性補題の定数（参考値）。
    """

    profile: SpectralProfile
    threshold: float
    analytic_lhs: float
    analytic_rhs: float
    samples: tuple[SampleOutcome, ...] = field(default_factory=tuple)
    feasibility: Feasibility | None = None

    @property
    def analytic_ok(self) -> bool:
        return self.analytic_lhs < self.analytic_rhs

    @property
    def empirical_ok(self) -> bool:
        return all(sample.ok for sample in self.samples)

    @property
    def ok(self) -> bool:
        return self.analytic_ok and self.empirical_ok

    def to_dict(self) -> dict[str, object]:
        payload: dict[str, object] = {
            "profile": self.profile.to_dict(),
            "threshold": self.threshold,
            "analytic_lhs": self.analytic_lhs,
            "analytic_rhs": self.analytic_rhs,
            "analytic_ok": self.analytic_ok,
            "empirical_ok": self.empirical_ok,
            "ok": self.ok,
            "samples": [sample.to_dict() for sample in self.samples],
        }
        if self.feasibility is not None:
            payload["feasibility"] = {
                "min_degree": self.feasibility.min_degree,
                "min_vertices": format_rational(self.feasibility.min_vertices),
            }
        return payload


def random_regular(
    n: int,
    d: int,
    seed: RngSeed,
    *,
    attempt_cap: int = 10**6,
    method: SamplingMethod = "auto",
) -> Graph:
    """
    ペアリングモデルで単純 D 正則グラフを生成する。

    ``rejection`` は単純でない結果を丸ごと棄却し、``repair`` は衝突したスタブだけを
    再シャッフルする。``auto`` は単純グラフの漸近確率が十分高いときだけ完全棄却を使う。

    Raises:
        ParameterError: D < 3、D ≥ N、または N·D が奇数の場合。
        GenerationError: 試行上限内に単純グラフが得られなかった場合。
    """

    return _sample_regular(n, d, seed, attempt_cap=attempt_cap, method=method)[0]


def _sample_regular(
    n: int,
    d: int,
    seed: RngSeed,
    *,
    attempt_cap: int,
    method: SamplingMethod,
) -> tuple[Graph, int]:
    if (n * d) % 2 != 0:
        raise ParameterError(f"N·D = {n * d} は偶数である必要があります。")
    if d < 3:
        raise ParameterError("D は 3 以上である必要があります。")
    if d >= n:
        raise ParameterError("D < N である必要があります。")
    if method == "auto":
        probability = math.exp(-(d * d - 1) / 4)
        method = "rejection" if probability >= REJECTION_PROBABILITY_FLOOR else "repair"

    rng = seed.generator()
    for attempt in range(1, attempt_cap + 1):
        if method == "rejection":
            edges = _try_rejection(n, d, rng)
        else:
            edges = _try_repair(n, d, rng)
        if edges is not None:
            logger.debug("random_regular n=%s d=%s method=%s attempts=%s", n, d, method, attempt)
            return Graph.from_edges(n, edges), attempt
    raise GenerationError(
        f"{attempt_cap} 回の試行で単純な {d} 正則グラフ (N={n}) を生成できませんでした。",
        attempts=attempt_cap,
    )


def _try_rejection(n: int, d: int, rng: np.random.Generator) -> list[tuple[int, int]] | None:
    stubs = np.repeat(np.arange(n), d)
    rng.shuffle(stubs)
    pairs = stubs.reshape(-1, 2)
    low = pairs.min(axis=1)
    high = pairs.max(axis=1)
    if np.any(low == high):
        return None
    keys = low.astype(np.int64) * n + high
    if np.unique(keys).size != keys.size:
        return None
    return list(zip(low.tolist(), high.tolist()))


def _try_repair(n: int, d: int, rng: np.random.Generator) -> set[tuple[int, int]] | None:
    edges: set[tuple[int, int]] = set()
    stubs = np.repeat(np.arange(n), d)
    while stubs.size:
        rng.shuffle(stubs)
        leftover: list[int] = []
        for a, b in stubs.reshape(-1, 2).tolist():
            if a > b:
                a, b = b, a
            if a != b and (a, b) not in edges:
                edges.add((a, b))
            else:
                leftover.extend((a, b))
        if leftover and not _has_suitable_pair(edges, set(leftover)):
            return None
        stubs = np.array(sorted(leftover), dtype=np.int64)
    return edges


def _has_suitable_pair(edges: set[tuple[int, int]], pending: set[int]) -> bool:
    ordered = sorted(pending)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if (a, b) not in edges:
                return True
    return False


def adjacency_matrix(graph: Graph) -> sparse.csr_matrix:
    rows = np.repeat(np.arange(graph.n), [graph.degree(v) for v in range(graph.n)])
    cols = np.fromiter(
        (w for neighbours in graph.adjacency for w in neighbours),
        dtype=np.int64,
        count=2 * graph.edge_count,
    )
    data = np.ones(cols.size, dtype=np.float64)
    return sparse.csr_matrix((data, (rows, cols)), shape=(graph.n, graph.n))


def second_eigenvalue(graph: Graph, *, dense_limit: int = 5000) -> SpectralProfile:
    """
    隣接行列の最大固有値以外で絶対値最大のもの λ = max(|μ₂|, |μ_N|) を求める。

    N ≤ ``dense_limit`` では密行列の対称固有値分解、それを超えると Lanczos 法
    （絶対値上位 2 個）を使う。

    Raises:
        InputError: 正則でないグラフが与えられた場合。
    """

    if graph.n == 0:
        raise InputError("空グラフのスペクトルは定義されません。")
    if not graph.is_regular():
        raise InputError(
            f"正則グラフが必要です (最小次数 {graph.min_degree}, 最大次数 {graph.max_degree})。"
        )
    d = graph.max_degree
    if graph.n == 1:
        return SpectralProfile(n=1, d=d, lambda_=0.0, top=0.0)

    matrix = adjacency_matrix(graph)
    if graph.n <= dense_limit:
        eigenvalues = np.linalg.eigvalsh(matrix.toarray())
        top = float(eigenvalues[-1])
        lambda_ = float(max(abs(eigenvalues[-2]), abs(eigenvalues[0])))
    else:
        values = eigsh(matrix, k=2, which="LM", return_eigenvectors=False, tol=1e-10)
        ordered = sorted((float(v) for v in values), key=abs, reverse=True)
        top = max(ordered)
        lambda_ = abs(ordered[1]) if ordered[0] == top else abs(ordered[0])
    logger.debug("second_eigenvalue n=%s d=%s lambda=%.6f", graph.n, d, lambda_)
    return SpectralProfile(n=graph.n, d=d, lambda_=min(lambda_, float(d)), top=top)


def generate_expander(
    n: int,
    d: int,
    seed: RngSeed,
    *,
    require_lambda: bool = True,
    regeneration_cap: int = 50,
    attempt_cap: int = 10**6,
    dense_limit: int = 5000,
) -> ExpanderSample:
    """
    λ ≤ 2√D を満たすまで、派生シードで再生成を繰り返す。

    Raises:
        GenerationError: 再生成上限に達した場合。
    """

    with telemetry_span("spectral.generate_expander", {"n": n, "d": d}):
        total_attempts = 0
        for regeneration in range(regeneration_cap):
            current = seed if regeneration == 0 else seed.derive(regeneration)
            graph, attempts = _sample_regular(
                n, d, current, attempt_cap=attempt_cap, method="auto"
            )
            total_attempts += attempts
            profile = second_eigenvalue(graph, dense_limit=dense_limit)
            if profile.accepted or not require_lambda:
                if regeneration:
                    metrics_recorder().increment_expander_regenerations(regeneration)
                logger.info(
                    "Generated (%s, %s, %.4f)-graph after %s regenerations",
                    n,
                    d,
                    profile.lambda_,
                    regeneration,
                )
                return ExpanderSample(
                    graph=graph,
                    profile=profile,
                    seed=current,
                    attempts=total_attempts,
                    regenerations=regeneration,
                )
            logger.warning(
                "lambda=%.4f exceeds 2*sqrt(D)=%.4f, regenerating",
                profile.lambda_,
                profile.ramanujan_threshold,
            )
        metrics_recorder().increment_expander_regenerations(regeneration_cap)
        raise GenerationError(
            f"{regeneration_cap} 回の再生成で λ ≤ 2√D を満たすグラフが得られませんでした。",
            attempts=regeneration_cap,
        )


def mixing_check(
    graph: Graph,
    profile: SpectralProfile,
    left: Sequence[int],
    right: Sequence[int],
) -> MixingResidual:
    """混合補題の両辺を 1 組の (S, T) について計算する。"""

    s = len(set(left))
    t = len(set(right))
    n = profile.n
    edges = graph.count_edges_between(set(left), set(right))
    expectation = profile.d * s * t / n
    bound = profile.lambda_ * math.sqrt(max(0.0, s * t * (1 - s / n) * (1 - t / n)))
    return MixingResidual(edges=edges, expectation=expectation, bound=bound)


def mixing_sweep(
    graph: Graph,
    profile: SpectralProfile,
    pairs: int,
    seed: RngSeed,
    *,
    batch_size: int = 1024,
) -> MixingSweep:
    """
    ランダムな (S, T) の組を ``pairs`` 個まとめて検査する。各組はまず包含確率を
    一様に選び、各頂点を独立にその確率で含める。
    """

    rng = seed.generator()
    matrix = adjacency_matrix(graph)
    n = profile.n
    violations = 0
    worst = math.inf
    remaining = pairs
    with telemetry_span("spectral.mixing_sweep", {"pairs": pairs}):
        while remaining > 0:
            size = min(batch_size, remaining)
            remaining -= size
            left = (rng.random((size, n)) < rng.random((size, 1))).astype(np.float64)
            right = (rng.random((size, n)) < rng.random((size, 1))).astype(np.float64)
            edges = np.sum(right.T * (matrix @ left.T), axis=0)
            s = left.sum(axis=1)
            t = right.sum(axis=1)
            expectation = profile.d * s * t / n
            bound = profile.lambda_ * np.sqrt(np.clip(s * t * (1 - s / n) * (1 - t / n), 0.0, None))
            slack = bound + MIXING_TOLERANCE - np.abs(edges - expectation)
            violations += int(np.count_nonzero(slack < 0))
            worst = min(worst, float(slack.min()))
    if violations:
        logger.warning("mixing_sweep found %s violations out of %s pairs", violations, pairs)
    return MixingSweep(pairs=pairs, violations=violations, worst_slack=worst)


def feasibility(d: int, n: int, epsilon: Fraction) -> Feasibility:
    """D > 100d²/ε⁴ を満たす最小の偶数 D と、頂点数の下限 10d²n/ε²。"""

    if not 0 < epsilon <= 1:
        raise ParameterError("ε は 0 < ε ≤ 1 である必要があります。")
    lower = Fraction(100 * d * d) / epsilon**4
    degree = math.floor(lower) + 1
    if degree % 2:
        degree += 1
    return Feasibility(min_degree=degree, min_vertices=Fraction(10 * d * d * n) / epsilon**2)


def expander_certificate(
    graph: Graph,
    d: int,
    n: int,
    epsilon: Fraction,
    samples: int,
    seed: RngSeed,
    *,
    profile: SpectralProfile | None = None,
    node_budget: int = 10**9,
) -> ExpanderCertificate:
    """
    性質 (1) をスペクトルから解析的に、性質 (2) を ``samples`` 個の
    ⌈εN⌉ 頂点のランダム誘導部分グラフへの木の埋め込みで経験的に検証する。

    Raises:
        ParameterError: εN < n の場合。
    """

    if n < 1 or d < 1 or samples < 0:
        raise ParameterError("n, d は正、samples は 0 以上である必要があります。")
    profile = profile or second_eigenvalue(graph)
    subset_size = math.ceil(epsilon * profile.n)
    if epsilon * profile.n < n:
        raise ParameterError(f"εN = {float(epsilon * profile.n):.3f} が n = {n} 未満です。")

    threshold = 2 * profile.n / math.sqrt(profile.d)
    lhs = profile.lambda_ * threshold
    rhs = profile.d * threshold * threshold / profile.n

    rng = seed.generator()
    outcomes: list[SampleOutcome] = []
    with telemetry_span("spectral.expander_certificate", {"samples": samples}):
        for index in range(samples):
            chosen = rng.choice(profile.n, size=subset_size, replace=False)
            subgraph, mapping = graph.induced_subgraph(chosen.tolist())
            tree = random_tree(n, d, seed.derive(index, 1))
            try:
                found = embed_tree(subgraph, tree, d, node_budget=node_budget)
            except NotFoundError:
                outcomes.append(SampleOutcome(index, subset_size, n, False, "not-found"))
                continue
            except BudgetExceededError:
                outcomes.append(SampleOutcome(index, subset_size, n, False, "budget"))
                continue
            report = validate_embedding(tree.to_graph(), graph, found.compose(mapping))
            outcomes.append(
                SampleOutcome(index, subset_size, n, report.ok, "" if report.ok else "invalid")
            )
    certificate = ExpanderCertificate(
        profile=profile,
        threshold=threshold,
        analytic_lhs=lhs,
        analytic_rhs=rhs,
        samples=tuple(outcomes),
        feasibility=feasibility(d, n, epsilon),
    )
    logger.info(
        "expander_certificate analytic=%s empirical=%s/%s",
        certificate.analytic_ok,
        sum(1 for sample in outcomes if sample.ok),
        samples,
    )
    return certificate


__all__ = [
    "ExpanderCertificate",
    "ExpanderSample",
    "Feasibility",
    "MixingResidual",
    "MixingSweep",
    "SampleOutcome",
    "adjacency_matrix",
    "expander_certificate",
    "feasibility",
    "generate_expander",
    "mixing_check",
    "mixing_sweep",
    "random_regular",
    "second_eigenvalue",
]
