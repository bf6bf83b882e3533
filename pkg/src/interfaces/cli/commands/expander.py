"""
ランダム正則グラフ（エクスパンダー）の生成コマンド。
"""

from __future__ import annotations

from typing import Any

import typer

from application.services import expander_certificate, generate_expander, mixing_sweep
from domain.errors import ParameterError
from domain.value_objects import parse_rational
from infrastructure.storage import format_graph

from ..runtime import cli_errors, state_of, to_seed


def gen_expander(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", min=2, help="頂点数 N"),
    d: int = typer.Option(..., "--d", min=3, help="正則次数 D"),
    seed: int = typer.Option(..., "--seed", min=0),
    require_lambda: bool = typer.Option(False, "--require-lambda", help="λ ≤ 2√D まで再生成する"),
    output: str = typer.Option(..., "--output", "-o", help="グラフファイルの出力先"),
    profile_output: str = typer.Option("-", "--profile", help="JSON プロファイルの出力先"),
    mixing_pairs: int = typer.Option(0, "--mixing-pairs", min=0, help="混合補題を検査する (S, T) の組数"),
    certify_n: int | None = typer.Option(None, "--certify-n", min=1, help="拡張性証明書の木の頂点数 n"),
    certify_d: int = typer.Option(2, "--certify-d", min=1, help="拡張性証明書の木の最大次数"),
    epsilon: str = typer.Option("1/4", "--epsilon", help="証明書の ε（p/q）"),
    samples: int = typer.Option(8, "--samples", min=0, help="証明書の経験的検証回数"),
) -> None:
    """
    ペアリングモデルで D 正則グラフを生成し、グラフファイルと JSON プロファイルを書き出す。
    """

    state = state_of(ctx)
    budget = state.budget
    with cli_errors():
        rng_seed = to_seed(seed)
        sample = generate_expander(
            n,
            d,
            rng_seed,
            require_lambda=require_lambda,
            regeneration_cap=budget.regeneration_cap,
            attempt_cap=budget.regular_attempt_cap,
            dense_limit=budget.dense_eigen_limit,
        )
        payload: dict[str, Any] = {
            **sample.profile.to_dict(),
            "attempts": sample.attempts,
            "regenerations": sample.regenerations,
            "seed": seed,
            "threshold": sample.profile.ramanujan_threshold,
        }
        if mixing_pairs:
            sweep = mixing_sweep(sample.graph, sample.profile, mixing_pairs, rng_seed.derive(1))
            payload["mixing"] = {
                "pairs": sweep.pairs,
                "violations": sweep.violations,
                "worst_slack": sweep.worst_slack,
            }
        if certify_n is not None:
            try:
                ratio = parse_rational(epsilon)
            except ValueError as exc:
                raise ParameterError(f"--epsilon {epsilon!r} は p/q 形式の有理数である必要があります。") from exc
            certificate = expander_certificate(
                sample.graph,
                certify_d,
                certify_n,
                ratio,
                samples,
                rng_seed.derive(2),
                profile=sample.profile,
                node_budget=budget.node_budget,
            )
            payload["certificate"] = certificate.to_dict()
        state.emit_text(output, format_graph(sample.graph))
        state.emit_json("expander_profile", payload, profile_output)


def register(app: typer.Typer) -> None:
    app.command("gen-expander")(gen_expander)
