"""
証明スケールの定数計算（報告専用で、パイプラインでは強制しない）。
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from domain.errors import ParameterError
from domain.value_objects import format_rational

from .spectral import feasibility


@dataclass(frozen=True)
class ProofConstants:
    """
    k, d に対する証明側の定数。

    Attributes:
        epsilon: ε = (d²(2k+1)2^{2k+4})^{-1}。
        min_degree: D > 100d²/ε⁴ を満たす最小の偶数。
        s: (d + d²)k。
        t: (64kd)^s。
        host_coefficient: N ≥ 40nd²(2k+1) の n の係数。
        universality_coefficient: N > 10d²n/ε² の n の係数。
        kst_blue_bound: 4t^{2−1/s}。
        kst_ok: 4t^{2−1/s} ≤ t²/(16dk) が成り立つか（(64kd)^s ≤ t と同値）。
        n: 指定時のみの木の頂点数。
    """

    k: int
    d: int
    epsilon: Fraction
    min_degree: int
    s: int
    t: int
    host_coefficient: int
    universality_coefficient: Fraction
    kst_blue_bound: float
    kst_ok: bool
    n: int | None = None

    @property
    def host_bound(self) -> int | None:
        return None if self.n is None else self.host_coefficient * self.n

    @property
    def universality_bound(self) -> Fraction | None:
        return None if self.n is None else self.universality_coefficient * self.n

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "k": self.k,
            "d": self.d,
            "epsilon": format_rational(self.epsilon),
            "D": self.min_degree,
            "s": self.s,
            "t": self.t,
            "host_coefficient": self.host_coefficient,
            "universality_coefficient": format_rational(self.universality_coefficient),
            "kst_blue_bound": self.kst_blue_bound,
            "kst_red_density_ok": self.kst_ok,
        }
        if self.n is not None:
            payload["n"] = self.n
            payload["host_bound"] = self.host_bound
            payload["universality_bound"] = format_rational(self.universality_bound or Fraction(0))
        return payload


def proof_constants(k: int, d: int, n: int | None = None) -> ProofConstants:
    """
    Raises:
        ParameterError: k < 1、d < 1、または n < 1 の場合。
    """

    if k < 1 or d < 1:
        raise ParameterError("k と d は 1 以上である必要があります。")
    if n is not None and n < 1:
        raise ParameterError("n は 1 以上である必要があります。")
    epsilon = Fraction(1, d * d * (2 * k + 1) * 2 ** (2 * k + 4))
    s = (d + d * d) * k
    t = (64 * k * d) ** s
    bounds = feasibility(d, 1, epsilon)
    return ProofConstants(
        k=k,
        d=d,
        epsilon=epsilon,
        min_degree=bounds.min_degree,
        s=s,
        t=t,
        host_coefficient=40 * d * d * (2 * k + 1),
        universality_coefficient=bounds.min_vertices,
        kst_blue_bound=4 * float(t) ** (2 - 1 / s),
        kst_ok=(64 * k * d) ** s <= t,
        n=n,
    )


__all__ = ["ProofConstants", "format_rational", "proof_constants"]
