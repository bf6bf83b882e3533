"""
厳密な有理数の文字列表現。
"""

from __future__ import annotations

from fractions import Fraction


def format_rational(value: Fraction | int) -> str:
    """整数なら "p"、それ以外は "p/q"。"""

    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """"p/q" または "p" を Fraction に変換する。小数表記は受け付けない。"""

    numerator, _, denominator = text.strip().partition("/")
    try:
        return Fraction(int(numerator, 10), int(denominator, 10) if denominator else 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"有理数として解釈できません: {text!r}") from exc
