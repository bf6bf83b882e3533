from __future__ import annotations

from fractions import Fraction

import pytest

from application.services import proof_constants
from domain.errors import ParameterError


def test_constants_for_unit_clique_and_binary_degree() -> None:
    constants = proof_constants(1, 2)

    assert constants.epsilon == Fraction(1, 768)
    assert constants.s == 6
    assert constants.t == 128**6
    assert constants.min_degree == 139156940390402
    assert constants.host_coefficient == 480
    assert constants.universality_coefficient == 23592960
    assert constants.kst_ok


def test_constants_with_tree_size() -> None:
    payload = proof_constants(1, 2, n=10).to_dict()

    assert payload["epsilon"] == "1/768"
    assert payload["host_bound"] == 4800
    assert payload["universality_bound"] == "235929600"
    assert payload["kst_red_density_ok"] is True


def test_constants_without_tree_size_omit_bounds() -> None:
    payload = proof_constants(2, 1).to_dict()

    assert "host_bound" not in payload
    assert payload["s"] == 4


@pytest.mark.parametrize(("k", "d", "n"), [(0, 1, None), (1, 0, None), (1, 1, 0)])
def test_constants_reject_parameters(k: int, d: int, n: int | None) -> None:
    with pytest.raises(ParameterError):
        proof_constants(k, d, n)
