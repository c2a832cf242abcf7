"""Exhaustive enumeration oracle."""

import pytest

from wirtwidth import diagram_from_text, oracle_min_width
from wirtwidth.errors import TooLarge

from conftest import FIGURE8, TREFOIL


def test_trefoil_oracle():
    result = oracle_min_width(diagram_from_text(TREFOIL))
    assert result.min_width == 8
    assert result.min_seed_count == 2
    # 3 first seeds x 2 second events x 3 third events, hand-counted
    assert result.logs_enumerated == 18
    assert result.count_of_optimal_logs == 12


def test_figure8_oracle():
    result = oracle_min_width(diagram_from_text(FIGURE8))
    assert result.min_width == 8
    assert result.min_seed_count == 2


def test_unknot_oracle():
    result = oracle_min_width(diagram_from_text(""))
    assert result.min_width == 2
    assert result.min_seed_count == 1


def test_reducible_unknot_code_width_two():
    # two successive curls: a diagram of the unknot that one seed floods
    result = oracle_min_width(diagram_from_text("-1,1,-2,2"))
    assert result.min_width == 2
    assert result.min_seed_count == 1


def test_guard():
    d = diagram_from_text(
        "-1,2,-3,4,-5,6,-7,8,-9,1,-2,3,-4,5,-6,7,-8,9"
    )  # 9 crossings
    with pytest.raises(TooLarge):
        oracle_min_width(d)
    with pytest.raises(TooLarge):
        oracle_min_width(d, max_crossings_guard=8)


def test_dedup_keeps_minima(small_corpus):
    for code in small_corpus.values():
        d = diagram_from_text(code)
        if not 1 <= d.n_crossings <= 6:
            continue
        raw = oracle_min_width(d)
        fast = oracle_min_width(d, dedup=True)
        assert fast.min_width == raw.min_width
        assert fast.min_seed_count == raw.min_seed_count
        assert fast.count_of_optimal_logs is None
        assert fast.logs_enumerated <= raw.logs_enumerated
