import random

import pytest

from faro.oracle import oracle_interleave, oracle_shuffle
from faro.permcore import IN_SHUFFLE, OUT_SHUFFLE, kway_kind


def test_oracle_shuffle_examples():
    assert oracle_shuffle([1, 2, 3, 4, 5, 6], IN_SHUFFLE) == [4, 1, 5, 2, 6, 3]
    assert oracle_shuffle([1, 2, 3, 4, 5, 6], OUT_SHUFFLE) == [1, 4, 2, 5, 3, 6]
    assert oracle_shuffle(["x", "y"], IN_SHUFFLE) == ["y", "x"]
    assert oracle_shuffle([], IN_SHUFFLE) == []
    assert oracle_shuffle(list(range(1, 13)), kway_kind(3)) == [
        9, 5, 1, 10, 6, 2, 11, 7, 3, 12, 8, 4,
    ]


def test_oracle_shuffle_rejects_invalid_lengths():
    with pytest.raises(ValueError):
        oracle_shuffle([1, 2, 3], IN_SHUFFLE)
    with pytest.raises(ValueError):
        oracle_shuffle([], OUT_SHUFFLE)
    with pytest.raises(ValueError):
        oracle_shuffle([1, 2, 3, 4], kway_kind(3))


def test_oracle_interleave_examples():
    assert oracle_interleave([1, 2, 3], [4, 5, 6]) == [4, 1, 5, 2, 6, 3]
    assert oracle_interleave([], []) == []
    assert oracle_interleave(["a"], ["b"]) == ["b", "a"]
    with pytest.raises(ValueError):
        oracle_interleave([1], [])


def test_two_formulations_agree_for_all_small_lengths():
    # direct index placement vs card-table interleave of the two halves
    for length in range(0, 4097, 2):
        values = list(range(length))
        half = length // 2
        assert oracle_shuffle(values, IN_SHUFFLE) == oracle_interleave(
            values[:half], values[half:]
        )


def test_oracle_output_is_a_rearrangement():
    rng = random.Random(9)
    for kind in (IN_SHUFFLE, OUT_SHUFFLE, kway_kind(3), kway_kind(5)):
        arity = kind.k if kind.family == "kway" else 2
        for _ in range(40):
            n = arity * rng.randrange(1, 120)
            values = [rng.randrange(10**6) for _ in range(n)]
            assert sorted(oracle_shuffle(values, kind)) == sorted(values)


def test_out_shuffle_keeps_the_ends():
    rng = random.Random(10)
    for _ in range(40):
        n = 2 * rng.randrange(1, 200)
        values = list(range(n))
        out = oracle_shuffle(values, OUT_SHUFFLE)
        assert out[0] == values[0]
        assert out[-1] == values[-1]
