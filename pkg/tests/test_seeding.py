"""Counter-keyed random streams."""

import numpy as np
import pytest

from lailoss.seeding import STREAMS, generator


def test_same_key_same_draws():
    a = generator(42, "shuffle", 3).random(5)
    b = generator(42, "shuffle", 3).random(5)
    assert a.tobytes() == b.tobytes()


@pytest.mark.parametrize("other", [("split",), ("shuffle", 4), ("noise", 3)])
def test_streams_and_counters_are_distinct(other):
    base = generator(42, "shuffle", 3).random(5)
    assert not np.array_equal(base, generator(42, *other).random(5))


def test_draws_in_one_stream_leave_another_alone():
    before = generator(7, "init").random(4)
    generator(7, "noise").random(1000)
    assert np.array_equal(before, generator(7, "init").random(4))


def test_negative_seed_wraps():
    assert np.array_equal(generator(-1, "split").random(3), generator(2 ** 64 - 1, "split").random(3))


def test_unknown_stream():
    assert "split" in STREAMS
    with pytest.raises(KeyError):
        generator(0, "bogus")
