import numpy as np
import pytest

from gaplab.graph_core.seed import SEED_ENV_VAR, Seed


def test_same_labels_same_stream():
    a = Seed(7, ("exp", 1, "G")).generator().random(5)
    b = Seed(7).child("exp", 1, "G").generator().random(5)
    assert np.array_equal(a, b)


def test_streams_independent_of_draw_order():
    first = Seed(7).child("a").generator().random(3)
    Seed(7).child("b").generator().random(1000)
    again = Seed(7).child("a").generator().random(3)
    assert np.array_equal(first, again)


@pytest.mark.parametrize("left, right", [
    ((1,), ("1",)),
    ((1,), ((1,),)),
    (("a", "b"), ("b", "a")),
    (("a",), ("a", "a")),
])
def test_distinct_labels_distinct_streams(left, right):
    a = Seed(3, left).generator().random(4)
    b = Seed(3, right).generator().random(4)
    assert not np.array_equal(a, b)


def test_numpy_integers_normalized():
    assert Seed(3).child(np.int64(4)) == Seed(3).child(4)
    assert Seed(3).child((np.int64(1), 2)) == Seed(3).child((1, 2))


@pytest.mark.parametrize("root", [-1, 2**64])
def test_root_range(root):
    with pytest.raises(ValueError):
        Seed(root)


def test_root_type():
    with pytest.raises(TypeError):
        Seed(1.5)
    with pytest.raises(TypeError):
        Seed(True)


def test_from_env(monkeypatch: pytest.MonkeyPatch):
    assert Seed.from_env() == Seed(0)
    assert Seed.from_env(default=5) == Seed(5)
    monkeypatch.setenv(SEED_ENV_VAR, "0x10")
    assert Seed.from_env() == Seed(16)


def test_str():
    assert str(Seed(7, ("exp", 2))) == "7/exp/2"
