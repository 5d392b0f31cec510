import math

import pytest

from sbetree.closed_forms import (
    count_sbe_trees_complete,
    fibonacci,
    moebius_split_prediction,
    path_tree_size,
    path_width_profile,
    random_split_prediction,
    sbe_size_complete,
    usbe_size_complete,
)
from sbetree.engine import build_sbe_tree, build_usbe_layers
from sbetree.graph import generate
from sbetree.oracle import count_sbe_trees


@pytest.mark.parametrize("n, sbe, usbe", [(48, 281474976710655, 1176), (1, 1, 1), (3, 7, 6)])
def test_complete_sizes(n, sbe, usbe):
    assert sbe_size_complete(n) == sbe and usbe_size_complete(n) == usbe


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_sizes_match_construction(n):
    g = generate("complete", n)
    assert build_sbe_tree(g)[1] == sbe_size_complete(n)
    assert build_usbe_layers(g).total_size == usbe_size_complete(n)


def test_tree_count_k6():
    assert count_sbe_trees_complete(6) == 12_754_584_000


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 3), (4, 54)])
def test_tree_count_small(n, expected):
    assert count_sbe_trees_complete(n) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_tree_count_matches_enumeration(n):
    assert count_sbe_trees_complete(n) == count_sbe_trees(generate("complete", n))


def test_tree_count_recurrence():
    for n in range(3, 15):
        assert count_sbe_trees_complete(n) == math.comb(n, 2) * count_sbe_trees_complete(n - 1) ** 2


class TestPathProfile:
    def test_small(self):
        assert path_width_profile(0).widths == (1,)
        assert path_width_profile(1).widths == (1,)
        assert path_width_profile(4).widths == (1, 2, 4, 2)
        assert path_width_profile(4).total == 9

    def test_path_48(self):
        assert path_width_profile(48).total == 15_557_484_097

    @pytest.mark.parametrize("n", range(1, 21))
    def test_matches_construction(self, n):
        assert list(path_width_profile(n).widths) == build_usbe_layers(generate("path", n)).layer_widths

    def test_totals(self):
        for n in range(2, 60):
            total = path_width_profile(n).total
            assert total == 1 + path_width_profile(n - 1).total + path_width_profile(n - 2).total
            assert total == 2 * fibonacci(n + 1) - 1 == path_tree_size(n)

    @pytest.mark.parametrize("n", range(0, 21))
    def test_full_top_layers(self, n):
        widths = path_width_profile(n).widths
        assert all(widths[l] == 2**l for l in range(n // 2 + 1))

    def test_negative(self):
        with pytest.raises(ValueError):
            path_width_profile(-1)


def test_fibonacci():
    assert [fibonacci(k) for k in range(1, 11)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert fibonacci(49) == 7_778_742_049


class TestPredictions:
    def test_moebius_branches(self):
        assert moebius_split_prediction(48) == pytest.approx(2 ** (0.347120956815 * 48 + 1.66485616037) - 2)
        assert moebius_split_prediction(46) == pytest.approx(2 ** (0.347120956815 * 46 + 1.74055665759) - 2)

    @pytest.mark.parametrize("n", [5, 2, 0])
    def test_moebius_rejects(self, n):
        with pytest.raises(ValueError):
            moebius_split_prediction(n)

    def test_random(self):
        assert random_split_prediction(24) == pytest.approx(2**9.42945)
        assert random_split_prediction(0) == pytest.approx(2**0.56325)
        ratio = math.log2(random_split_prediction(50)) - math.log2(random_split_prediction(12))
        assert ratio == pytest.approx(0.369425 * 38)
