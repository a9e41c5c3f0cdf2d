import itertools

import pytest

from burstcodes.channel import (BallDump, BurstPattern, IllegalPattern, apply, ball_di, ball_ds,
                                confusable, nbhd_di, nbhd_ds, partition_ball, partition_cell,
                                partition_pairs)
from burstcodes.analysis import outputs, ball_size_closed_form
from burstcodes.seqcore import all_words, bits, fold, to_int


def di_oracle(x, m, t1, t2):
    """Ball of m non-overlapping (t1,t2)-DI bursts, straight from the definition."""
    n = len(x)
    out = set()
    blocks = list(itertools.product((0, 1), repeat=t2))
    for pos in itertools.combinations(range(1, n - t1 + 2), m):
        if any(b - a < t1 for a, b in zip(pos, pos[1:])):
            continue
        for chosen in itertools.product(blocks, repeat=m):
            ok = all(not t2 or (b[0] != x[i - 1] and b[-1] != x[i + t1 - 2])
                     for i, b in zip(pos, chosen))
            if ok:
                out.add(apply(x, BurstPattern.of(*[(i, t1, b) for i, b in zip(pos, chosen)])))
    return out


def test_apply_worked_example():
    x = (0, 1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1, 0, 1, 1)
    y = apply(x, BurstPattern.of((4, 10, (1, 0, 1, 0, 1, 1, 0))))
    assert len(y) == 15
    assert fold(y, 3).rows() == [(0, 1, 0, 0, 0), (1, 0, 1, 0, 1), (1, 1, 1, 1, 1)]


def test_apply_lengths():
    x = bits("01101001")
    y = apply(x, BurstPattern.of((2, 3, (0, 1, 1))))  # deleted 110 with ends flipped
    assert len(y) == len(x)
    assert apply(x, BurstPattern.of((1, 2, ()), (5, 2, ()))) == x[2:4] + x[6:]


def test_apply_rejects_illegal():
    x = bits("0000")
    with pytest.raises(IllegalPattern):
        apply(x, BurstPattern.of((1, 1, (0,))))
    with pytest.raises(IllegalPattern):
        apply(x, BurstPattern.of((1, 2, (1,)), (2, 2, (1,))))
    with pytest.raises(IndexError):
        apply(x, BurstPattern.of((4, 2, (1,))))


def test_ball_di_examples():
    assert ball_di((0, 0), 1, 1, 1) == {(1, 0), (0, 1)}
    assert ball_di((0, 0, 0), 2, 1, 1) == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}
    assert ball_di((0, 0, 0, 0), 1, 2, 0) == {(0, 0)}


@pytest.mark.parametrize("t1,t2", [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2)])
def test_ball_di_matches_oracle(t1, t2):
    for n in range(2 * t1 + 1, 2 * t1 + 5):
        for x in all_words(n):
            assert ball_di(x, 2, t1, t2) == di_oracle(x, 2, t1, t2), x
            assert ball_di(x, 1, t1, t2) == di_oracle(x, 1, t1, t2), x


def ds_oracle(x, m, t1, t2):
    """m non-overlapping (t1,t2)-DS bursts, window truncated at the word end."""
    n = len(x)
    out = set()

    def rec(k, start, acc):
        if k == m:
            out.add(acc + x[start - 1:])
            return
        for i in range(start, n - t1 + 2):
            room = min(t2, n - (i + t1) + 1)
            for blk in itertools.product((0, 1), repeat=room):
                if room and t1 and blk[0] == x[i - 1]:
                    continue
                rec(k + 1, i + t1 + room, acc + x[start - 1:i - 1] + blk)

    rec(0, 1, ())
    return out


def test_ball_ds_examples():
    assert ball_ds((0, 0, 0, 0), 2, 1, 0) == ball_di((0, 0, 0, 0), 2, 1, 0)
    assert ball_ds((0, 1), 1, 1, 1) == {(1,), (0,)}
    b = ball_ds((0, 0, 0, 0), 1, 1, 2)
    assert (1, 1, 0) in b and (1, 0, 0) in b and all(len(y) == 3 for y in b)


@pytest.mark.parametrize("t1,t2", [(1, 1), (1, 2), (2, 1)])
def test_ball_ds_matches_oracle(t1, t2):
    for n in range(2 * t1 + 1, 9):
        for x in all_words(n):
            assert ball_ds(x, 2, t1, t2) == ds_oracle(x, 2, t1, t2), x


def test_partition_sentinel_size():
    for t2 in (1, 2, 3):
        for x in all_words(9):
            t1 = 3
            cell = partition_cell(x, 9 - 2 * t1 + 2, 9 - t1 + 2, t1, t2)
            assert len(cell) == 2 ** (2 * t2 - 2)


@pytest.mark.parametrize("t1,t2", [(2, 1), (3, 1), (3, 2)])
def test_partition_cells_tile_the_ball(t1, t2):
    for n in (8, 10):
        for x in itertools.islice(all_words(n), 0, 1 << n, 7):
            cells = [partition_cell(x, i1, i2, t1, t2) for i1, i2 in partition_pairs(n, t1)]
            union = set().union(*cells)
            assert sum(map(len, cells)) == len(union)  # pairwise disjoint
            assert union == partition_ball(x, t1, t2)
            assert union == {tuple(int(c) for c in format(y, f"0{n - 2 * t1 + 2 * t2}b"))
                             for y in outputs(to_int(x), n, 2, t1, t2, "DI", "partition")}
            assert len(union) == ball_size_closed_form(n, t1, t2)


def test_confusable():
    x, y = (0, 0, 0, 0), (1, 1, 1, 1)
    assert confusable(x, x, 1, 1, 1)
    assert not confusable(x, y, 1, 1, 1)
    for a, b in itertools.combinations(all_words(6), 2):
        assert confusable(a, b, 2, 2, 1) == confusable(b, a, 2, 2, 1)


def _nbhd_oracle(x, m, t1, t2, ball):
    bx = ball(x)
    return {y for y in all_words(len(x)) if y != x and not bx.isdisjoint(ball(y))}


def test_nbhd_di_against_all_pairs_scan():
    for x in itertools.islice(all_words(8), 0, 256, 5):
        nb = nbhd_di(x, 2, 1)
        assert nb == _nbhd_oracle(x, 2, 2, 1, lambda z: ball_di(z, 2, 2, 1))
        assert x not in nb
        assert all(x in nbhd_di(y, 2, 1) for y in nb)


def test_nbhd_ds_against_all_pairs_scan():
    for x in itertools.islice(all_words(8), 0, 256, 5):
        nb = nbhd_ds(x, 1)
        assert nb == _nbhd_oracle(x, 2, 1, 1, lambda z: ball_ds(z, 2, 1, 1))
        assert x not in nb and all(x in nbhd_ds(y, 1) for y in nb)


def test_nbhd_ds_zero_golden():
    # frozen from the all-pairs oracle above
    assert len(nbhd_ds((0,) * 8, 1)) == len(_nbhd_oracle((0,) * 8, 2, 1, 1, lambda z: ball_ds(z, 2, 1, 1)))
    assert len(nbhd_ds((0,) * 8, 1)) == 246


def test_ball_dump_roundtrip():
    d = BallDump(6, 2, 2, 1, "DI", "definition", sorted(ball_di(bits("010011"), 2, 2, 1)))
    back = BallDump.loads(d.dumps())
    assert back == d
