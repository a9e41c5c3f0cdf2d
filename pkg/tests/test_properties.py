"""Randomised invariants (hypothesis)."""
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from burstcodes import gfrs, regular_enc
from burstcodes.channel import ball_di, ball_ds, confusable, nbhd_di
from burstcodes.codebook import Codebook, from_words
from burstcodes.seqcore import (fold, fold_qary, fold_rows, from_int, is_d_regular, to_int,
                                unfold, unfold_qary)

words = st.lists(st.integers(0, 1), min_size=1, max_size=40).map(tuple)


@given(words, st.integers(1, 7))
def test_fold_unfold(x, w):
    m = fold(x, w)
    assert unfold(m)[: len(x)] == x
    assert fold_rows(m.rows()) == m.padded
    assert all(len(r) == m.columns for r in m.rows())


@given(words, st.integers(2, 6))
def test_qary_roundtrip(x, t):
    q = fold_qary(x, t)
    assert unfold_qary(q)[: len(x)] == x


@given(st.integers(0, (1 << 20) - 1), st.integers(20, 24))
def test_int_roundtrip(v, n):
    assert to_int(from_int(v, n)) == v


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 255), st.integers(0, 255))
def test_confusability_is_symmetric(a, b):
    x, y = from_int(a, 8), from_int(b, 8)
    assert confusable(x, y, 2, 2, 1) == confusable(y, x, 2, 2, 1)
    assert (x != y and confusable(x, y, 2, 2, 1)) == (y in nbhd_di(x, 2, 1))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 1023))
def test_ball_lengths(v):
    x = from_int(v, 10)
    # constrained balls may be empty (e.g. 0101010101 has no legal (2,1) pair)
    assert {len(y) for y in ball_di(x, 2, 2, 1)} <= {8}
    assert {len(y) for y in ball_ds(x, 1, 1, 2)} == {9}


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_regular_codec(data):
    n = data.draw(st.integers(6, 30))
    d = data.draw(st.sampled_from([2.0, 2.5, 3.0]))
    total = regular_enc.count(n, d)
    m = data.draw(st.integers(0, total - 1))
    x = regular_enc.reg_enc(m, n, d)
    assert len(x) == n and is_d_regular(x, d)
    assert regular_enc.reg_dec(x, d) == m


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_rs_decodes_within_radius(data):
    code = gfrs.make_code(16, 7, q=17)
    msg = data.draw(st.lists(st.integers(0, 16), min_size=code.k, max_size=code.k))
    c = gfrs.rs_encode(msg, code)
    e = data.draw(st.integers(0, code.radius))
    pos = data.draw(st.lists(st.integers(0, 15), min_size=e, max_size=e, unique=True))
    y = list(c)
    for p in pos:
        y[p] = (y[p] + data.draw(st.integers(1, 16))) % 17
    assert gfrs.rs_decode(y, code) == c
    assert gfrs.syndrome(c, code) == (0,) * code.redundancy


@given(st.sets(st.integers(0, 4095), min_size=1, max_size=50), st.integers(0, 10 ** 6))
def test_codebook_dumps_loads(vals, seed):
    book = from_words([from_int(v, 12) for v in vals], construction="random", seed=seed)
    back = Codebook.loads(book.dumps())
    assert back.words == book.words and back.meta == book.meta
    k = random.Random(seed).randrange(len(book))
    assert back.index(book.encode(k)) == k
