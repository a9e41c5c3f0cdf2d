import itertools
import random

import pytest

from burstcodes import code_general as G
from burstcodes.channel import BurstPattern, apply, nbhd_di
from burstcodes.seqcore import all_words, from_int, is_d_regular, to_int

DESK = dict(n=24, t1=3, t2=1, d=1.5, rho1=4, rho2=6)


@pytest.fixture(scope="module")
def prm():
    return G.make_params(**DESK)


@pytest.fixture(scope="module")
def sieve(prm):
    words, rows = G.sieve_words(prm)
    return words, G.psi_keys(words, rows, prm)


def test_windows_examples():
    assert G.windows(20, 4).windows == ((1, 8), (5, 12), (9, 16), (13, 20))
    assert G.windows(10, 3).windows == ((1, 6), (4, 9), (7, 10))
    with pytest.warns(UserWarning):
        assert G.windows(10, 12).windows == ((1, 10),)


@pytest.mark.parametrize("n,rho", [(20, 4), (10, 3), (24, 4), (24, 6), (31, 5)])
def test_every_rho_block_sits_in_a_window(n, rho):
    ws = G.windows(n, rho)
    for k in range(1, n - rho + 2):
        assert ws.containing(k, k + rho - 1)


def test_default_rhos_formula():
    import math
    r1, r2 = G.default_rhos(24, 3, 1, 1.5)
    lg = math.log2(12)
    assert r1 == math.ceil((1.5 * lg + 5) * 2) and r2 == math.ceil((4.5 * lg + 9) * 2)


EXAMPLE_X = (0, 1, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1, 0, 1, 1)


@pytest.mark.parametrize("i,block,start", [
    (4, (1, 0, 1, 0, 1, 1, 0), 2),   # (1,3)-DS at the second column
    (5, (1, 1, 1, 0, 0, 0, 1), 3),   # (1,2)-DS at the third column
    (5, (1, 1, 0, 0, 0, 0, 1), 4),   # (1,1)-DS at the fourth column
    (5, (1, 0, 0, 1, 1, 1, 1), 5),   # deletion at the fifth column
])
def test_observe_row_burst_worked_example(i, block, start):
    lo, hi = G.observe_row_burst(EXAMPLE_X, i, block, 10, 7)
    assert lo == start
    b_lo, b_hi = G.observation_window(i, 10, 7)
    assert b_lo <= lo and hi <= b_hi


def _legal_blocks(x, i, t1, t2):
    for blk in itertools.product((0, 1), repeat=t2):
        if blk[0] != x[i - 1] and blk[-1] != x[i + t1 - 2]:
            yield blk


def test_aligned_bursts_start_at_their_column():
    t1, t2 = 3, 1
    for x in all_words(12):
        for i in range(1, 12 - t1 + 2, 2):  # i in M
            for blk in _legal_blocks(x, i, t1, t2):
                assert G.observe_row_burst(x, i, blk, t1, t2)[0] == -(-i // 2)


def test_obs2_sweep_agrees_with_scalar():
    for n, t1, t2 in [(10, 3, 1), (10, 4, 2), (9, 4, 1)]:
        bad = tot = 0
        for x in all_words(n):
            for i in range(1, n - t1 + 2):
                for blk in _legal_blocks(x, i, t1, t2):
                    lo, hi = G.observe_row_burst(x, i, blk, t1, t2)
                    a, b = G.observation_window(i, t1, t2)
                    tot += 1
                    bad += not (a <= lo and hi <= b)
        res = G.obs2_sweep(n, t1, t2)
        assert (res["checked"], res["violations"]) == (tot, bad)


def test_ds_explanations_sequential():
    # column 2 deleted and column 3 turned 1 -> 0 gives 00010; then column 4
    # of that word deleted and column 5 turned 0 -> 0 gives 0000
    row = (0, 1, 1, 0, 1, 0)
    assert G.ds_explanations(row, (0, 0, 0, 0), 2) == [(2, 5)]
    assert G.ds_explanations(row, row[:4], 2)  # two deletions at the end


def _two(x, q1, b1, q2, b2, t1=3):
    return apply(x, BurstPattern.of((q1, t1, b1), (q2, t1, b2)))


def _member(prm, seed):
    rng = random.Random(seed)
    words, _ = G.sieve_words(prm)
    return from_int(int(words[rng.randrange(len(words))]), prm.n)


def test_locate_two_separate(prm):
    x = _member(prm, 1)
    pats = [p for p in G.two_burst_patterns(x, 3, 1) if p[1][0] - p[0][0] >= 14]
    (q1, b1), (q2, b2) = pats[0]
    y = _two(x, q1, b1, q2, b2)
    side = G.psi(x, prm)
    loc = G.locate(G.first_row(y, prm.w), side.f_first_row, prm.d, prm.tp, prm.w, prm.n)
    assert loc.case == "TwoSeparate"
    assert loc.row == G.first_row(x, prm.w)
    assert loc.within_bounds(prm) and loc.contains((q1, q2), 3)


def test_locate_one_joint(prm):
    x = _member(prm, 2)
    pats = [p for p in G.two_burst_patterns(x, 3, 1) if p[1][0] - p[0][0] == 3]
    (q1, b1), (q2, b2) = pats[len(pats) // 2]
    y = _two(x, q1, b1, q2, b2)
    loc = G.locate(G.first_row(y, prm.w), G.psi(x, prm).f_first_row, prm.d, prm.tp, prm.w, prm.n)
    assert loc.case == "OneJoint"
    assert loc.within_bounds(prm) and loc.contains((q1, q2), 3)


def test_locate_rejects_uncorrupted_row(prm):
    x = _member(prm, 3)
    with pytest.raises(G.InversionError):
        G.locate(G.first_row(x, prm.w), G.psi(x, prm).f_first_row, prm.d, prm.tp, prm.w, prm.n)


def test_phi_on_zero_word(prm):
    z = (0,) * 24
    f0 = prm.f1(z[:8])
    for a in range(3):
        cnt = sum(1 for j in range(1, prm.win1.count + 1) if j % 3 == a)
        assert G.phi(z, a, 0, prm) == cnt * f0 % (2 * prm.N1)
        assert G.phi(z, a, 1, prm) == sum(j * f0 for j in range(1, prm.win1.count + 1)
                                          if j % 3 == a) % (2 * 24 * prm.N1)


def test_perturbing_one_window_touches_its_class_only(prm):
    rng = random.Random(5)
    for _ in range(30):
        x = tuple(rng.randrange(2) for _ in range(24))
        y = tuple(rng.randrange(2) for _ in range(4)) + x[4:]  # bits only in window 1
        changed = prm.f1(x[:8]) != prm.f1(y[:8])
        for a in range(3):
            same = all(G.phi(x, a, i, prm) == G.phi(y, a, i, prm) for i in (0, 1))
            assert same if a != 1 else same != changed
        assert G.h_par(x, 0, prm) == G.h_par(y, 0, prm)
        assert G.g_par(x, 0, prm) == G.g_par(y, 0, prm)


def test_vectorized_keys_match_scalar(prm, sieve):
    words, keys = sieve
    rng = random.Random(6)
    for k in rng.sample(range(len(words)), 40):
        x = from_int(int(words[k]), 24)
        assert tuple(int(v) for v in keys[k]) == G.psi(x, prm).key()


def test_sieve_is_the_regular_rows(prm, sieve):
    words, _ = sieve
    assert len(words) == 138 << 12
    rng = random.Random(8)
    for k in rng.sample(range(len(words)), 50):
        assert is_d_regular(G.first_row(from_int(int(words[k]), 24), 2), 1.5)


def test_side_info_json_roundtrip(prm):
    side = G.psi(_member(prm, 4), prm)
    back = G.SideInfo.from_json(side.to_json())
    assert back.key() == side.key() and back.params == prm
    assert '"N3": "262144"' in side.to_json()


def test_encode_general_desk():
    book, side = G.encode_general(**DESK)
    assert len(book) >= 1
    for x in book:
        assert G.is_member(x, side)
        assert G.psi(x, side.params).key() == side.key()


def test_confusable_sieve_words_have_distinct_keys():
    # makes every coset code of the sieve an independent set
    prm = G.make_params(12, 3, 1, 2, 4, 6)
    words, rows = G.sieve_words(prm)
    keys = G.psi_keys(words, rows, prm)
    idx = {int(w): k for k, w in enumerate(words)}
    pairs = 0
    for k, w in enumerate(words):
        for y in nbhd_di(from_int(int(w), 12), 3, 1):
            j = idx.get(to_int(y))
            if j is not None:
                pairs += 1
                assert not (keys[k] == keys[j]).all()
    assert pairs > 0


def test_decode_small_code_all_patterns():
    book, side = G.encode_general(12, 3, 1, 2, rho1=4, rho2=6)
    for x in book:
        for pat in G.two_burst_patterns(x, 3, 1):
            assert G.decode_general(G.corrupt(x, pat, 3), side) == x


def test_decode_branches(prm):
    x = _member(prm, 10)
    side = G.psi(x, prm)
    seen = set()
    for pat in G.two_burst_patterns(x, 3, 1):
        r = G.decode_general_report(G.corrupt(x, pat, 3), side)
        assert r.word == x and len(r.survivors) == 1
        seen.add(r.branch.split("(")[0])
    assert {"phi", "h", "g"} <= seen  # separated, one-window and wide-window paths


def test_decode_separated_uses_phi(prm):
    x = _member(prm, 11)
    side = G.psi(x, prm)
    far = [p for p in G.two_burst_patterns(x, 3, 1) if p[0][0] <= 3 and p[1][0] >= 19]
    r = G.decode_general_report(G.corrupt(x, far[0], 3), side)
    assert r.word == x and r.branch.startswith("phi")


def test_decode_errors(prm):
    x = _member(prm, 12)
    side = G.psi(x, prm)
    with pytest.raises(G.DecodeError) as e:
        G.decode_general(x, side)
    assert e.value.reason == G.UNDECODABLE
    y = G.corrupt(x, next(G.two_burst_patterns(x, 3, 1)), 3)
    other = G.psi(_member(prm, 13), prm)
    with pytest.raises(G.DecodeError):
        G.decode_general(y, other)


def test_corrupt_matches_channel(prm):
    x = _member(prm, 14)
    for pat in itertools.islice(G.two_burst_patterns(x, 3, 1), 0, 200, 9):
        (q1, b1), (q2, b2) = pat
        assert G.corrupt(x, pat, 3) == _two(x, q1, b1, q2, b2)
