import random

import pytest

from burstcodes.regular_enc import (RegularityError, count, first_row_reg_dec, first_row_reg_enc,
                                    reg_dec, reg_enc)
from burstcodes.seqcore import all_words, fold, from_int, is_d_regular


@pytest.mark.parametrize("n,d", [(n, d) for d in (1.0, 1.34, 1.5, 2.0)
                                 for n in range(1, 15 if d < 1.4 else 13)])
def test_count_matches_brute_force(n, d):
    assert count(n, d) == sum(1 for x in all_words(n) if is_d_regular(x, d))


def test_counts_frozen():
    assert (count(12, 1.5), count(13, 1.5)) == (138, 186)
    assert (count(12, 2), count(13, 2)) == (1234, 1992)
    assert (count(12, 2.5), count(13, 2.5)) == (1938, 4640)


def test_smallest_message():
    regular = [x for x in all_words(10) if is_d_regular(x, 1.5)]
    assert reg_enc(0, 10, 1.5) == min(regular)


def test_roundtrip_all_messages_n12():
    d = 1.5
    seen = []
    for m in range(count(12, d)):
        x = reg_enc(m, 12, d)
        assert is_d_regular(x, d)
        assert reg_dec(x, d) == m
        seen.append(x)
    assert seen == sorted(seen)  # lexicographic ranking


def test_reg_enc_range_and_input_checks():
    with pytest.raises(ValueError):
        reg_enc(count(12, 1.5), 12, 1.5)
    with pytest.raises(ValueError):
        reg_dec((0,) * 12, 1.5)


def test_first_row_encoder_infeasible_at_tight_d():
    # only 186 regular rows of length 13 exist for 4096 first rows
    with pytest.raises(RegularityError):
        first_row_reg_enc((0,) * 24, 3, 1, 1.5)


def test_first_row_encoder_roundtrip_n24():
    d, t1, t2 = 2.5, 3, 1
    rng = random.Random(7)
    rows = [from_int(m, 12) for m in range(1 << 12)]
    for row in rows:
        x = [rng.randrange(2) for _ in range(24)]
        x[0::2] = row
        x = tuple(x)
        y = first_row_reg_enc(x, t1, t2, d)
        assert len(y) == 25
        assert is_d_regular(fold(y, 2).row(1), d)
        assert first_row_reg_dec(y, t1, t2, d) == x


def test_first_row_encoder_when_width_does_not_divide():
    d, t1, t2 = 2.5, 4, 1  # w = 3, n = 20: 7 columns, last one padded
    for v in range(0, 1 << 20, 4099):
        x = from_int(v, 20)
        y = first_row_reg_enc(x, t1, t2, d)
        assert len(y) == 21
        assert is_d_regular(fold(y[:20], 3).row(1), d)
        assert first_row_reg_dec(y, t1, t2, d) == x
