"""Ranking encoder for d-regular sequences and the first-row regularizer.

Counting runs a DP over (last bit, steps since the last 00, steps since the
last 11), each distance capped at W - 1 where W = regular_window(n, d).
Once the scan reaches index W - 1 both distances must stay <= W - 2, which is
exactly the test done by ``is_d_regular``.  Sequences are ranked in
lexicographic (= numeric) order.
"""
from __future__ import annotations

import functools

from .seqcore import BitSequence, fold, from_int, is_d_regular, regular_window, to_int


def _step(state, bit: int, k: int, W: int):
    """Advance the DP state by appending ``bit`` at 0-based index k (None = dead)."""
    last, a, b = state
    a = min(a + 1, W - 1)
    b = min(b + 1, W - 1)
    if last == bit:
        if bit:
            b = 0
        else:
            a = 0
    if k >= W - 1 and (a > W - 2 or b > W - 2):
        return None
    return (bit, a, b)


@functools.lru_cache(maxsize=None)
def _table(n: int, W: int) -> list:
    """tab[k][state] = number of valid completions after k symbols."""
    tab = [dict() for _ in range(n + 1)]
    states = [(last, a, b) for last in (0, 1) for a in range(W) for b in range(W)]
    for s in states:
        tab[n][s] = 1
    for k in range(n - 1, 0, -1):
        for s in states:
            tot = 0
            for bit in (0, 1):
                nxt = _step(s, bit, k, W)
                if nxt is not None:
                    tot += tab[k + 1][nxt]
            tab[k][s] = tot
    return tab


def _start(bit: int, W: int):
    return (bit, W - 1, W - 1)


def _first_ok(W: int) -> bool:
    # a length-1 prefix can only fail when W == 1 (no window holds a pair)
    return W > 1


def count(n: int, d: float) -> int:
    """Number of d-regular sequences of length n."""
    if n < 1:
        return 1
    W = regular_window(n, d)
    if W > n:
        return 1 << n
    if not _first_ok(W):
        return 0
    tab = _table(n, W)
    return sum(tab[1][_start(b, W)] for b in (0, 1))


def reg_enc(msg: int, n: int, d: float) -> BitSequence:
    """The msg-th d-regular sequence of length n in lexicographic order."""
    total = count(n, d)
    if not 0 <= msg < total:
        raise ValueError(f"message {msg} out of range [0, {total})")
    W = regular_window(n, d)
    if W > n:
        return from_int(msg, n)
    tab = _table(n, W)
    out = []
    state = None
    for k in range(n):
        for bit in (0, 1):
            nxt = _start(bit, W) if k == 0 else _step(state, bit, k, W)
            c = 0 if nxt is None else tab[k + 1][nxt]
            if msg < c:
                out.append(bit)
                state = nxt
                break
            msg -= c
    return tuple(out)


def reg_dec(x, d: float) -> int:
    """Rank of a d-regular sequence (inverse of reg_enc)."""
    x = tuple(x)
    n = len(x)
    if not is_d_regular(x, d):
        raise ValueError("sequence is not d-regular")
    W = regular_window(n, d)
    if W > n:
        return to_int(x)
    tab = _table(n, W)
    rank = 0
    state = None
    for k, bit in enumerate(x):
        if bit:
            zero = _start(0, W) if k == 0 else _step(state, 0, k, W)
            if zero is not None:
                rank += tab[k + 1][zero]
        state = _start(bit, W) if k == 0 else _step(state, bit, k, W)
    return rank


class RegularityError(ValueError):
    pass


def _layout(n: int, w: int):
    c = -(-n // w)
    return c, n % w == 0


def first_row_reg_enc(x, t1: int, t2: int, d: float) -> BitSequence:
    """Length-(n+1) word whose width-(t1-t2) folding has a d-regular first row.

    When (t1-t2) | n the first row grows by one column and the extra symbol
    lands at position n+1.  Otherwise x is zero-padded to full columns first,
    the first row keeps its length, and the overflow bit of the rank goes to
    position n+1 (which then lies outside the first row).
    """
    if t1 <= t2 or t2 < 0:
        raise ValueError("need t1 > t2 >= 0")
    x = tuple(x)
    n = len(x)
    w = t1 - t2
    c, divides = _layout(n, w)
    row = fold(x, w).row(1)
    m = to_int(row)
    out = list(x) + [0]
    if divides:
        if count(c + 1, d) < 1 << c:
            raise RegularityError(f"too few {d}-regular rows of length {c + 1}")
        u = reg_enc(m, c + 1, d)
        out[n] = u[c]
    else:
        nc = count(c, d)
        if 2 * nc < 1 << c:
            raise RegularityError(f"too few {d}-regular rows of length {c}")
        u = reg_enc(m % nc, c, d)
        out[n] = m // nc
    for j in range(c):
        out[j * w] = u[j]
    return tuple(out)


def first_row_reg_dec(y, t1: int, t2: int, d: float) -> BitSequence:
    y = tuple(y)
    n = len(y) - 1
    w = t1 - t2
    c, divides = _layout(n, w)
    if divides:
        u = tuple(y[j * w] for j in range(c)) + (y[n],)
        m = reg_dec(u, d)
    else:
        u = tuple(y[j * w] for j in range(c))
        m = reg_dec(u, d) + count(c, d) * y[n]
    if m >= 1 << c:
        raise ValueError("not an image of first_row_reg_enc")
    row = from_int(m, c)
    out = list(y[:n])
    for j in range(c):
        out[j * w] = row[j]
    return tuple(out)
