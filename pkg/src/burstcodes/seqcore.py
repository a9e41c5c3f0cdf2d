"""Bit-sequence primitives: runs, alternating substrings, d-regularity and folding.

Bit sequences are plain tuples of 0/1 ints.  Positions in the public API are
1-based and intervals are closed ``(start, end)`` pairs.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

BitSequence = tuple  # tuple[int, ...] of 0/1

DEFAULT_D = 7.0


def bits(value: Iterable[int] | str) -> BitSequence:
    """Coerce a '0'/'1' string or an iterable of ints into a bit tuple."""
    if isinstance(value, str):
        value = value.strip()
        if any(c not in "01" for c in value):
            raise ValueError(f"not a bit string: {value!r}")
        return tuple(int(c) for c in value)
    out = tuple(int(b) for b in value)
    if any(b not in (0, 1) for b in out):
        raise ValueError("bit sequences hold only 0 and 1")
    return out


def to_str(x: Sequence[int]) -> str:
    return "".join(map(str, x))


def to_int(x: Sequence[int]) -> int:
    """Big-endian integer value; x[0] is the most significant bit."""
    v = 0
    for b in x:
        v = (v << 1) | b
    return v


def from_int(value: int, n: int) -> BitSequence:
    return tuple((value >> (n - 1 - k)) & 1 for k in range(n))


def all_words(n: int):
    """All length-n words in lexicographic order."""
    for v in range(1 << n):
        yield from_int(v, n)


def runs(x: Sequence[int]) -> list[tuple[int, int]]:
    if not x:
        raise ValueError("empty input")
    out = []
    start = 1
    for k in range(1, len(x)):
        if x[k] != x[k - 1]:
            out.append((start, k))
            start = k + 1
    out.append((start, len(x)))
    return out


def alternating_intervals(x: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal intervals on which x_k = x_{k+2} holds throughout.

    Neighbouring maximal intervals share exactly one index, e.g. ``0010``
    gives ``[(1, 2), (2, 4)]``.  Runs are period-2 as well and are included.
    """
    if not x:
        raise ValueError("empty input")
    n = len(x)
    out = []
    start = 1
    for k in range(1, n - 1):  # 1-based k, checks x_k vs x_{k+2}
        if x[k - 1] != x[k + 1]:
            out.append((start, k + 1))
            start = k + 1
    out.append((start, n))
    return out


def regular_window(n: int, d: float) -> int:
    """Window length ceil(d * log2 n) used by the regularity scan."""
    if n <= 1:
        return 1
    return math.ceil(d * math.log2(n) - 1e-12)


def is_d_regular(x: Sequence[int], d: float = DEFAULT_D) -> bool:
    n = len(x)
    w = regular_window(n, d)
    if w > n:
        return True
    # last index (0-based) at which a 00 / 11 pair ends
    last00 = last11 = -10**9
    for k in range(n):
        if k >= 1 and x[k] == x[k - 1]:
            if x[k]:
                last11 = k
            else:
                last00 = k
        if k >= w - 1:
            lo = k - w + 2  # pair must end at or after the window's 2nd index
            if last00 < lo or last11 < lo:
                return False
    return True


@dataclass(frozen=True)
class FoldedMatrix:
    """Column-major folding of a bit sequence into ``width`` rows."""

    width: int
    pad_count: int
    source: BitSequence

    @property
    def columns(self) -> int:
        return (len(self.source) + self.pad_count) // self.width

    @property
    def padded(self) -> BitSequence:
        return tuple(self.source) + (0,) * self.pad_count

    def entry(self, r: int, c: int) -> int:
        """1-based entry (row r, column c)."""
        return self.padded[(c - 1) * self.width + (r - 1)]

    def row(self, r: int) -> BitSequence:
        return self.padded[r - 1 :: self.width]

    def rows(self) -> list[BitSequence]:
        return [self.row(r) for r in range(1, self.width + 1)]


def fold(x: Sequence[int], w: int) -> FoldedMatrix:
    if w < 1:
        raise ValueError("fold width must be positive")
    pad = (-len(x)) % w
    return FoldedMatrix(w, pad, tuple(x))


def unfold(m: FoldedMatrix) -> BitSequence:
    """Inverse of fold, including the zero padding."""
    return m.padded


def fold_rows(rows: Sequence[Sequence[int]]) -> BitSequence:
    """Interleave equal-length rows back into one sequence."""
    w = len(rows)
    cols = len(rows[0])
    return tuple(rows[r][c] for c in range(cols) for r in range(w))


@dataclass(frozen=True)
class QarySequence:
    symbols: tuple
    exponent: int  # alphabet is 2**exponent

    def __post_init__(self):
        q = 1 << self.exponent
        if any(not 0 <= s < q for s in self.symbols):
            raise ValueError("symbol out of alphabet range")


def fold_qary(x: Sequence[int], t: int) -> QarySequence:
    """Read x in big-endian blocks of t-1 bits (zero padded at the end)."""
    if t < 2:
        raise ValueError("fold_qary needs t >= 2")
    w = t - 1
    padded = tuple(x) + (0,) * ((-len(x)) % w)
    syms = tuple(to_int(padded[k : k + w]) for k in range(0, len(padded), w))
    return QarySequence(syms, w)


def unfold_qary(q: QarySequence) -> BitSequence:
    out: list[int] = []
    for s in q.symbols:
        out.extend(from_int(s, q.exponent))
    return tuple(out)


def exhaustive_limit(default: int = 14) -> int:
    """Largest n for 2^n enumerations; ``BURSTCODES_BUDGET`` overrides."""
    raw = os.environ.get("BURSTCODES_BUDGET")
    return int(raw) if raw else default
