"""Burst deletion-insertion (DI) and deletion-substitution (DS) channels.

Two DI ball variants exist.  ``ball_di`` follows the full definition: the
inserted block's first symbol differs from the first deleted symbol and its
last symbol differs from the last deleted symbol.  ``partition_ball``
constrains only the first symbol and adds the tail-only sentinel cell; it is
the ball whose size has the closed form ``2^(2t2-2) (C(n-2t1+2, 2) + 1)``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import kernels
from .seqcore import BitSequence, bits, from_int, to_int, to_str

MODELS = ("DI", "DS")


@dataclass(frozen=True)
class Burst:
    position: int  # 1-based, original coordinates
    deleted: int  # t1
    block: BitSequence  # inserted (DI) or substituted (DS) symbols


@dataclass(frozen=True)
class BurstPattern:
    bursts: tuple
    model: str = "DI"

    @classmethod
    def of(cls, *bursts: tuple, model: str = "DI") -> "BurstPattern":
        return cls(tuple(Burst(i, t1, bits(b)) for i, t1, b in bursts), model)


class IllegalPattern(ValueError):
    pass


def _check_model(model: str) -> str:
    model = model.upper()
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    return model


def check_pattern(x: Sequence[int], p: BurstPattern) -> None:
    n = len(x)
    model = _check_model(p.model)
    prev_end = 0
    for b in p.bursts:
        i, t1, blk = b.position, b.deleted, b.block
        if i < 1 or i > n - t1 + 1:
            raise IndexError(f"burst position {i} out of range")
        if i <= prev_end:
            raise IllegalPattern("pattern violates burst definition: bursts overlap")
        if model == "DI":
            if blk and i <= n and blk[0] == x[i - 1]:
                raise IllegalPattern("pattern violates burst definition: b_1 = x_i")
            last = i + t1 - 1
            if blk and 1 <= last <= n and blk[-1] == x[last - 1]:
                raise IllegalPattern("pattern violates burst definition: last inserted symbol")
            prev_end = i + t1 - 1
        else:
            room = n - (i + t1) + 1
            if len(blk) > room:
                raise IllegalPattern("substitution window exceeds the word")
            if blk and t1 and blk[0] == x[i - 1]:
                raise IllegalPattern("pattern violates burst definition: b_1 = x_i")
            prev_end = i + t1 + len(blk) - 1


def apply(x: Sequence[int], p: BurstPattern) -> BitSequence:
    """Apply every burst of p to x; positions refer to x's coordinates."""
    x = tuple(x)
    check_pattern(x, p)
    out: list[int] = []
    cur = 1
    for b in p.bursts:
        out.extend(x[cur - 1 : b.position - 1])
        out.extend(b.block)
        cur = b.position + b.deleted
        if p.model.upper() == "DS":
            cur += len(b.block)
    out.extend(x[cur - 1 :])
    return tuple(out)


def _words(values: Iterable[int], n: int) -> set:
    return {from_int(v, n) for v in values}


def output_length(n: int, m: int, t1: int, t2: int, model: str = "DI") -> int:
    return n - m * t1 + (m * t2 if _check_model(model) == "DI" else 0)


def _ball(x, specs_list, model_code, constrain_last=True) -> set:
    x = tuple(x)
    n = len(x)
    xv = to_int(x)
    vals: set = set()
    nout = None
    for specs in specs_list:
        vals |= kernels.burst_outputs(xv, n, specs, model_code, constrain_last)
        if model_code == kernels.DI:
            nout = n - sum(a - b for a, b in specs)
        else:
            nout = n - sum(a for a, _ in specs)
    return _words(vals, nout)


def ball_di(x: Sequence[int], m: int, t1: int, t2: int) -> set:
    """B^DI_{m,(t1,t2)}(x) under the full burst definition."""
    if len(x) < m * t1:
        warnings.warn("word shorter than m*t1: empty ball", stacklevel=2)
        return set()
    return _ball(x, [[(t1, t2)] * m], kernels.DI)


def ball_di_first_only(x: Sequence[int], m: int, t1: int, t2: int) -> set:
    """m bursts with only the first inserted symbol constrained."""
    if len(x) < m * t1:
        warnings.warn("word shorter than m*t1: empty ball", stacklevel=2)
        return set()
    return _ball(x, [[(t1, t2)] * m], kernels.DI, constrain_last=False)


def ball_mixed(x: Sequence[int], t1: int, t2: int) -> set:
    """One (t1,t2)-DI burst together with one (t2,t1)-DI burst, either order."""
    return _ball(x, [[(t1, t2), (t2, t1)], [(t2, t1), (t1, t2)]], kernels.DI)


def ball_ds(x: Sequence[int], m: int, t1: int, t2: int) -> set:
    """B^DS_{m,(t1,t2)}(x); substitutions need not be contiguous."""
    if len(x) < m * t1:
        warnings.warn("word shorter than m*t1: empty ball", stacklevel=2)
        return set()
    return _ball(x, [[(t1, t2)] * m], kernels.DS)


def ball(x, m, t1, t2, model="DI") -> set:
    return ball_di(x, m, t1, t2) if _check_model(model) == "DI" else ball_ds(x, m, t1, t2)


def _valid_cell(n, i1, i2, t1):
    if (i1, i2) == (n - 2 * t1 + 2, n - t1 + 2):
        return True
    return 1 <= i1 and i1 <= i2 - t1 and i2 - t1 <= n - 2 * t1 + 1


def partition_cell(x: Sequence[int], i1: int, i2: int, t1: int, t2: int) -> set:
    """The cell B(x, i1, i2) of the two-burst partition.

    Interior cells keep x outside the two deleted blocks and force the first
    inserted symbol of each block to differ from the first deleted symbol.
    The sentinel pair (n-2t1+2, n-t1+2) keeps the prefix x_[n-2t1+1] and
    forces the next output symbol to differ from x_{n-2t1+2}.
    """
    x = tuple(x)
    n = len(x)
    if t2 < 1:
        raise ValueError("partition cells need t2 >= 1")
    if not _valid_cell(n, i1, i2, t1):
        raise ValueError(f"invalid index pair ({i1}, {i2})")
    out = set()
    if (i1, i2) == (n - 2 * t1 + 2, n - t1 + 2):
        keep = x[: n - 2 * t1 + 1]
        free = 2 * t2 - 1
        pivot = x[n - 2 * t1 + 1] if n - 2 * t1 + 1 < n else None
        for v in range(1 << free):
            tail = from_int(v, free)
            if pivot is not None and tail[0] == pivot:
                continue
            out.add(keep + tail)
        return out
    a = x[: i1 - 1]
    mid = x[i1 + t1 - 1 : i2 - 1]
    end = x[i2 + t1 - 1 :]
    for v1 in range(1 << t2):
        b1 = from_int(v1, t2)
        if b1[0] == x[i1 - 1]:
            continue
        for v2 in range(1 << t2):
            b2 = from_int(v2, t2)
            if b2[0] == x[i2 - 1]:
                continue
            out.add(a + b1 + mid + b2 + end)
    return out


def partition_pairs(n: int, t1: int):
    for i1 in range(1, n - 2 * t1 + 2):
        for i2 in range(i1 + t1, n - t1 + 2):
            yield i1, i2
    yield n - 2 * t1 + 2, n - t1 + 2


def partition_ball(x: Sequence[int], t1: int, t2: int) -> set:
    """Union of all partition cells (the partition-variant two-burst ball)."""
    out: set = set()
    for i1, i2 in partition_pairs(len(x), t1):
        out |= partition_cell(x, i1, i2, t1, t2)
    return out


def confusable(x, y, m, t1, t2, model="DI") -> bool:
    if len(x) != len(y):
        raise ValueError("length mismatch")
    bx = ball(x, m, t1, t2, model)
    return not bx.isdisjoint(ball(y, m, t1, t2, model))


def nbhd_di(x: Sequence[int], t1: int, t2: int, m: int = 2) -> set:
    """Words x' != x whose m-burst (t1,t2)-DI ball meets that of x.

    Computed by deleting/inserting forward to every output y, then applying
    the inverse (t2,t1) bursts to y.
    """
    x = tuple(x)
    n = len(x)
    if n <= m * t1:
        raise ValueError("word too short for the neighbourhood")
    if t1 < 1 or t2 < 1:
        raise ValueError("neighbourhood needs t1, t2 >= 1")
    vals = kernels.neighbourhood(to_int(x), n, [[(t1, t2)] * m], kernels.DI)
    return _words(vals, n)


def nbhd_ds(x: Sequence[int], t: int, m: int = 2) -> set:
    """Neighbourhood of x under m bursts of (1, t)-DS."""
    x = tuple(x)
    n = len(x)
    if n <= m:
        raise ValueError("word too short for the neighbourhood")
    vals = kernels.neighbourhood(to_int(x), n, [[(1, t)] * m], kernels.DS)
    return _words(vals, n)


def nbhd_mixed(x: Sequence[int], t1: int, t2: int) -> set:
    x = tuple(x)
    specs = [[(t1, t2), (t2, t1)], [(t2, t1), (t1, t2)]]
    return _words(kernels.neighbourhood(to_int(x), len(x), specs, kernels.DI), len(x))


@dataclass
class BallDump:
    n: int
    m: int
    t1: int
    t2: int
    model: str
    variant: str
    words: list = field(default_factory=list)

    def dumps(self) -> str:
        head = (f"# n={self.n} m={self.m} t1={self.t1} t2={self.t2} "
                f"model={self.model} variant={self.variant} size={len(self.words)}")
        return "\n".join([head] + [to_str(w) for w in sorted(self.words)]) + "\n"

    @classmethod
    def loads(cls, text: str) -> "BallDump":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        meta = dict(kv.split("=") for kv in lines[0].lstrip("# ").split())
        return cls(int(meta["n"]), int(meta["m"]), int(meta["t1"]), int(meta["t2"]),
                   meta["model"], meta["variant"], [bits(ln) for ln in lines[1:]])
