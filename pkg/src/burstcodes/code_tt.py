"""Codes for two bursts of (t,t)-DI: fold to 2^(t-1)-ary symbols, RS coset.

A (t,t)-DI burst rewrites t consecutive bits, which touches at most two
consecutive (t-1)-bit blocks, so two bursts change at most four symbols of
the folded word.  A distance-9 RS coset therefore separates codewords.  For
t = 1 a burst is a single bit flip and a distance-5 code on the bits is used.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import gfrs
from .channel import ball_di
from .codebook import Codebook
from .seqcore import (BitSequence, QarySequence, exhaustive_limit, fold_qary, from_int,
                      to_int, unfold_qary)


def _folded(x, t) -> tuple:
    return tuple(x) if t == 1 else fold_qary(x, t).symbols


def lemma4_violations(x, t: int) -> list:
    """Single-burst patterns whose folded change is not two adjacent symbols."""
    if t < 2:
        raise ValueError("lemma4_check needs t >= 2")
    x = tuple(x)
    n = len(x)
    base = _folded(x, t)
    bad = []
    for i in range(1, n - t + 2):
        for v in range(1 << t):
            b = from_int(v, t)
            if b[0] == x[i - 1] or b[-1] == x[i + t - 2]:
                continue
            y = x[: i - 1] + b + x[i + t - 1:]
            changed = [k for k, (p, r) in enumerate(zip(base, _folded(y, t))) if p != r]
            if len(changed) > 2 or (len(changed) == 2 and changed[1] != changed[0] + 1):
                bad.append((i, b, changed))
    return bad


def lemma4_check(x, t: int) -> bool:
    return not lemma4_violations(x, t)


@dataclass(frozen=True)
class TTCode:
    n: int
    t: int
    rs: gfrs.RSCode
    u: tuple

    @property
    def q(self) -> int:
        return self.rs.q

    def syndrome(self, x) -> tuple:
        return gfrs.syndrome(_folded(x, self.t), self.rs)

    def __contains__(self, x) -> bool:
        x = tuple(x)
        return len(x) == self.n and self.syndrome(x) == gfrs.syndrome(self.u, self.rs)

    def meta(self) -> dict:
        return dict(construction="tt", n=self.n, t=self.t, q=self.q, k=self.rs.k, u=self.u)


def rs_for(n: int, t: int) -> gfrs.RSCode:
    if t < 1:
        raise ValueError("need t >= 1")
    if t == 1:
        return gfrs.make_code(n, 5)
    if n % (t - 1):
        raise ValueError("need (t-1) | n")
    N = n // (t - 1)
    if N <= 8:
        raise ValueError("need n/(t-1) > 8 for a distance-9 code")
    return gfrs.make_code(N, 9, min_q=(1 << (t - 1)) + 1)


def _syndrome_table(n: int, t: int, rs: gfrs.RSCode) -> list:
    """Syndromes of all 2^n words (index = big-endian word value)."""
    q = rs.q
    w = 1 if t == 1 else t - 1
    nsym = n // w
    hi_syms = nsym // 2
    lo_bits = (nsym - hi_syms) * w

    def part(nbits, offset):
        out = []
        for v in range(1 << nbits):
            word = [0] * rs.N
            syms = from_int(v, nbits)
            for k in range(nbits // w):
                word[offset + k] = to_int(syms[k * w:(k + 1) * w])
            out.append(gfrs.syndrome(word, rs))
        return out

    lo = part(lo_bits, hi_syms)
    hi = part(n - lo_bits, 0)
    return [tuple((a + b) % q for a, b in zip(h, l)) for h in hi for l in lo]


def build_code_tt(n: int, t: int, u=None) -> TTCode:
    """The shifted-RS code; u defaults to the most populous coset of Sigma_2^n."""
    rs = rs_for(n, t)
    if u is None:
        if n > exhaustive_limit(18):
            u = (0,) * rs.N
        else:
            sizes = Counter(_syndrome_table(n, t, rs))
            top = max(sizes.values())
            u = gfrs.shift_for_syndrome(rs, min(s for s, c in sizes.items() if c == top))
    u = tuple(int(v) % rs.q for v in u)
    if len(u) != rs.N:
        raise ValueError("shift length must equal the folded length")
    return TTCode(n, t, rs, u)


def enumerate_code(code: TTCode) -> Codebook:
    """All members of the code by exhaustive sieve."""
    if code.n > exhaustive_limit(18):
        raise ValueError(f"n={code.n} exceeds exhaustive budget")
    target = gfrs.syndrome(code.u, code.rs)
    table = _syndrome_table(code.n, code.t, code.rs)
    words = [from_int(v, code.n) for v, s in enumerate(table) if s == target]
    return Codebook(tuple(words), code.meta())


def decode_tt(x_prime, code: TTCode) -> BitSequence | None:
    """Codeword whose two-burst (t,t)-DI ball holds x_prime, or None on failure."""
    x_prime = tuple(x_prime)
    if len(x_prime) != code.n:
        return None
    c = gfrs.coset_decode(_folded(x_prime, code.t), code.rs, code.u)
    if c is None:
        return None
    if code.t == 1:
        if any(s > 1 for s in c):
            return None
        return tuple(c)
    w = code.t - 1
    if any(s >= 1 << w for s in c):
        return None
    return unfold_qary(QarySequence(tuple(c), w))[: code.n]


def brute_force_decode(x_prime, book: Codebook, t: int) -> BitSequence | None:
    """Unique codeword whose ball contains x_prime, searched over the codebook."""
    hits = [x for x in book if tuple(x_prime) in ball_di(x, 2, t, t)]
    return hits[0] if len(hits) == 1 else None
