"""Codes for two bursts of (t1,t2)-DI with t1 > t2.

The word is folded into t1 - t2 rows.  A burst of (t1,t2)-DI shows up in the
first row as a burst of (1,t'-1)-DS, so a syndrome on a d-regular first row
recovers that row and pins the bursts down to short intervals.  The rest is
handled by window checksums: phi (one burst per window, three classes mod 3,
weights j^0 and j^1), h (both bursts in one rho1 window) and g (both bursts in
one rho2 window).  Decoding tries every window hypothesis consistent with the
located intervals and keeps the candidates that re-encode to the side info.
"""
from __future__ import annotations

import functools
import itertools
import json
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import syncomp
from .channel import ball_di
from .codebook import Codebook
from .regular_enc import count as regular_count, reg_enc
from .seqcore import BitSequence, DEFAULT_D, exhaustive_limit, fold, from_int, is_d_regular, to_int
from .syncomp import CompressedSyndrome, InversionError, t_prime


# windows -----------------------------------------------------------------

@dataclass(frozen=True)
class WindowScheme:
    n: int
    rho: int
    windows: tuple  # 1-based closed intervals, windows[j-1] = L_j

    @property
    def count(self) -> int:
        return len(self.windows)

    def window(self, j: int) -> tuple:
        return self.windows[j - 1]

    def length(self, j: int) -> int:
        lo, hi = self.windows[j - 1]
        return hi - lo + 1

    def containing(self, lo: int, hi: int) -> list:
        return [j for j, (a, b) in enumerate(self.windows, 1) if a <= lo and hi <= b]

    def meeting(self, lo: int, hi: int) -> list:
        return [j for j, (a, b) in enumerate(self.windows, 1) if a <= hi and lo <= b]


def windows(n: int, rho: int) -> WindowScheme:
    if rho < 1:
        raise ValueError("need rho >= 1")
    if rho >= n:
        warnings.warn(f"rho={rho} >= n={n}: using the single window [1, {n}]")
        return WindowScheme(n, rho, ((1, n),))
    count = -(-n // rho) - 1
    if count <= 1:
        return WindowScheme(n, rho, ((1, n),))
    ws = [((j - 1) * rho + 1, (j + 1) * rho) for j in range(1, count)]
    ws.append(((count - 1) * rho + 1, n))
    return WindowScheme(n, rho, tuple(ws))


def default_rhos(n: int, t1: int, t2: int, d: float) -> tuple:
    w = t1 - t2
    tp = t_prime(t1, t2)
    lg = math.log2(n / w)
    return (math.ceil((d * lg + 2 * tp + 1) * w), math.ceil((3 * d * lg + 4 * tp + 1) * w))


# parameters ----------------------------------------------------------------

def _enc_table(sch: syncomp.SyndromeScheme) -> np.ndarray:
    h = sch.h_table
    shift = 1 << sch.width
    return np.array([(a - 1) * shift + hv % a for a, hv in zip(sch.a_table, h)], dtype=np.int64)


@dataclass(frozen=True)
class GeneralParams:
    n: int
    t1: int
    t2: int
    d: float
    rho1: int
    rho2: int

    def __post_init__(self):
        if not self.t1 > self.t2 >= 1:
            raise ValueError("need t1 > t2 >= 1")

    @property
    def w(self) -> int:
        return self.t1 - self.t2

    @property
    def tp(self) -> int:
        return t_prime(self.t1, self.t2)

    @property
    def columns(self) -> int:
        return -(-self.n // self.w)

    @functools.cached_property
    def win1(self) -> WindowScheme:
        return windows(self.n, self.rho1)

    @functools.cached_property
    def win2(self) -> WindowScheme:
        return windows(self.n, self.rho2)

    def row_scheme(self) -> syncomp.SyndromeScheme:
        return syncomp.scheme(self.columns, "DS2", 1, self.tp - 1)

    def s1(self, length: int) -> syncomp.SyndromeScheme:
        return syncomp.scheme(length, "DI1", self.t1, self.t2)

    def s2(self, length: int) -> syncomp.SyndromeScheme:
        return syncomp.scheme(length, "DI2", self.t1, self.t2)

    def _modulus(self, ws: WindowScheme, make) -> int:
        return 1 << (2 * max(make(ws.length(j)).width for j in range(1, ws.count + 1)))

    @functools.cached_property
    def N1(self) -> int:
        return self._modulus(self.win1, self.s1)

    @functools.cached_property
    def N2(self) -> int:
        return self._modulus(self.win1, self.s2)

    @functools.cached_property
    def N3(self) -> int:
        return self._modulus(self.win2, self.s2)

    def f1(self, seg) -> int:
        return self.s1(len(seg)).f(seg).enc

    def f2(self, seg) -> int:
        return self.s2(len(seg)).f(seg).enc

    def meta(self) -> dict:
        return dict(n=self.n, t1=self.t1, t2=self.t2, d=self.d, rho1=self.rho1, rho2=self.rho2)


def make_params(n: int, t1: int, t2: int, d: float = DEFAULT_D, rho1=None, rho2=None) -> GeneralParams:
    r1, r2 = default_rhos(n, t1, t2, d)
    return GeneralParams(n, t1, t2, d, rho1 or r1, rho2 or r2)


# checksums -----------------------------------------------------------------

def _seg(x, ws: WindowScheme, j: int) -> tuple:
    lo, hi = ws.window(j)
    return tuple(x[lo - 1:hi])


def phi(x, a: int, i: int, prm: GeneralParams) -> int:
    ws = prm.win1
    tot = sum(j ** i * prm.f1(_seg(x, ws, j)) for j in range(1, ws.count + 1) if j % 3 == a)
    return tot % (2 * prm.n ** i * prm.N1)


def h_par(x, i: int, prm: GeneralParams) -> int:
    ws = prm.win1
    return sum(prm.f2(_seg(x, ws, j)) for j in range(1, ws.count + 1) if j % 2 == i) % prm.N2


def g_par(x, i: int, prm: GeneralParams) -> int:
    ws = prm.win2
    return sum(prm.f2(_seg(x, ws, j)) for j in range(1, ws.count + 1) if j % 2 == i) % prm.N3


def first_row(x, w: int) -> BitSequence:
    return fold(x, w).row(1)


@dataclass(frozen=True)
class SideInfo:
    params: GeneralParams
    f_first_row: CompressedSyndrome
    phi: tuple  # phi[a][i]
    h_par: tuple
    g_par: tuple

    def key(self) -> tuple:
        return (self.f_first_row.enc,) + sum(self.phi, ()) + self.h_par + self.g_par

    @property
    def moduli(self) -> dict:
        p = self.params
        return dict(N1=p.N1, N2=p.N2, N3=p.N3)

    def to_json(self) -> str:
        p = self.params
        s = str
        doc = dict(params={k: s(v) for k, v in p.meta().items()}, t_prime=s(p.tp),
                   moduli={k: s(v) for k, v in self.moduli.items()},
                   f_first_row=dict(a=s(self.f_first_row.a), residue=s(self.f_first_row.residue),
                                    B=s(self.f_first_row.width), enc=s(self.f_first_row.enc)),
                   phi=[[s(v) for v in row] for row in self.phi],
                   h_par=[s(v) for v in self.h_par], g_par=[s(v) for v in self.g_par])
        return json.dumps(doc, indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SideInfo":
        doc = json.loads(text)
        pm = doc["params"]
        prm = GeneralParams(int(pm["n"]), int(pm["t1"]), int(pm["t2"]), float(pm["d"]),
                            int(pm["rho1"]), int(pm["rho2"]))
        f = doc["f_first_row"]
        return cls(prm, CompressedSyndrome(int(f["a"]), int(f["residue"]), int(f["B"])),
                   tuple(tuple(int(v) for v in row) for row in doc["phi"]),
                   tuple(int(v) for v in doc["h_par"]), tuple(int(v) for v in doc["g_par"]))


def psi(x, prm: GeneralParams) -> SideInfo:
    x = tuple(x)
    if len(x) != prm.n:
        raise ValueError(f"word length {len(x)} != n = {prm.n}")
    return SideInfo(prm, prm.row_scheme().f(first_row(x, prm.w)),
                    tuple(tuple(phi(x, a, i, prm) for i in (0, 1)) for a in range(3)),
                    tuple(h_par(x, i, prm) for i in (0, 1)),
                    tuple(g_par(x, i, prm) for i in (0, 1)))


def side_from_key(key, prm: GeneralParams) -> SideInfo:
    key = [int(v) for v in key]
    return SideInfo(prm, CompressedSyndrome.from_enc(key[0], prm.row_scheme().width),
                    tuple(tuple(key[1 + 2 * a:3 + 2 * a]) for a in range(3)),
                    tuple(key[7:9]), tuple(key[9:11]))


# first-row view of one burst ---------------------------------------------------

def rewritten_columns(i: int, t1: int, t2: int, c: int) -> tuple:
    """First-row columns whose symbols a burst at i deletes (closed range).

    Columns of the corrupted first row from the first one up to the second
    endpoint minus one hold the rewritten symbols; later columns are the old
    ones shifted left by one.
    """
    w = t1 - t2
    return -(-(i - 1) // w) + 1, min(c, (i + t1 - 2) // w + 1)


def observe_row_burst(x, i: int, block, t1: int, t2: int) -> tuple:
    """Changed first-row columns (closed range) caused by one DI burst at i.

    The rewritten range is trimmed to the columns whose symbols actually
    differ; a pure deletion keeps one column.
    """
    from .channel import BurstPattern, apply
    x = tuple(x)
    y = apply(x, BurstPattern.of((i, t1, tuple(block))))
    w = t1 - t2
    row, row_y = first_row(x, w), first_row(y, w)
    k0, k1 = rewritten_columns(i, t1, t2, len(row))
    a, b = row[k0 - 1:k1], row_y[k0 - 1:k1 - 1]
    p = 0
    while p < len(b) and a[p] == b[p]:
        p += 1
    s = 0
    while s < len(b) - p and a[-1 - s] == b[-1 - s]:
        s += 1
    return k0 + p, k1 - s


def observation_window(i: int, t1: int, t2: int) -> tuple:
    b = -(-i // (t1 - t2))
    return b, b + t_prime(t1, t2) - 1


def obs2_sweep(n: int, t1: int, t2: int, chunk: int = 1 << 20) -> dict:
    """observe_row_burst containment for every word and single burst (vectorized)."""
    if n > exhaustive_limit(26):
        raise ValueError(f"n={n} exceeds exhaustive budget")
    w = t1 - t2
    c = -(-n // w)
    one = np.uint64(1)
    checked = violations = 0
    example = None
    for start in range(0, 1 << n, chunk):
        xs = np.arange(start, min(start + chunk, 1 << n), dtype=np.uint64)
        for i in range(1, n - t1 + 2):
            tail = n - i - t1 + 1
            pre = xs >> np.uint64(n - i + 1)
            suf = xs & np.uint64((1 << tail) - 1)
            xi = (xs >> np.uint64(n - i)) & one
            xl = (xs >> np.uint64(tail)) & one
            k0, k1 = rewritten_columns(i, t1, t2, c)
            lo_b, hi_b = observation_window(i, t1, t2)
            a = [(xs >> np.uint64(n - ((k - 1) * w + 1))) & one for k in range(k0, k1 + 1)]
            for blk in range(1 << t2):
                ok = (xi != np.uint64(blk >> (t2 - 1))) & (xl != np.uint64(blk & 1))
                if not ok.any():
                    continue
                ys = (((pre << np.uint64(t2)) | np.uint64(blk)) << np.uint64(tail)) | suf
                b = [(ys >> np.uint64(n - w - ((k - 1) * w + 1))) & one for k in range(k0, k1)]
                m = len(b)
                p = np.zeros(xs.shape, dtype=np.int64)
                alive = np.ones(xs.shape, dtype=bool)
                for k in range(m):
                    alive &= a[k] == b[k]
                    p += alive
                s = np.zeros(xs.shape, dtype=np.int64)
                alive = np.ones(xs.shape, dtype=bool)
                for k in range(m):
                    alive &= (a[-1 - k] == b[-1 - k]) & (s < m - p)
                    s += alive
                lo, hi = k0 + p, k1 - s
                bad = ok & ((lo < lo_b) | (hi > hi_b))
                checked += int(ok.sum())
                nb = int(bad.sum())
                if nb:
                    violations += nb
                    if example is None:
                        v = int(xs[np.argmax(bad)])
                        example = dict(x=from_int(v, n), i=i, block=from_int(blk, t2))
    return dict(checked=checked, violations=violations, example=example)


# locating ------------------------------------------------------------------

def ds_explanations(row, corrupted, tp: int) -> list:
    """Start columns (p1 <= p2, row coordinates) of every pair of (1,tp-1)-DS
    bursts, applied one after the other, that turn row into corrupted."""
    row, corrupted = tuple(row), tuple(corrupted)
    t2 = tp - 1

    def single(z):
        c = len(z)
        for p in range(1, c + 1):
            wl = min(t2, c - p)
            for blk in itertools.product((0, 1), repeat=wl):
                if wl and blk[0] == z[p - 1]:
                    continue
                yield p, z[:p - 1] + blk + z[p + wl:]

    out = set()
    for p1, y in single(row):
        for p2, z in single(y):
            if z == corrupted:
                q = p2 if p2 < p1 else p2 + 1
                out.add((min(p1, q), max(p1, q)))
    return sorted(out)


@dataclass(frozen=True)
class LocationReport:
    case: str  # "TwoSeparate" or "OneJoint"
    intervals: tuple  # J1, J2 or (J,), 1-based closed, x coordinates
    row_intervals: tuple  # I1, I2 or (I,), first-row coordinates
    row: BitSequence  # recovered first row

    def bound(self, prm: GeneralParams) -> float:
        lg = math.log2(prm.n / prm.w)
        if self.case == "TwoSeparate":
            return (prm.d * lg + 2 * prm.tp + 1) * prm.w
        return (3 * prm.d * lg + 4 * prm.tp + 1) * prm.w

    def within_bounds(self, prm: GeneralParams) -> bool:
        b = self.bound(prm) + 1e-9
        return all(hi - lo + 1 <= b for lo, hi in self.intervals)

    def contains(self, positions, t1: int) -> bool:
        """Every burst [q, q+t1-1] sits inside some reported interval."""
        return all(any(lo <= q and q + t1 - 1 <= hi for lo, hi in self.intervals) for q in positions)


def _to_x(I, tp: int, w: int, n: int) -> tuple:
    i, i2 = I
    return max(1, (i - tp - 1) * w + 2), min(n, (i2 + tp - 1) * w)


def locate(first_row_corrupt, f_row: CompressedSyndrome, d: float, tp: int, w: int, n: int) -> LocationReport:
    """Recover the first row, then bound where the two bursts happened."""
    corrupted = tuple(first_row_corrupt)
    c = -(-n // w)
    sch = syncomp.scheme(c, "DS2", 1, tp - 1)
    row = syncomp.invert_window(corrupted, f_row, sch)
    expl = ds_explanations(row, corrupted, tp)
    if not expl:
        raise InversionError("no two-burst explanation of the first row")
    # a deletion inside a run is only visible at the run's last column, so
    # every explanation also stands for the columns back to the run start
    start = list(range(1, c + 1))
    for k in range(1, c):
        if row[k] == row[k - 1]:
            start[k] = start[k - 1]
    I1 = (min(start[p - 1] for p, _ in expl), max(p for p, _ in expl))
    I2 = (min(start[p - 1] for _, p in expl), max(p for _, p in expl))
    if I1[1] < I2[0]:
        return LocationReport("TwoSeparate", (_to_x(I1, tp, w, n), _to_x(I2, tp, w, n)), (I1, I2), row)
    I = (I1[0], I2[1])
    return LocationReport("OneJoint", (_to_x(I, tp, w, n),), (I,), row)


# sieve ---------------------------------------------------------------------

def _scatter(values: np.ndarray, positions, n: int) -> np.ndarray:
    out = np.zeros(values.shape, dtype=np.uint64)
    m = len(positions)
    for k, p in enumerate(positions):
        out |= ((values >> np.uint64(m - 1 - k)) & np.uint64(1)) << np.uint64(n - p)
    return out


def _windows_of(words: np.ndarray, ws: WindowScheme, n: int):
    for j in range(1, ws.count + 1):
        lo, hi = ws.window(j)
        yield j, ((words >> np.uint64(n - hi)) & np.uint64((1 << (hi - lo + 1)) - 1)).astype(np.int64)


def psi_keys(words: np.ndarray, rows: np.ndarray, prm: GeneralParams) -> np.ndarray:
    """Vectorized psi keys (same layout as SideInfo.key) for n-bit words."""
    n = prm.n
    cols = [_enc_table(prm.row_scheme())[rows.astype(np.int64)]]
    f1 = {j: _enc_table(prm.s1(prm.win1.length(j)))[v] for j, v in _windows_of(words, prm.win1, n)}
    for a in range(3):
        for i in (0, 1):
            tot = np.zeros(words.shape, dtype=np.int64)
            for j, v in f1.items():
                if j % 3 == a:
                    tot += j ** i * v
            cols.append(tot % (2 * n ** i * prm.N1))
    for ws, mod in ((prm.win1, prm.N2), (prm.win2, prm.N3)):
        f2 = {j: _enc_table(prm.s2(ws.length(j)))[v] for j, v in _windows_of(words, ws, n)}
        for i in (0, 1):
            tot = np.zeros(words.shape, dtype=np.int64)
            for j, v in f2.items():
                if j % 2 == i:
                    tot += v
            cols.append(tot % mod)
    return np.column_stack(cols)


def sieve_words(prm: GeneralParams):
    """All n-bit words with a d-regular first row, as (words, first-row values)."""
    n, w = prm.n, prm.w
    c = prm.columns
    size = regular_count(c, prm.d) << (n - c)
    if size > 1 << exhaustive_limit(24):
        raise ValueError(f"sieve of {size} words exceeds the enumeration budget")
    p1 = [(k - 1) * w + 1 for k in range(1, c + 1)]
    rest = [p for p in range(1, n + 1) if p not in set(p1)]
    other = _scatter(np.arange(1 << len(rest), dtype=np.uint64), rest, n)
    rows = np.array([to_int(reg_enc(m, c, prm.d)) for m in range(regular_count(c, prm.d))],
                    dtype=np.uint64)
    heads = _scatter(rows, p1, n)
    words = (heads[:, None] | other[None, :]).ravel()
    return words, np.repeat(rows, len(other))


def encode_general(n: int, t1: int, t2: int, d: float = DEFAULT_D, target=None,
                   rho1=None, rho2=None) -> tuple:
    """(Codebook, SideInfo): words with a d-regular first row and psi = target.

    The target defaults to the most populous psi value (ties: least key).
    """
    prm = make_params(n, t1, t2, d, rho1, rho2)
    words, rows = sieve_words(prm)
    if not len(words):
        raise ValueError(f"no length-{prm.columns} first row is {d}-regular")
    keys = psi_keys(words, rows, prm)
    if target is None:
        uniq, counts = np.unique(keys, axis=0, return_counts=True)
        tkey = uniq[int(np.argmax(counts))]
        side = side_from_key(tkey, prm)
    else:
        side = target
        tkey = np.array(side.key(), dtype=np.int64)
    hit = (keys == tkey).all(axis=1)
    book = Codebook(tuple(from_int(int(v), n) for v in words[hit]),
                    dict(construction="general", **prm.meta()))
    return book, side


def is_member(x, side: SideInfo) -> bool:
    x = tuple(x)
    prm = side.params
    return (len(x) == prm.n and is_d_regular(first_row(x, prm.w), prm.d)
            and psi(x, prm).key() == side.key())


# decoding ------------------------------------------------------------------

class DecodeError(ValueError):
    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


UNDECODABLE = "undecodable"
AMBIGUOUS = "ambiguity — construction violation"


@dataclass
class DecodeOutcome:
    word: BitSequence
    branch: str
    location: LocationReport
    tried: int = 0
    survivors: list = field(default_factory=list)


def _known(xp, ws: WindowScheme, k: int, shift: int) -> tuple:
    lo, hi = ws.window(k)
    return tuple(xp[lo - 1 - shift:hi - shift])


def _invert(seg, enc: int, sch: syncomp.SyndromeScheme):
    try:
        fv = CompressedSyndrome.from_enc(enc, sch.width)
        return syncomp.invert_window(seg, fv, sch)
    except (ValueError, InversionError):
        return None


def _solve_pair(xp, side: SideInfo, j1: int, j2: int):
    """f1 values of windows j1 < j2 - 1 from the phi equations, or None."""
    prm = side.params
    ws, w, n = prm.win1, prm.w, prm.n
    near = {j1 - 1, j1, j1 + 1, j2 - 1, j2, j2 + 1}

    def shift(k):
        return 0 if k < j1 else (w if k < j2 else 2 * w)

    out = {}
    for own, other in ((j1, j2), (j2, j1)):
        a = own % 3
        unknown = sorted({own} | {k for k in (other - 1, other, other + 1)
                                  if 1 <= k <= ws.count and k % 3 == a})
        m0, m1 = 2 * prm.N1, 2 * n * prm.N1
        s0, s1 = side.phi[a]
        for k in range(1, ws.count + 1):
            if k % 3 == a and k not in near:
                v = prm.f1(_known(xp, ws, k, shift(k)))
                s0 -= v
                s1 -= k * v
        s0 %= m0
        s1 %= m1
        if len(unknown) == 1:
            if s1 != (own * s0) % m1:
                return None
            vals = {own: s0}
        else:
            k1, k2 = unknown
            num = s1 - k1 * s0
            if num % (k2 - k1):
                return None
            v2 = num // (k2 - k1)
            if not 0 <= v2 <= s0:
                return None
            vals = {k1: s0 - v2, k2: v2}
        if own not in vals:
            return None
        out[own] = vals[own]
    return out[j1], out[j2]


def _hyp_pair(xp, side: SideInfo, j1: int, j2: int):
    prm = side.params
    ws, w = prm.win1, prm.w
    vals = _solve_pair(xp, side, j1, j2)
    if vals is None:
        return None
    (lo1, hi1), (lo2, hi2) = ws.window(j1), ws.window(j2)
    a = _invert(xp[lo1 - 1:hi1 - w], vals[0], prm.s1(hi1 - lo1 + 1))
    b = _invert(xp[lo2 - 1 - w:hi2 - 2 * w], vals[1], prm.s1(hi2 - lo2 + 1))
    if a is None or b is None:
        return None
    return xp[:lo1 - 1] + a + xp[hi1 - w:lo2 - 1 - w] + b + xp[hi2 - 2 * w:]


def _hyp_single(xp, side: SideInfo, ws: WindowScheme, j: int, checks: tuple, modulus: int):
    prm = side.params
    w = prm.w
    v = checks[j % 2]
    for k in range(1, ws.count + 1):
        if k % 2 == j % 2 and k != j:
            v -= prm.f2(_known(xp, ws, k, 0 if k < j else 2 * w))
    lo, hi = ws.window(j)
    got = _invert(xp[lo - 1:hi - 2 * w], v % modulus, prm.s2(hi - lo + 1))
    if got is None:
        return None
    return xp[:lo - 1] + got + xp[hi - 2 * w:]


def hypotheses(loc: LocationReport, prm: GeneralParams) -> list:
    """(branch, args) hypotheses consistent with the location report."""
    w1, w2 = prm.win1, prm.win2
    if loc.case == "TwoSeparate":
        A = w1.meeting(*loc.intervals[0])
        B = w1.meeting(*loc.intervals[1])
        span = (loc.intervals[0][0], loc.intervals[1][1])
    else:
        A = B = w1.meeting(*loc.intervals[0])
        span = loc.intervals[0]
    out = [("phi", (j1, j2)) for j1 in A for j2 in B if j2 >= j1 + 2]
    out += [("h", (j,)) for j in w1.meeting(*span)]
    out += [("g", (j,)) for j in w2.meeting(*span)]
    return out


def decode_general_report(x_prime, side: SideInfo) -> DecodeOutcome:
    prm = side.params
    xp = tuple(x_prime)
    if len(xp) != prm.n - 2 * prm.w:
        raise DecodeError(UNDECODABLE, "corrupted word has the wrong length")
    try:
        loc = locate(first_row(xp, prm.w), side.f_first_row, prm.d, prm.tp, prm.w, prm.n)
    except InversionError as e:
        raise DecodeError(UNDECODABLE, f"first row: {e}") from None
    survivors: dict = {}
    hyps = hypotheses(loc, prm)
    key = side.key()
    for branch, args in hyps:
        if branch == "phi":
            cand = _hyp_pair(xp, side, *args)
        elif branch == "h":
            cand = _hyp_single(xp, side, prm.win1, args[0], side.h_par, prm.N2)
        else:
            cand = _hyp_single(xp, side, prm.win2, args[0], side.g_par, prm.N3)
        if cand is None or cand in survivors or len(cand) != prm.n:
            continue
        if first_row(cand, prm.w) != loc.row or psi(cand, prm).key() != key:
            continue
        if xp not in ball_di(cand, 2, prm.t1, prm.t2):
            continue
        survivors[cand] = f"{branch}{args}"
    if not survivors:
        raise DecodeError(UNDECODABLE, "no hypothesis survives verification")
    if len(survivors) > 1:
        raise DecodeError(AMBIGUOUS, f"{len(survivors)} distinct candidates")
    (word, branch), = survivors.items()
    return DecodeOutcome(word, branch, loc, len(hyps), list(survivors))


def decode_general(x_prime, side: SideInfo) -> BitSequence:
    return decode_general_report(x_prime, side).word


def two_burst_patterns(x, t1: int, t2: int):
    """Every legal two-burst (t1,t2)-DI pattern on x as ((q1, b1), (q2, b2))."""
    x = tuple(x)
    n = len(x)
    for q1 in range(1, n - t1 + 2):
        for b1 in itertools.product((0, 1), repeat=t2):
            if t2 and (b1[0] == x[q1 - 1] or b1[-1] == x[q1 + t1 - 2]):
                continue
            for q2 in range(q1 + t1, n - t1 + 2):
                for b2 in itertools.product((0, 1), repeat=t2):
                    if t2 and (b2[0] == x[q2 - 1] or b2[-1] == x[q2 + t1 - 2]):
                        continue
                    yield (q1, b1), (q2, b2)


def corrupt(x, pattern, t1: int) -> BitSequence:
    x = tuple(x)
    (q1, b1), (q2, b2) = pattern
    return x[:q1 - 1] + tuple(b1) + x[q1 + t1 - 1:q2 - 1] + tuple(b2) + x[q2 + t1 - 1:]
