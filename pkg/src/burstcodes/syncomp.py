"""Syndrome compression over burst neighbourhoods.

The separating syndrome h packs the power sums s_k = sum_i i^k x_i,
k = 0..K, into one integer in mixed radix (digit k ranges over
0..sum_i i^k, so the packing is injective and as small as possible).  For a window length L and an error model the
order K is the least value that separates every word from its whole
confusability neighbourhood (K = L - 1 always works: the power sums then fix
the support).  The published value is (a, h mod a) with a the least integer
>= 2 dividing no difference h(x) - h(x'), packed as (a - 1) * 2^B + residue.
"""
from __future__ import annotations

import functools
from array import array
from dataclasses import dataclass
from math import ceil, comb, log2

from . import kernels
from .seqcore import BitSequence, exhaustive_limit, from_int, to_int

MODELS = ("DI1", "DI2", "DS2")


@dataclass(frozen=True)
class CompressedSyndrome:
    a: int
    residue: int
    width: int  # B

    def __post_init__(self):
        if self.a < 1 or not 0 <= self.residue < self.a:
            raise ValueError("need 0 <= residue < a")
        if self.residue >= 1 << self.width:
            raise ValueError("residue does not fit the packing width")

    @property
    def enc(self) -> int:
        return (self.a - 1) * (1 << self.width) + self.residue

    @classmethod
    def from_enc(cls, enc: int, width: int) -> "CompressedSyndrome":
        return cls((enc >> width) + 1, enc & ((1 << width) - 1), width)


def power_sums(x, order: int) -> list:
    x = tuple(x)
    return kernels.power_sums(to_int(x), len(x), order)


def weights(L: int, order: int) -> list:
    """Place values of the mixed-radix packing; radix k is 1 + sum_i i^k."""
    out, acc = [], 1
    for k in range(order + 1):
        out.append(acc)
        acc *= 1 + sum(i ** k for i in range(1, L + 1))
    return out


def h_syndrome(x, order: int) -> int:
    if order < 1:
        raise ValueError("need K >= 1")
    x = tuple(x)
    return sum(s * wt for s, wt in zip(power_sums(x, order), weights(len(x), order)))


def _specs(model: str, t1: int, t2: int):
    if model == "DI1":
        return [(t1, t2)], kernels.DI
    if model == "DI2":
        return [(t1, t2)] * 2, kernels.DI
    if model == "DS2":
        return [(t1, t2)] * 2, kernels.DS
    raise ValueError(f"unknown syndrome model {model!r}")


def outputs(x: int, L: int, model: str, t1: int, t2: int) -> set:
    """Corrupted words reachable from the length-L word x under the model.

    DS2 applies two single bursts one after the other (the second acts on the
    already corrupted word), so repeated deletions inside one run, including
    the final run, are covered.
    """
    specs, code = _specs(model, t1, t2)
    if model != "DS2":
        return kernels.burst_outputs(x, L, specs, code)
    out = set()
    for y in kernels.burst_outputs(x, L, specs[:1], code):
        out |= kernels.burst_outputs(y, L - t1, specs[:1], code)
    return out


def preimages(y: int, Ly: int, model: str, t1: int, t2: int) -> set:
    specs, code = _specs(model, t1, t2)
    if model != "DS2":
        return kernels.preimages(y, Ly, specs, code)
    out = set()
    for z in kernels.preimages(y, Ly, specs[:1], code):
        out |= kernels.preimages(z, Ly + t1, specs[:1], code)
    return out


def neighbourhood_ints(x: int, L: int, model: str, t1: int, t2: int) -> set:
    Ly = corrupted_length(L, model, t1, t2)
    out = set()
    for y in outputs(x, L, model, t1, t2):
        out |= preimages(y, Ly, model, t1, t2)
    out.discard(x)
    return out


def corrupted_length(L: int, model: str, t1: int, t2: int) -> int:
    m = 1 if model == "DI1" else 2
    return L - m * (t1 - t2) if model != "DS2" else L - m * t1


@dataclass(frozen=True)
class SyndromeScheme:
    L: int
    model: str
    t1: int
    t2: int
    order: int  # K
    a_max: int
    width: int  # B
    a_table: tuple  # a(x) for every length-L word, by word value

    def sums(self, x: int) -> list:
        return kernels.power_sums(x, self.L, self.order)

    def h(self, x) -> int:
        return h_syndrome(x, self.order)

    @functools.cached_property
    def h_table(self) -> tuple:
        return tuple(h_syndrome(from_int(v, self.L), self.order) for v in range(1 << self.L))

    def f(self, x) -> CompressedSyndrome:
        x = tuple(x)
        if len(x) != self.L:
            raise ValueError(f"window length {len(x)} != {self.L}")
        v = to_int(x)
        a = self.a_table[v]
        return CompressedSyndrome(a, self.h(x) % a, self.width)

    def meta(self) -> dict:
        return dict(L=self.L, model=self.model, t1=self.t1, t2=self.t2, K=self.order,
                    a_max=self.a_max, B=self.width)


def _ball_index(L: int, model: str, t1: int, t2: int):
    balls = [outputs(x, L, model, t1, t2) for x in range(1 << L)]
    index: dict = {}
    for x, b in enumerate(balls):
        for y in b:
            index.setdefault(y, []).append(x)
    return balls, index


def neighbourhoods(L: int, model: str, t1: int, t2: int):
    """Yield (x, sorted neighbourhood of x) for every length-L word."""
    balls, index = _ball_index(L, model, t1, t2)
    for x, b in enumerate(balls):
        nb = set()
        for y in b:
            nb.update(index[y])
        nb.discard(x)
        yield x, sorted(nb)


@functools.lru_cache(maxsize=None)
def scheme(L: int, model: str, t1: int, t2: int) -> SyndromeScheme:
    """Exhaustively calibrated syndrome scheme for windows of length L."""
    if L > exhaustive_limit(16):
        raise ValueError(f"window length {L} exceeds exhaustive budget")
    width = max(L, 2)
    sums = array("q")
    for x in range(1 << L):
        sums.extend(kernels.power_sums(x, L, width - 1))
    nbhd = [array("q", nb) for _, nb in neighbourhoods(L, model, t1, t2)]
    order = 1
    for x, nb in enumerate(nbhd):
        order = max(order, kernels.pair_order(sums, width, x, nb))
    wt = weights(L, order)
    h = [sum(sums[x * width + k] * wt[k] for k in range(order + 1)) for x in range(1 << L)]
    if wt[-1] * (1 + sum(i ** order for i in range(1, L + 1))) < 1 << 63:
        h = array("q", h)
        a_table = tuple(kernels.packed_modulus(h, x, nb) for x, nb in enumerate(nbhd))
    else:  # big integers: pure-Python search
        a_table = tuple(kernels.packed_modulus_py(h, x, nb) for x, nb in enumerate(nbhd))
    a_max = max(a_table)
    return SyndromeScheme(L, model, t1, t2, order, a_max, (a_max - 1).bit_length(), a_table)


def f1(x, t1: int, t2: int) -> CompressedSyndrome:
    """Separates x from words confusable under one burst of (t1,t2)-DI."""
    return scheme(len(x), "DI1", t1, t2).f(x)


def f2(x, t1: int, t2: int) -> CompressedSyndrome:
    """Separates x from words confusable under two bursts of (t1,t2)-DI."""
    return scheme(len(x), "DI2", t1, t2).f(x)


def f_ds(x, t_prime: int) -> CompressedSyndrome:
    """Separates x from words confusable under two bursts of (1,t'-1)-DS."""
    return scheme(len(x), "DS2", 1, t_prime - 1).f(x)


class InversionError(ValueError):
    pass


def candidates(corrupted, sch: SyndromeScheme) -> list:
    c = tuple(corrupted)
    return sorted(preimages(to_int(c), len(c), sch.model, sch.t1, sch.t2))


def invert_window(corrupted, f_value: CompressedSyndrome, sch: SyndromeScheme) -> BitSequence:
    """The unique preimage of the corrupted window with the published syndrome."""
    c = tuple(corrupted)
    if len(c) != corrupted_length(sch.L, sch.model, sch.t1, sch.t2):
        raise InversionError("no candidate: corrupted window has the wrong length")
    a, r = f_value.a, f_value.residue
    table = sch.h_table
    hits = [w for w in candidates(c, sch) if table[w] % a == r]
    if not hits:
        raise InversionError("no candidate")
    if len(hits) > 1:
        raise InversionError("ambiguous")
    return from_int(hits[0], sch.L)


def separation_violations(sch: SyndromeScheme) -> int:
    """Pairs (x, x') in a neighbourhood with a(x) | h(x) - h(x'), by big integers."""
    bad = 0
    table = sch.h_table
    for x, nb in neighbourhoods(sch.L, sch.model, sch.t1, sch.t2):
        a = sch.a_table[x]
        bad += sum(1 for y in nb if (table[x] - table[y]) % a == 0)
    return bad


def t_prime(t1: int, t2: int) -> int:
    if t1 <= t2:
        raise ValueError("need t1 > t2")
    return -(-t1 // (t1 - t2))


def complexity_card(n: int, t1: int, t2: int, model: str = "DI") -> int:
    """Closed-form neighbourhood cardinality used for the complexity table.

    DI: the two-burst (t1,t2)-DI count (separate forms for t2 = 1 and t2 >= 2).
    DS: the first-row count for two bursts of (1,t'-1)-DS on a row of length
    ceil(n / (t1 - t2)).
    """
    model = model.upper()
    if model == "DI":
        if t1 < 1 or t2 < 1 or n <= 2 * t1:
            raise ValueError("need t1, t2 >= 1 and n > 2*t1")
        base = comb(n - 2 * t1 + 2, 2) * comb(n - 2 * t1 + 2 * t2 + 1, 2)
        return base * (2 ** (2 * t1 + 2 * t2 - 8) if t2 >= 2 else 2 ** (2 * t1 - 4))
    if model == "DS":
        tp = t_prime(t1, t2)
        L = -(-n // (t1 - t2))
        return comb(L - 2 * tp + 2, 2) * comb(L - 2 * tp + 3, 2) * (2 ** (tp - 2)) ** 4
    raise ValueError(f"unknown model {model!r}")


# (row, n, t1, t2, published DI exponent, published DS exponent)
TABLE1 = (
    (1, 1024, 10, 8, 66, 46), (2, 512, 10, 8, 62, 42), (3, 256, 10, 8, 58, 38),
    (4, 1024, 10, 7, 64, 40), (5, 512, 10, 7, 60, 36), (6, 256, 10, 7, 56, 32),
    (7, 1024, 10, 6, 62, 34), (8, 512, 10, 6, 58, 30), (9, 256, 10, 6, 54, 26),
    (10, 1024, 10, 1, 54, 26), (11, 512, 10, 1, 50, 22), (12, 256, 10, 1, 46, 18),
)
# equal-burst rows: the DS column holds the RS-operation entries, not counts
TABLE1_RS = ((14, 512, 10, 10, 74, 15), (15, 512, 5, 5, 54, 17), (16, 512, 2, 2, 34, 19))
# worked example n=256, (10,2): C(238,2)C(241,2)2^16 ~ 2^46 and C(30,2)C(31,2) ~ 2^20
EXAMPLE = ("example", 256, 10, 2, 46, 20)


def table1_rows() -> list:
    rows = []
    for row, n, t1, t2, pdi, pds in TABLE1 + (EXAMPLE,):
        di = complexity_card(n, t1, t2, "DI")
        ds = complexity_card(n, t1, t2, "DS")
        rows.append(dict(row=row, n=n, t1=t1, t2=t2, t_prime=t_prime(t1, t2),
                         di=di, di_log2=log2(di), paper_di=pdi,
                         ds=ds, ds_log2=log2(ds), paper_ds=pds))
    for row, n, t1, t2, pdi, prs in TABLE1_RS:
        di = complexity_card(n, t1, t2, "DI")
        rows.append(dict(row=row, n=n, t1=t1, t2=t2, t_prime="-", di=di, di_log2=log2(di),
                         paper_di=pdi, ds="RS operations", ds_log2="", paper_ds=prs))
    return rows


def log2_ceil(v: int) -> int:
    return ceil(log2(v))
