"""Prime-field arithmetic and Reed-Solomon codes with coset decoding.

Codewords are evaluations of polynomials of degree < k at the points
1, 2, ..., N of GF(q); ``msg[0]`` is the constant coefficient.  The parity
check matrix is H[r][j] = v_j * j**r (r < N - k) with column multipliers
v_j = 1 / prod_{i != j} (j - i), so the syndrome of a codeword is zero.
Decoding is Berlekamp-Massey, a Chien search over the points, and Forney.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def next_prime(m: int) -> int:
    """Smallest prime >= m."""
    q = max(2, m)
    while not is_prime(q):
        q += 1
    return q


@dataclass(frozen=True)
class FieldElement:
    value: int
    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"modulus {self.q} is not prime")
        object.__setattr__(self, "value", self.value % self.q)

    def _other(self, o) -> int:
        if isinstance(o, FieldElement):
            if o.q != self.q:
                raise ValueError("mixed field moduli")
            return o.value
        return o % self.q

    def __add__(self, o):
        return FieldElement(self.value + self._other(o), self.q)

    __radd__ = __add__

    def __sub__(self, o):
        return FieldElement(self.value - self._other(o), self.q)

    def __rsub__(self, o):
        return FieldElement(self._other(o) - self.value, self.q)

    def __neg__(self):
        return FieldElement(-self.value, self.q)

    def __mul__(self, o):
        return FieldElement(self.value * self._other(o), self.q)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return FieldElement(pow(self.value, -1, self.q), self.q)

    def __truediv__(self, o):
        return self * FieldElement(self._other(o), self.q).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(pow(self.value, e, self.q), self.q)

    def __int__(self):
        return self.value


@dataclass(frozen=True)
class RSCode:
    N: int
    k: int
    q: int
    points: tuple = field(default=())
    multipliers: tuple = field(default=(), repr=False)

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"field size {self.q} is not prime")
        if not 1 <= self.k < self.N:
            raise ValueError("need 1 <= k < N")
        if self.N >= self.q:
            raise ValueError("need N < q so the points 1..N are distinct and nonzero")
        pts = tuple(range(1, self.N + 1))
        object.__setattr__(self, "points", pts)
        q = self.q
        mult = []
        for j in pts:
            d = 1
            for i in pts:
                if i != j:
                    d = d * (j - i) % q
            mult.append(pow(d, -1, q))
        object.__setattr__(self, "multipliers", tuple(mult))

    @property
    def d_min(self) -> int:
        return self.N - self.k + 1

    @property
    def redundancy(self) -> int:
        return self.N - self.k

    @property
    def radius(self) -> int:
        return (self.d_min - 1) // 2

    def parity_check(self) -> list:
        q = self.q
        return [[v * pow(a, r, q) % q for a, v in zip(self.points, self.multipliers)]
                for r in range(self.redundancy)]


def make_code(N: int, d_min: int, q: int | None = None, min_q: int = 0) -> RSCode:
    """[N, N-d_min+1, d_min] code over the smallest admissible prime field."""
    if q is None:
        q = next_prime(max(N + 1, min_q))
    return RSCode(N, N - d_min + 1, q)


def rs_encode(msg: Sequence[int], code: RSCode) -> tuple:
    if len(msg) != code.k:
        raise ValueError(f"message length {len(msg)} != k = {code.k}")
    q = code.q
    out = []
    for a in code.points:
        acc = 0
        for c in reversed(msg):
            acc = (acc * a + c) % q
        out.append(acc)
    return tuple(out)


def syndrome(word: Sequence[int], code: RSCode) -> tuple:
    if len(word) != code.N:
        raise ValueError(f"word length {len(word)} != N = {code.N}")
    q = code.q
    s = [0] * code.redundancy
    for a, v, y in zip(code.points, code.multipliers, word):
        if y % q:
            t = v * y % q
            for r in range(code.redundancy):
                s[r] = (s[r] + t) % q
                t = t * a % q
    return tuple(s)


def _berlekamp_massey(s: list, q: int) -> list:
    """Shortest LFSR connection polynomial (low degree first) for s."""
    lam = [1]
    prev = [1]
    L = 0
    shift = 1
    b = 1
    for r in range(len(s)):
        d = s[r]
        for i in range(1, L + 1):
            if i < len(lam):
                d = (d + lam[i] * s[r - i]) % q
        if d == 0:
            shift += 1
            continue
        coef = d * pow(b, -1, q) % q
        new = lam + [0] * max(0, len(prev) + shift - len(lam))
        for i, p in enumerate(prev):
            new[i + shift] = (new[i + shift] - coef * p) % q
        if 2 * L <= r:
            prev, L, b, shift = lam, r + 1 - L, d, 1
        else:
            shift += 1
        lam = new
    while len(lam) > 1 and lam[-1] == 0:
        lam.pop()
    return lam


def _peval(p: list, x: int, q: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = (acc * x + c) % q
    return acc


def rs_decode(word: Sequence[int], code: RSCode) -> tuple | None:
    """Nearest codeword within the decoding radius, or None."""
    q = code.q
    word = tuple(int(y) % q for y in word)
    s = list(syndrome(word, code))
    if not any(s):
        return word
    lam = _berlekamp_massey(s, q)
    nerr = len(lam) - 1
    if nerr > code.radius:
        return None
    omega = [0] * len(s)
    for i, li in enumerate(lam):
        for r in range(len(s) - i):
            omega[i + r] = (omega[i + r] + li * s[r]) % q
    dlam = [(i * c) % q for i, c in enumerate(lam)][1:]
    out = list(word)
    found = 0
    for j, a in enumerate(code.points):
        ainv = pow(a, -1, q)
        if _peval(lam, ainv, q):
            continue
        found += 1
        den = _peval(dlam, ainv, q)
        if den == 0:
            return None
        y = (-a * _peval(omega, ainv, q) * pow(den, -1, q)) % q
        e = y * pow(code.multipliers[j], -1, q) % q
        if e == 0:
            return None
        out[j] = (out[j] - e) % q
    if found != nerr:
        return None
    out = tuple(out)
    if any(syndrome(out, code)):
        return None
    return out


def hamming(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def codewords(code: RSCode):
    for msg in itertools.product(range(code.q), repeat=code.k):
        yield rs_encode(msg, code)


def brute_force_decode(word: Sequence[int], code: RSCode) -> tuple | None:
    """Exhaustive nearest-codeword search over all q^k codewords (tiny codes)."""
    if code.N > 12:
        raise ValueError("exhaustive decoding is limited to N <= 12")
    hits = [c for c in codewords(code) if hamming(c, word) <= code.radius]
    return hits[0] if len(hits) == 1 else None


def decoding_table(code: RSCode) -> dict:
    """word -> codeword for every word within the radius of some codeword."""
    if code.N > 12:
        raise ValueError("exhaustive decoding is limited to N <= 12")
    table = {}
    q = code.q
    for c in codewords(code):
        for w in range(code.radius + 1):
            for support in itertools.combinations(range(code.N), w):
                for vals in itertools.product(range(1, q), repeat=w):
                    y = list(c)
                    for p, v in zip(support, vals):
                        y[p] = (y[p] + v) % q
                    table[tuple(y)] = c
    return table


def _sub(a, b, q):
    return tuple((x - y) % q for x, y in zip(a, b))


def _add(a, b, q):
    return tuple((x + y) % q for x, y in zip(a, b))


def coset_decode(word: Sequence[int], code: RSCode, u: Sequence[int]) -> tuple | None:
    if len(u) != code.N:
        raise ValueError("shift length must equal N")
    c = rs_decode(_sub(word, u, code.q), code)
    return None if c is None else _add(c, u, code.q)


def _solve_mod(a: list, b: list, q: int) -> list:
    """Solve the square system a x = b over GF(q) by Gauss-Jordan elimination."""
    m = len(a)
    rows = [list(r) + [v] for r, v in zip(a, b)]
    for col in range(m):
        piv = next(r for r in range(col, m) if rows[r][col] % q)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = pow(rows[col][col], -1, q)
        rows[col] = [v * inv % q for v in rows[col]]
        for r in range(m):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(v - f * w) % q for v, w in zip(rows[r], rows[col])]
    return [rows[r][m] for r in range(m)]


def shift_for_syndrome(code: RSCode, s: Sequence[int]) -> tuple:
    """Canonical coset representative: supported on the last N-k positions."""
    h = code.parity_check()
    r = code.redundancy
    sub = [row[code.N - r:] for row in h]
    tail = _solve_mod(sub, list(s), code.q)
    return (0,) * (code.N - r) + tuple(tail)


def _symbols(w):
    return tuple(getattr(w, "symbols", w))


def coset_sizes(code: RSCode, population: Iterable) -> Counter:
    return Counter(syndrome(_symbols(w), code) for w in population)


def best_coset(n_symbols: int, code: RSCode, population: Iterable) -> tuple:
    """Shift of the coset holding most of the population (ties: least syndrome)."""
    if n_symbols != code.N:
        raise ValueError("population word length must equal the code length")
    sizes = coset_sizes(code, population)
    if not sizes:
        raise ValueError("empty population")
    top = max(sizes.values())
    s = min(k for k, v in sizes.items() if v == top)
    return shift_for_syndrome(code, s)
