# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled burst enumeration kernels (same contract as _kernels_py)."""

from libc.stdint cimport uint64_t, int64_t

DI = 0
DS = 1
DS_REV = 2
DI_FREE = 3

cdef enum:
    MAXB = 8


cdef inline uint64_t _seg(uint64_t x, int n, int p, int q):
    if q < p:
        return 0
    return (x >> (n - q)) & ((<uint64_t>1 << (q - p + 1)) - 1)


cdef inline int _bit(uint64_t x, int n, int p):
    return <int>((x >> (n - p)) & 1)


cdef class _Enum:
    cdef uint64_t x
    cdef int n, m, model, constrain_last
    cdef int t1[MAXB]
    cdef int t2[MAXB]
    cdef int need[MAXB + 1]
    cdef set out

    def __init__(self, uint64_t x, int n, specs, int model, bint constrain_last):
        cdef int k, a, b
        self.x = x
        self.n = n
        self.m = len(specs)
        if self.m > MAXB:
            raise ValueError("too many bursts")
        self.model = model
        self.constrain_last = constrain_last
        for k in range(self.m):
            a, b = specs[k]
            self.t1[k] = a
            self.t2[k] = b
        self.need[self.m] = 0
        for k in range(self.m - 1, -1, -1):
            if model == DI or model == DI_FREE:
                self.need[k] = self.need[k + 1] + self.t1[k]
            elif model == DS:
                self.need[k] = self.need[k + 1] + (self.t1[k] if k == self.m - 1 else self.t1[k] + self.t2[k])
            else:
                self.need[k] = self.need[k + 1] + (0 if k == self.m - 1 else self.t2[k])
        self.out = set()

    cdef void rec(self, int k, int pos, uint64_t acc, int acclen):
        cdef int n = self.n
        cdef uint64_t x = self.x
        cdef int i, t1, t2, wl, wend, first, lastv, lastd, nxt, hl
        cdef uint64_t b, c, a, mid, head
        if k == self.m:
            hl = n - pos + 1
            self.out.add((acc << hl) | _seg(x, n, pos, n))
            return
        t1 = self.t1[k]
        t2 = self.t2[k]
        for i in range(pos, n - self.need[k] + 2):
            mid = _seg(x, n, pos, i - 1)
            head = (acc << (i - pos)) | mid
            hl = acclen + i - pos
            if self.model == DI_FREE:
                for b in range(<uint64_t>1 << t2):
                    self.rec(k + 1, i + t1, (head << t2) | b, hl + t2)
            elif self.model == DI:
                first = _bit(x, n, i) if i <= n else -1
                lastd = i + t1 - 1
                lastv = _bit(x, n, lastd) if (lastd >= 1 and lastd <= n) else -1
                nxt = i + t1
                for b in range(<uint64_t>1 << t2):
                    if t2:
                        if first >= 0 and <int>((b >> (t2 - 1)) & 1) == first:
                            continue
                        if self.constrain_last and lastv >= 0 and <int>(b & 1) == lastv:
                            continue
                    self.rec(k + 1, nxt, (head << t2) | b, hl + t2)
            elif self.model == DS:
                wend = min(n, i + t1 + t2 - 1)
                wl = wend - (i + t1) + 1
                if wl < 0:
                    wl = 0
                first = _bit(x, n, i) if (t1 and i <= n) else -1
                nxt = i + t1 + wl
                for b in range(<uint64_t>1 << wl):
                    if wl and first >= 0 and <int>((b >> (wl - 1)) & 1) == first:
                        continue
                    self.rec(k + 1, nxt, (head << wl) | b, hl + wl)
            else:
                wend = min(n, i + t2 - 1)
                wl = wend - i + 1
                if wl < 0:
                    wl = 0
                first = _bit(x, n, i) if wl else -1
                nxt = i + wl
                for c in range(<uint64_t>1 << t1):
                    if t1 and first >= 0 and <int>((c >> (t1 - 1)) & 1) == first:
                        continue
                    for a in range(<uint64_t>1 << wl):
                        self.rec(k + 1, nxt, (((head << t1) | c) << wl) | a, hl + t1 + wl)


def burst_outputs(x, int n, specs, int model, bint constrain_last=True):
    if n > 60:
        from . import _kernels_py
        return _kernels_py.burst_outputs(x, n, specs, model, constrain_last)
    cdef _Enum e = _Enum(x, n, [tuple(s) for s in specs], model, constrain_last)
    e.rec(0, 1, 0, 0)
    return e.out


def preimages(y, int ny, specs, int model):
    if model == DI or model == DI_FREE:
        return burst_outputs(y, ny, [(b, a) for a, b in specs], model)
    if model == DS:
        return burst_outputs(y, ny, specs, DS_REV)
    raise ValueError("unsupported model")


cdef int _out_len(int n, specs, int model):
    cdef int s = 0
    for a, b in specs:
        if model == DI or model == DI_FREE:
            s += a - b
        elif model == DS:
            s += a
        else:
            s -= a
    return n - s


def neighbourhood(x, int n, specs_list, int model):
    cdef set out = set()
    cdef int ny
    for specs in specs_list:
        ny = _out_len(n, specs, model)
        for y in burst_outputs(x, n, specs, model):
            for rev in specs_list:
                out |= preimages(y, ny, rev, model)
    out.discard(x)
    return out


def power_sums(x, int n, int order):
    from . import _kernels_py
    return _kernels_py.power_sums(x, n, order)



def pair_order(const long long[::1] sums, int width, long x, const long long[::1] nbrs):
    cdef Py_ssize_t j, bx = x * width, by
    cdef int k, order = 0
    for j in range(nbrs.shape[0]):
        by = nbrs[j] * width
        k = 0
        while k < width and sums[bx + k] == sums[by + k]:
            k += 1
        if k == width:
            raise ValueError("syndrome not separating")
        if k > order:
            order = k
    return order



def packed_modulus(const long long[::1] h, long x, const long long[::1] nbrs, long long start=2):
    cdef Py_ssize_t j, m = nbrs.shape[0]
    cdef long long a = start, hx = h[x], d
    cdef unsigned long long[::1] diffs
    cdef bint ok
    import array as _array
    diffs = _array.array("Q", bytes(8 * m))
    for j in range(m):
        d = hx - h[nbrs[j]]
        if d == 0:
            raise ValueError("syndrome not separating")
        diffs[j] = <unsigned long long>(d if d > 0 else -d)
    while True:
        ok = True
        for j in range(m):
            if diffs[j] % <unsigned long long>a == 0:
                ok = False
                break
        if ok:
            return a
        a += 1
