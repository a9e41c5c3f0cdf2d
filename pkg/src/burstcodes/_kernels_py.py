"""Pure-Python burst enumeration kernels.

Words are ints holding ``n`` bits, position 1 in the most significant bit.
The compiled module ``_kernels`` exposes the same functions.
"""
from __future__ import annotations

DI = 0  # delete t1, insert t2 (boundary bits forced to differ)
DS = 1  # delete t1, substitute up to t2 following symbols
DS_REV = 2  # preimages of DS: insert t1, overwrite up to t2 following symbols
DI_FREE = 3  # delete t1, insert t2, no symbol constraints


def _bit(x, n, p):
    return (x >> (n - p)) & 1


def _seg(x, n, p, q):
    """Bits p..q (1-based, inclusive) as an int; empty when q < p."""
    if q < p:
        return 0
    return (x >> (n - q)) & ((1 << (q - p + 1)) - 1)


def burst_outputs(x, n, specs, model, constrain_last=True):
    """All words reachable from x by the bursts ``specs`` in left-to-right order.

    ``specs`` is a sequence of (t1, t2) pairs.  Burst positions refer to the
    coordinates of x and never overlap.  For DS the substitution window of the
    final burst is truncated at the end of the word.
    """
    specs = tuple(tuple(s) for s in specs)
    m = len(specs)
    # minimal original length consumed by bursts k..m-1 (for position range)
    need = [0] * (m + 1)
    for k in range(m - 1, -1, -1):
        t1, t2 = specs[k]
        last = k == m - 1
        if model in (DI, DI_FREE):
            need[k] = need[k + 1] + t1
        elif model == DS:
            need[k] = need[k + 1] + (t1 if last else t1 + t2)
        else:
            need[k] = need[k + 1] + (0 if last else t2)
    memo = {}

    def suffixes(k, pos):
        key = (k, pos)
        if key in memo:
            return memo[key]
        if k == m:
            res = {(_seg(x, n, pos, n), n - pos + 1)}
            memo[key] = res
            return res
        t1, t2 = specs[k]
        res = set()
        for i in range(pos, n - need[k] + 2):
            mid = _seg(x, n, pos, i - 1)
            midlen = i - pos
            blocks = []
            if model == DI_FREE:
                blocks = [(b, t2) for b in range(1 << t2)]
                nxt = i + t1
            elif model == DI:
                first = _bit(x, n, i) if i <= n else None
                lastd = i + t1 - 1
                lastv = _bit(x, n, lastd) if 1 <= lastd <= n else None
                for b in range(1 << t2):
                    if t2:
                        if first is not None and (b >> (t2 - 1)) & 1 == first:
                            continue
                        if constrain_last and lastv is not None and (b & 1) == lastv:
                            continue
                    blocks.append((b, t2))
                nxt = i + t1
            elif model == DS:
                wend = min(n, i + t1 + t2 - 1)
                wl = max(0, wend - (i + t1) + 1)
                first = _bit(x, n, i) if t1 and i <= n else None
                for b in range(1 << wl):
                    if wl and first is not None and (b >> (wl - 1)) & 1 == first:
                        continue
                    blocks.append((b, wl))
                nxt = i + t1 + wl
            else:
                wend = min(n, i + t2 - 1)
                wl = max(0, wend - i + 1)
                yi = _bit(x, n, i) if wl else None
                for c in range(1 << t1):
                    if t1 and yi is not None and (c >> (t1 - 1)) & 1 == yi:
                        continue
                    for a in range(1 << wl):
                        blocks.append(((c << wl) | a, t1 + wl))
                nxt = i + wl
            if not blocks:
                continue
            tails = suffixes(k + 1, nxt)
            for b, bl in blocks:
                head = (mid << bl) | b
                hl = midlen + bl
                for tv, tl in tails:
                    res.add(((head << tl) | tv, hl + tl))
        memo[key] = res
        return res

    return {v for v, _ in suffixes(0, 1)}


def preimages(y, ny, specs, model):
    """Words w with y reachable from w by ``specs`` (t1, t2 >= 1 for DI)."""
    if model in (DI, DI_FREE):
        return burst_outputs(y, ny, [(t2, t1) for t1, t2 in specs], model)
    if model == DS:
        return burst_outputs(y, ny, specs, DS_REV)
    raise ValueError("unsupported model")


def neighbourhood(x, n, specs_list, model):
    """Words w != x sharing an output with x under any burst order in specs_list."""
    out = set()
    for specs in specs_list:
        for y in burst_outputs(x, n, specs, model):
            ny = _out_len(n, specs, model)
            for rev in specs_list:
                out |= preimages(y, ny, rev, model)
    out.discard(x)
    return out


def _out_len(n, specs, model):
    if model in (DI, DI_FREE):
        return n - sum(t1 - t2 for t1, t2 in specs)
    if model == DS:
        return n - sum(t1 for t1, _ in specs)
    return n + sum(t1 for t1, _ in specs)


def power_sums(x, n, order):
    """(s_0, ..., s_order) with s_k = sum_i i**k x_i over 1-based positions."""
    sums = [0] * (order + 1)
    for p in range(1, n + 1):
        if (x >> (n - p)) & 1:
            v = 1
            for k in range(order + 1):
                sums[k] += v
                v *= p
    return sums



def pair_order(sums, width, x, nbrs):
    """Largest first-differing index between the power-sum rows of x and each y.

    ``sums`` is a flat sequence holding ``width`` entries per word.
    """
    base_x = x * width
    order = 0
    for y in nbrs:
        base_y = y * width
        k = 0
        while k < width and sums[base_x + k] == sums[base_y + k]:
            k += 1
        if k == width:
            raise ValueError("syndrome not separating")
        if k > order:
            order = k
    return order


def packed_modulus(h, x, nbrs, start=2):
    """Least a >= start dividing no h[x] - h[y], y in nbrs (h already packed)."""
    hx = h[x]
    diffs = [abs(hx - h[y]) for y in nbrs]
    if 0 in diffs:
        raise ValueError("syndrome not separating")
    a = start
    while any(d % a == 0 for d in diffs):
        a += 1
    return a
