"""Pure-Python kernel for exact piecewise-linear map arithmetic.

Rationals are normalized (num, den) int pairs with den > 0; a PL map is a
pair of equal-length lists (bx, by) of such pairs, bx strictly increasing
from 0 to 1.  The compiled twin in plcore_c.pyx implements the same
surface; `fraisseforge._kernel` selects one at import time.

These functions sit in the innermost loops of the interval-instance
builder and witness searches, so they avoid fractions.Fraction entirely.
"""

from math import gcd

ZERO = (0, 1)
ONE = (1, 1)


def qn(p, q):
    """Normalize p/q: positive denominator, lowest terms."""
    if q < 0:
        p, q = -p, -q
    g = gcd(p, q)
    if g > 1:
        return (p // g, q // g)
    return (p, q)


def qadd(a, b):
    return qn(a[0] * b[1] + b[0] * a[1], a[1] * b[1])


def qsub(a, b):
    return qn(a[0] * b[1] - b[0] * a[1], a[1] * b[1])


def qmul(a, b):
    return qn(a[0] * b[0], a[1] * b[1])


def qdiv(a, b):
    if b[0] == 0:
        raise ZeroDivisionError("rational division by zero")
    return qn(a[0] * b[1], a[1] * b[0])


def qcmp(a, b):
    lhs = a[0] * b[1]
    rhs = b[0] * a[1]
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0


def qabs(a):
    return (-a[0], a[1]) if a[0] < 0 else a


def qmin(a, b):
    return a if qcmp(a, b) <= 0 else b


def qmax(a, b):
    return a if qcmp(a, b) >= 0 else b


def pl_eval(bx, by, t):
    """Evaluate the PL map at rational t in [bx[0], bx[-1]]."""
    n = len(bx)
    if qcmp(t, bx[0]) < 0 or qcmp(t, bx[-1]) > 0:
        raise ValueError("evaluation point outside the domain")
    lo, hi = 0, n - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if qcmp(bx[mid], t) <= 0:
            lo = mid
        else:
            hi = mid
    if qcmp(t, bx[lo]) == 0:
        return by[lo]
    if qcmp(t, bx[hi]) == 0:
        return by[hi]
    # y0 + (t - x0) * (y1 - y0) / (x1 - x0)
    dx = qsub(bx[hi], bx[lo])
    dy = qsub(by[hi], by[lo])
    return qadd(by[lo], qdiv(qmul(qsub(t, bx[lo]), dy), dx))


def pl_canon(bx, by):
    """Drop interior breakpoints where consecutive slopes agree."""
    n = len(bx)
    if n <= 2:
        return list(bx), list(by)
    out_x = [bx[0]]
    out_y = [by[0]]
    for i in range(1, n - 1):
        # collinear iff (y1-y0)*(x2-x1) == (y2-y1)*(x1-x0)
        x0, y0 = out_x[-1], out_y[-1]
        x1, y1 = bx[i], by[i]
        x2, y2 = bx[i + 1], by[i + 1]
        lhs0 = qsub(y1, y0)
        lhs1 = qsub(x2, x1)
        rhs0 = qsub(y2, y1)
        rhs1 = qsub(x1, x0)
        if lhs0[0] * lhs1[0] * rhs0[1] * rhs1[1] == rhs0[0] * rhs1[0] * lhs0[1] * lhs1[1]:
            continue
        out_x.append(x1)
        out_y.append(y1)
    out_x.append(bx[-1])
    out_y.append(by[-1])
    return out_x, out_y


def pl_merge_breakpoints(bx1, bx2):
    """Sorted union of two breakpoint lists."""
    out = []
    i = j = 0
    n1, n2 = len(bx1), len(bx2)
    while i < n1 and j < n2:
        c = qcmp(bx1[i], bx2[j])
        if c < 0:
            out.append(bx1[i])
            i += 1
        elif c > 0:
            out.append(bx2[j])
            j += 1
        else:
            out.append(bx1[i])
            i += 1
            j += 1
    out.extend(bx1[i:])
    out.extend(bx2[j:])
    return out


def pl_compose(fbx, fby, gbx, gby):
    """Exact composition f(g(t)); breakpoints are g's refined by preimages
    of f's breakpoints under each linear piece of g."""
    ts = list(gbx)
    for i in range(len(gbx) - 1):
        t0, t1 = gbx[i], gbx[i + 1]
        a, b = gby[i], gby[i + 1]
        c = qcmp(a, b)
        if c == 0:
            continue
        lo, hi = (a, b) if c < 0 else (b, a)
        dt = qsub(t1, t0)
        dv = qsub(b, a)
        for v in fbx:
            if qcmp(v, lo) > 0 and qcmp(v, hi) < 0:
                ts.append(qadd(t0, qdiv(qmul(qsub(v, a), dt), dv)))
    ts = _exact_sort_dedupe(ts)
    ys = [pl_eval(fbx, fby, pl_eval(gbx, gby, t)) for t in ts]
    return pl_canon(ts, ys)


def _exact_sort_dedupe(ts):
    from functools import cmp_to_key

    ts = sorted(ts, key=cmp_to_key(qcmp))
    out = [ts[0]]
    for t in ts[1:]:
        if qcmp(t, out[-1]) != 0:
            out.append(t)
    return out


def pl_max_abs_diff(fbx, fby, gbx, gby):
    """Exact sup |f - g|, attained at a merged breakpoint."""
    best = ZERO
    for t in pl_merge_breakpoints(fbx, gbx):
        d = qabs(qsub(pl_eval(fbx, fby, t), pl_eval(gbx, gby, t)))
        if qcmp(d, best) > 0:
            best = d
    return best


def pl_lipschitz(bx, by):
    """Max |slope| over pieces (Euclidean metric on both sides)."""
    best = ZERO
    for i in range(len(bx) - 1):
        s = qabs(qdiv(qsub(by[i + 1], by[i]), qsub(bx[i + 1], bx[i])))
        if qcmp(s, best) > 0:
            best = s
    return best


def pl_range(bx, by):
    lo = hi = by[0]
    for v in by[1:]:
        if qcmp(v, lo) < 0:
            lo = v
        if qcmp(v, hi) > 0:
            hi = v
    return lo, hi


def pl_preimages(bx, by, v):
    """All t with f(t) = v; plateau pieces contribute their endpoints."""
    hits = []
    n = len(bx)
    for i in range(n - 1):
        a, b = by[i], by[i + 1]
        ca, cb = qcmp(v, a), qcmp(v, b)
        if ca == 0:
            hits.append(bx[i])
        if cb == 0 and i == n - 2:
            hits.append(bx[i + 1])
        lo, hi = (a, b) if qcmp(a, b) < 0 else (b, a)
        if qcmp(v, lo) > 0 and qcmp(v, hi) < 0:
            dt = qsub(bx[i + 1], bx[i])
            dv = qsub(b, a)
            hits.append(qadd(bx[i], qdiv(qmul(qsub(v, a), dt), dv)))
    return _exact_sort_dedupe(hits) if hits else []
