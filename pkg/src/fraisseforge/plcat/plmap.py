"""Piecewise-linear rational self-maps of the unit interval.

Payloads are stored in kernel form (normalized int pairs) and
canonicalized on construction, so payload equality decides map equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .._kernel import plcore as K
from ..rational import rat

Pair = Tuple[int, int]


def _pair(v) -> Pair:
    f = rat(v)
    return (f.numerator, f.denominator)


def _frac(p: Pair) -> Fraction:
    return Fraction(p[0], p[1])


@dataclass(frozen=True)
class PLMap:
    bx: Tuple[Pair, ...]
    by: Tuple[Pair, ...]

    @staticmethod
    def from_points(points: Iterable[Tuple]) -> "PLMap":
        """Build from (t, value) pairs of rationals; canonicalizes."""
        pts = [(_pair(t), _pair(v)) for t, v in points]
        bx = [p[0] for p in pts]
        by = [p[1] for p in pts]
        return PLMap.build(bx, by)

    @staticmethod
    def build(bx: Sequence[Pair], by: Sequence[Pair]) -> "PLMap":
        if len(bx) != len(by) or len(bx) < 2:
            raise ValueError("need matching breakpoint/value lists of length >= 2")
        if bx[0] != (0, 1) or bx[-1] != (1, 1):
            raise ValueError("domain partition must run from 0 to 1")
        for a, b in zip(bx, bx[1:]):
            if K.qcmp(a, b) >= 0:
                raise ValueError("breakpoints must be strictly increasing")
        for v in by:
            if K.qcmp(v, K.ZERO) < 0 or K.qcmp(v, K.ONE) > 0:
                raise ValueError("values must lie in [0, 1]")
        cx, cy = K.pl_canon(list(bx), list(by))
        return PLMap(tuple(cx), tuple(cy))

    # -- basic queries ------------------------------------------------

    @property
    def breakpoints(self) -> Tuple[Fraction, ...]:
        return tuple(_frac(p) for p in self.bx)

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return tuple(_frac(p) for p in self.by)

    @property
    def n_pieces(self) -> int:
        return len(self.bx) - 1

    def __call__(self, t) -> Fraction:
        return _frac(K.pl_eval(self.bx, self.by, _pair(t)))

    @property
    def is_onto(self) -> bool:
        lo, hi = K.pl_range(self.bx, self.by)
        return lo == (0, 1) and hi == (1, 1)

    @property
    def endpoint_fixing(self) -> bool:
        return self.by[0] == (0, 1) and self.by[-1] == (1, 1)

    @property
    def monotone_pieces(self) -> bool:
        return all(a != b for a, b in zip(self.by, self.by[1:]))

    @property
    def is_quotient(self) -> bool:
        return self.is_onto

    def preimages(self, v) -> Tuple[Fraction, ...]:
        return tuple(_frac(p) for p in K.pl_preimages(self.bx, self.by, _pair(v)))

    def reflect_domain(self) -> "PLMap":
        """The map t -> f(1 - t)."""
        bx = [K.qsub(K.ONE, t) for t in reversed(self.bx)]
        by = list(reversed(self.by))
        return PLMap.build(bx, by)


def identity_pl() -> PLMap:
    return PLMap.build([(0, 1), (1, 1)], [(0, 1), (1, 1)])


def tent() -> PLMap:
    """The full tent: 2t on [0, 1/2], 2 - 2t on [1/2, 1]."""
    return PLMap.from_points([(0, 0), (Fraction(1, 2), 1), (1, 0)])


def zigzag(*interior) -> PLMap:
    """Alternating 0/1 values over the given interior breakpoints.

    With an even number of interior points the result fixes both
    endpoints (0 -> 0, 1 -> 1).
    """
    ts = [Fraction(0)] + [rat(t) for t in interior] + [Fraction(1)]
    vals = [Fraction(i % 2) for i in range(len(ts))]
    return PLMap.from_points(zip(ts, vals))


def compose_pl(f: PLMap, g: PLMap) -> PLMap:
    """Exact composition t -> f(g(t))."""
    bx, by = K.pl_compose(f.bx, f.by, g.bx, g.by)
    return PLMap(tuple(bx), tuple(by))


def rho_pl(f: PLMap, g: PLMap, scale: int = 1) -> Fraction:
    """Exact sup-distance in a codomain with metric scale * |s - t|."""
    return scale * _frac(K.pl_max_abs_diff(f.bx, f.by, g.bx, g.by))


def lipschitz(f: PLMap, dom_scale: int = 1, cod_scale: int = 1) -> Fraction:
    """Lipschitz constant for scaled interval metrics on both sides."""
    return Fraction(cod_scale, dom_scale) * _frac(K.pl_lipschitz(f.bx, f.by))


def normalize_endpoints(f: PLMap) -> PLMap:
    """A quotient post-composer f1 with f1(f(0)) = 0 and f1(f(1)) = 1.

    Requires f(0) != f(1); the composite f1 . f then fixes both
    endpoints.  The stretch [f(0), f(1)] (or its mirror) is mapped
    affinely onto [0, 1]; the flanks fold back to 1/2, which keeps every
    piece strictly monotone.
    """
    if not f.is_quotient:
        raise ValueError("normalize_endpoints needs a quotient map")
    alpha, beta = f.values[0], f.values[-1]
    if alpha == beta:
        raise ValueError("endpoints collapse: no post-composer can separate them")
    lo, hi = (alpha, beta) if alpha < beta else (beta, alpha)
    v_lo, v_hi = (0, 1) if alpha < beta else (1, 0)
    half = Fraction(1, 2)
    pts = []
    if lo > 0:
        pts.append((Fraction(0), half))
    pts.append((lo, Fraction(v_lo)))
    pts.append((hi, Fraction(v_hi)))
    if hi < 1:
        pts.append((Fraction(1), half))
    f1 = PLMap.from_points(pts)
    assert f1(alpha) == 0 and f1(beta) == 1 and f1.is_onto
    return f1
