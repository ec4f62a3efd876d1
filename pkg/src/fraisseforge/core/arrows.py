"""Arrows and the capability record describing a normed-category instance.

An instance bundles the operations the generic machinery needs: payload
composition, the hom-set metric, a witnessed norm bound, an amalgamation
oracle and a fair enumeration of its countable dominating family.  Arrow
payloads are instance-specific immutable values stored in canonical form,
so zero hom-distance coincides with payload equality.

Quotient-flavoured instances (inverse sequences) keep payloads in actual
map direction and mark themselves `reversed_maps`; the categorical
dom/cod bookkeeping here is unaffected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from ..rational import ExtRational


class ArrowError(ValueError):
    """Composition or hom-set mismatch."""


@dataclass(frozen=True)
class Arrow:
    instance: "CategoryInstance" = field(repr=False)
    dom: object
    cod: object
    payload: object
    lflag: bool

    def __repr__(self) -> str:  # payloads can be large
        kind = "L" if self.lflag else "amb"
        return f"Arrow[{self.instance.tag}/{kind}] {self.dom!r} -> {self.cod!r}"


@dataclass(frozen=True)
class MuBound:
    """Witnessed upper bound on the norm of an arrow.

    `i` and `j` are the distinguished-subcategory arrows achieving
    rho(j . f, i) <= bound; they are absent when the bound is infinite.
    """

    bound: ExtRational
    i: Optional[Arrow] = None
    j: Optional[Arrow] = None
    flag: str = ""


@dataclass(frozen=True)
class AmalgamResult:
    """Completion of a cospan f: c->a, g: c->b to an eps-commuting square."""

    f_prime: Arrow  # a -> w
    g_prime: Arrow  # b -> w
    margin: Fraction  # exact rho(f' . f, g' . g)


@dataclass(frozen=True)
class EnumeratedArrow:
    """One element of the dominating family's fair arrow enumeration."""

    rank: int
    arrow: Arrow


class CategoryInstance:
    """Capability record for one normed-category instance.

    All callables are pure; the record itself is immutable after
    construction and compared by identity.
    """

    def __init__(
        self,
        tag: str,
        *,
        seed_object: object,
        identity: Callable[[object], Arrow],
        compose_payload: Callable[[Arrow, Arrow], object],
        rho_payload: Callable[[Arrow, Arrow], Fraction],
        mu_bound: Callable[[Arrow], MuBound],
        amalgamate: Callable[[Arrow, Arrow, Fraction], AmalgamResult],
        enumerate_arrows: Callable[[], Iterator[Arrow]],
        mu_exact: Optional[Callable[[Arrow], Fraction]] = None,
        is_lflag: Optional[Callable[[Arrow], bool]] = None,
        lflag_monic: bool = True,
        reversed_maps: bool = False,
        params: Optional[dict] = None,
        hooks: Optional[dict] = None,
    ):
        self.tag = tag
        self.seed_object = seed_object
        self.identity = identity
        self.compose_payload = compose_payload
        self.rho_payload = rho_payload
        self.mu_bound = mu_bound
        self.amalgamate = amalgamate
        self.enumerate_arrows = enumerate_arrows
        self.mu_exact = mu_exact
        self.is_lflag = is_lflag
        self.lflag_monic = lflag_monic
        self.reversed_maps = reversed_maps
        self.params = dict(params or {})
        self.hooks = dict(hooks or {})

    def __repr__(self) -> str:
        return f"CategoryInstance({self.tag!r})"


def compose(f: Arrow, g: Arrow) -> Arrow:
    """Categorical composition f . g (g first)."""
    if f.instance is not g.instance:
        raise ArrowError("arrows from different instances")
    if g.cod != f.dom:
        raise ArrowError(f"cannot compose: cod(g)={g.cod!r} != dom(f)={f.dom!r}")
    payload = f.instance.compose_payload(f, g)
    return Arrow(f.instance, g.dom, f.cod, payload, f.lflag and g.lflag)


def rho(f: Arrow, g: Arrow) -> Fraction:
    """Exact hom-set metric between parallel arrows."""
    if f.instance is not g.instance:
        raise ArrowError("arrows from different instances")
    if f.dom != g.dom or f.cod != g.cod:
        raise ArrowError("rho needs a common hom-set")
    return f.instance.rho_payload(f, g)


@dataclass(frozen=True)
class SquareCheck:
    margin: Fraction
    within: bool


def eps_commutes(square, eps: Fraction) -> SquareCheck:
    """Check rho(f' . f, g' . g) < eps for a square (f, g, f', g')."""
    f, g, f_prime, g_prime = square
    left = compose(f_prime, f)
    right = compose(g_prime, g)
    margin = rho(left, right)
    return SquareCheck(margin=margin, within=margin < eps)
