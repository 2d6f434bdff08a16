"""The quasi-shuffle Hopf algebra on integer compositions.

The product is the stuffle recursion

    [s1, s'] * [t1, t'] = [s1, s' * [t1,t']] + [t1, [s1,s'] * t']
                          + [s1+t1, s' * t']

which matches multiplication of the underlying nested series, e.g.
``stuffle([2], [2]) = 2*[2,2] + [4]``.  The coproduct is deconcatenation,
the counit picks the unit coefficient, and the antipode has the closed
quasisymmetric-function form

    antipode([a]) = (-1)^depth(a) * sum of the coarsenings of reversed(a).

``canonical_character`` is the multiplicative functional sending the unit
and every depth-one composition to 1 and deeper compositions to 0.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .compositions import UNIT, Composition, coarsenings
from .elements import Element, Rational, TensorElement, as_element

__all__ = [
    "stuffle",
    "coproduct",
    "counit",
    "antipode",
    "canonical_character",
]


@lru_cache(maxsize=1 << 17)
def _stuffle_pair(a: Composition, b: Composition) -> tuple[tuple[Composition, int], ...]:
    # callers keep a <= b lexicographically; the recursion is symmetric
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out: dict[Composition, int] = {}
    heads = (
        (a[0], _stuffle_basis(a[1:], b)),
        (b[0], _stuffle_basis(a, b[1:])),
        (a[0] + b[0], _stuffle_basis(a[1:], b[1:])),
    )
    for head, dist in heads:
        for c, n in dist:
            key = Composition((head,) + tuple(c))
            out[key] = out.get(key, 0) + n
    return tuple(out.items())


def _stuffle_basis(a: Composition, b: Composition) -> tuple[tuple[Composition, int], ...]:
    return _stuffle_pair(a, b) if tuple(a) <= tuple(b) else _stuffle_pair(b, a)


def stuffle(a, b) -> Element:
    """Bilinear stuffle (quasi-shuffle) product; compositions are promoted."""
    a = as_element(a)
    b = as_element(b)
    out: dict[Composition, Rational] = {}
    for c1, q1 in a._terms.items():
        for c2, q2 in b._terms.items():
            q = q1 * q2
            for c, mult in _stuffle_basis(c1, c2):
                s = out.get(c, 0) + q * mult
                if s:
                    out[c] = s
                else:
                    out.pop(c, None)
    return Element._raw(out)


def coproduct(e) -> TensorElement:
    """Deconcatenation: [s] -> sum of prefix (x) suffix over all depth+1 cuts."""
    e = as_element(e)
    out: dict[tuple[Composition, Composition], Rational] = {}
    for c, q in e._terms.items():
        for j in range(len(c) + 1):
            key = (c[:j], c[j:])
            s = out.get(key, 0) + q
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return TensorElement._raw(2, out)


def counit(e) -> Fraction:
    """Coefficient of the unit term."""
    return as_element(e).coefficient(UNIT)


@lru_cache(maxsize=None)
def _antipode_basis(c: Composition) -> Element:
    if not c:
        return Element.unit()
    sign = -1 if c.depth % 2 else 1
    rev = Composition(reversed(c))
    return Element._raw({d: sign for d in coarsenings(rev)})


def antipode(e) -> Element:
    """Antipode of the quasi-shuffle Hopf algebra (closed coarsening form)."""
    return as_element(e).map_basis(_antipode_basis)


def canonical_character(e) -> Fraction:
    """1 on the unit and each depth-one composition, 0 in depth >= 2, extended linearly."""
    e = as_element(e)
    total = 0
    for c, q in e._terms.items():
        if len(c) <= 1:
            total += q
    return Fraction(total)
