"""Sparse exact-rational linear combinations of compositions and tensors.

:class:`Element` is a finite rational linear combination of compositions; the
zero element is the empty combination and the algebra unit ``1`` is the basis
element at the empty composition.  :class:`TensorElement` is the analogous
combination of rank-``m`` pure tensors of compositions.  All arithmetic is
exact; floating point coefficients are rejected.

Internally coefficients are stored as ``int`` when integral and
:class:`fractions.Fraction` otherwise.  Reading accessors always hand back
``Fraction``.  Both classes are immutable once built, so values can be shared
and memoized freely; term iteration is in the weight-major canonical order so
serialized output is reproducible.
"""

from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

from .compositions import Composition, UNIT, serial_key

Rational = Union[int, Fraction]


def coerce_coeff(value) -> Rational:
    """Exact coefficient from int/Fraction/string; floats are refused."""
    if type(value) is int:
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, float):
        raise TypeError(f"refusing inexact coefficient {value!r}")
    if isinstance(value, (str, numbers.Integral)):
        f = Fraction(value)
        return int(f) if f.denominator == 1 else f
    raise TypeError(f"cannot use {value!r} as an exact coefficient")


def _normalized(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if v}


class Element:
    """Finite rational linear combination of compositions."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict[Composition, Rational] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, value in items:
                c = Composition(key)
                v = coerce_coeff(value)
                if c in data:
                    v = data[c] + v
                if v:
                    data[c] = v
                else:
                    data.pop(c, None)
        self._terms = data

    # -- construction ------------------------------------------------------

    @classmethod
    def basis(cls, c, coeff=1) -> "Element":
        e = cls.__new__(cls)
        v = coerce_coeff(coeff)
        e._terms = {Composition(c): v} if v else {}
        return e

    @classmethod
    def unit(cls) -> "Element":
        return cls.basis(UNIT)

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def _raw(cls, terms: dict) -> "Element":
        # trusted constructor: keys are Compositions, values nonzero exact
        e = cls.__new__(cls)
        e._terms = terms
        return e

    # -- access ------------------------------------------------------------

    def coefficient(self, c) -> Fraction:
        return Fraction(self._terms.get(Composition(c), 0))

    def terms(self) -> list[tuple[Composition, Fraction]]:
        """(composition, coefficient) pairs in the canonical serialization order."""
        return [
            (c, Fraction(v))
            for c, v in sorted(self._terms.items(), key=lambda kv: serial_key(kv[0]))
        ]

    def support(self) -> list[Composition]:
        return [c for c, _ in self.terms()]

    def max_weight(self) -> int:
        """Largest weight appearing in the support; 0 for the zero element."""
        return max((c.weight for c in self._terms), default=0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- linear structure --------------------------------------------------

    def __add__(self, other) -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self._terms)
        for c, v in other._terms.items():
            s = out.get(c, 0) + v
            if s:
                out[c] = s
            else:
                out.pop(c, None)
        return Element._raw(out)

    def __sub__(self, other) -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element._raw({c: -v for c, v in self._terms.items()})

    def scaled(self, scalar) -> "Element":
        q = coerce_coeff(scalar)
        if not q:
            return Element()
        return Element._raw({c: v * q for c, v in self._terms.items()})

    def __mul__(self, scalar) -> "Element":
        return self.scaled(scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Element":
        return self.scaled(Fraction(1, 1) / coerce_coeff(scalar))

    def map_basis(self, fn: Callable[[Composition], "Element"]) -> "Element":
        """Linear extension of a basis map fn: Composition -> Element."""
        out: dict[Composition, Rational] = {}
        for c, q in self._terms.items():
            for d, v in fn(c)._terms.items():
                s = out.get(d, 0) + q * v
                if s:
                    out[d] = s
                else:
                    out.pop(d, None)
        return Element._raw(out)

    # -- output ------------------------------------------------------------

    def to_records(self) -> list[dict]:
        """JSON-ready serialization: [{"coeff": "p/q", "comp": [ints]}, ...]."""
        return [
            {"coeff": str(v), "comp": list(c)}
            for c, v in self.terms()
        ]

    def __str__(self) -> str:
        """Canonical text form, parseable by the expression grammar."""
        if not self._terms:
            return "0*1"
        chunks: list[str] = []
        for c, v in self.terms():
            body = str(c) if c else "1"
            mag = abs(v)
            piece = body if mag == 1 else f"{mag}*{body}"
            if not chunks:
                chunks.append(piece if v > 0 else "-" + piece)
            else:
                chunks.append(("+ " if v > 0 else "- ") + piece)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Element({{{', '.join(f'{c}: {v}' for c, v in self.terms())}}})"


class TensorElement:
    """Finite rational linear combination of rank-``m`` pure tensors."""

    __slots__ = ("_rank", "_terms")

    def __init__(self, rank: int, terms=None):
        if rank < 1:
            raise ValueError("tensor rank must be >= 1")
        self._rank = rank
        data: dict[tuple[Composition, ...], Rational] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, value in items:
                k = tuple(Composition(f) for f in key)
                if len(k) != rank:
                    raise ValueError(f"key {k} has rank {len(k)}, expected {rank}")
                v = coerce_coeff(value)
                if k in data:
                    v = data[k] + v
                if v:
                    data[k] = v
                else:
                    data.pop(k, None)
        self._terms = data

    @classmethod
    def basis(cls, factors, coeff=1) -> "TensorElement":
        factors = tuple(Composition(f) for f in factors)
        return cls(len(factors), {factors: coeff})

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> "TensorElement":
        t = cls.__new__(cls)
        t._rank = rank
        t._terms = terms
        return t

    @property
    def rank(self) -> int:
        return self._rank

    def coefficient(self, factors) -> Fraction:
        key = tuple(Composition(f) for f in factors)
        return Fraction(self._terms.get(key, 0))

    def terms(self) -> list[tuple[tuple[Composition, ...], Fraction]]:
        return [
            (k, Fraction(v))
            for k, v in sorted(
                self._terms.items(),
                key=lambda kv: tuple(serial_key(f) for f in kv[0]),
            )
        ]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, TensorElement):
            return self._rank == other._rank and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self._rank, frozenset(self._terms.items())))

    def _require_same_rank(self, other: "TensorElement"):
        if self._rank != other._rank:
            raise ValueError(f"rank mismatch: {self._rank} vs {other._rank}")

    def __add__(self, other) -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._require_same_rank(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TensorElement._raw(self._rank, out)

    def __sub__(self, other) -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "TensorElement":
        return TensorElement._raw(self._rank, {k: -v for k, v in self._terms.items()})

    def scaled(self, scalar) -> "TensorElement":
        q = coerce_coeff(scalar)
        if not q:
            return TensorElement(self._rank)
        return TensorElement._raw(self._rank, {k: v * q for k, v in self._terms.items()})

    def __mul__(self, scalar) -> "TensorElement":
        return self.scaled(scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "TensorElement":
        return self.scaled(Fraction(1, 1) / coerce_coeff(scalar))

    def to_records(self) -> list[dict]:
        return [
            {"coeff": str(v), "comp": [list(f) for f in k]}
            for k, v in self.terms()
        ]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for k, v in self.terms():
            body = "(x)".join(str(f) if f else "1" for f in k)
            mag = abs(v)
            piece = body if mag == 1 else f"{mag}*{body}"
            if not chunks:
                chunks.append(piece if v > 0 else "-" + piece)
            else:
                chunks.append(("+ " if v > 0 else "- ") + piece)
        return " ".join(chunks)

    def __repr__(self) -> str:
        inner = ", ".join(
            "(" + ", ".join(str(f) for f in k) + f"): {v}" for k, v in self.terms()
        )
        return f"TensorElement(rank={self._rank}, {{{inner}}})"


def as_element(x) -> Element:
    """Promote a composition (or raw part tuple) to a basis Element."""
    if isinstance(x, Element):
        return x
    return Element.basis(Composition(x))


def graded_component(e: Element, n: int) -> Element:
    """The part of ``e`` supported in weight exactly ``n``."""
    return Element._raw({c: v for c, v in e._terms.items() if c.weight == n})


def component_weights(e: Element) -> list[int]:
    """Sorted weights occurring in the support of ``e``."""
    return sorted({c.weight for c in e._terms})


def tensor_project(t: TensorElement, alpha) -> TensorElement:
    """Keep the tensor terms whose factorwise weight profile equals ``alpha``.

    ``alpha`` must be a composition of depth equal to the rank of ``t``;
    anything else is a rank mismatch.
    """
    alpha = Composition(alpha)
    if alpha.depth != t.rank:
        raise ValueError(f"rank mismatch: tensor rank {t.rank}, profile depth {alpha.depth}")
    profile = tuple(alpha)
    return TensorElement._raw(
        t.rank,
        {k: v for k, v in t._terms.items() if tuple(f.weight for f in k) == profile},
    )


def componentwise_product(
    t1: TensorElement, t2: TensorElement, product: Callable[[Element, Element], Element]
) -> TensorElement:
    """Apply a bilinear product factor by factor: (u1 (x) v1)·(u2 (x) v2) etc."""
    t1._require_same_rank(t2)
    rank = t1.rank
    out: dict[tuple[Composition, ...], Rational] = {}
    for k1, q1 in t1._terms.items():
        for k2, q2 in t2._terms.items():
            q = q1 * q2
            partials: list[tuple[tuple[Composition, ...], Rational]] = [((), q)]
            for i in range(rank):
                factor = product(Element.basis(k1[i]), Element.basis(k2[i]))
                partials = [
                    (key + (c,), coeff * v)
                    for key, coeff in partials
                    for c, v in factor._terms.items()
                ]
            for key, coeff in partials:
                s = out.get(key, 0) + coeff
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return TensorElement._raw(rank, out)
