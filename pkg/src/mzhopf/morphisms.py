"""Characters of the shuffle algebra and the morphisms they induce.

A character is a rational-valued multiplicative functional on the shuffle
algebra, stored as a finite table with an explicit weight horizon.  Every
character ``chi`` induces an algebra-and-coalgebra morphism into the
quasi-shuffle algebra,

    induced_morphism(chi, e) =
        sum over compositions alpha of weight n of
            (chi tensored over the factors of the rank-depth(alpha)
             iterated coproduct, projected to weight profile alpha)
        times the basis element [alpha],

for homogeneous ``e`` of weight ``n``.  In the ascending composition basis
its weight-``n`` matrix is upper triangular with diagonal entry
``chi([s1]) * ... * chi([sk])`` at column ``[s1,...,sk]``, so the morphism
is invertible exactly when ``chi([s]) != 0`` for every relevant ``s``;
``preimage`` realizes the inverse by back-substitution.

With the factorial character ``chi([s]) = 1/weight!`` the composite
``canonical_character . induced_morphism`` recovers ``chi`` itself, and the
induced morphism identifies the two Hopf structures exactly.

Two implementations of the induced morphism are kept deliberately:
``induced_morphism`` follows the defining formula through the public
iterated coproduct and weight-profile projection, while
``induced_morphism_fast`` walks iterated *reduced* coproducts (no unit
factors ever appear) and is the default used by matrices and the CLI.
Their agreement is part of the verification suite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Mapping

from .compositions import (
    UNIT,
    Composition,
    enumerate_basis,
    serial_key,
)
from .elements import (
    Element,
    Rational,
    as_element,
    coerce_coeff,
    component_weights,
    graded_component,
)
from . import shuffle_algebra

__all__ = [
    "CoverageError",
    "SingularCharacterError",
    "InvalidCharacterError",
    "Character",
    "factorial_character",
    "validate_character",
    "CharacterCheck",
    "projected_character",
    "induced_morphism",
    "induced_morphism_fast",
    "GradedMatrix",
    "morphism_matrix",
    "preimage",
    "read_character_file",
]


class CoverageError(LookupError):
    """A character value was requested beyond the table's weight horizon."""


class SingularCharacterError(ValueError):
    """The induced morphism is not invertible: chi([s]) = 0 for some needed s."""

    def __init__(self, part: int):
        self.part = part
        super().__init__(
            f"character vanishes on [{part}]; the induced morphism is singular there"
        )


class InvalidCharacterError(ValueError):
    """A character table failed validation on ingestion."""


class Character:
    """Finite table of a multiplicative functional, with a weight horizon.

    ``values`` maps compositions to exact rationals; the unit maps to 1.
    Lookups beyond ``max_weight`` (or absent from the table when no backing
    rule is installed) raise :class:`CoverageError`.  Instances are
    immutable in use and hashed by identity, so derived data such as
    morphism matrices may be cached against them.
    """

    __slots__ = ("_values", "_rule", "max_weight", "label")

    def __init__(
        self,
        values: Mapping,
        max_weight: int,
        label: str = "",
        rule: Callable[[Composition], Rational] | None = None,
    ):
        if max_weight < 0:
            raise ValueError("max_weight must be >= 0")
        table: dict[Composition, Rational] = {}
        for key, value in values.items():
            c = Composition(key)
            if c.weight > max_weight:
                raise ValueError(f"table entry {c} exceeds the horizon {max_weight}")
            table[c] = coerce_coeff(value)
        if table.setdefault(UNIT, 1) != 1:
            raise ValueError("a character must send the unit to 1")
        self._values = table
        self._rule = rule
        self.max_weight = max_weight
        self.label = label

    def value(self, c) -> Fraction:
        c = Composition(c)
        try:
            return Fraction(self._values[c])
        except KeyError:
            pass
        if c.weight > self.max_weight:
            raise CoverageError(
                f"{self.label or 'character'} covers weight <= {self.max_weight}, "
                f"cannot evaluate at {c}"
            )
        if self._rule is None:
            raise CoverageError(f"no table entry for {c}")
        v = coerce_coeff(self._rule(c))
        self._values[c] = v
        return Fraction(v)

    def __call__(self, arg) -> Fraction:
        if isinstance(arg, Element):
            return Fraction(
                sum(q * self.value(c) for c, q in arg._terms.items())
            )
        return self.value(arg)

    def __repr__(self) -> str:
        name = self.label or "character"
        return f"Character({name!r}, max_weight={self.max_weight})"


def factorial_character(max_weight: int = 12) -> Character:
    """The character sending every composition of weight n to 1/n!."""
    return Character(
        {},
        max_weight=max_weight,
        label="factorial",
        rule=lambda c: Fraction(1, factorial(c.weight)),
    )


@dataclass(frozen=True)
class CharacterCheck:
    """Result of validate_character; truthy iff the table is multiplicative."""

    ok: bool
    violation: tuple[Composition, Composition] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_character(chi: Character) -> CharacterCheck:
    """Check chi(unit) = 1 and chi(a sh b) = chi(a)chi(b) up to the horizon.

    Runs over every basis pair with total weight within ``chi.max_weight``
    and reports the first violating pair.  Cost grows quickly with the
    horizon; validation at horizon 12 takes noticeable time.
    """
    if chi.value(UNIT) != 1:
        return CharacterCheck(False, (UNIT, UNIT), "unit does not map to 1")
    top = chi.max_weight
    for m in range(1, top):
        for a in enumerate_basis(m):
            for n in range(1, top - m + 1):
                for b in enumerate_basis(n):
                    lhs = chi(shuffle_algebra.shuffle(a, b))
                    rhs = chi.value(a) * chi.value(b)
                    if lhs != rhs:
                        return CharacterCheck(
                            False,
                            (a, b),
                            f"chi({a} sh {b}) = {lhs} but chi({a})*chi({b}) = {rhs}",
                        )
    return CharacterCheck(True)


# ---------------------------------------------------------------------------
# the induced morphism


def projected_character(chi: Character, alpha, e) -> Fraction:
    """Coefficient functional for profile ``alpha``: iterate the coproduct to
    rank depth(alpha), project to the weight profile, multiply chi across the
    factors and sum."""
    alpha = Composition(alpha)
    if not alpha:
        raise ValueError("the profile must be a nonempty composition")
    e = as_element(e)
    from .elements import tensor_project

    m = alpha.depth
    projected = tensor_project(shuffle_algebra.iterated_coproduct(m, e), alpha)
    total = Fraction(0)
    for key, q in projected._terms.items():
        prod = Fraction(q)
        for f in key:
            prod *= chi.value(f)
        total += prod
    return total


def induced_morphism(chi: Character, e) -> Element:
    """The character-induced morphism, by its defining per-profile formula.

    For each homogeneous component of weight n and each rank m, the rank-m
    iterated coproduct is bucketed by factorwise weight profile; profiles
    containing a zero belong to no composition of n and contribute nothing.
    This is the definitional route; see ``induced_morphism_fast`` for the
    production one.
    """
    e = as_element(e)
    out: dict[Composition, Rational] = {}

    def add(c: Composition, q) -> None:
        s = out.get(c, 0) + q
        if s:
            out[c] = s
        else:
            out.pop(c, None)

    for n in component_weights(e):
        en = graded_component(e, n)
        if n == 0:
            add(UNIT, en._terms[UNIT])
            continue
        terms: dict[tuple[Composition, ...], Rational] = {
            (c,): q for c, q in en._terms.items()
        }
        for m in range(1, n + 1):
            if m > 1:
                nxt: dict[tuple[Composition, ...], Rational] = {}
                for key, q in terms.items():
                    rest = key[1:]
                    for (u, v), w in shuffle_algebra._coproduct_basis(key[0])._terms.items():
                        k2 = (u, v) + rest
                        s = nxt.get(k2, 0) + q * w
                        if s:
                            nxt[k2] = s
                        else:
                            nxt.pop(k2, None)
                terms = nxt
            for key, q in terms.items():
                profile = tuple(f.weight for f in key)
                if 0 in profile:
                    continue
                coeff = Fraction(q)
                for f in key:
                    coeff *= chi.value(f)
                if coeff:
                    add(Composition(profile), coeff)
    return Element._raw(out)


def induced_morphism_fast(chi: Character, e) -> Element:
    """Same morphism via iterated reduced coproducts (no unit factors).

    The rank-m chains here are exponentially smaller than the full iterated
    coproducts, so this is the route used by ``morphism_matrix`` and the CLI.
    """
    e = as_element(e)
    out: dict[Composition, Rational] = {}

    def add(c: Composition, q) -> None:
        s = out.get(c, 0) + q
        if s:
            out[c] = s
        else:
            out.pop(c, None)

    for n in component_weights(e):
        en = graded_component(e, n)
        if n == 0:
            add(UNIT, en._terms[UNIT])
            continue
        terms: dict[tuple[Composition, ...], Rational] = {
            (c,): q for c, q in en._terms.items()
        }
        for m in range(1, n + 1):
            if m > 1:
                nxt: dict[tuple[Composition, ...], Rational] = {}
                for key, q in terms.items():
                    rest = key[1:]
                    for (u, v), w in shuffle_algebra._reduced_coproduct_basis(
                        key[0]
                    )._terms.items():
                        k2 = (u, v) + rest
                        s = nxt.get(k2, 0) + q * w
                        if s:
                            nxt[k2] = s
                        else:
                            nxt.pop(k2, None)
                terms = nxt
                if not terms:
                    break
            for key, q in terms.items():
                coeff = Fraction(q)
                for f in key:
                    coeff *= chi.value(f)
                if coeff:
                    add(Composition(tuple(f.weight for f in key)), coeff)
    return Element._raw(out)


# ---------------------------------------------------------------------------
# matrices and inversion


@dataclass(frozen=True)
class GradedMatrix:
    """Matrix of a graded map on one weight component, in the ascending basis.

    ``entries[row][col]`` is the coefficient of ``basis[row]`` in the image
    of ``basis[col]``.  For induced-morphism matrices this is upper
    triangular with the diagonal products described in the module docstring.
    """

    weight: int
    basis: tuple[Composition, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def entry(self, row: int, col: int) -> Fraction:
        return self.entries[row][col]

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.entries[i][i] for i in range(self.dimension))

    def is_upper_triangular(self) -> bool:
        return all(
            not self.entries[r][c]
            for r in range(self.dimension)
            for c in range(r)
        )

    def to_csv(self) -> str:
        lines = [",".join(str(c) for c in self.basis)]
        for row in self.entries:
            lines.append(",".join(str(v) for v in row))
        return "\n".join(lines) + "\n"

    def to_table(self) -> str:
        headers = [str(c) for c in self.basis]
        cells = [[str(v) for v in row] for row in self.entries]
        widths = [
            max(len(headers[j]), max(len(cells[i][j]) for i in range(len(cells))))
            for j in range(len(headers))
        ]
        stub = max(len(h) for h in headers)
        lines = [
            " " * stub
            + "  "
            + "  ".join(h.rjust(w) for h, w in zip(headers, widths))
        ]
        for label, row in zip(headers, cells):
            lines.append(
                label.rjust(stub)
                + "  "
                + "  ".join(v.rjust(w) for v, w in zip(row, widths))
            )
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=64)
def _matrix_cached(chi: Character, n: int) -> GradedMatrix:
    basis = enumerate_basis(n)
    index = {c: i for i, c in enumerate(basis)}
    dim = len(basis)
    cols: list[list[Fraction]] = []
    for c in basis:
        image = induced_morphism_fast(chi, Element.basis(c))
        col = [Fraction(0)] * dim
        for d, q in image._terms.items():
            col[index[d]] = Fraction(q)
        cols.append(col)
    entries = tuple(
        tuple(cols[j][i] for j in range(dim)) for i in range(dim)
    )
    return GradedMatrix(weight=n, basis=tuple(basis), entries=entries)


def morphism_matrix(chi: Character, n: int) -> GradedMatrix:
    """Matrix of the induced morphism on the weight-``n`` component."""
    if n < 1:
        raise ValueError("matrix weight must be >= 1")
    if n > chi.max_weight:
        raise CoverageError(
            f"{chi.label or 'character'} covers weight <= {chi.max_weight}, "
            f"cannot build the weight-{n} matrix"
        )
    return _matrix_cached(chi, n)


def preimage(chi: Character, e) -> Element:
    """The unique x with induced_morphism(chi, x) = e.

    Solved per weight by back-substitution on the upper-triangular matrix.
    Raises SingularCharacterError naming the smallest depth-one weight s with
    chi([s]) = 0 at or below the top weight of ``e``.
    """
    e = as_element(e)
    top = e.max_weight()
    for s in range(1, top + 1):
        if chi.value(Composition((s,))) == 0:
            raise SingularCharacterError(s)
    out: dict[Composition, Rational] = {}
    for n in component_weights(e):
        en = graded_component(e, n)
        if n == 0:
            out[UNIT] = en._terms[UNIT]
            continue
        mat = morphism_matrix(chi, n)
        index = {c: i for i, c in enumerate(mat.basis)}
        b: list[Rational] = [0] * mat.dimension
        for c, q in en._terms.items():
            b[index[c]] = q
        x: list[Rational] = [0] * mat.dimension
        entries = mat.entries
        for j in range(mat.dimension - 1, -1, -1):
            if not b[j]:
                continue
            xj = Fraction(b[j]) / entries[j][j]
            x[j] = xj
            for i in range(j):
                mij = entries[i][j]
                if mij:
                    b[i] = b[i] - mij * xj
        for j, q in enumerate(x):
            if q:
                out[mat.basis[j]] = coerce_coeff(Fraction(q))
    return Element._raw(out)


# ---------------------------------------------------------------------------
# character files


def read_character_file(path) -> Character:
    """Load a character table from a JSON document and validate it.

    Layout: {"label": str, "max_weight": int, "values": {"[2,1]": "1/6", ...}}
    with every composition of weight 1..max_weight present.  Invalid tables
    are rejected with the violating pair in the message.
    """
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidCharacterError(f"character file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvalidCharacterError("character file must hold a JSON object")
    try:
        max_weight = int(doc["max_weight"])
    except (KeyError, TypeError, ValueError):
        raise InvalidCharacterError("character file needs an integer 'max_weight'")
    label = str(doc.get("label", ""))
    raw = doc.get("values")
    if not isinstance(raw, dict):
        raise InvalidCharacterError("character file needs a 'values' table")
    values: dict[Composition, Fraction] = {}
    for key, text in raw.items():
        try:
            c = _parse_composition_key(key)
        except ValueError as exc:
            raise InvalidCharacterError(f"bad composition key {key!r}: {exc}") from exc
        try:
            values[c] = Fraction(str(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidCharacterError(f"bad value for {key!r}: {exc}") from exc
    for n in range(1, max_weight + 1):
        for c in enumerate_basis(n):
            if c not in values:
                raise InvalidCharacterError(f"missing value for {c}")
    try:
        chi = Character(values, max_weight=max_weight, label=label)
    except ValueError as exc:
        raise InvalidCharacterError(str(exc)) from exc
    check = validate_character(chi)
    if not check:
        a, b = check.violation
        raise InvalidCharacterError(
            f"table is not multiplicative at ({a}, {b}): {check.detail}"
        )
    return chi


def _parse_composition_key(key: str) -> Composition:
    key = key.strip()
    if key == "1" or key == "":
        return UNIT
    if not (key.startswith("[") and key.endswith("]")):
        raise ValueError("expected '[s1,s2,...]' or '1'")
    body = key[1:-1].strip()
    if not body:
        raise ValueError("empty brackets; use '1' for the unit")
    return Composition(int(p) for p in body.split(","))
