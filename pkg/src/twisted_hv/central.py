"""Polynomials in the central indeterminates c, c_I, c_LI with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Exponents = tuple[int, int, int]
Scalar = Union[int, Fraction]

#: Surface names of the three indeterminates, in exponent-triple order.
CENTRAL_NAMES = ("C", "CI", "CLI")


class CentralPoly:
    """Sparse polynomial in (c, c_I, c_LI).

    ``terms`` maps exponent triples ``(a, b, d)`` to nonzero ``Fraction``
    coefficients; the zero polynomial has no terms.  Instances are immutable
    and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, Scalar] | None = None):
        clean: dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != 3 or any(
                    not isinstance(e, int) or e < 0 for e in exps
                ):
                    raise ValueError(f"bad exponent triple {exps!r}")
                coeff = Fraction(coeff)
                if coeff:
                    clean[tuple(exps)] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponents, Fraction]) -> CentralPoly:
        # caller guarantees a clean dict
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value: Scalar) -> CentralPoly:
        value = Fraction(value)
        return cls._raw({(0, 0, 0): value} if value else {})

    @classmethod
    def variable(cls, name: str, power: int = 1) -> CentralPoly:
        """``C``, ``CI`` or ``CLI`` raised to ``power``."""
        slot = CENTRAL_NAMES.index(name)
        exps = [0, 0, 0]
        exps[slot] = power
        return cls._raw({tuple(exps): Fraction(1)})

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0, 0)}

    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0, 0), Fraction(0))

    def degree(self, slot: int | None = None) -> int:
        """Total degree, or the degree in one indeterminate. ``-1`` for zero."""
        if not self._terms:
            return -1
        if slot is None:
            return max(sum(e) for e in self._terms)
        return max(e[slot] for e in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, CentralPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == CentralPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> CentralPoly:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            total = out.get(exps, 0) + coeff
            if total:
                out[exps] = total
            else:
                out.pop(exps, None)
        return CentralPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> CentralPoly:
        return CentralPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> CentralPoly:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> CentralPoly:
        return (-self) + other

    def __mul__(self, other) -> CentralPoly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return CentralPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, CentralPoly):
            return NotImplemented
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                total = out.get(e, 0) + c1 * c2
                if total:
                    out[e] = total
                else:
                    out.pop(e, None)
        return CentralPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CentralPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(
        self, c: Scalar = 0, c_I: Scalar = 0, c_LI: Scalar = 0
    ) -> Fraction:
        """Value at the rational point (c, c_I, c_LI)."""
        point = (Fraction(c), Fraction(c_I), Fraction(c_LI))
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for value, e in zip(point, exps):
                if e:
                    term *= value**e
            total += term
        return total

    def substitute(self, values: Mapping[str, Scalar]) -> CentralPoly:
        """Partially evaluate: replace the named indeterminates by rationals."""
        slots = {CENTRAL_NAMES.index(name): Fraction(v) for name, v in values.items()}
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            new = list(exps)
            for slot, value in slots.items():
                if new[slot]:
                    coeff = coeff * value ** new[slot]
                    new[slot] = 0
            key = tuple(new)
            total = out.get(key, 0) + coeff
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return CentralPoly._raw(out)

    def sorted_items(self) -> list[tuple[Exponents, Fraction]]:
        """Graded lexicographic order with ``c > c_I > c_LI``: highest degree first."""
        return sorted(self._terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def __str__(self) -> str:
        from .frontend.serialize import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"CentralPoly({str(self)!r})"


def _coerce(value) -> CentralPoly | None:
    if isinstance(value, CentralPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return CentralPoly.constant(value)
    return None


def as_poly(value: CentralPoly | Scalar) -> CentralPoly:
    poly = _coerce(value)
    if poly is None:
        raise TypeError(f"cannot use {type(value).__name__} as a central coefficient")
    return poly


def poly_sum(polys: Iterable[CentralPoly]) -> CentralPoly:
    total = ZERO
    for p in polys:
        total = total + p
    return total


ZERO = CentralPoly._raw({})
ONE = CentralPoly._raw({(0, 0, 0): Fraction(1)})
C = CentralPoly.variable("C")
C_I = CentralPoly.variable("CI")
C_LI = CentralPoly.variable("CLI")
