"""The twisted Heisenberg-Virasoro algebra: generators, brackets, Jacobi checks.

The non-central basis is ``L_m, I_m`` (``m`` an integer).  The central
elements ``C, C_I, C_LI`` are not generators here: they live in the
coefficient ring as the indeterminates of :class:`~twisted_hv.central.CentralPoly`.
Brackets follow

    [L_n, L_m] = (m - n) L_{n+m} + delta_{n,-m} (n^3 - n)/12 C
    [L_n, I_m] = m I_{n+m} + delta_{n,-m} (n^2 + n) C_LI
    [I_n, I_m] = n delta_{n,-m} C_I
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from operator import itemgetter
from typing import Iterable, Mapping, Optional

from .central import C, C_I, C_LI, ZERO, CentralPoly, Scalar, as_poly
from .errors import IndexRangeError

#: Largest admissible absolute generator index.
MAX_INDEX = 2**31 - 2

KINDS = ("L", "I")


def check_index(index: int) -> int:
    if isinstance(index, bool) or not isinstance(index, int):
        raise TypeError(f"generator index must be an int, got {index!r}")
    if not -MAX_INDEX <= index <= MAX_INDEX:
        raise IndexRangeError(f"generator index {index} outside [-{MAX_INDEX}, {MAX_INDEX}]")
    return index


class Generator(tuple):
    """A basis symbol ``L_m`` or ``I_m``; equality is on ``(kind, index)``."""

    __slots__ = ()

    def __new__(cls, kind: str, index: int):
        if kind not in KINDS:
            raise ValueError(f"generator kind must be 'L' or 'I', got {kind!r}")
        return tuple.__new__(cls, (kind, check_index(index)))

    kind = property(itemgetter(0))
    index = property(itemgetter(1))

    def __getnewargs__(self):
        return tuple(self)

    def __repr__(self) -> str:
        return f"{self[0]}[{self[1]}]"


def L(m: int) -> Generator:
    return Generator("L", m)


def I(m: int) -> Generator:  # noqa: E743
    return Generator("I", m)


def grade(x: Generator) -> int:
    """Eigenvalue of ``ad L_0`` on ``x``, i.e. its index."""
    return x[1]


def _shift(n: int, m: int) -> int:
    total = n + m
    if abs(total) > MAX_INDEX:
        raise IndexRangeError(f"index sum {n} + {m} leaves the supported range")
    return total


class LieElement:
    """A finite combination ``sum coeff * generator + central`` with
    :class:`CentralPoly` coefficients."""

    __slots__ = ("_gens", "_central")

    def __init__(
        self,
        generator_terms: Mapping[Generator, CentralPoly | Scalar] | None = None,
        central_term: CentralPoly | Scalar = ZERO,
    ):
        gens = {}
        for g, coeff in (generator_terms or {}).items():
            if not isinstance(g, Generator):
                g = Generator(*g)
            coeff = as_poly(coeff)
            if coeff:
                gens[g] = coeff
        self._gens = gens
        self._central = as_poly(central_term)

    @classmethod
    def of(cls, g: Generator, coeff: CentralPoly | Scalar = 1) -> LieElement:
        return cls({g: coeff})

    @classmethod
    def central(cls, poly: CentralPoly | Scalar) -> LieElement:
        return cls({}, poly)

    @property
    def generator_terms(self) -> dict[Generator, CentralPoly]:
        return dict(self._gens)

    @property
    def central_term(self) -> CentralPoly:
        return self._central

    def is_zero(self) -> bool:
        return not self._gens and not self._central

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self._gens == other._gens and self._central == other._central

    def __hash__(self):
        return hash((frozenset(self._gens.items()), self._central))

    def __add__(self, other: LieElement) -> LieElement:
        if not isinstance(other, LieElement):
            return NotImplemented
        gens = dict(self._gens)
        for g, coeff in other._gens.items():
            total = gens.get(g, ZERO) + coeff
            if total:
                gens[g] = total
            else:
                gens.pop(g, None)
        out = LieElement()
        out._gens = gens
        out._central = self._central + other._central
        return out

    def __neg__(self) -> LieElement:
        return self.scale(-1)

    def __sub__(self, other: LieElement) -> LieElement:
        return self + (-other)

    def scale(self, factor: CentralPoly | Scalar) -> LieElement:
        factor = as_poly(factor)
        out = LieElement()
        if factor:
            out._gens = {g: c * factor for g, c in self._gens.items()}
            out._central = self._central * factor
        return out

    def __mul__(self, factor):
        if isinstance(factor, (int, Fraction, CentralPoly)):
            return self.scale(factor)
        return NotImplemented

    __rmul__ = __mul__

    def sorted_generator_terms(self) -> list[tuple[Generator, CentralPoly]]:
        return sorted(self._gens.items(), key=lambda kv: (KINDS.index(kv[0][0]), kv[0][1]))

    def __repr__(self) -> str:
        parts = [f"({c})*{g!r}" for g, c in self.sorted_generator_terms()]
        if self._central:
            parts.append(f"({self._central})")
        return "LieElement(" + (" + ".join(parts) or "0") + ")"


def bracket_basis(x: Generator, y: Generator) -> LieElement:
    """The structure-constant bracket of two basis generators."""
    (kx, n), (ky, m) = x, y
    index = _shift(n, m)
    out = LieElement()
    if kx == "L" and ky == "L":
        if m != n:
            out._gens = {Generator("L", index): CentralPoly.constant(m - n)}
        if index == 0 and n**3 - n:
            out._central = C * Fraction(n**3 - n, 12)
    elif kx == "L":
        if m:
            out._gens = {Generator("I", index): CentralPoly.constant(m)}
        if index == 0 and n * n + n:
            out._central = C_LI * (n * n + n)
    elif ky == "L":
        # [I_n, L_m] = -[L_m, I_n]
        if n:
            out._gens = {Generator("I", index): CentralPoly.constant(-n)}
        if index == 0 and m * m + m:
            out._central = C_LI * -(m * m + m)
    else:
        if index == 0 and n:
            out._central = C_I * n
    return out


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Bilinear extension of :func:`bracket_basis`; central parts drop out."""
    result = LieElement()
    for g1, c1 in x._gens.items():
        for g2, c2 in y._gens.items():
            term = bracket_basis(g1, g2)
            if term:
                result = result + term.scale(c1 * c2)
    return result


def basis_window(lo: int, hi: int) -> list[Generator]:
    """All ``L_m`` then all ``I_m`` with ``lo <= m <= hi``."""
    return [Generator(k, m) for k in KINDS for m in range(lo, hi + 1)]


@dataclass
class JacobiReport:
    window: tuple[int, int]
    pairs_checked: int = 0
    triples_checked: int = 0
    violation: Optional[dict] = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violation is None


def jacobi_sum(x: Generator, y: Generator, z: Generator) -> LieElement:
    ex, ey, ez = LieElement.of(x), LieElement.of(y), LieElement.of(z)
    return (
        bracket(ex, bracket(ey, ez))
        + bracket(ey, bracket(ez, ex))
        + bracket(ez, bracket(ex, ey))
    )


def verify_jacobi(
    window: tuple[int, int], triples: Iterable[tuple[Generator, Generator, Generator]] | None = None
) -> JacobiReport:
    """Exhaustively check antisymmetry and the Jacobi identity.

    Every ordered pair and triple of basis generators with indices in the
    closed ``window`` is examined (or just ``triples`` if given).  Stops at
    the first violation.
    """
    lo, hi = window
    report = JacobiReport((lo, hi))
    gens = basis_window(lo, hi)
    for x, y in itertools.product(gens, repeat=2):
        s = bracket_basis(x, y) + bracket_basis(y, x)
        report.pairs_checked += 1
        if s:
            report.violation = {"kind": "antisymmetry", "elements": [x, y], "value": s}
            return report
    if triples is None:
        triples = itertools.product(gens, repeat=3)
    for x, y, z in triples:
        s = jacobi_sum(x, y, z)
        report.triples_checked += 1
        if s:
            report.violation = {"kind": "jacobi", "elements": [x, y, z], "value": s}
            return report
    return report
