"""Universal enveloping algebra: PBW normal ordering and left-ideal reduction.

Elements are finite sums ``coeff * word`` where ``word`` is a tuple of
generators sorted under a :class:`GeneratorOrder` and ``coeff`` is a
:class:`CentralPoly`.  Straightening rewrites an out-of-order adjacent pair
``x y`` as ``y x + [x, y]``; the bracket's central part drops into the
coefficient.  Each rewrite either shortens the word or lowers its inversion
count at equal length, so the process terminates.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .central import ONE, ZERO, CentralPoly, Scalar, as_poly
from .errors import StepBudgetExceeded, UsageError
from .structure import KINDS, Generator, LieElement, bracket_basis

Word = tuple[Generator, ...]


@dataclass(frozen=True)
class GeneratorOrder:
    """A strict total order on generators.

    By default every ``L`` precedes every ``I`` (``kinds`` gives the kind
    order) and each kind is ascending by index.  With ``triangular=True``
    generators are first split into negative, zero and positive index
    blocks, which is the order used to act on highest-weight vectors.
    Generators listed in ``last`` are placed after everything else, in the
    given relative order.
    """

    last: tuple[Generator, ...] = ()
    kinds: tuple[str, str] = KINDS
    triangular: bool = False
    _last_pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        last = tuple(g if isinstance(g, Generator) else Generator(*g) for g in self.last)
        if len(set(last)) != len(last):
            raise UsageError("repeated generator in the 'last' set of an order")
        if sorted(self.kinds) != sorted(KINDS):
            raise UsageError(f"kinds must be a permutation of {KINDS}")
        object.__setattr__(self, "last", last)
        object.__setattr__(self, "kinds", tuple(self.kinds))
        object.__setattr__(self, "_last_pos", {g: i for i, g in enumerate(last)})

    @classmethod
    def default(cls) -> GeneratorOrder:
        return DEFAULT_ORDER

    @classmethod
    def ideal_last(cls, gens: Iterable[Generator]) -> GeneratorOrder:
        return cls(last=tuple(gens))

    @classmethod
    def highest_weight(cls) -> GeneratorOrder:
        """Negative generators, then ``L_0, I_0``, then positive generators."""
        return cls(triangular=True)

    def key(self, g: Generator) -> tuple:
        pos = self._last_pos.get(g)
        if pos is not None:
            return (3, pos, 0)
        kind, index = g
        rank = self.kinds.index(kind)
        if self.triangular:
            block = 0 if index < 0 else 1 if index == 0 else 2
            return (block, rank, index)
        return (rank, index, 0)

    def less(self, x: Generator, y: Generator) -> bool:
        return self.key(x) < self.key(y)

    def is_sorted(self, word: Sequence[Generator]) -> bool:
        keys = [self.key(g) for g in word]
        return all(a <= b for a, b in zip(keys, keys[1:]))

    def describe(self) -> str:
        if self == DEFAULT_ORDER:
            return "default"
        parts = []
        if self.triangular:
            parts.append("highest-weight")
        if self.kinds != KINDS:
            parts.append("kinds=" + ",".join(self.kinds))
        if self.last:
            parts.append("ideal-last=" + ",".join(repr(g) for g in self.last))
        return ";".join(parts)


DEFAULT_ORDER = GeneratorOrder()


def monomial_sort_key(word: Word) -> tuple:
    """Ascending length, then lexicographic on (kind, index)."""
    return (len(word), tuple((KINDS.index(k), i) for k, i in word))


def display_sort_key(word: Word) -> tuple:
    """Canonical output order: longest monomials first, ties lexicographic."""
    return (-len(word), tuple((KINDS.index(k), i) for k, i in word))


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise StepBudgetExceeded(self.limit)


def _accumulate(target: dict, word: Word, coeff: CentralPoly) -> None:
    total = target.get(word)
    total = coeff if total is None else total + coeff
    if total:
        target[word] = total
    else:
        target.pop(word, None)


def _straighten(
    terms: Mapping[Word, CentralPoly],
    order: GeneratorOrder,
    strategy: str = "rightmost",
    budget: _Budget | None = None,
) -> dict[Word, CentralPoly]:
    if strategy not in ("rightmost", "leftmost"):
        raise UsageError(f"unknown straightening strategy {strategy!r}")
    rightmost = strategy == "rightmost"
    budget = budget or _Budget(None)
    keycache: dict[Generator, tuple] = {}

    def key(g):
        k = keycache.get(g)
        if k is None:
            k = keycache[g] = order.key(g)
        return k

    def rank(word):
        # every rewrite lowers (length, inversions), so popping the largest
        # rank first sees each word once, after all its contributions merged
        keys = [key(g) for g in word]
        inv = sum(1 for i in range(len(keys)) for j in range(i + 1, len(keys)) if keys[i] > keys[j])
        return (-len(word), -inv)

    pending: dict[Word, CentralPoly] = {}
    heap: list = []

    def push(word, coeff):
        if word not in pending:
            heapq.heappush(heap, (rank(word), word))
        _accumulate(pending, word, coeff)

    for word, coeff in terms.items():
        if coeff:
            push(tuple(word), coeff)
    done: dict[Word, CentralPoly] = {}
    while heap:
        _, word = heapq.heappop(heap)
        coeff = pending.pop(word, None)
        if coeff is None:
            continue
        keys = [key(g) for g in word]
        spots = range(len(word) - 2, -1, -1) if rightmost else range(len(word) - 1)
        for i in spots:
            if keys[i] > keys[i + 1]:
                break
        else:
            _accumulate(done, word, coeff)
            continue
        budget.tick()
        x, y = word[i], word[i + 1]
        head, tail = word[:i], word[i + 2 :]
        push(head + (y, x) + tail, coeff)
        comm = bracket_basis(x, y)
        for g, c in comm._gens.items():
            push(head + (g,) + tail, coeff * c)
        if comm._central:
            push(head + tail, coeff * comm._central)
    return done


class EnvelopingElement:
    """An element of U(L) in PBW canonical form relative to ``order``."""

    __slots__ = ("order", "_terms")

    def __init__(self, terms: Mapping[Word, CentralPoly | Scalar] | None = None,
                 order: GeneratorOrder = DEFAULT_ORDER, *, step_budget: int | None = None):
        """Build and normal-order an element from arbitrary (unsorted) words."""
        self.order = order
        raw = {}
        for word, coeff in (terms or {}).items():
            word = tuple(g if isinstance(g, Generator) else Generator(*g) for g in word)
            coeff = as_poly(coeff)
            if coeff:
                _accumulate(raw, word, coeff)
        self._terms = _straighten(raw, order, budget=_Budget(step_budget))

    @classmethod
    def _canonical(cls, terms: dict[Word, CentralPoly], order: GeneratorOrder):
        obj = object.__new__(cls)
        obj.order = order
        obj._terms = terms
        return obj

    @classmethod
    def scalar(cls, value: CentralPoly | Scalar, order: GeneratorOrder = DEFAULT_ORDER):
        value = as_poly(value)
        return cls._canonical({(): value} if value else {}, order)

    @classmethod
    def generator(cls, g: Generator, order: GeneratorOrder = DEFAULT_ORDER):
        return cls._canonical({(g,): ONE}, order)

    @classmethod
    def from_lie(cls, x: LieElement, order: GeneratorOrder = DEFAULT_ORDER):
        terms = {(g,): c for g, c in x.generator_terms.items()}
        if x.central_term:
            terms[()] = x.central_term
        return cls._canonical(terms, order)

    @property
    def terms(self) -> dict[Word, CentralPoly]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Word, CentralPoly]]:
        return sorted(self._terms.items(), key=lambda kv: display_sort_key(kv[0]))

    def coefficient(self, word: Sequence[Generator]) -> CentralPoly:
        return self._terms.get(tuple(word), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_central(self) -> bool:
        return all(not w for w in self._terms)

    def central_part(self) -> CentralPoly:
        return self._terms.get((), ZERO)

    def filtration_degree(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    def grades(self) -> set[int]:
        return {sum(g[1] for g in w) for w in self._terms}

    def to_lie(self) -> LieElement:
        if self.filtration_degree() > 1:
            raise UsageError("element has filtration degree above 1")
        return LieElement(
            {w[0]: c for w, c in self._terms.items() if w}, self.central_part()
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, EnvelopingElement):
            return self.order == other.order and self._terms == other._terms
        if isinstance(other, (int, Fraction, CentralPoly)):
            return self._terms == EnvelopingElement.scalar(other, self.order)._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.order, frozenset(self._terms.items())))

    def _check(self, other: EnvelopingElement):
        if other.order != self.order:
            raise UsageError(
                f"order mismatch: {self.order.describe()} vs {other.order.describe()}; "
                "renormalize one operand first"
            )

    def __add__(self, other) -> EnvelopingElement:
        if isinstance(other, (int, Fraction, CentralPoly)):
            other = EnvelopingElement.scalar(other, self.order)
        if not isinstance(other, EnvelopingElement):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            _accumulate(out, w, c)
        return EnvelopingElement._canonical(out, self.order)

    __radd__ = __add__

    def __neg__(self) -> EnvelopingElement:
        return EnvelopingElement._canonical({w: -c for w, c in self._terms.items()}, self.order)

    def __sub__(self, other) -> EnvelopingElement:
        return self + (-other)

    def __rsub__(self, other) -> EnvelopingElement:
        return (-self) + other

    def scale(self, factor: CentralPoly | Scalar) -> EnvelopingElement:
        factor = as_poly(factor)
        out = {}
        for w, c in self._terms.items():
            p = c * factor
            if p:
                out[w] = p
        return EnvelopingElement._canonical(out, self.order)

    def __mul__(self, other) -> EnvelopingElement:
        if isinstance(other, (int, Fraction, CentralPoly)):
            return self.scale(other)
        if not isinstance(other, EnvelopingElement):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other) -> EnvelopingElement:
        if isinstance(other, (int, Fraction, CentralPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> EnvelopingElement:
        if not isinstance(n, int) or n < 0:
            raise UsageError("power must be a non-negative integer")
        result = EnvelopingElement.scalar(1, self.order)
        for _ in range(n):
            result = multiply(result, self)
        return result

    def __repr__(self) -> str:
        from .frontend.serialize import format_element

        return f"EnvelopingElement({format_element(self)!r})"

    def __str__(self) -> str:
        from .frontend.serialize import format_element

        return format_element(self)


def normal_order(
    word: Sequence[Generator],
    order: GeneratorOrder = DEFAULT_ORDER,
    *,
    strategy: str = "rightmost",
    step_budget: int | None = None,
) -> EnvelopingElement:
    """PBW canonical form of a single generator word."""
    word = tuple(g if isinstance(g, Generator) else Generator(*g) for g in word)
    terms = _straighten({word: ONE}, order, strategy, _Budget(step_budget))
    return EnvelopingElement._canonical(terms, order)


def normal_order_terms(
    terms: Mapping[Word, CentralPoly],
    order: GeneratorOrder = DEFAULT_ORDER,
    *,
    strategy: str = "rightmost",
    step_budget: int | None = None,
) -> EnvelopingElement:
    """Canonical form of a combination of arbitrary words."""
    return EnvelopingElement._canonical(
        _straighten(terms, order, strategy, _Budget(step_budget)), order
    )


def multiply(
    a: EnvelopingElement, b: EnvelopingElement, *, step_budget: int | None = None
) -> EnvelopingElement:
    if a.order != b.order:
        raise UsageError(
            f"order mismatch: {a.order.describe()} vs {b.order.describe()}; "
            "renormalize one operand first"
        )
    raw: dict[Word, CentralPoly] = {}
    for w1, c1 in a._terms.items():
        for w2, c2 in b._terms.items():
            _accumulate(raw, w1 + w2, c1 * c2)
    return EnvelopingElement._canonical(
        _straighten(raw, a.order, budget=_Budget(step_budget)), a.order
    )


def commutator(a: EnvelopingElement, b: EnvelopingElement, **kw) -> EnvelopingElement:
    return multiply(a, b, **kw) - multiply(b, a, **kw)


def renormalize(
    a: EnvelopingElement, new_order: GeneratorOrder, *, step_budget: int | None = None
) -> EnvelopingElement:
    """Rewrite ``a`` in the PBW basis of ``new_order``."""
    if new_order == a.order:
        return a
    return EnvelopingElement._canonical(
        _straighten(a._terms, new_order, budget=_Budget(step_budget)), new_order
    )


#: Largest bracket closure computed for a finite generator set with mixed signs.
CLOSURE_CAP = 256


@dataclass(frozen=True)
class LeftIdeal:
    """A left ideal ``sum U(L) g`` made concrete for reduction.

    ``order`` puts every generator of the closure ``K`` (the subalgebra the
    selected generators generate, modulo centrals) after all others, so
    ``U(L) K`` is spanned by the PBW monomials ending in ``K`` together with
    ``killed`` central indeterminates: those that arise as brackets inside
    ``K`` and therefore lie in the ideal themselves.
    """

    order: GeneratorOrder
    members: frozenset | str
    killed: tuple[str, ...] = ()

    def contains(self, g: Generator) -> bool:
        if isinstance(self.members, str):
            return g[0] == self.members
        return g in self.members


def _index_window(a: EnvelopingElement) -> tuple[int, int]:
    # every generator produced while straightening a word has an index that
    # is a sub-multiset sum of the word's indices
    lo = hi = 0
    for word in a._terms:
        lo = min(lo, sum(g[1] for g in word if g[1] < 0))
        hi = max(hi, sum(g[1] for g in word if g[1] > 0))
    return lo, hi


def _central_variable(poly: CentralPoly) -> str:
    (exps, _), = poly.items() if len(poly.terms) == 1 else ((None, None),)
    if exps is None or sum(exps) != 1:
        raise UsageError(f"closure produces the central relation {poly}, which is not a single indeterminate")
    return ("C", "CI", "CLI")[exps.index(1)]


def _closure(gens: list[Generator], window: tuple[int, int] | None) -> tuple[set, set]:
    members = set(gens)
    killed: set[str] = set()
    frontier = list(gens)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            for first, second in ((x, y), (y, x)):
                comm = bracket_basis(first, second)
                if comm._central:
                    killed.add(_central_variable(comm._central))
                for g in comm._gens:
                    if g in members:
                        continue
                    if window is not None and not window[0] <= g[1] <= window[1]:
                        continue
                    members.add(g)
                    frontier.append(g)
                    if len(members) > CLOSURE_CAP:
                        raise UsageError(
                            "generators with mixed-sign indices generate an infinite "
                            "subalgebra; the ideal cannot be realised as order-maximal"
                        )
    return members, killed


def left_ideal(ideal, a: EnvelopingElement | None = None) -> LeftIdeal:
    """Concrete form of ``ideal`` adequate for reducing ``a``.

    ``ideal`` is a generator kind (``"I"`` or ``"L"``: every generator of that
    kind) or a finite collection of generators.  For a collection whose
    indices all share one sign the closure is infinite but graded, so only
    its part inside the index range reachable from ``a`` is materialised.
    """
    if isinstance(ideal, Generator):
        ideal = [ideal]
    if isinstance(ideal, str):
        if ideal not in KINDS:
            raise UsageError(f"unknown generator kind {ideal!r} for an ideal")
        other = "L" if ideal == "I" else "I"
        # [I_1, I_-1] = C_I and [L_2, L_-2] = -4 L_0 + C/2
        killed = ("CI",) if ideal == "I" else ("C",)
        return LeftIdeal(GeneratorOrder(kinds=(other, ideal)), ideal, killed)
    if callable(ideal) or not isinstance(ideal, Iterable):
        raise UsageError(
            "ideal must be a generator kind or a finite set of generators; "
            "an arbitrary predicate cannot be realised as order-maximal"
        )
    gens = []
    for g in ideal:
        if not isinstance(g, Generator):
            try:
                g = Generator(*g)
            except (TypeError, ValueError) as exc:
                raise UsageError(f"ideal entry {g!r} is not a generator") from exc
        if g not in gens:
            gens.append(g)
    one_sided = all(g[1] >= 0 for g in gens) or all(g[1] <= 0 for g in gens)
    window = None
    if one_sided:
        window = _index_window(a) if a is not None else (0, 0)
    members, killed = _closure(gens, window)
    last = tuple(sorted(members, key=DEFAULT_ORDER.key))
    return LeftIdeal(GeneratorOrder(last=last), frozenset(members), tuple(sorted(killed)))


def _adapted(order: GeneratorOrder, ideal: LeftIdeal) -> bool:
    if isinstance(ideal.members, str):
        kind = ideal.members
        return (
            not order.triangular
            and order.kinds[-1] == kind
            and all(g[0] == kind for g in order.last)
        )
    tail = order.last[len(order.last) - len(ideal.members):] if ideal.members else ()
    return set(tail) == set(ideal.members)


def reduce_mod_left_ideal(
    a: EnvelopingElement,
    ideal,
    *,
    order: GeneratorOrder | None = None,
    step_budget: int | None = None,
) -> EnvelopingElement:
    """Canonical coset representative of ``a`` modulo ``sum U(L) g``.

    ``a`` is normal-ordered with the ideal's generators (closed under
    brackets) maximal; monomials ending in one of them are dropped and the
    central indeterminates lying in the ideal are set to zero.  ``order``
    may name any such ideal-adapted order; the representative does not
    depend on the choice.  The result is expressed in the default order.
    """
    concrete = left_ideal(ideal, a)
    if order is None:
        order = concrete.order
    elif not _adapted(order, concrete):
        raise UsageError(f"order {order.describe()} does not put the ideal's generators last")
    canon = renormalize(a, order, step_budget=step_budget)
    zeros = {name: 0 for name in concrete.killed}
    kept: dict[Word, CentralPoly] = {}
    for w, c in canon._terms.items():
        if w and concrete.contains(w[-1]):
            continue
        c = c.substitute(zeros)
        if c:
            kept[w] = c
    return renormalize(EnvelopingElement._canonical(kept, order), DEFAULT_ORDER)


def specialize_centrals(
    a: EnvelopingElement,
    c: Scalar | None = None,
    c_I: Scalar | None = None,
    c_LI: Scalar | None = None,
) -> EnvelopingElement:
    """Evaluate the central indeterminates given as rationals; others stay symbolic."""
    values = {name: v for name, v in (("C", c), ("CI", c_I), ("CLI", c_LI)) if v is not None}
    out = {}
    for w, coeff in a._terms.items():
        p = coeff.substitute(values)
        if p:
            out[w] = p
    return EnvelopingElement._canonical(out, a.order)


def filtration_degree(a: EnvelopingElement) -> int:
    return a.filtration_degree()


def inversion_count(word: Sequence[Generator], order: GeneratorOrder) -> int:
    keys = [order.key(g) for g in word]
    return sum(1 for i in range(len(keys)) for j in range(i + 1, len(keys)) if keys[i] > keys[j])
