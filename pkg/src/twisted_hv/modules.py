"""Weight modules at desk scale: truncated Verma modules and the intermediate series.

Both module types expose a finite basis per weight and exact rational
actions.  Leaving the finite part (depth beyond the truncation, index beyond
the window) raises :class:`TruncationError`; nothing is silently projected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Iterator, Mapping, Sequence, Union

from .central import CentralPoly
from .enveloping import EnvelopingElement, GeneratorOrder, monomial_sort_key, normal_order_terms
from .errors import ResourceLimitError, TruncationError
from .linalg import nullspace
from .structure import Generator, LieElement, basis_window, bracket_basis

Label = Hashable
Acting = Union[Generator, LieElement, EnvelopingElement]

#: Default cap on the total number of basis vectors of a truncated Verma module.
VERMA_BASIS_BUDGET = 100_000
#: Deepest weight space whose dimension is counted without a basis.
MAX_COUNT_DEPTH = 1_000

HIGHEST_WEIGHT_ORDER = GeneratorOrder.highest_weight()


class ModuleVector:
    """A finite combination of basis labels with rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Label, Fraction | int] | None = None):
        self._coeffs = {k: Fraction(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def basis(cls, label: Label) -> ModuleVector:
        return cls({label: 1})

    @property
    def coeffs(self) -> dict[Label, Fraction]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def coefficient(self, label: Label) -> Fraction:
        return self._coeffs.get(label, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, ModuleVector):
            return self._coeffs == other._coeffs
        if other == 0:
            return not self._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: ModuleVector) -> ModuleVector:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            t = out.get(k, 0) + v
            if t:
                out[k] = t
            else:
                out.pop(k, None)
        return ModuleVector(out)

    def __neg__(self):
        return ModuleVector({k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return ModuleVector({k: v * scalar for k, v in self._coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        if not self._coeffs:
            return "ModuleVector(0)"
        parts = [f"{v}*{k!r}" for k, v in sorted(self._coeffs.items(), key=lambda kv: repr(kv[0]))]
        return "ModuleVector(" + " + ".join(parts) + ")"


class WeightModule:
    """Interface shared by the concrete modules.

    Subclasses define the base weight, the basis per lattice offset, the
    action of a single generator on a basis label, and the scalars by which
    ``C, C_I, C_LI`` act.
    """

    base_weight: Fraction

    def central_values(self) -> tuple[Fraction, Fraction, Fraction]:
        raise NotImplementedError

    def labels_at_offset(self, k: int) -> list[Label]:
        raise NotImplementedError

    def weight_of(self, label: Label) -> Fraction:
        raise NotImplementedError

    def act_on_label(self, g: Generator, label: Label) -> ModuleVector:
        raise NotImplementedError

    def all_labels(self) -> list[Label]:
        raise NotImplementedError

    def offset(self, weight) -> int | None:
        """``k`` with ``weight = base_weight + k``, or ``None`` off the lattice."""
        diff = Fraction(weight) - self.base_weight
        return int(diff) if diff.denominator == 1 else None

    def dim_at_offset(self, k: int) -> int:
        """Dimension of the weight space ``base_weight + k`` of the full module."""
        return len(self.labels_at_offset(k))

    def basis_at(self, weight) -> list[Label]:
        k = self.offset(weight)
        return [] if k is None else self.labels_at_offset(k)

    def scalar_of(self, poly: CentralPoly) -> Fraction:
        return poly.evaluate(*self.central_values())

    def act_generator(self, g: Generator, v: ModuleVector) -> ModuleVector:
        out = ModuleVector()
        for label, coeff in v.items():
            out = out + self.act_on_label(g, label) * coeff
        return out

    def act_lie(self, x: LieElement, v: ModuleVector) -> ModuleVector:
        out = v * self.scalar_of(x.central_term)
        for g, coeff in x.generator_terms.items():
            scalar = self.scalar_of(coeff)
            if scalar:
                out = out + self.act_generator(g, v) * scalar
        return out

    def act_enveloping(self, x: EnvelopingElement, v: ModuleVector) -> ModuleVector:
        out = ModuleVector()
        for word, coeff in x.terms.items():
            scalar = self.scalar_of(coeff)
            if not scalar:
                continue
            w = v
            for g in reversed(word):
                w = self.act_generator(g, w)
            out = out + w * scalar
        return out

    def act(self, x: Acting, v: ModuleVector) -> ModuleVector:
        if isinstance(x, Generator):
            return self.act_generator(x, v)
        if isinstance(x, LieElement):
            return self.act_lie(x, v)
        if isinstance(x, EnvelopingElement):
            return self.act_enveloping(x, v)
        raise TypeError(f"cannot act with {type(x).__name__}")

    def format_label(self, label: Label) -> str:
        return repr(label)

    def format_vector(self, v: ModuleVector) -> str:
        """Text form, highest weight first, e.g. ``-I[-1]*v + 2*L[-1]*v``."""
        from .frontend.serialize import format_rational

        if v.is_zero():
            return "0"
        items = sorted(v.items(), key=lambda kv: (self.weight_of(kv[0]), repr(kv[0])), reverse=True)
        pieces = []
        for k, (label, coeff) in enumerate(items):
            body = self.format_label(label)
            if abs(coeff) != 1:
                body = f"{format_rational(abs(coeff))}*{body}"
            if k == 0:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + body)
        return "".join(pieces)

    def vector_weight(self, v: ModuleVector) -> Fraction | None:
        weights = {self.weight_of(k) for k, _ in v.items()}
        return weights.pop() if len(weights) == 1 else None


# --------------------------------------------------------------------------
# Truncated Verma modules


@dataclass(frozen=True)
class VermaParams:
    lam: Fraction
    h_I: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    c_I: Fraction = Fraction(0)
    c_LI: Fraction = Fraction(0)
    depth: int = 0

    def __post_init__(self):
        for name in ("lam", "h_I", "c", "c_I", "c_LI"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not isinstance(self.depth, int) or self.depth < 0:
            raise ValueError("depth must be a non-negative integer")


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as nonincreasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in partitions(n - part, part):
            yield (part,) + rest


def partition_counts(n: int) -> list[int]:
    """Number of partitions of 0..n, by dynamic programming over the largest part."""
    p = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            p[total] += p[total - part]
    return p


def two_colored_partition_count(n: int) -> int:
    p = partition_counts(n)
    return sum(p[a] * p[n - a] for a in range(n + 1))


def verma_words(n: int) -> list[tuple[Generator, ...]]:
    """PBW words of grade ``-n`` in the negative generators, default order."""
    words = []
    for a in range(n + 1):
        for lp in partitions(a):
            head = tuple(Generator("L", -p) for p in lp)
            for ip in partitions(n - a):
                words.append(head + tuple(Generator("I", -p) for p in ip))
    return sorted(words, key=monomial_sort_key)


class VermaModule(WeightModule):
    """The Verma module ``U(L) (x) v`` truncated at depth ``params.depth``.

    Basis vectors are labelled by PBW words in ``L_-k, I_-k`` (``k >= 1``)
    applied to the highest-weight vector; the empty word is ``v`` itself.
    Positive generators kill ``v``; ``L_0, I_0`` act on it by ``lam, h_I``.
    """

    def __init__(self, params: VermaParams, budget: int = VERMA_BASIS_BUDGET):
        self.params = params
        total = sum(two_colored_partition_count(n) for n in range(params.depth + 1))
        if total > budget:
            raise ResourceLimitError(
                f"depth {params.depth} needs {total} basis vectors (budget {budget})"
            )
        self.base_weight = params.lam
        self.basis = {n: verma_words(n) for n in range(params.depth + 1)}
        self._cache: dict = {}

    @property
    def depth(self) -> int:
        return self.params.depth

    def central_values(self):
        p = self.params
        return (p.c, p.c_I, p.c_LI)

    def labels_at_offset(self, k: int) -> list[Label]:
        if k > 0:
            return []
        if -k > self.depth:
            raise TruncationError(f"weight lam{k:+d} lies below the truncation depth {self.depth}")
        return list(self.basis[-k])

    def all_labels(self) -> list[Label]:
        return [w for n in range(self.depth + 1) for w in self.basis[n]]

    def dim_at_offset(self, k: int) -> int:
        # known below the truncation too: 2-colored partitions of -k
        if k > 0:
            return 0
        if -k > MAX_COUNT_DEPTH:
            raise ResourceLimitError(f"dimension at depth {-k} exceeds the counting budget")
        return two_colored_partition_count(-k)

    def weight_of(self, label) -> Fraction:
        return self.base_weight + sum(g[1] for g in label)

    def highest_weight_vector(self) -> ModuleVector:
        return ModuleVector.basis(())

    def _evaluate(self, terms: Mapping) -> ModuleVector:
        p = self.params
        out: dict = {}
        for word, coeff in terms.items():
            # highest-weight order: negative block, then L_0/I_0, then positives
            if word and word[-1][1] > 0:
                continue
            scalar = coeff.evaluate(p.c, p.c_I, p.c_LI)
            cut = len(word)
            while cut and word[cut - 1][1] == 0:
                g = word[cut - 1]
                scalar *= p.lam if g[0] == "L" else p.h_I
                cut -= 1
            if scalar:
                label = word[:cut]
                out[label] = out.get(label, 0) + scalar
        return ModuleVector(out)

    def act_on_label(self, g: Generator, label) -> ModuleVector:
        key = (g, label)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        depth = -sum(x[1] for x in label) - g[1]
        if depth < 0:
            result = ModuleVector()
        elif depth > self.depth:
            raise TruncationError(
                f"{g!r} applied at depth {-sum(x[1] for x in label)} reaches depth {depth} "
                f"> truncation {self.depth}"
            )
        else:
            nf = normal_order_terms({(g,) + label: CentralPoly.constant(1)}, HIGHEST_WEIGHT_ORDER)
            result = self._evaluate(nf.terms)
        self._cache[key] = result
        return result

    def act_enveloping(self, x: EnvelopingElement, v: ModuleVector) -> ModuleVector:
        """Normal-order ``x * word`` as a whole, so only the final depth matters."""
        out = ModuleVector()
        for label, vc in v.items():
            n = -sum(g[1] for g in label)
            raw = {}
            for word, coeff in x.terms.items():
                d = n - sum(g[1] for g in word)
                if d > self.depth:
                    raise TruncationError(f"result reaches depth {d} > truncation {self.depth}")
                if d >= 0:
                    raw[word + label] = coeff
            if raw:
                nf = normal_order_terms(raw, HIGHEST_WEIGHT_ORDER)
                out = out + self._evaluate(nf.terms) * vc
        return out

    def format_label(self, label) -> str:
        return "*".join([f"{g[0]}[{g[1]}]" for g in label] + ["v"])


def verma_new(params: VermaParams, budget: int = VERMA_BASIS_BUDGET) -> VermaModule:
    return VermaModule(params, budget)


# --------------------------------------------------------------------------
# Intermediate series


@dataclass(frozen=True)
class IntermediateSeriesParams:
    alpha: Fraction
    beta: Fraction
    F: Fraction
    window: int = 1

    def __post_init__(self):
        for name in ("alpha", "beta", "F"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not isinstance(self.window, int) or self.window < 1:
            raise ValueError("window must be an integer >= 1")


class IntermediateSeriesModule(WeightModule):
    """Span of ``v_k`` (``|k| <= window``) with

        L_m v_k = (alpha + k + m beta) v_{m+k},   I_m v_k = F v_{m+k},

    and all central elements acting as zero.  ``v_k`` has weight ``alpha + k``.
    """

    def __init__(self, params: IntermediateSeriesParams):
        self.params = params
        self.base_weight = params.alpha

    @property
    def window(self) -> int:
        return self.params.window

    def central_values(self):
        return (Fraction(0), Fraction(0), Fraction(0))

    def labels_at_offset(self, k: int) -> list[Label]:
        if abs(k) > self.window:
            raise TruncationError(f"v[{k}] lies outside the window |k| <= {self.window}")
        return [k]

    def all_labels(self) -> list[Label]:
        return list(range(-self.window, self.window + 1))

    def dim_at_offset(self, k: int) -> int:
        return 1

    def weight_of(self, label) -> Fraction:
        return self.params.alpha + label

    def coefficient(self, g: Generator, k: int) -> Fraction:
        p = self.params
        if g[0] == "L":
            return p.alpha + k + g[1] * p.beta
        return p.F

    def act_on_label(self, g: Generator, label) -> ModuleVector:
        coeff = self.coefficient(g, label)
        if not coeff:
            return ModuleVector()
        target = label + g[1]
        if abs(target) > self.window:
            raise TruncationError(f"{g!r} v[{label}] = v[{target}] leaves the window")
        return ModuleVector({target: coeff})

    def format_label(self, label) -> str:
        return f"v[{label}]"


def intseries_new(params: IntermediateSeriesParams) -> IntermediateSeriesModule:
    return IntermediateSeriesModule(params)


# --------------------------------------------------------------------------
# Queries


def act(module: WeightModule, x: Acting, v: ModuleVector) -> ModuleVector:
    return module.act(x, v)


def weight_space_dim(module: WeightModule, weight) -> int:
    """Exact dimension of the weight space, 0 off the lattice ``base_weight + Z``.

    Unlike :meth:`WeightModule.basis_at` this also answers below a Verma
    truncation or outside an intermediate-series window.
    """
    k = module.offset(weight)
    return 0 if k is None else module.dim_at_offset(k)


@dataclass
class SupportReport:
    entries: list[tuple[Fraction, int]] = field(default_factory=list)

    @property
    def support(self) -> list[Fraction]:
        return [w for w, d in self.entries if d]

    def dims(self) -> list[int]:
        return [d for _, d in self.entries]


def support(module: WeightModule, window: tuple[int, int]) -> SupportReport:
    """Dimensions at ``base_weight + k`` for ``window[0] <= k <= window[1]``."""
    lo, hi = window
    return SupportReport(
        [(module.base_weight + k, module.dim_at_offset(k)) for k in range(lo, hi + 1)]
    )


@dataclass
class AxiomReport:
    checked: int = 0
    skipped: list[tuple] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_module_axioms(
    module: WeightModule,
    generator_window: tuple[int, int],
    sample_vectors: Iterable[ModuleVector] | None = None,
) -> AxiomReport:
    """Exact check of ``x(y v) - y(x v) = [x, y] v`` for all generator pairs.

    Pairs whose evaluation would leave the truncation are skipped and listed.
    """
    gens = basis_window(*generator_window)
    if sample_vectors is None:
        sample_vectors = [ModuleVector.basis(k) for k in module.all_labels()]
    vectors = list(sample_vectors)
    report = AxiomReport()
    for x, y in itertools.product(gens, repeat=2):
        comm = bracket_basis(x, y)
        for v in vectors:
            try:
                lhs = module.act_generator(x, module.act_generator(y, v)) - module.act_generator(
                    y, module.act_generator(x, v)
                )
                rhs = module.act_lie(comm, v)
            except TruncationError:
                report.skipped.append((x, y, v))
                continue
            report.checked += 1
            if lhs != rhs:
                report.violations.append({"pair": (x, y), "vector": v, "lhs": lhs, "rhs": rhs})
    return report


def find_annihilated_vectors(
    module: WeightModule, annihilators: Sequence[Generator], weight
) -> list[ModuleVector]:
    """Basis of the joint kernel of ``annihilators`` on the weight space at ``weight``."""
    labels = module.basis_at(weight)
    rows: list[list[Fraction]] = []
    for g in annihilators:
        images = [module.act_on_label(g, lab) for lab in labels]
        targets = sorted({t for im in images for t, _ in im.items()}, key=repr)
        for t in targets:
            rows.append([im.coefficient(t) for im in images])
    kernel = nullspace(rows, len(labels))
    return [ModuleVector(dict(zip(labels, vec))) for vec in kernel]


def is_harish_chandra_window(
    module: WeightModule, window: tuple[int, int]
) -> tuple[bool, SupportReport]:
    """Whether every weight space over the window is finite-dimensional.

    Always true for the finite models here; the report makes the dimensions
    explicit.
    """
    report = support(module, window) if window[0] <= window[1] else SupportReport()
    return all(d >= 0 for d in report.dims()), report
