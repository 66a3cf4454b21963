"""Named, machine-checked bracket and enveloping-algebra identities.

Each claim becomes one :class:`ClaimEntry`.  Statements quantified over all
``k >= 1`` are checked over a finite window that the entry records.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .central import C_I, C_LI
from .enveloping import (
    DEFAULT_ORDER,
    EnvelopingElement,
    GeneratorOrder,
    normal_order,
    reduce_mod_left_ideal,
    specialize_centrals,
)
from .frontend.serialize import format_element, format_lie
from .modules import (
    IntermediateSeriesParams,
    VermaParams,
    intseries_new,
    is_harish_chandra_window,
    two_colored_partition_count,
    verma_new,
)
from .structure import Generator, I, L, LieElement, bracket_basis, verify_jacobi

PASS = "pass"
FAIL = "fail"
FLAGGED = "flagged-inconsistent"


@dataclass
class ClaimEntry:
    claim_id: str
    statement: str
    status: str
    witness: str
    value: str
    window: str = ""
    note: str = ""


@dataclass
class VerificationReport:
    entries: list[ClaimEntry] = field(default_factory=list)

    def add(self, entry: ClaimEntry) -> None:
        if any(e.claim_id == entry.claim_id for e in self.entries):
            raise ValueError(f"duplicate claim id {entry.claim_id}")
        self.entries.append(entry)

    def extend(self, entries) -> None:
        for e in entries:
            self.add(e)

    def by_id(self, claim_id: str) -> ClaimEntry:
        return next(e for e in self.entries if e.claim_id == claim_id)

    def count(self, status: str) -> int:
        return sum(e.status == status for e in self.entries)

    @property
    def ok(self) -> bool:
        """No failures, and exactly the one known misprint flagged."""
        flagged = [e.claim_id for e in self.entries if e.status == FLAGGED]
        return self.count(FAIL) == 0 and flagged == [MISPRINT_ID]

    def to_dict(self) -> dict:
        return {
            "entries": [asdict(e) for e in self.entries],
            "summary": {s: self.count(s) for s in (PASS, FAIL, FLAGGED)},
            "ok": self.ok,
        }


MISPRINT_ID = "bracket.I-1-Il"


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _word(*gens: Generator) -> EnvelopingElement:
    return normal_order(gens)


def cubic_factor() -> EnvelopingElement:
    """``L_1^3 - 6 L_2 L_1 + 6 L_3`` in the default PBW basis."""
    return _word(L(1), L(1), L(1)) - _word(L(2), L(1)) * 6 + _word(L(3)) * 6


def _bracket_family(claim_id, statement, window, lhs, expected, nonzero_from=None, note=""):
    """Check ``bracket_basis(*lhs(k)) == expected(k)`` for ``k`` in ``window``.

    If ``nonzero_from`` is set, also require a nonzero value for ``k >= nonzero_from``.
    """
    bad = []
    for k in window:
        x, y = lhs(k)
        got = bracket_basis(x, y)
        want = expected(k)
        if got != want:
            bad.append(f"k={k}: [{x!r}, {y!r}] = {format_lie(got)}, expected {format_lie(want)}")
        elif nonzero_from is not None and k >= nonzero_from and not got:
            bad.append(f"k={k}: [{x!r}, {y!r}] vanishes")
    x0, y0 = lhs(window[-1])
    return ClaimEntry(
        claim_id,
        statement,
        _status(not bad),
        f"[{x0!r}, {y0!r}] at k={window[-1]}",
        "; ".join(bad) if bad else format_lie(bracket_basis(x0, y0)),
        f"k in {window[0]}..{window[-1]}",
        note,
    )


# --------------------------------------------------------------------------
# Key identity


def key_identity_element(power: int = 3) -> EnvelopingElement:
    return _word(*([I(-1)] * power)) * cubic_factor()


def verify_key_identity() -> list[ClaimEntry]:
    statement = "I_{-1}^3(L_1^3-6L_2L_1+6L_3) = -48 C_LI^3 mod sum_k U(L) I_k"
    reduced = reduce_mod_left_ideal(key_identity_element(), "I")
    expected = EnvelopingElement.scalar(C_LI**3 * -48)
    entries = [
        ClaimEntry(
            "key-identity",
            statement,
            _status(reduced == expected),
            "I[-1]^3*(L[1]^3 - 6*L[2]*L[1] + 6*L[3]) mod all I",
            format_element(reduced),
        )
    ]

    orders = [
        GeneratorOrder(last=(I(-1),)),
        GeneratorOrder(last=(I(3), I(0), I(-1))),
        GeneratorOrder(last=(I(1), I(0), I(-1), I(-2))),
    ]
    variants = [reduce_mod_left_ideal(key_identity_element(), "I", order=o) for o in orders]
    entries.append(
        ClaimEntry(
            "key-identity.order-independence",
            statement,
            _status(all(v == reduced for v in variants)),
            "same reduction under orders with every I generator maximal",
            "; ".join(f"{o.describe()}: {format_element(v)}" for o, v in zip(orders, variants)),
        )
    )

    specialized = specialize_centrals(reduced, c_LI=0)
    entries.append(
        ClaimEntry(
            "key-identity.cLI-vanishes",
            "-48 c_LI^3 = 0 at c_LI = 0",
            _status(specialized.is_zero()),
            "key-identity residue at c_LI = 0",
            format_element(specialized),
        )
    )

    single = reduce_mod_left_ideal(key_identity_element(1), "I")
    degrees = {c.degree(2) for c in single.terms.values()}
    entries.append(
        ClaimEntry(
            "key-identity.power-1",
            "I_{-1}(L_1^3-6L_2L_1+6L_3) mod sum_k U(L) I_k is nonzero and linear in C_LI",
            _status(not single.is_zero() and degrees == {1}),
            "I[-1]*(L[1]^3 - 6*L[2]*L[1] + 6*L[3]) mod all I",
            format_element(single),
            note="intermediate step: degree exactly 1 in c_LI",
        )
    )
    return entries


# --------------------------------------------------------------------------
# Annihilation propagating from I_1 v = L_1 v = 0


def verify_annihilator_propagation(window: int = 8) -> list[ClaimEntry]:
    ks = list(range(1, window + 1))
    entries = []

    reduced = reduce_mod_left_ideal(cubic_factor() * _word(L(2)), [L(1), I(1)])
    entries.append(
        ClaimEntry(
            "cubic.annihilates-L2v",
            "(L_1^3-6L_2L_1+6L_3) L_2 v = 0 when I_1 v = L_1 v = 0",
            _status(reduced.is_zero()),
            "(L[1]^3 - 6*L[2]*L[1] + 6*L[3])*L[2] mod U(L)L[1] + U(L)I[1]",
            format_element(reduced),
        )
    )

    entries.append(
        _bracket_family(
            "raising.Il-L1",
            "[I_l, L_1] = -l I_{l+1} for l >= 1",
            ks,
            lambda l: (I(l), L(1)),
            lambda l: LieElement.of(I(l + 1), -l),
            nonzero_from=1,
        )
    )
    leftover = [k for k in ks if not reduce_mod_left_ideal(_word(I(k)), [L(1), I(1)]).is_zero()]
    entries.append(
        ClaimEntry(
            "raising.Ik-membership",
            "I_k v = 0 for k = 1, 2, ... when I_1 v = L_1 v = 0",
            _status(not leftover),
            "I[k] mod U(L)L[1] + U(L)I[1]",
            "0" if not leftover else f"nonzero for k in {leftover}",
            f"k in 1..{window}",
        )
    )

    bad = []
    for k in ks:
        lhs = _word(I(k), L(2))
        rhs = _word(L(2), I(k)) - _word(I(k + 2)) * k
        if lhs != rhs:
            bad.append(f"k={k}: {format_element(lhs - rhs)}")
    entries.append(
        ClaimEntry(
            "raising.Ik-L2",
            "I_k L_2 = L_2 I_k - k I_{k+2}",
            _status(not bad),
            f"I[{ks[-1]}]*L[2] - (L[2]*I[{ks[-1]}] - {ks[-1]}*I[{ks[-1] + 2}])",
            "; ".join(bad) if bad else "0",
            f"k in 1..{window}",
        )
    )
    leftover = [
        k for k in ks if not reduce_mod_left_ideal(_word(I(k), L(2)), [L(1), I(1)]).is_zero()
    ]
    entries.append(
        ClaimEntry(
            "raising.IkL2-membership",
            "I_k L_2 v = 0",
            _status(not leftover),
            "I[k]*L[2] mod U(L)L[1] + U(L)I[1]",
            "0" if not leftover else f"nonzero for k in {leftover}",
            f"k in 1..{window}",
        )
    )
    return entries


# --------------------------------------------------------------------------
# Bracket facts


def verify_proof_bracket_facts(window: int = 8) -> list[ClaimEntry]:
    ks = list(range(1, window + 1))
    entries = [
        _bracket_family(
            "bracket.L1-Lk",
            "[L_1, L_k] = (k-1) L_{k+1}",
            ks,
            lambda k: (L(1), L(k)),
            lambda k: LieElement.of(L(k + 1), k - 1),
            nonzero_from=2,
            note="nonvanishing checked for k >= 2; the coefficient is 0 at k = 1",
        ),
        _bracket_family(
            "bracket.I1-Ll",
            "[I_1, L_l] = -I_{l+1} for l >= 1",
            ks,
            lambda l: (I(1), L(l)),
            lambda l: LieElement.of(I(l + 1), -1),
            nonzero_from=1,
        ),
        _bracket_family(
            "bracket.L-1-Ll",
            "[L_{-1}, L_l] = (l+1) L_{l-1} for l > 1",
            list(range(2, window + 1)),
            lambda l: (L(-1), L(l)),
            lambda l: LieElement.of(L(l - 1), l + 1),
            nonzero_from=2,
        ),
    ]

    bad = [k for k in ks if bracket_basis(L(k), L(2)) != LieElement.of(L(k + 2), 2 - k)]
    entries.append(
        ClaimEntry(
            "bracket.Lk-L2",
            "L_k L_2 u = L_2 L_k u + (2-k) L_{k+2} u",
            _status(not bad),
            f"[L[{ks[-1]}], L[2]]",
            format_lie(bracket_basis(L(ks[-1]), L(2))) if not bad else f"mismatch at k in {bad}",
            f"k in 1..{window}",
        )
    )

    substitute = _bracket_family(
        "bracket.L-1-Il",
        "[L_{-1}, I_l] = l I_{l-1} for l > 1 (consistent replacement)",
        list(range(2, window + 1)),
        lambda l: (L(-1), I(l)),
        lambda l: LieElement.of(I(l - 1), l),
        nonzero_from=2,
    )
    printed = [
        (l, bracket_basis(I(-1), I(l)))
        for l in range(2, window + 1)
    ]
    matches = all(v == LieElement.of(I(l - 1)) for l, v in printed)
    entries.append(
        ClaimEntry(
            MISPRINT_ID,
            "[I_{-1}, I_l] = I_{l-1} != 0 for all l > 1",
            PASS if matches else FLAGGED,
            f"[I[-1], I[{window}]]",
            "; ".join(f"l={l}: {format_lie(v)}" for l, v in printed),
            f"l in 2..{window}",
            "the bracket relations give [I_{-1}, I_l] = 0 for l != 1; "
            f"consistent substitute [L_{{-1}}, I_l] = l I_{{l-1}} checks as {substitute.status}",
        )
    )
    entries.append(substitute)

    entries.append(
        _bracket_family(
            "lowering.I-k",
            "[L_{-1}, I_{-k+1}] = (1-k) I_{-k}, so I_{-k} w = 0",
            ks,
            lambda k: (L(-1), I(1 - k)),
            lambda k: LieElement.of(I(-k), 1 - k),
            nonzero_from=2,
            note="k = 1 is the hypothesis I_{-1} w = 0; nonvanishing from k = 2",
        )
    )
    got = bracket_basis(L(-1), I(1))
    entries.append(
        ClaimEntry(
            "cartan.I0",
            "I_0 w = [L_{-1}, I_1] w = 0",
            _status(got == LieElement.of(I(0))),
            "[L[-1], I[1]]",
            format_lie(got),
        )
    )
    got = bracket_basis(I(1), I(-1))
    entries.append(
        ClaimEntry(
            "central.CI",
            "C_I w = [I_1, I_{-1}] w = 0",
            _status(got == LieElement.central(C_I)),
            "[I[1], I[-1]]",
            format_lie(got),
        )
    )
    return entries


# --------------------------------------------------------------------------
# Generation of the positive and negative parts


def bracket_closure(seeds: list[Generator], grade_bound: int) -> set[Generator]:
    """Generators reached from ``seeds`` by nonzero brackets with ``|grade| <= grade_bound``.

    Brackets of basis generators are single generator multiples (plus
    centrals), so spans of basis vectors are tracked as sets.
    """
    reached = set(seeds)
    frontier = list(seeds)
    while frontier:
        x = frontier.pop()
        for y in list(reached):
            for g in bracket_basis(x, y).generator_terms:
                if abs(g[1]) <= grade_bound and g not in reached:
                    reached.add(g)
                    frontier.append(g)
    return reached


def verify_generation(grade_bound: int = 8) -> list[ClaimEntry]:
    if grade_bound < 2:
        raise ValueError("grade_bound must be at least 2")
    entries = []
    for side, sign in (("positive", 1), ("negative", -1)):
        seeds = [L(sign), L(2 * sign), I(sign)]
        target = {Generator(k, sign * m) for k in ("L", "I") for m in range(1, grade_bound + 1)}
        reached = bracket_closure(seeds, grade_bound)
        missing = sorted(target - reached, key=DEFAULT_ORDER.key)
        extra = sorted(reached - target, key=DEFAULT_ORDER.key)
        entries.append(
            ClaimEntry(
                f"generation.{side}",
                "I_1v = L_1v = L_2v = 0 makes v a highest weight vector"
                if sign > 0
                else "I_{-1}v = L_{-1}v = L_{-2}v = 0 makes v a lowest weight vector",
                _status(not missing and not extra),
                "bracket closure of {" + ", ".join(repr(g) for g in seeds) + "}",
                f"{len(reached)} generators reached"
                + (f"; missing {missing}" if missing else "")
                + (f"; unexpected {extra}" if extra else ""),
                f"grades 1..{grade_bound}",
            )
        )
    return entries


# --------------------------------------------------------------------------
# Finite-dimensionality witnesses


def verify_finite_weight_consistency(window: int = 8) -> list[ClaimEntry]:
    entries = []
    bad = []
    for alpha, beta, F in ((Fraction(1, 3), 0, 1), (0, 1, 0), (2, Fraction(-1, 2), 5)):
        module = intseries_new(IntermediateSeriesParams(alpha, beta, F, window=window))
        hc, report = is_harish_chandra_window(module, (-window, window))
        if not hc or any(d != 1 for d in report.dims()):
            bad.append(f"intermediate series {(alpha, beta, F)}: dims {report.dims()}")
        if module.basis_at(Fraction(alpha) + Fraction(1, 2)):
            bad.append(f"intermediate series {(alpha, beta, F)}: off-lattice weight nonzero")
    depth = 5
    verma = verma_new(VermaParams(0, depth=depth))
    hc, report = is_harish_chandra_window(verma, (-depth, 0))
    expected = [two_colored_partition_count(n) for n in range(depth, -1, -1)]
    if not hc or report.dims() != expected:
        bad.append(f"Verma depth {depth}: dims {report.dims()} != {expected}")
    entries.append(
        ClaimEntry(
            "weight-spaces.finite",
            "Harish-Chandra modules: every weight space finite dimensional",
            _status(not bad),
            "intermediate series (dims 1) and truncated Verma (2-colored partitions)",
            "; ".join(bad) if bad else "all weight spaces finite; intermediate series flat",
            f"intermediate series |k| <= {window}; Verma depth {depth}",
        )
    )
    return entries


def verify_structure(window: tuple[int, int] = (-3, 3)) -> list[ClaimEntry]:
    report = verify_jacobi(window)
    return [
        ClaimEntry(
            "relations.jacobi",
            "the relations define a Lie algebra",
            _status(report.ok),
            "antisymmetry and Jacobi on all basis pairs and triples",
            f"{report.pairs_checked} pairs, {report.triples_checked} triples"
            + ("" if report.ok else f"; violation {report.violation}"),
            f"indices in {window[0]}..{window[1]}",
        )
    ]


def verify_all(window: int = 8) -> VerificationReport:
    """Run every claim; the result is deterministic."""
    report = VerificationReport()
    report.extend(verify_structure())
    report.extend(verify_generation(window))
    report.extend(verify_proof_bracket_facts(window))
    report.extend(verify_annihilator_propagation(window))
    report.extend(verify_key_identity())
    report.extend(verify_finite_weight_consistency(window))
    return report
