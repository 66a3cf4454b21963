"""Canonical text and JSON renderings.

Text output is valid input for :func:`twisted_hv.frontend.parser.parse`, so
``evaluate(parse(format_element(x))) == x`` for canonical elements.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from ..central import CENTRAL_NAMES, CentralPoly

SCHEMA = "twisted-hv/1"


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _central_factors(exps) -> list[str]:
    out = []
    for name, e in zip(CENTRAL_NAMES, exps):
        if e == 1:
            out.append(name)
        elif e > 1:
            out.append(f"{name}^{e}")
    return out


def _word_factors(word) -> list[str]:
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        atom = f"{word[i][0]}[{word[i][1]}]"
        out.append(atom if j - i == 1 else f"{atom}^{j - i}")
        i = j
    return out


def _join(signed_bodies: list[tuple[bool, str]]) -> str:
    if not signed_bodies:
        return "0"
    pieces = []
    for k, (negative, body) in enumerate(signed_bodies):
        if k == 0:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)


def _term(coeff: Fraction, factors: list[str]) -> tuple[bool, str]:
    magnitude = abs(coeff)
    parts = list(factors)
    if magnitude != 1 or not parts:
        parts.insert(0, format_rational(magnitude))
    return coeff < 0, "*".join(parts)


def format_poly(poly: CentralPoly) -> str:
    return _join([_term(c, _central_factors(e)) for e, c in poly.sorted_items()])


def format_element(element) -> str:
    """One summand per (PBW monomial, central monomial), monomials in canonical order."""
    bodies = []
    for word, poly in element.sorted_terms():
        gens = _word_factors(word)
        for exps, coeff in poly.sorted_items():
            bodies.append(_term(coeff, _central_factors(exps) + gens))
    return _join(bodies)


def format_lie(x) -> str:
    bodies = []
    for g, poly in x.sorted_generator_terms():
        for exps, coeff in poly.sorted_items():
            bodies.append(_term(coeff, _central_factors(exps) + _word_factors((g,))))
    for exps, coeff in x.central_term.sorted_items():
        bodies.append(_term(coeff, _central_factors(exps)))
    return _join(bodies)


def poly_to_json(poly: CentralPoly) -> list[dict[str, Any]]:
    return [
        {"exponents": {n: e for n, e in zip(CENTRAL_NAMES, exps) if e}, "coefficient": format_rational(c)}
        for exps, c in poly.sorted_items()
    ]


def poly_from_json(data: list[dict[str, Any]]) -> CentralPoly:
    terms = {}
    for item in data:
        exps = tuple(item["exponents"].get(n, 0) for n in CENTRAL_NAMES)
        terms[exps] = Fraction(item["coefficient"])
    return CentralPoly(terms)


def element_to_json(element) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "type": "element",
        "order": element.order.describe(),
        "text": format_element(element),
        "terms": [
            {"word": [[g[0], g[1]] for g in word], "coefficient": poly_to_json(poly)}
            for word, poly in element.sorted_terms()
        ],
    }


def element_from_json(doc: dict[str, Any]):
    from ..enveloping import EnvelopingElement, GeneratorOrder
    from ..structure import Generator

    if doc.get("schema") != SCHEMA or doc.get("type") != "element":
        raise ValueError("not a serialized element document")
    if doc["order"] != "default":
        raise ValueError("only default-order documents can be loaded")
    terms = {
        tuple(Generator(k, i) for k, i in t["word"]): poly_from_json(t["coefficient"])
        for t in doc["terms"]
    }
    return EnvelopingElement(terms, GeneratorOrder())


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)
