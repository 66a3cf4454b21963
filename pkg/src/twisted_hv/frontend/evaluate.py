"""Evaluate parsed expressions to canonical enveloping-algebra elements."""

from __future__ import annotations

from ..central import CentralPoly
from ..enveloping import DEFAULT_ORDER, EnvelopingElement, GeneratorOrder, multiply
from ..structure import Generator, bracket
from . import parser as ast


def evaluate(
    expr: ast.Expr | str,
    order: GeneratorOrder = DEFAULT_ORDER,
    *,
    step_budget: int | None = None,
) -> EnvelopingElement:
    """Canonical form of ``expr`` under ``order``.

    Brackets of elements of filtration degree at most one go through the
    structure constants directly; larger arguments use the commutator in
    U(L), which agrees with them on the Lie algebra.
    """
    if isinstance(expr, str):
        expr = ast.parse(expr)

    def ev(node) -> EnvelopingElement:
        if isinstance(node, ast.Number):
            return EnvelopingElement.scalar(node.value, order)
        if isinstance(node, ast.Central):
            return EnvelopingElement.scalar(CentralPoly.variable(node.name), order)
        if isinstance(node, ast.Gen):
            return EnvelopingElement.generator(Generator(node.kind, node.index), order)
        if isinstance(node, ast.Add):
            return ev(node.left) + ev(node.right)
        if isinstance(node, ast.Sub):
            return ev(node.left) - ev(node.right)
        if isinstance(node, ast.Neg):
            return -ev(node.operand)
        if isinstance(node, ast.Mul):
            return multiply(ev(node.left), ev(node.right), step_budget=step_budget)
        if isinstance(node, ast.Pow):
            base = ev(node.base)
            result = EnvelopingElement.scalar(1, order)
            for _ in range(node.exponent):
                result = multiply(result, base, step_budget=step_budget)
            return result
        if isinstance(node, ast.Bracket):
            a, b = ev(node.left), ev(node.right)
            if a.filtration_degree() <= 1 and b.filtration_degree() <= 1:
                return EnvelopingElement.from_lie(bracket(a.to_lie(), b.to_lie()), order)
            return multiply(a, b, step_budget=step_budget) - multiply(b, a, step_budget=step_budget)
        raise TypeError(f"unknown node {node!r}")

    return ev(expr)
