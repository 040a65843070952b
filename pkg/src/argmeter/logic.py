"""Propositional logic substrate.

Formulas are immutable syntax trees over named atoms with the connectives
not/and/or/implies/iff and the constants true/false. The text syntax is:

    atoms       identifiers over [A-Za-z0-9_] (``true``/``false`` reserved)
    operators   !   &   |   ->   <->     (tightest to loosest)
    grouping    parentheses; ``->`` associates to the right, ``&``, ``|``
                and ``<->`` to the left

Satisfiability is decided by a complete search procedure (constant folding,
unit propagation on bare literals, then splitting). Worlds are plain
frozensets of atom names under a closed-world convention: an atom is true in
a world iff it is a member, every other atom — listed in the atom universe or
not — is false.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .errors import ParseError, ResourceLimitError

DEFAULT_ATOM_CAP = 24
DEFAULT_MODEL_ATOM_CAP = 20
DEFAULT_KB_CAP = 16

World = frozenset  # frozenset[str] of the atoms assigned true


class Formula:
    """Base class; concrete nodes are the frozen dataclasses below."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, repr=False)
class Atom(Formula):
    name: str

    def __repr__(self) -> str:
        return f"Atom({self.name})"


@dataclass(frozen=True, repr=False)
class Const(Formula):
    value: bool

    def __repr__(self) -> str:
        return "TOP" if self.value else "BOTTOM"


@dataclass(frozen=True, repr=False)
class Not(Formula):
    operand: Formula

    def __repr__(self) -> str:
        return f"Not({self.operand!r})"


@dataclass(frozen=True, repr=False)
class And(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"And({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Or(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Or({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Implies(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Implies({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Iff(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Iff({self.left!r}, {self.right!r})"


TOP = Const(True)
BOTTOM = Const(False)

KnowledgeBase = frozenset  # frozenset[Formula]


def kb(formulas: Iterable[Formula]) -> KnowledgeBase:
    """Normalize any iterable of formulas into a knowledge base (a frozenset)."""
    return frozenset(formulas)


# ---------------------------------------------------------------------------
# text syntax


_TOKEN_RE = re.compile(r"\s*(?:(<->|->|[!&|()])|([A-Za-z0-9_]+))")

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5}


def render(f: Formula) -> str:
    """Deterministic text form; `parse_formula(render(f)) == f` structurally."""

    def walk(node: Formula) -> tuple[str, int]:
        if isinstance(node, Atom):
            return node.name, 6
        if isinstance(node, Const):
            return ("true" if node.value else "false"), 6
        if isinstance(node, Not):
            text, prec = walk(node.operand)
            if prec < 5:
                text = f"({text})"
            return "!" + text, 5
        op, symbol, right_assoc = {
            And: (And, "&", False),
            Or: (Or, "|", False),
            Implies: (Implies, "->", True),
            Iff: (Iff, "<->", False),
        }[type(node)]
        prec = _PREC[op]
        left_text, left_prec = walk(node.left)
        right_text, right_prec = walk(node.right)
        if left_prec < prec or (right_assoc and left_prec == prec):
            left_text = f"({left_text})"
        if right_prec < prec or (not right_assoc and right_prec == prec):
            right_text = f"({right_text})"
        return f"{left_text} {symbol} {right_text}", prec

    return walk(f)[0]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, int]] = []  # (token, offset)
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m or m.end() == pos:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                bad_at = len(text) - len(stripped)
                raise ParseError(
                    f"unexpected character {stripped[0]!r}",
                    line=text.count("\n", 0, bad_at) + 1,
                    column=bad_at - (text.rfind("\n", 0, bad_at) + 1) + 1,
                )
            token = m.group(1) or m.group(2)
            self.tokens.append((token, m.start(1) if m.group(1) else m.start(2)))
            pos = m.end()
        self.index = 0

    def _error(self, message: str) -> ParseError:
        if self.index < len(self.tokens):
            offset = self.tokens[self.index][1]
        else:
            offset = len(self.text)
        line = self.text.count("\n", 0, offset) + 1
        column = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
        return ParseError(message, line=line, column=column)

    def peek(self) -> str | None:
        return self.tokens[self.index][0] if self.index < len(self.tokens) else None

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise self._error("unexpected end of formula")
        self.index += 1
        return token

    def expect(self, token: str) -> None:
        if self.peek() != token:
            raise self._error(f"expected {token!r}, found {self.peek()!r}")
        self.index += 1

    def parse(self) -> Formula:
        f = self.iff()
        if self.peek() is not None:
            raise self._error(f"unexpected token {self.peek()!r}")
        return f

    def iff(self) -> Formula:
        f = self.implies()
        while self.peek() == "<->":
            self.take()
            f = Iff(f, self.implies())
        return f

    def implies(self) -> Formula:
        f = self.disjunction()
        if self.peek() == "->":
            self.take()
            return Implies(f, self.implies())
        return f

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        token = self.peek()
        if token == "!":
            self.take()
            return Not(self.unary())
        if token == "(":
            self.take()
            f = self.iff()
            self.expect(")")
            return f
        if token is None:
            raise self._error("unexpected end of formula")
        if token in {"&", "|", "->", "<->", ")"}:
            raise self._error(f"unexpected token {token!r}")
        self.take()
        if token == "true":
            return TOP
        if token == "false":
            return BOTTOM
        return Atom(token)


def parse_formula(text: str) -> Formula:
    if not text.strip():
        raise ParseError("empty formula")
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# evaluation and satisfiability


@lru_cache(maxsize=None)
def atoms(f: Formula) -> frozenset[str]:
    if isinstance(f, Atom):
        return frozenset([f.name])
    if isinstance(f, Const):
        return frozenset()
    if isinstance(f, Not):
        return atoms(f.operand)
    return atoms(f.left) | atoms(f.right)


def atoms_of(formulas: Iterable[Formula]) -> frozenset[str]:
    result: frozenset[str] = frozenset()
    for f in formulas:
        result |= atoms(f)
    return result


def eval_formula(f: Formula, world: World) -> bool:
    """Truth value under the closed-world reading of `world`."""
    if isinstance(f, Atom):
        return f.name in world
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not eval_formula(f.operand, world)
    if isinstance(f, And):
        return eval_formula(f.left, world) and eval_formula(f.right, world)
    if isinstance(f, Or):
        return eval_formula(f.left, world) or eval_formula(f.right, world)
    if isinstance(f, Implies):
        return not eval_formula(f.left, world) or eval_formula(f.right, world)
    if isinstance(f, Iff):
        return eval_formula(f.left, world) == eval_formula(f.right, world)
    raise TypeError(f"not a formula: {f!r}")


def _combine(kind: type, left: Formula, right: Formula) -> Formula:
    """Rebuild a binary node, folding constants away."""
    if kind is And:
        if isinstance(left, Const):
            return right if left.value else BOTTOM
        if isinstance(right, Const):
            return left if right.value else BOTTOM
        return And(left, right)
    if kind is Or:
        if isinstance(left, Const):
            return TOP if left.value else right
        if isinstance(right, Const):
            return TOP if right.value else left
        return Or(left, right)
    if kind is Implies:
        if isinstance(left, Const):
            return right if left.value else TOP
        if isinstance(right, Const):
            return TOP if right.value else _negate_folded(left)
        return Implies(left, right)
    if kind is Iff:
        if isinstance(left, Const):
            return right if left.value else _negate_folded(right)
        if isinstance(right, Const):
            return left if right.value else _negate_folded(left)
        return Iff(left, right)
    raise TypeError(f"not a binary connective: {kind!r}")


def _negate_folded(f: Formula) -> Formula:
    if isinstance(f, Const):
        return Const(not f.value)
    return Not(f)


def _fold(f: Formula) -> Formula:
    """Constant-fold; a folded non-constant formula always mentions an atom."""
    if isinstance(f, (Atom, Const)):
        return f
    if isinstance(f, Not):
        return _negate_folded(_fold(f.operand))
    return _combine(type(f), _fold(f.left), _fold(f.right))


def _substitute(f: Formula, name: str, value: bool) -> Formula:
    """Fix one atom and fold constants away."""
    if isinstance(f, Atom):
        return Const(value) if f.name == name else f
    if isinstance(f, Const):
        return f
    if isinstance(f, Not):
        return _negate_folded(_substitute(f.operand, name, value))
    return _combine(
        type(f), _substitute(f.left, name, value), _substitute(f.right, name, value)
    )


def _search(formulas: list[Formula]) -> bool:
    live: list[Formula] = []
    for f in formulas:
        if isinstance(f, Const):
            if not f.value:
                return False
            continue
        live.append(f)
    if not live:
        return True
    # unit propagation on bare literals
    for f in live:
        if isinstance(f, Atom):
            return _search([_substitute(g, f.name, True) for g in live])
        if isinstance(f, Not) and isinstance(f.operand, Atom):
            return _search([_substitute(g, f.operand.name, False) for g in live])
    branch = min(atoms(live[0]))
    return _search([_substitute(g, branch, True) for g in live]) or _search(
        [_substitute(g, branch, False) for g in live]
    )


def satisfiable(formulas: Iterable[Formula], atom_cap: int = DEFAULT_ATOM_CAP) -> bool:
    work = [_fold(f) for f in formulas]
    names = atoms_of(work)
    if len(names) > atom_cap:
        raise ResourceLimitError(f"satisfiability capped at {atom_cap} atoms, got {len(names)}")
    return _search(work)


def entails(knowledge: Iterable[Formula], f: Formula, atom_cap: int = DEFAULT_ATOM_CAP) -> bool:
    """Classical consequence: every model of the knowledge base satisfies `f`."""
    return not satisfiable(list(knowledge) + [Not(f)], atom_cap)


def is_consistent(knowledge: Iterable[Formula], atom_cap: int = DEFAULT_ATOM_CAP) -> bool:
    return satisfiable(knowledge, atom_cap)


def equivalent(f1: Formula, f2: Formula, atom_cap: int = DEFAULT_ATOM_CAP) -> bool:
    return not satisfiable([Not(Iff(f1, f2))], atom_cap)


# ---------------------------------------------------------------------------
# worlds, restricted model sets, minimal inconsistent subsets


def dalal(w1: World, w2: World) -> int:
    """Size of the symmetric difference of the true-atom sets."""
    return len(w1 ^ w2)


def restricted_models(
    formulas: Iterable[Formula],
    pi: Iterable[str],
    atom_cap: int = DEFAULT_MODEL_ATOM_CAP,
) -> frozenset[World]:
    """All subsets of `pi` whose closed-world valuation satisfies every formula.

    Atoms outside `pi` are false in every candidate world, so a formula may
    constrain atoms that `pi` does not mention.
    """
    universe = sorted(set(pi))
    if not universe:
        raise ValueError("the atom universe must be non-empty")
    if len(universe) > atom_cap:
        raise ResourceLimitError(f"model enumeration capped at {atom_cap} atoms, got {len(universe)}")
    fs = list(formulas)
    models = []
    for size in range(len(universe) + 1):
        for combo in combinations(universe, size):
            world = frozenset(combo)
            if all(eval_formula(f, world) for f in fs):
                models.append(world)
    return frozenset(models)


def min_inconsistent_subsets(
    knowledge: Iterable[Formula], kb_cap: int = DEFAULT_KB_CAP
) -> frozenset[KnowledgeBase]:
    """All subset-minimal inconsistent subsets of the knowledge base.

    Plain lattice sweep by ascending size: every inconsistent set found this
    way is minimal because all of its proper subsets were checked before it.
    """
    formulas = sorted(frozenset(knowledge), key=render)
    if len(formulas) > kb_cap:
        raise ResourceLimitError(f"subset enumeration capped at {kb_cap} formulas, got {len(formulas)}")
    found: list[frozenset[Formula]] = []
    for size in range(1, len(formulas) + 1):
        for combo in combinations(formulas, size):
            candidate = frozenset(combo)
            if any(mus <= candidate for mus in found):
                continue
            if not satisfiable(candidate):
                found.append(candidate)
    return frozenset(found)


def conjunction(formulas: Iterable[Formula]) -> Formula:
    """Left-nested conjunction in render order; empty conjunction is true."""
    ordered = sorted(set(formulas), key=render)
    if not ordered:
        return TOP
    result = ordered[0]
    for f in ordered[1:]:
        result = And(result, f)
    return result
