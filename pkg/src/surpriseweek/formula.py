"""Formula AST over the six run atoms.

The core language is minimal: falsum, the atoms Y_r, implication, and box.
Every other connective is a smart constructor that desugars immediately,
so structural equality always compares desugared forms:

    !p        == p -> false
    true      == !false
    p | q     == !p -> q
    p & q     == !(!p | !q)
    p <-> q   == (p -> q) & (q -> p)
    <>p       == ![]!p

Disjunctions and conjunctions built from run sets (``chi`` and the guard
constructors) are right-nested in ascending run order, which gives every
run-set formula a single canonical shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .runs import ALL_RUNS, DAY_SET, RUNS, Run, mask_of


class Formula:
    """Base class; instances are immutable and safe to share."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, repr=False)
class Bot(Formula):
    __slots__ = ()

    def __repr__(self) -> str:
        return "Bot()"


@dataclass(frozen=True, repr=False)
class Atom(Formula):
    run: Run

    def __repr__(self) -> str:
        return f"Atom({self.run!r})"


@dataclass(frozen=True, repr=False)
class Implies(Formula):
    lhs: Formula
    rhs: Formula

    def __repr__(self) -> str:
        return f"Implies({self.lhs!r}, {self.rhs!r})"


@dataclass(frozen=True, repr=False)
class Box(Formula):
    body: Formula

    def __repr__(self) -> str:
        return f"Box({self.body!r})"


BOT: Formula = Bot()


def Neg(phi: Formula) -> Formula:
    return Implies(phi, BOT)


TOP: Formula = Neg(BOT)


def Or(lhs: Formula, rhs: Formula) -> Formula:
    return Implies(Neg(lhs), rhs)


def And(lhs: Formula, rhs: Formula) -> Formula:
    return Neg(Or(Neg(lhs), Neg(rhs)))


def Iff(lhs: Formula, rhs: Formula) -> Formula:
    return And(Implies(lhs, rhs), Implies(rhs, lhs))


def Diamond(phi: Formula) -> Formula:
    return Neg(Box(Neg(phi)))


def big_or(parts: Iterable[Formula]) -> Formula:
    """Right-nested disjunction; empty -> false."""
    items = list(parts)
    if not items:
        return BOT
    result = items[-1]
    for part in reversed(items[:-1]):
        result = Or(part, result)
    return result


def big_and(parts: Iterable[Formula]) -> Formula:
    """Right-nested conjunction; empty -> true."""
    items = list(parts)
    if not items:
        return TOP
    result = items[-1]
    for part in reversed(items[:-1]):
        result = And(part, result)
    return result


def iverson(value: bool) -> Formula:
    """Truth value imported into the formula language: true -> ``TOP``."""
    return TOP if value else BOT


_CHI_CACHE: dict[int, Formula] = {}


def chi(runs: Iterable[Run]) -> Formula:
    """Disjunction of the atoms in ``runs``, ascending; chi({}) = false.

    Results are cached per run set, so equal guard formulas are shared.
    """
    mask = mask_of(runs)
    cached = _CHI_CACHE.get(mask)
    if cached is None:
        members = [r for r in RUNS if mask & (1 << r)]
        cached = _CHI_CACHE.setdefault(mask, big_or(Atom(r) for r in members))
    return cached


# Guard constructors: each names the run set it stands for.

def t_in(runs: Iterable[Run]) -> Formula:
    return chi(runs)


def t_eq(r: Run) -> Formula:
    return chi({r})


def t_ne(r: Run) -> Formula:
    return chi(ALL_RUNS - {r})


def t_le(r: Run) -> Formula:
    return chi({s for s in RUNS if s <= r})


def t_ge(r: Run) -> Formula:
    return chi({s for s in RUNS if s >= r})


def t_lt(r: Run) -> Formula:
    return chi({s for s in RUNS if s < r})


def t_gt(r: Run) -> Formula:
    return chi({s for s in RUNS if s > r})


def any_day() -> Formula:
    """<T in D>: some weekday is the run, i.e. there is a test at all."""
    return chi(DAY_SET)


def modal_depth(phi: Formula) -> int:
    if isinstance(phi, (Bot, Atom)):
        return 0
    if isinstance(phi, Implies):
        return max(modal_depth(phi.lhs), modal_depth(phi.rhs))
    if isinstance(phi, Box):
        return 1 + modal_depth(phi.body)
    raise TypeError(f"not a formula node: {phi!r}")


def is_propositional(phi: Formula) -> bool:
    return modal_depth(phi) == 0


# ----------------------------------------------------------------------
# Rendering. render(phi) emits text that the parser maps back to a
# structurally identical AST. Derived connectives are re-sugared when a
# node is exactly the desugaring of one; pattern checks verify by
# rebuilding, so a match can never change the round-trip.
# ----------------------------------------------------------------------

_PREC_IFF = 1
_PREC_IMP = 2
_PREC_OR = 3
_PREC_AND = 4
_PREC_UNARY = 5
_PREC_ATOM = 6


def _match_and(phi: Formula) -> tuple[Formula, Formula] | None:
    try:
        a = phi.lhs.lhs.lhs.lhs  # type: ignore[attr-defined]
        b = phi.lhs.rhs.lhs  # type: ignore[attr-defined]
    except AttributeError:
        return None
    return (a, b) if And(a, b) == phi else None


def _match_iff(phi: Formula) -> tuple[Formula, Formula] | None:
    parts = _match_and(phi)
    if parts is None:
        return None
    fwd, bwd = parts
    if isinstance(fwd, Implies) and Iff(fwd.lhs, fwd.rhs) == phi:
        return (fwd.lhs, fwd.rhs)
    return None


def _match_diamond(phi: Formula) -> Formula | None:
    try:
        body = phi.lhs.body.lhs  # type: ignore[attr-defined]
    except AttributeError:
        return None
    return body if Diamond(body) == phi else None


def _match_neg(phi: Formula) -> Formula | None:
    if isinstance(phi, Implies) and phi.rhs == BOT:
        return phi.lhs
    return None


def _match_or(phi: Formula) -> tuple[Formula, Formula] | None:
    if isinstance(phi, Implies) and isinstance(phi.lhs, Implies) and phi.lhs.rhs == BOT:
        return (phi.lhs.lhs, phi.rhs)
    return None


def render(phi: Formula) -> str:
    """Concrete syntax for ``phi``; ``parse(render(phi)) == phi``."""
    return _render(phi, 0)


def _render(phi: Formula, level: int) -> str:
    text, prec = _render_prec(phi)
    return f"({text})" if prec < level else text


def _render_prec(phi: Formula) -> tuple[str, int]:
    if phi == TOP:
        return "true", _PREC_ATOM
    if isinstance(phi, Bot):
        return "false", _PREC_ATOM
    if isinstance(phi, Atom):
        return f"Y_{phi.run.label}", _PREC_ATOM

    iff = _match_iff(phi)
    if iff is not None:
        a, b = iff
        return f"{_render(a, _PREC_IFF + 1)} <-> {_render(b, _PREC_IFF)}", _PREC_IFF
    both = _match_and(phi)
    if both is not None:
        a, b = both
        return f"{_render(a, _PREC_AND + 1)} & {_render(b, _PREC_AND)}", _PREC_AND
    body = _match_diamond(phi)
    if body is not None:
        return f"<>{_render(body, _PREC_UNARY)}", _PREC_UNARY
    body = _match_neg(phi)
    if body is not None:
        return f"!{_render(body, _PREC_UNARY)}", _PREC_UNARY
    either = _match_or(phi)
    if either is not None:
        a, b = either
        return f"{_render(a, _PREC_OR + 1)} | {_render(b, _PREC_OR)}", _PREC_OR

    if isinstance(phi, Implies):
        lhs = _render(phi.lhs, _PREC_IMP + 1)
        rhs = _render(phi.rhs, _PREC_IMP)
        return f"{lhs} -> {rhs}", _PREC_IMP
    if isinstance(phi, Box):
        return f"[]{_render(phi.body, _PREC_UNARY)}", _PREC_UNARY
    raise TypeError(f"not a formula node: {phi!r}")
