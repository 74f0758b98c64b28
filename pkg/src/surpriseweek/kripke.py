"""Kripke models over run-labeled worlds.

A model is a finite list of worlds, each labeled with a run, plus a
visibility relation. The valuation is induced by the labels: world w
satisfies atom Y_r exactly when w is labeled r, so every world satisfies
the exactly-one-run constraint by construction. Box quantifies over the
visible worlds and is vacuously true at a world that sees nothing.

Satisfaction sweeps are computed bottom-up as bitmasks over the world
list, one bit per world.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .formula import Atom, Bot, Box, Formula, Implies
from .runs import DAYS, RUNS, Run


class UnknownWorldError(KeyError):
    pass


class FrameError(ValueError):
    """Raised where an equivalence model is required but not given."""


class ModelFormatError(ValueError):
    """Raised for malformed serialized models."""


@dataclass(frozen=True)
class World:
    id: str
    run: Run


class KripkeModel:
    def __init__(self, worlds: Iterable[World], edges: Iterable[tuple[str, str]]):
        self.worlds: tuple[World, ...] = tuple(worlds)
        self.edges: frozenset[tuple[str, str]] = frozenset(edges)
        self._index: dict[str, int] = {}
        for position, world in enumerate(self.worlds):
            if world.id in self._index:
                raise ValueError(f"duplicate world id {world.id!r}")
            self._index[world.id] = position
        for source, target in self.edges:
            if source not in self._index or target not in self._index:
                raise ValueError(f"edge ({source!r}, {target!r}) leaves the model")
        self._succ_masks: list[int] = [0] * len(self.worlds)
        for source, target in self.edges:
            self._succ_masks[self._index[source]] |= 1 << self._index[target]
        self._atom_masks: dict[Run, int] = {r: 0 for r in RUNS}
        for position, world in enumerate(self.worlds):
            self._atom_masks[world.run] |= 1 << position

    def __len__(self) -> int:
        return len(self.worlds)

    @property
    def is_empty(self) -> bool:
        return not self.worlds

    def world(self, wid: str) -> World:
        try:
            return self.worlds[self._index[wid]]
        except KeyError:
            raise UnknownWorldError(f"unknown world id {wid!r}") from None

    def run_of(self, wid: str) -> Run:
        return self.world(wid).run

    def successors(self, wid: str) -> tuple[str, ...]:
        mask = self._succ_masks[self._index[self.world(wid).id]]
        return tuple(w.id for i, w in enumerate(self.worlds) if mask & (1 << i))

    @cached_property
    def reflexive(self) -> bool:
        return all(self._succ_masks[i] & (1 << i) for i in range(len(self.worlds)))

    @cached_property
    def transitive(self) -> bool:
        for mask in self._succ_masks:
            reach = mask
            while reach:
                low = reach & -reach
                if self._succ_masks[low.bit_length() - 1] & ~mask:
                    return False
                reach ^= low
        return True

    @cached_property
    def symmetric(self) -> bool:
        return all(
            self._succ_masks[self._index[target]] & (1 << self._index[source])
            for source, target in self.edges
        )

    @property
    def is_equivalence(self) -> bool:
        return self.reflexive and self.transitive and self.symmetric

    def __repr__(self) -> str:
        return f"KripkeModel({len(self.worlds)} worlds, {len(self.edges)} edges)"


@dataclass(frozen=True)
class FrameProperties:
    reflexive: bool
    transitive: bool
    symmetric: bool
    equivalence: bool


def frame_properties(m: KripkeModel) -> FrameProperties:
    return FrameProperties(
        reflexive=m.reflexive,
        transitive=m.transitive,
        symmetric=m.symmetric,
        equivalence=m.is_equivalence,
    )


def sat_mask(m: KripkeModel, phi: Formula) -> int:
    """Bitmask of the worlds of ``m`` satisfying ``phi`` (bit i = world i)."""
    full = (1 << len(m.worlds)) - 1
    memo: dict[int, int] = {}

    def go(node: Formula) -> int:
        known = memo.get(id(node))
        if known is not None:
            return known
        if isinstance(node, Bot):
            result = 0
        elif isinstance(node, Atom):
            result = m._atom_masks[node.run]
        elif isinstance(node, Implies):
            result = (~go(node.lhs) & full) | go(node.rhs)
        elif isinstance(node, Box):
            body = go(node.body)
            result = 0
            for i in range(len(m.worlds)):
                if not m._succ_masks[i] & ~body:
                    result |= 1 << i
        else:
            raise TypeError(f"not a formula node: {node!r}")
        memo[id(node)] = result
        return result

    return go(phi)


def worlds_where(m: KripkeModel, phi: Formula) -> frozenset[str]:
    mask = sat_mask(m, phi)
    return frozenset(w.id for i, w in enumerate(m.worlds) if mask & (1 << i))


def eval_world(m: KripkeModel, wid: str, phi: Formula) -> bool:
    """Truth value of ``phi`` at world ``wid`` of ``m``."""
    position = m._index.get(wid)
    if position is None:
        raise UnknownWorldError(f"unknown world id {wid!r}")
    return bool(sat_mask(m, phi) & (1 << position))


def _reachable_mask(m: KripkeModel, wid: str) -> int:
    start = 1 << m._index[m.world(wid).id]
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = m._succ_masks[low.bit_length() - 1] & ~seen
        seen |= new
        frontier |= new
    return seen


def _restrict(m: KripkeModel, keep_mask: int) -> KripkeModel:
    keep = [w for i, w in enumerate(m.worlds) if keep_mask & (1 << i)]
    ids = {w.id for w in keep}
    edges = [(s, t) for s, t in m.edges if s in ids and t in ids]
    return KripkeModel(keep, edges)


def submodel_at(m: KripkeModel, wid: str) -> KripkeModel:
    """Restriction to the worlds reachable from ``wid`` along edges
    (including ``wid`` itself); satisfaction at ``wid`` is preserved."""
    return _restrict(m, _reachable_mask(m, wid))


def restrict_ge(m: KripkeModel, d: Run) -> KripkeModel:
    """Drop every world whose run precedes day ``d``. May come out empty."""
    if not d.is_day:
        raise ValueError(f"{d.label} is not a day")
    keep_mask = 0
    for i, w in enumerate(m.worlds):
        if w.run >= d:
            keep_mask |= 1 << i
    return _restrict(m, keep_mask)


def box_signature(m: KripkeModel, wid: str) -> frozenset[Run]:
    """The run labels present in the equivalence class of ``wid``; they
    determine the world's modal theory together with its own label."""
    if not m.is_equivalence:
        raise FrameError("box signature requires an equivalence model")
    mask = _reachable_mask(m, wid)
    return frozenset(w.run for i, w in enumerate(m.worlds) if mask & (1 << i))


def equivalence_classes(m: KripkeModel) -> tuple[frozenset[str], ...]:
    """The classes of an equivalence model, in first-world order."""
    if not m.is_equivalence:
        raise FrameError("equivalence classes require an equivalence model")
    classes = []
    assigned = 0
    for i, w in enumerate(m.worlds):
        if assigned & (1 << i):
            continue
        mask = _reachable_mask(m, w.id)
        assigned |= mask
        classes.append(frozenset(
            u.id for j, u in enumerate(m.worlds) if mask & (1 << j)))
    return tuple(classes)


def complete_model(runs: Iterable[Run], prefix: str = "w_") -> KripkeModel:
    """One world per given run, every world seeing every world."""
    worlds = [World(f"{prefix}{r.label}", r) for r in sorted(runs)]
    edges = [(a.id, b.id) for a in worlds for b in worlds]
    return KripkeModel(worlds, edges)


def standard_models() -> tuple[KripkeModel, KripkeModel]:
    """The six-world complete model and its five-world days-only variant."""
    return complete_model(RUNS), complete_model(DAYS)


# ----------------------------------------------------------------------
# Serialization. JSON uses the documented external format; DOT is for
# rendering with graphviz. Both are deterministic in the model's world
# order, edges sorted by endpoint positions.
# ----------------------------------------------------------------------

def _sorted_edges(m: KripkeModel) -> list[tuple[str, str]]:
    return sorted(m.edges, key=lambda e: (m._index[e[0]], m._index[e[1]]))


def model_to_json(m: KripkeModel) -> dict:
    return {
        "worlds": [{"id": w.id, "run": w.run.label} for w in m.worlds],
        "edges": [[s, t] for s, t in _sorted_edges(m)],
    }


def model_from_json(data: object) -> KripkeModel:
    if not isinstance(data, dict):
        raise ModelFormatError("model must be a JSON object")
    unknown = set(data) - {"worlds", "edges"}
    if unknown:
        raise ModelFormatError(f"unknown model fields: {sorted(unknown)}")
    if "worlds" not in data or "edges" not in data:
        raise ModelFormatError("model needs 'worlds' and 'edges'")
    worlds = []
    for record in data["worlds"]:
        if not isinstance(record, dict):
            raise ModelFormatError("world records must be objects")
        extra = set(record) - {"id", "run"}
        if extra:
            raise ModelFormatError(f"unknown world fields: {sorted(extra)}")
        if "id" not in record or "run" not in record:
            raise ModelFormatError("world records need 'id' and 'run'")
        if not isinstance(record["id"], str):
            raise ModelFormatError("world ids must be strings")
        try:
            run = Run.from_label(record["run"])
        except (ValueError, TypeError):
            raise ModelFormatError(f"bad run label {record['run']!r}") from None
        worlds.append(World(record["id"], run))
    edges = []
    for pair in data["edges"]:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ModelFormatError(f"edges must be [from, to] pairs, got {pair!r}")
        edges.append((pair[0], pair[1]))
    try:
        return KripkeModel(worlds, edges)
    except ValueError as exc:
        raise ModelFormatError(str(exc)) from None


def model_to_dot(m: KripkeModel) -> str:
    def quote(text: str) -> str:
        return '"' + text.replace('"', r'\"') + '"'

    lines = ["digraph {"]
    for w in m.worlds:
        lines.append(f"  {quote(w.id)} [label={quote(f'{w.id}:{w.run.label}')}];")
    for source, target in _sorted_edges(m):
        lines.append(f"  {quote(source)} -> {quote(target)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
