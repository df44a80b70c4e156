"""n-colorings from symmetric latin squares.

:func:`color_hn` colors ``H_n`` straight from the cyclic square.
:func:`run_procedure` runs the six-step color-matrix modification on an
arbitrary instance and reports a verified coloring or the exact point where
the procedure could not continue.

Steps in brief (cells are index pairs ``(i, j)``, ``i < j``):

* start from the cyclic square with the diagonal and the cells of disjoint
  clique pairs blanked;
* for each vertex in three or more cliques, force all cells of its label to
  one color (steps 1-4, global swaps of two colors);
* for each vertex in exactly two cliques, make its cell unique in its row and
  column (steps 5-6);
* read common-vertex colors off the matrix and give private vertices the
  colors their clique has not used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence, Union

import numpy as np

from .instance import (
    EflInstance,
    LabelSet,
    Pair,
    ParseError,
    common_vertex_labels,
    derived_sets,
    validate,
)
from .latin import (
    ColorMatrix,
    blank_for_instance,
    cyclic_symmetric_latin,
    fresh_color,
    replace_pair,
    swap_colors,
)
from .verify import Violation, verify_coloring

STEPS = ("S1-select", "S2-repair", "S3-pick", "S4-swap", "S5-select2", "S6-repair2", "extend")
EDIT_STEPS = ("S2-repair", "S4-swap", "S6-repair2")


def color_hn(n: int) -> dict[str, int]:
    """Color ``b_i_j`` by ``C[i][j]`` and ``a_i_i`` by ``C[i][i]``."""
    C = cyclic_symmetric_latin(n)
    out = {f"a_{i}_{i}": C[i, i] for i in range(1, n + 1)}
    out.update({f"b_{i}_{j}": C[i, j] for i, j in combinations(range(1, n + 1), 2)})
    return out


@dataclass(frozen=True)
class TraceEvent:
    seq: int
    step: str
    digest: str
    label: LabelSet = ()
    cell: Pair | None = None
    before: int = 0
    after: int = 0
    anchor: Pair | None = None
    protected: tuple[Pair, ...] = ()
    note: str = ""

    def detail(self) -> str:
        parts = []
        if self.label:
            parts.append("label=" + ",".join(map(str, self.label)))
        if self.cell:
            parts.append(f"cell={self.cell[0]},{self.cell[1]}")
            parts.append(f"color={self.before}>{self.after}")
        if self.anchor:
            parts.append(f"anchor={self.anchor[0]},{self.anchor[1]}")
        if self.step == "S4-swap":
            parts.append("protected=" + "|".join(f"{l},{m}" for l, m in self.protected))
        if self.note:
            parts.append(f"note={self.note}")
        return ";".join(parts) or "-"

    def __str__(self) -> str:
        return f"{self.seq} {self.step} {self.detail()} {self.digest}"


def parse_trace_line(line: str, lineno: int = 1) -> TraceEvent:
    parts = line.split(" ")
    if len(parts) != 4 or not parts[0].isdigit() or parts[1] not in STEPS:
        raise ParseError(lineno, "expected '<seq> <step> <detail> <digest>'")
    fields: dict = {}
    for item in ([] if parts[2] == "-" else parts[2].split(";")):
        key, _, val = item.partition("=")
        if key == "label":
            fields["label"] = tuple(int(v) for v in val.split(","))
        elif key in ("cell", "anchor"):
            a, b = val.split(",")
            fields[key] = (int(a), int(b))
        elif key == "color":
            a, b = val.split(">")
            fields["before"], fields["after"] = int(a), int(b)
        elif key == "protected":
            fields["protected"] = tuple(
                tuple(int(v) for v in p.split(",")) for p in val.split("|") if p)
        elif key == "note":
            fields["note"] = val
        else:
            raise ParseError(lineno, f"unknown trace field {key!r}")
    return TraceEvent(int(parts[0]), parts[1], parts[3], **fields)


@dataclass(frozen=True)
class Success:
    coloring: dict[str, int]
    trace: tuple[TraceEvent, ...]
    matrix: ColorMatrix


@dataclass(frozen=True)
class Stuck:
    step: str  # "S2" or "S6"
    context: str
    trace: tuple[TraceEvent, ...]
    matrix: ColorMatrix


@dataclass(frozen=True)
class Improper:
    """Procedure finished but its coloring is not proper.

    ``label_conflicts`` lists vertices whose label cells ended with
    different colors; the coloring then uses the color of the first cell.
    """

    violations: tuple[Violation, ...]
    coloring: dict[str, int]
    trace: tuple[TraceEvent, ...]
    matrix: ColorMatrix
    label_conflicts: tuple[tuple[LabelSet, tuple[tuple[Pair, int], ...]], ...] = ()


ColoringOutcome = Union[Success, Stuck, Improper]


def outcome_kind(outcome: ColoringOutcome) -> str:
    if isinstance(outcome, Success):
        return "success"
    if isinstance(outcome, Stuck):
        return f"stuck_{outcome.step.lower()}"
    return "improper"


def _count(C: ColorMatrix, i: int, j: int, x: int) -> tuple[int, int]:
    return int(np.count_nonzero(C.row(i) == x)), int(np.count_nonzero(C.col(j) == x))


def step2_repair(C: ColorMatrix, i: int, j: int) -> tuple[ColorMatrix, int] | None:
    """Recolor cell ``(i, j)`` whose color is repeated in its row or column.

    Prefer the smallest color missing from both row ``i`` and column ``j``;
    failing that, the smallest color seen exactly once in row ``i`` or exactly
    once in column ``j``.
    """
    x = fresh_color(C, i, j)
    if x is None:
        for c in range(1, C.n + 1):
            in_row, in_col = _count(C, i, j, c)
            if in_row == 1 or in_col == 1:
                x = c
                break
    if x is None:
        return None
    return replace_pair(C, i, j, x), x


def step4_align(C: ColorMatrix, anchor: Pair, target: Pair, protected=()) -> ColorMatrix:
    """Give ``target`` the anchor's current color by swapping the two colors."""
    y = C[anchor]
    x = C[target]
    if x == y:
        return C
    return swap_colors(C, x, y, protected)


class LabelColorConflict(ValueError):
    def __init__(self, conflicts):
        self.conflicts = tuple(conflicts)
        super().__init__(
            "; ".join(f"label {x}: " + ", ".join(f"{p}={c}" for p, c in cells)
                      for x, cells in self.conflicts))


def extend_coloring(
    inst: EflInstance,
    C: ColorMatrix,
    labels: Mapping[str, LabelSet],
    strict: bool = True,
) -> dict[str, int]:
    """Read common-vertex colors off ``C`` and fill in the private vertices.

    Private vertices of each clique, in token order, take the colors the
    clique's common vertices leave free, in increasing order.  If a clique runs
    out of free colors the rest restart from 1 (the result is then improper and
    the verifier will say so).  With ``strict`` an inconsistent label raises
    :class:`LabelColorConflict`; otherwise its first cell decides.
    """
    out: dict[str, int] = {}
    conflicts = []
    for v in sorted(labels):
        x = labels[v]
        cells = [((i, j), C[i, j]) for i, j in combinations(x, 2)]
        if len({c for _, c in cells}) > 1:
            conflicts.append((x, tuple(cells)))
        out[v] = cells[0][1]
    if conflicts and strict:
        raise LabelColorConflict(conflicts)
    for clique in inst.cliques:
        used = {out[v] for v in clique if v in labels}
        free = [c for c in range(1, inst.n + 1) if c not in used]
        private = sorted(v for v in clique if v not in labels)
        for k, v in enumerate(private):
            out[v] = free[k] if k < len(free) else (k - len(free)) % inst.n + 1
    return out


class _Stuck(Exception):
    def __init__(self, step: str, context: str):
        self.step = step
        self.context = context


class _Run:
    """Mutable state of one procedure run."""

    def __init__(self, C: ColorMatrix):
        self.C = C
        self.events: list[TraceEvent] = []

    def log(self, step: str, **kw) -> None:
        self.events.append(TraceEvent(len(self.events) + 1, step, self.C.digest(), **kw))

    def classify(self, pairs: Sequence[Pair]) -> tuple[list[Pair], list[Pair]]:
        """Split cells into repeated (row or column) and unique ones."""
        repeated, unique = [], []
        for i, j in pairs:
            in_row, in_col = _count(self.C, i, j, self.C[i, j])
            (repeated if in_row > 1 or in_col > 1 else unique).append((i, j))
        return repeated, unique

    def high_degree(self, x: LabelSet) -> None:
        """Steps 1-4 for one vertex lying in three or more cliques."""
        todo = list(combinations(x, 2))
        repeated, unique = self.classify(todo)
        anchor = repeated[0] if repeated else unique[0]
        todo.remove(anchor)
        done = [anchor]
        if unique:
            self.log("S1-select", label=x, cell=anchor,
                     before=self.C[anchor], after=self.C[anchor])
        else:
            # nothing unique: recolor the anchor (the first repeated cell)
            i, j = anchor
            old = self.C[i, j]
            row = {int(v) for v in self.C.row(i) if v}
            col = {int(v) for v in self.C.col(j) if v}
            # the literal guard |A & B| < n versus the usable |A | B| < n
            note = "guard-readings-differ" if (len(row & col) < self.C.n) != (len(row | col) < self.C.n) else ""
            repaired = step2_repair(self.C, i, j)
            if repaired is None:
                raise _Stuck("S2", f"label={','.join(map(str, x))} cell={i},{j}")
            self.C, _ = repaired
            repeated.remove(anchor)
            unique.append(anchor)
            self.log("S2-repair", label=x, cell=anchor, before=old,
                     after=self.C[anchor], note=note)
        while todo:
            pool = [p for p in todo if p in repeated] or [p for p in todo if p in unique]
            target = pool[0]
            before, y = self.C[target], self.C[anchor]
            if before == y:
                self.log("S3-pick", label=x, cell=target, before=before,
                         after=before, anchor=anchor)
            else:
                self.C = step4_align(self.C, anchor, target, done)
                self.log("S4-swap", label=x, cell=target, before=before,
                         after=self.C[target], anchor=anchor, protected=tuple(done))
            todo.remove(target)
            done.append(target)

    def degree_two(self, cell: Pair) -> None:
        """Steps 5-6 for one vertex lying in exactly two cliques."""
        i, j = cell
        c = self.C[i, j]
        if _count(self.C, i, j, c) == (1, 1):
            self.log("S5-select2", label=cell, cell=cell, before=c, after=c)
            return
        x = fresh_color(self.C, i, j)
        if x is None:
            raise _Stuck("S6", f"label={i},{j} cell={i},{j}")
        self.C = replace_pair(self.C, i, j, x)
        self.log("S6-repair2", label=cell, cell=cell, before=c, after=x)


def high_degree_order(labels) -> list[LabelSet]:
    """Vertices in three or more cliques, largest first, then by label."""
    return sorted((x for x in labels if len(x) >= 3), key=lambda x: (-len(x), x))


def run_procedure(inst: EflInstance) -> ColoringOutcome:
    problems = validate(inst)
    if problems:
        raise ValueError("invalid instance: " + "; ".join(map(str, problems)))
    sets = derived_sets(inst)
    labels = common_vertex_labels(inst)
    run = _Run(blank_for_instance(cyclic_symmetric_latin(inst.n), sets))
    try:
        for x in high_degree_order(labels.values()):
            run.high_degree(x)
        for x in sorted(x for x in labels.values() if len(x) == 2):
            run.degree_two(x)
    except _Stuck as exc:
        return Stuck(exc.step, exc.context, tuple(run.events), run.C)

    try:
        coloring = extend_coloring(inst, run.C, labels)
        conflicts = ()
    except LabelColorConflict as exc:
        conflicts = exc.conflicts
        coloring = extend_coloring(inst, run.C, labels, strict=False)
    run.log("extend", note="label-conflict" if conflicts else "")
    trace = tuple(run.events)
    violations = verify_coloring(inst, coloring)
    if violations or conflicts:
        return Improper(tuple(violations), coloring, trace, run.C, conflicts)
    return Success(coloring, trace, run.C)


def trace_bound(inst: EflInstance) -> int:
    """Upper bound on trace length: one event per label cell handled, plus one."""
    labels = common_vertex_labels(inst).values()
    high = [len(x) * (len(x) - 1) // 2 for x in labels if len(x) >= 3]
    low = sum(1 for x in labels if len(x) == 2)
    return len(high) * max(high, default=0) + low + 1


def replay(start: ColorMatrix, trace: Sequence[TraceEvent]) -> ColorMatrix:
    """Reapply the matrix edits of ``trace`` to ``start``, checking digests."""
    C = start
    for ev in trace:
        if ev.step in ("S2-repair", "S6-repair2"):
            C = replace_pair(C, *ev.cell, ev.after)
        elif ev.step == "S4-swap":
            C = swap_colors(C, ev.before, C[ev.anchor], ev.protected)
        if C.digest() != ev.digest:
            raise ValueError(f"trace event {ev.seq} ({ev.step}) does not replay")
    return C


def initial_matrix(inst: EflInstance) -> ColorMatrix:
    return blank_for_instance(cyclic_symmetric_latin(inst.n), derived_sets(inst))
