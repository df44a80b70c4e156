"""Independent checks of colorings.

Nothing here depends on the coloring procedure.  The chromatic-number oracle is
a plain backtracking search kept deliberately simple; it is the referee.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .instance import EflInstance, ParseError, is_valid_token

DEFAULT_VERTEX_CAP = 20


@dataclass(frozen=True)
class Violation:
    kind: str  # same-color-in-clique | missing-vertex | color-out-of-range
    clique: int
    vertices: tuple[str, ...]

    def __str__(self) -> str:
        return f"VIOLATION {self.kind} clique={self.clique} vertices={','.join(self.vertices)}"


def verify_coloring(inst: EflInstance, coloring: Mapping[str, int]) -> list[Violation]:
    """Every broken constraint of a proper ``n``-coloring, each reported once."""
    out: list[Violation] = []
    home: dict[str, int] = {}
    for i, clique in enumerate(inst.cliques, start=1):
        for v in sorted(clique):
            home.setdefault(v, i)
    for v in sorted(home):
        if v not in coloring:
            out.append(Violation("missing-vertex", home[v], (v,)))
            continue
        c = coloring[v]
        if isinstance(c, bool) or not isinstance(c, int) or not 1 <= c <= inst.n:
            out.append(Violation("color-out-of-range", home[v], (v,)))
    for i, clique in enumerate(inst.cliques, start=1):
        colored = [v for v in sorted(clique) if v in coloring]
        for a, b in combinations(colored, 2):
            if coloring[a] == coloring[b]:
                out.append(Violation("same-color-in-clique", i, (a, b)))
    return out


@dataclass(frozen=True)
class CapExceeded:
    cap: int

    def __str__(self) -> str:
        return f"CHI CAP-EXCEEDED {self.cap}"


def format_chi(result: int | CapExceeded) -> str:
    return str(result) if isinstance(result, CapExceeded) else f"CHI {result}"


def _adjacency(inst: EflInstance) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {}
    for clique in inst.cliques:
        for v in clique:
            adj.setdefault(v, set()).update(clique - {v})
    return adj


def _colorable(adj: dict[str, set[str]], order: list[str], k: int) -> bool:
    color: dict[str, int] = {}
    domains = {v: set(range(1, k + 1)) for v in order}

    def search(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        # colors above used+1 are interchangeable with used+1
        for c in sorted(domains[v]):
            if c > used + 1:
                break
            pruned = []
            ok = True
            for w in adj[v]:
                if w not in color and c in domains[w]:
                    domains[w].discard(c)
                    pruned.append(w)
                    if not domains[w]:
                        ok = False
            if ok:
                color[v] = c
                if search(pos + 1, max(used, c)):
                    return True
                del color[v]
            for w in pruned:
                domains[w].add(c)
        return False

    return search(0, 0)


def chromatic_number(inst: EflInstance, vertex_cap: int = DEFAULT_VERTEX_CAP) -> int | CapExceeded:
    """Exact chromatic number of the union of the cliques.

    Each clique is a complete graph on ``n`` vertices, so the search starts at
    ``n``.
    """
    adj = _adjacency(inst)
    if len(adj) > vertex_cap:
        return CapExceeded(vertex_cap)
    if not adj:
        return 0
    degree = {v: sum(1 for c in inst.cliques if v in c) for v in adj}
    order = sorted(adj, key=lambda v: (-degree[v], v))
    k = max(len(c) for c in inst.cliques)
    while not _colorable(adj, order, k):
        k += 1
    return k


def canonical_signature(inst: EflInstance) -> str:
    """Renaming-invariant description: ``n`` and the sorted label sets."""
    where: dict[str, list[int]] = {}
    for i, clique in enumerate(inst.cliques, start=1):
        for v in clique:
            where.setdefault(v, []).append(i)
    labels = sorted(tuple(x) for x in where.values() if len(x) >= 2)
    return f"n={inst.n} labels=" + "|".join(",".join(map(str, x)) for x in labels)


def format_coloring(n: int, coloring: Mapping[str, int]) -> str:
    lines = [f"COLORING {n}"] + [f"{v} {coloring[v]}" for v in sorted(coloring)]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> tuple[int, dict[str, int]]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    head = lines[0].split(" ") if lines else []
    if len(head) != 2 or head[0] != "COLORING" or not head[1].isdigit():
        raise ParseError(1, "expected 'COLORING <n>'")
    out: dict[str, int] = {}
    for k, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        if len(parts) != 2 or not is_valid_token(parts[0]) or not parts[1].lstrip("-").isdigit():
            raise ParseError(k, "expected '<vertex> <color>'")
        if parts[0] in out:
            raise ParseError(k, f"vertex {parts[0]} colored twice")
        out[parts[0]] = int(parts[1])
    return int(head[1]), out
