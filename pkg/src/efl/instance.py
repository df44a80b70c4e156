"""Instances of the graph form of the Erdos-Faber-Lovasz problem.

An instance is ``n`` cliques ``A_1..A_n`` of ``n`` vertices each, any two of
which share at most one vertex.  Vertices are plain string tokens; a vertex
belongs to several cliques by appearing in several of them.  Clique indices
are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

LabelSet = tuple[int, ...]
Pair = tuple[int, int]

MAGIC = "EFL 1"


class ParseError(ValueError):
    """Malformed text input; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class UnknownVertexError(KeyError):
    pass


def is_valid_token(token: str) -> bool:
    return bool(token) and all(33 <= ord(ch) <= 126 for ch in token)


@dataclass(frozen=True)
class EflInstance:
    """``n`` cliques given as vertex-token sets.

    Construction does not check the clique rules; use :func:`validate`.
    """

    n: int
    cliques: tuple[frozenset[str], ...]

    def __init__(self, n: int, cliques: Iterable[Iterable[str]]):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "cliques", tuple(frozenset(c) for c in cliques))

    @property
    def vertices(self) -> list[str]:
        return sorted(set().union(*self.cliques)) if self.cliques else []

    def memberships(self) -> dict[str, LabelSet]:
        """Map every vertex to the sorted indices of the cliques holding it."""
        out: dict[str, list[int]] = {}
        for i, clique in enumerate(self.cliques, start=1):
            for v in clique:
                out.setdefault(v, []).append(i)
        return {v: tuple(out[v]) for v in sorted(out)}

    def to_text(self) -> str:
        lines = [MAGIC, f"n {self.n}"]
        for i, clique in enumerate(self.cliques, start=1):
            lines.append(f"clique {i}: " + " ".join(sorted(clique)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "EflInstance":
        return parse_instance(text)


def parse_instance(text: str) -> EflInstance:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != MAGIC:
        raise ParseError(1, f"expected {MAGIC!r}")
    if len(lines) < 2:
        raise ParseError(2, "missing 'n <n>' line")
    head = lines[1].split(" ")
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit() or int(head[1]) < 1:
        raise ParseError(2, "expected 'n <positive integer>'")
    n = int(head[1])
    cliques: list[frozenset[str]] = []
    for lineno in range(3, n + 3):
        if lineno > len(lines):
            raise ParseError(lineno, f"missing clique {lineno - 2}")
        line = lines[lineno - 1]
        prefix, sep, rest = line.partition(": ")
        parts = prefix.split(" ")
        if not sep or len(parts) != 2 or parts[0] != "clique" or not parts[1].isdigit():
            raise ParseError(lineno, "expected 'clique <i>: <tokens>'")
        idx = int(parts[1])
        if idx != lineno - 2:
            if 1 <= idx < lineno - 2:
                raise ParseError(lineno, f"duplicate clique index {idx}")
            raise ParseError(lineno, f"expected clique index {lineno - 2}, got {idx}")
        tokens = rest.split(" ")
        if len(tokens) != n:
            raise ParseError(lineno, f"clique {idx} has {len(tokens)} tokens, expected {n}")
        for tok in tokens:
            if not is_valid_token(tok):
                raise ParseError(lineno, f"invalid vertex token {tok!r}")
        if len(set(tokens)) != n:
            raise ParseError(lineno, f"clique {idx} repeats a vertex")
        cliques.append(frozenset(tokens))
    if len(lines) > n + 2:
        raise ParseError(n + 3, "trailing garbage after last clique")
    return EflInstance(n, cliques)


@dataclass(frozen=True)
class InstanceViolation:
    rule: str
    cliques: tuple[int, ...] = ()
    vertices: tuple[str, ...] = ()
    message: str = ""

    def __str__(self) -> str:
        return f"{self.rule}: {self.message}"


def validate(inst: EflInstance) -> list[InstanceViolation]:
    """Return every broken instance rule; an empty list means valid."""
    out: list[InstanceViolation] = []
    n = inst.n
    if n < 1:
        return [InstanceViolation("order", message=f"n = {n} is not positive")]
    if len(inst.cliques) != n:
        out.append(InstanceViolation(
            "clique-count", message=f"{len(inst.cliques)} cliques given, expected {n}"))
    for i, clique in enumerate(inst.cliques, start=1):
        if len(clique) != n:
            out.append(InstanceViolation(
                "clique-size", (i,), message=f"|A_{i}| = {len(clique)} != {n}"))
        bad = sorted(v for v in clique if not isinstance(v, str) or not is_valid_token(v))
        if bad:
            out.append(InstanceViolation(
                "token", (i,), tuple(map(str, bad)), message=f"invalid tokens in A_{i}"))
    for (i, a), (j, b) in combinations(enumerate(inst.cliques, start=1), 2):
        common = a & b
        if len(common) > 1:
            out.append(InstanceViolation(
                "shared-vertices", (i, j), tuple(sorted(common)),
                message=f"|A_{i} & A_{j}| = {len(common)} > 1"))
    nv = len(inst.vertices)
    if nv > n * n:
        out.append(InstanceViolation("vertex-count", message=f"|V| = {nv} > n^2 = {n * n}"))
    return out


def clique_degree(inst: EflInstance, v: str) -> int:
    d = sum(1 for clique in inst.cliques if v in clique)
    if d == 0:
        raise UnknownVertexError(v)
    return d


def common_vertex_labels(inst: EflInstance) -> dict[str, LabelSet]:
    """Label each vertex of clique degree >= 2 by the cliques containing it."""
    return {v: x for v, x in inst.memberships().items() if len(x) >= 2}


@dataclass(frozen=True)
class DerivedSets:
    """``missing``: index pairs of disjoint cliques.  ``by_degree``: vertices
    grouped by clique degree.  ``labels_by_size``: label sets grouped by size.
    """

    n: int
    missing: frozenset[Pair]
    by_degree: Mapping[int, frozenset[str]] = field(default_factory=dict)
    labels_by_size: Mapping[int, frozenset[LabelSet]] = field(default_factory=dict)

    def labels(self) -> list[LabelSet]:
        return sorted(x for group in self.labels_by_size.values() for x in group)


def derived_sets(inst: EflInstance) -> DerivedSets:
    members = inst.memberships()
    by_degree: dict[int, set[str]] = {}
    by_size: dict[int, set[LabelSet]] = {}
    covered: set[Pair] = set()
    for v, x in members.items():
        by_degree.setdefault(len(x), set()).add(v)
        if len(x) >= 2:
            by_size.setdefault(len(x), set()).add(x)
            covered.update(combinations(x, 2))
    missing = frozenset(p for p in combinations(range(1, inst.n + 1), 2) if p not in covered)
    return DerivedSets(
        inst.n,
        missing,
        {d: frozenset(vs) for d, vs in sorted(by_degree.items())},
        {d: frozenset(xs) for d, xs in sorted(by_size.items())},
    )
