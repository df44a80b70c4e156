"""Building instances: the canonical ``H_n`` and label systems.

A label system lists, for each vertex lying in two or more cliques, the set of
clique indices containing it.  Together with ``n`` it fixes an instance up to
renaming of vertices; :func:`realize` and :func:`system_of` convert both ways.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from .instance import EflInstance, LabelSet, ParseError, common_vertex_labels

DEFAULT_ENUMERATION_CAP = 4


class InvalidLabelSystem(ValueError):
    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


@dataclass(frozen=True)
class LabelSystem:
    n: int
    labels: tuple[LabelSet, ...]

    def __init__(self, n: int, labels: Iterable[Iterable[int]] = ()):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "labels", tuple(sorted(tuple(sorted(x)) for x in labels)))

    def problems(self) -> list[str]:
        out = []
        if self.n < 1:
            out.append(f"order {self.n} is not positive")
        if len(set(self.labels)) != len(self.labels):
            out.append("repeated label")
        for x in self.labels:
            if len(x) < 2:
                out.append(f"label {x} has fewer than 2 indices")
            if len(set(x)) != len(x) or any(not 1 <= i <= self.n for i in x):
                out.append(f"label {x} has indices outside 1..{self.n} or repeats")
        for x, y in combinations(self.labels, 2):
            if len(set(x) & set(y)) > 1:
                out.append(f"labels {x} and {y} share {len(set(x) & set(y))} indices")
        for i in range(1, self.n + 1):
            load = sum(1 for x in self.labels if i in x)
            if load > self.n:
                out.append(f"index {i} is in {load} labels, capacity {self.n}")
        return out

    def private_count(self, i: int) -> int:
        return self.n - sum(1 for x in self.labels if i in x)

    def to_text(self) -> str:
        lines = [f"SYS {self.n}"]
        lines += ["label: " + " ".join(map(str, x)) for x in self.labels]
        return "\n".join(lines) + "\n"


def parse_system(text: str) -> LabelSystem:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    head = lines[0].split(" ") if lines else []
    if len(head) != 2 or head[0] != "SYS" or not head[1].isdigit():
        raise ParseError(1, "expected 'SYS <n>'")
    labels = []
    for k, line in enumerate(lines[1:], start=2):
        prefix, sep, rest = line.partition(": ")
        vals = rest.split(" ")
        if prefix != "label" or not sep or not all(v.isdigit() for v in vals):
            raise ParseError(k, "expected 'label: i j ...'")
        labels.append([int(v) for v in vals])
    return LabelSystem(int(head[1]), labels)


def build_hn(n: int) -> EflInstance:
    """The minimum instance: every two cliques share exactly one vertex.

    Clique ``i`` holds ``b_i_j``/``b_j_i`` shared with clique ``j`` (smaller
    index first) and its private vertex ``a_i_i``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    cliques = []
    for i in range(1, n + 1):
        clique = {f"a_{i}_{i}"}
        clique.update(f"b_{min(i, j)}_{max(i, j)}" for j in range(1, n + 1) if j != i)
        cliques.append(clique)
    return EflInstance(n, cliques)


def label_token(x: LabelSet) -> str:
    return "u_" + "_".join(map(str, x))


def realize(system: LabelSystem) -> EflInstance:
    """One vertex ``u_<x>`` per label, padded by private ``p_<i>_<k>`` vertices."""
    problems = system.problems()
    if problems:
        raise InvalidLabelSystem(problems)
    cliques: list[set[str]] = [set() for _ in range(system.n)]
    for x in system.labels:
        for i in x:
            cliques[i - 1].add(label_token(x))
    for i, clique in enumerate(cliques, start=1):
        clique.update(f"p_{i}_{k}" for k in range(1, system.n - len(clique) + 1))
    return EflInstance(system.n, cliques)


def system_of(inst: EflInstance) -> LabelSystem:
    return LabelSystem(inst.n, common_vertex_labels(inst).values())


def _can_join(labels: list[LabelSet], new: LabelSet, skip: set[LabelSet]) -> bool:
    s = set(new)
    return all(len(s & set(x)) <= 1 for x in labels if x not in skip)


def random_system(n: int, p: float, q: float, seed: int) -> LabelSystem:
    """Random system: pairs switched on with probability ``p``, then merged.

    Each label in turn is, with probability ``q``, merged with a randomly chosen
    other label whose union still meets every remaining label in at most one
    index; labels inside the union are absorbed.  A merged label is offered
    another merge before moving on.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(1, n + 1), 2))
    active = rng.random(len(pairs)) < p
    labels: list[LabelSet] = [x for x, on in zip(pairs, active) if on]
    k = 0
    while k < len(labels):
        cur = labels[k]
        if q > 0 and rng.random() < q:
            options = []
            for other in labels:
                if other == cur:
                    continue
                union = tuple(sorted(set(cur) | set(other)))
                inside = {x for x in labels if set(x) <= set(union)}
                if _can_join(labels, union, inside):
                    options.append((other, union, inside))
            if options:
                _, union, inside = options[int(rng.integers(len(options)))]
                labels = [x for x in labels if x not in inside]
                labels.append(union)
                labels.sort()
                k = labels.index(union)
                continue
        k += 1
    return LabelSystem(n, labels)


def enumerate_systems(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[LabelSystem]:
    """Yield every valid system of order ``n`` once, in lexicographic order
    of the sorted label lists."""
    if n > cap:
        raise ValueError(f"n = {n} exceeds the enumeration cap {cap}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    candidates = sorted(
        x for size in range(2, n + 1) for x in combinations(range(1, n + 1), size)
    )

    def extend(start: int, chosen: list[LabelSet]) -> Iterator[LabelSystem]:
        yield LabelSystem(n, chosen)
        for k in range(start, len(candidates)):
            x = candidates[k]
            if all(len(set(x) & set(y)) <= 1 for y in chosen):
                yield from extend(k + 1, chosen + [x])

    yield from extend(0, [])
