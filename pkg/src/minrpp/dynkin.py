"""Simply-laced Dynkin diagrams, their orientations and root systems."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property


def _edges(family: str, n: int) -> list[tuple[int, int]]:
    if family == "A":
        if n < 1:
            raise ValueError(f"A_n needs n >= 1, got {n}")
        return [(i, i + 1) for i in range(1, n)]
    if family == "D":
        if n < 4:
            raise ValueError(f"D_n needs n >= 4, got {n}")
        return [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
    if family == "E":
        if n not in (6, 7, 8):
            raise ValueError(f"E_n needs n in 6..8, got {n}")
        # the branch vertex n hangs off vertex 3 of the path 1..n-1
        return [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class DynkinDiagram:
    family: str
    rank: int

    def __post_init__(self):
        _edges(self.family, self.rank)

    @classmethod
    def parse(cls, name: str) -> "DynkinDiagram":
        name = name.strip().upper()
        if len(name) < 2 or not name[1:].isdigit():
            raise ValueError(f"cannot parse diagram name {name!r}")
        return cls(name[0], int(name[1:]))

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def vertices(self) -> range:
        return range(1, self.rank + 1)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(_edges(self.family, self.rank))

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]


def minuscule_vertices(diagram: DynkinDiagram) -> set[int]:
    n = diagram.rank
    if diagram.family == "A":
        return set(range(1, n + 1))
    if diagram.family == "D":
        return {1, n - 1, n}
    return {6: {1, 5}, 7: {6}, 8: set()}[n]


def psi(diagram: DynkinDiagram) -> dict[int, int]:
    """The involution x -> -w0(x) on vertices."""
    n = diagram.rank
    perm = {v: v for v in diagram.vertices}
    if diagram.family == "A":
        perm = {v: n + 1 - v for v in diagram.vertices}
    elif diagram.family == "D" and n % 2 == 1:
        perm[n - 1], perm[n] = n, n - 1
    elif diagram.family == "E" and n == 6:
        perm.update({1: 5, 5: 1, 2: 4, 4: 2})
    return perm


def reflect_root(diagram: DynkinDiagram, root: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Simple reflection s_k in the basis of simple roots."""
    out = list(root)
    out[k - 1] = -root[k - 1] + sum(root[j - 1] for j in diagram.adjacency[k])
    return tuple(out)


def root_system(diagram: DynkinDiagram) -> list[tuple[int, ...]]:
    """All roots (positive and negative) as the orbit of the simple roots."""
    n = diagram.rank
    seen = set()
    todo = [tuple(int(j == i) for j in range(1, n + 1)) for i in diagram.vertices]
    while todo:
        r = todo.pop()
        if r in seen:
            continue
        seen.add(r)
        for k in diagram.vertices:
            todo.append(reflect_root(diagram, r, k))
    return sorted(seen)


def positive_roots(diagram: DynkinDiagram) -> list[tuple[int, ...]]:
    return [r for r in root_system(diagram) if all(c >= 0 for c in r)]


def coxeter_number(diagram: DynkinDiagram) -> int:
    roots = root_system(diagram)

    def cox(r):
        for k in diagram.vertices:
            r = reflect_root(diagram, r, k)
        return r

    image = {r: cox(r) for r in roots}
    order = 1
    current = dict(image)
    while any(current[r] != r for r in roots):
        current = {r: image[current[r]] for r in roots}
        order += 1
    return order


class DynkinQuiver:
    """A Dynkin diagram with an orientation of every edge.

    Vertex labels stay those of the diagram; ``order`` lists the vertices in
    the admissible numbering (sources first, ties broken by smallest label).
    """

    def __init__(self, diagram: DynkinDiagram, arrows):
        self.diagram = diagram
        arrows = frozenset((int(s), int(t)) for s, t in arrows)
        undirected = {frozenset(e) for e in diagram.edges}
        given = [frozenset(a) for a in arrows]
        if len(given) != len(undirected) or set(given) != undirected:
            raise ValueError(f"arrows {sorted(arrows)} do not orient the edges of {diagram.name}")
        self.arrows = arrows
        self.order = self._numbering()
        self.number = {v: k + 1 for k, v in enumerate(self.order)}

    def _numbering(self) -> tuple[int, ...]:
        indeg = {v: 0 for v in self.diagram.vertices}
        for _, t in self.arrows:
            indeg[t] += 1
        ready = [v for v, d in indeg.items() if d == 0]
        heapq.heapify(ready)
        out = []
        while ready:
            v = heapq.heappop(ready)
            out.append(v)
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        heapq.heappush(ready, t)
        return tuple(out)

    @classmethod
    def from_orient(cls, diagram: DynkinDiagram, orient: str | None = None) -> "DynkinQuiver":
        """Parse ``"1<2<3"`` style chains or ``"2>1,3>2"`` arrow lists.

        ``a<b`` is the arrow b -> a and ``a>b`` is a -> b.  Without an
        orientation every edge points from the smaller label to the larger.
        """
        if not orient:
            return cls(diagram, diagram.edges)
        arrows = []
        for chunk in orient.replace(" ", "").split(","):
            tokens = []
            num = ""
            for ch in chunk:
                if ch.isdigit():
                    num += ch
                elif ch in "<>":
                    if not num:
                        raise ValueError(f"bad orientation {orient!r}")
                    tokens += [int(num), ch]
                    num = ""
                else:
                    raise ValueError(f"bad character {ch!r} in orientation {orient!r}")
            if not num:
                raise ValueError(f"bad orientation {orient!r}")
            tokens.append(int(num))
            for a, sym, b in zip(tokens[0::2], tokens[1::2], tokens[2::2]):
                arrows.append((a, b) if sym == ">" else (b, a))
        return cls(diagram, arrows)

    @classmethod
    def from_json(cls, data: dict) -> "DynkinQuiver":
        return cls(DynkinDiagram(data["family"], int(data["rank"])), data["arrows"])

    def to_json(self) -> dict:
        return {
            "family": self.diagram.family,
            "rank": self.diagram.rank,
            "arrows": [list(a) for a in sorted(self.arrows)],
        }

    @property
    def vertices(self) -> range:
        return self.diagram.vertices

    def successors(self, v: int) -> list[int]:
        return sorted(t for s, t in self.arrows if s == v)

    def predecessors(self, v: int) -> list[int]:
        return sorted(s for s, t in self.arrows if t == v)

    def is_source(self, v: int) -> bool:
        return not self.predecessors(v)

    def is_sink(self, v: int) -> bool:
        return not self.successors(v)

    def reachable_from(self, v: int) -> set[int]:
        seen, todo = {v}, [v]
        while todo:
            for w in self.successors(todo.pop()):
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return seen

    def __eq__(self, other):
        return isinstance(other, DynkinQuiver) and (self.diagram, self.arrows) == (other.diagram, other.arrows)

    def __hash__(self):
        return hash((self.diagram, self.arrows))

    def __repr__(self):
        body = ",".join(f"{s}>{t}" for s, t in sorted(self.arrows))
        return f"DynkinQuiver({self.diagram.name}: {body})"


def sigma_vertex(quiver: DynkinQuiver, k: int) -> DynkinQuiver:
    if not (quiver.is_source(k) or quiver.is_sink(k)):
        raise ValueError(f"vertex {k} is neither a source nor a sink of {quiver}")
    flipped = [(t, s) if k in (s, t) else (s, t) for s, t in quiver.arrows]
    return DynkinQuiver(quiver.diagram, flipped)


def all_orientations(diagram: DynkinDiagram) -> list[DynkinQuiver]:
    out = []
    edges = diagram.edges
    for mask in range(1 << len(edges)):
        arrows = [(b, a) if mask >> e & 1 else (a, b) for e, (a, b) in enumerate(edges)]
        out.append(DynkinQuiver(diagram, arrows))
    return out
