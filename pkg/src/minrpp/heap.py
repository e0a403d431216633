"""Minuscule heaps: posets labelled by quiver vertices."""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .arquiver import ArQuiver, root_str
from .dynkin import DynkinDiagram, DynkinQuiver, minuscule_vertices, psi


class Heap:
    """A finite poset with a fibre map to the vertices of a graph.

    Elements are indexed 0..size-1; ``covers`` are pairs (lower, upper).
    """

    def __init__(self, ids, fibre, covers, adjacency, involution=None, roots=None, positions=None):
        self.ids = list(ids)
        if len(set(self.ids)) != len(self.ids):
            raise ValueError("heap element ids must be distinct")
        self.index = {x: k for k, x in enumerate(self.ids)}
        self.size = len(self.ids)
        self.fibre = [int(v) for v in fibre]
        self.covers = sorted({(int(a), int(b)) for a, b in covers})
        self.adjacency = {int(v): tuple(ns) for v, ns in adjacency.items()}
        self.involution = dict(involution) if involution else {v: v for v in self.adjacency}
        self.roots = roots
        self.positions = positions
        self.up = [[] for _ in range(self.size)]
        self.down = [[] for _ in range(self.size)]
        for a, b in self.covers:
            self.up[a].append(b)
            self.down[b].append(a)
        self.linear = self._linear_extension()
        # above[x]: bitmask of y with x < y
        self.above = [0] * self.size
        for x in reversed(self.linear):
            for y in self.up[x]:
                self.above[x] |= self.above[y] | (1 << y)
        self.below = [0] * self.size
        for x in self.linear:
            for y in self.down[x]:
                self.below[x] |= self.below[y] | (1 << y)
        fibres: dict[int, list[int]] = {v: [] for v in self.adjacency}
        for x in self.linear:
            fibres.setdefault(self.fibre[x], []).append(x)
        self.fibres = fibres

    def _linear_extension(self) -> list[int]:
        indeg = [len(d) for d in self.down]
        ready = [(self.ids[x], x) for x in range(self.size) if indeg[x] == 0]
        heapq.heapify(ready)
        out = []
        while ready:
            _, x = heapq.heappop(ready)
            out.append(x)
            for y in self.up[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    heapq.heappush(ready, (self.ids[y], y))
        if len(out) != self.size:
            raise ValueError("cover relations contain a cycle")
        return out

    def less(self, x: int, y: int) -> bool:
        return bool(self.above[x] >> y & 1)

    def leq(self, x: int, y: int) -> bool:
        return x == y or self.less(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def elements(self, mask: int) -> list[int]:
        return [x for x in range(self.size) if mask >> x & 1]

    def is_filter(self, mask: int) -> bool:
        return all(self.above[x] & ~mask == 0 for x in self.elements(mask))

    def is_ideal(self, mask: int) -> bool:
        return all(self.below[x] & ~mask == 0 for x in self.elements(mask))

    def filters(self) -> list[int]:
        """All order filters, as bitmasks."""
        found = {0}
        todo = [0]
        while todo:
            f = todo.pop()
            for x in range(self.size):
                if not f >> x & 1 and self.above[x] & ~f == 0:
                    g = f | 1 << x
                    if g not in found:
                        found.add(g)
                        todo.append(g)
        return sorted(found, key=lambda m: (bin(m).count("1"), m))

    def up_closure(self, mask: int) -> int:
        out = mask
        for x in self.elements(mask):
            out |= self.above[x]
        return out

    def induced(self, keep: list[int]) -> "Heap":
        """The subposet on ``keep`` (with its own cover relations)."""
        keep = sorted(keep)
        pos = {x: k for k, x in enumerate(keep)}
        covers = []
        for a in keep:
            for b in keep:
                if self.less(a, b) and not any(self.less(a, c) and self.less(c, b) for c in keep):
                    covers.append((pos[a], pos[b]))
        return Heap(
            [self.ids[x] for x in keep],
            [self.fibre[x] for x in keep],
            covers,
            self.adjacency,
            self.involution,
            [self.roots[x] for x in keep] if self.roots else None,
            [self.positions[x] for x in keep] if self.positions else None,
        )

    def to_json(self) -> dict:
        return {
            "elements": self.ids,
            "covers": [[self.ids[a], self.ids[b]] for a, b in self.covers],
            "pi": {self.ids[x]: self.fibre[x] for x in range(self.size)},
        }

    def dot(self) -> str:
        lines = ["digraph heap {", "  rankdir=LR;"]
        for x in range(self.size):
            lines.append(f'  "{self.ids[x]}" [label="{self.ids[x]}\\npi={self.fibre[x]}"];')
        for a, b in self.covers:
            lines.append(f'  "{self.ids[a]}" -> "{self.ids[b]}";')
        lines.append("}")
        return "\n".join(lines)

    def __repr__(self):
        return f"Heap({self.size} elements)"


class MinusculeHeap(Heap):
    def __init__(self, quiver: DynkinQuiver, m: int, arq: ArQuiver | None = None):
        if m not in minuscule_vertices(quiver.diagram):
            raise ValueError(f"vertex {m} is not minuscule in {quiver.diagram.name}")
        self.quiver = quiver
        self.m = m
        self.arq = arq or ArQuiver(quiver)
        nodes, arrows = self.arq.support_at(m)
        for p in nodes:
            if self.arq.root[p][m - 1] != 1:
                raise AssertionError(f"root {self.arq.root[p]} has coefficient > 1 at {m}")
        where = {p: k for k, p in enumerate(nodes)}
        super().__init__(
            [root_str(self.arq.root[p]) for p in nodes],
            [p[1] for p in nodes],
            [(where[a], where[b]) for a, b in arrows],
            quiver.diagram.adjacency,
            psi(quiver.diagram),
            [self.arq.root[p] for p in nodes],
            nodes,
        )
        self.pos_index = where


def minuscule_heap(quiver: DynkinQuiver, m: int) -> MinusculeHeap:
    return MinusculeHeap(quiver, m)


@dataclass
class HeapReport:
    checks: dict[str, bool] = field(default_factory=dict)
    failures: dict[str, list] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, bad: list) -> None:
        self.checks[name] = not bad
        if bad:
            self.failures[name] = bad[:5]


def _neighbours(heap: Heap, i: int, j: int) -> bool:
    return j in heap.adjacency.get(i, ())


def verify_heap(heap: Heap) -> HeapReport:
    rep = HeapReport()
    n = heap.size
    fib = heap.fibre
    rep.record("H1", [(a, b) for a, b in itertools.combinations(range(n), 2)
                      if fib[a] == fib[b] and not heap.comparable(a, b)])
    rep.record("H2", [(a, b) for a, b in itertools.combinations(range(n), 2)
                      if _neighbours(heap, fib[a], fib[b]) and not heap.comparable(a, b)])
    # H3: the order is generated by comparabilities inside equal or adjacent fibres
    gen = [0] * n
    for a in range(n):
        for b in range(n):
            if heap.less(a, b) and (fib[a] == fib[b] or _neighbours(heap, fib[a], fib[b])):
                gen[a] |= 1 << b
    closure = list(gen)
    changed = True
    while changed:
        changed = False
        for a in range(n):
            new = closure[a]
            for b in heap.elements(closure[a]):
                new |= closure[b]
            if new != closure[a]:
                closure[a] = new
                changed = True
    rep.record("H3", [heap.ids[a] for a in range(n) if closure[a] != heap.above[a]])

    bad = []
    for i, chain in heap.fibres.items():
        for lo, hi in zip(chain, chain[1:]):
            between = [z for z in range(n) if heap.less(lo, z) and heap.less(z, hi)
                       and _neighbours(heap, i, fib[z])]
            if len(between) != 2:
                bad.append((heap.ids[lo], heap.ids[hi], len(between)))
    rep.record("two-neighbourly", bad)

    # The y's must not be separated from x by another element of x's fibre;
    # without that proviso the statement fails already in A_4.
    for name, rel in (("converse", heap.less), ("converse-dual", lambda a, b: heap.less(b, a))):
        bad = []
        for x in range(n):
            over = [y for y in range(n) if rel(x, y) and _neighbours(heap, fib[x], fib[y])
                    and not any(fib[z] == fib[x] and rel(x, z) and rel(z, y) for z in range(n))]
            for y1, y2 in itertools.combinations(over, 2):
                if not any(fib[z] == fib[x] and (z == y1 or rel(y1, z)) and (z == y2 or rel(y2, z))
                           for z in range(n)):
                    bad.append((heap.ids[x], heap.ids[y1], heap.ids[y2]))
        rep.record(name, bad)
    return rep


def ant(heap: Heap) -> list[int]:
    """The order-reversing involution sending fibre i onto fibre psi(i)."""
    image = [None] * heap.size
    for i, chain in heap.fibres.items():
        target = heap.fibres.get(heap.involution[i], [])
        if len(target) != len(chain):
            raise AssertionError(f"fibres {i} and {heap.involution[i]} differ in size")
        for x, y in zip(chain, reversed(target)):
            image[x] = y
    for x in range(heap.size):
        if image[image[x]] != x:
            raise AssertionError("Ant is not an involution")
        for y in heap.up[x]:
            if not heap.less(image[y], image[x]):
                raise AssertionError(f"Ant does not reverse {heap.ids[x]} < {heap.ids[y]}")
    return image


# -- iso-type models ------------------------------------------------------

def chain_product(k: int, l: int) -> nx.DiGraph:
    g = nx.DiGraph()
    for a in range(k):
        for b in range(l):
            g.add_node((a, b))
            if a + 1 < k:
                g.add_edge((a, b), (a + 1, b))
            if b + 1 < l:
                g.add_edge((a, b), (a, b + 1))
    return g


def order_ideals(cover_graph: nx.DiGraph) -> nx.DiGraph:
    """J(P): the order ideals of P ordered by inclusion, as a cover graph."""
    nodes = list(cover_graph.nodes)
    below = {x: nx.ancestors(cover_graph, x) for x in nodes}
    ideals = {frozenset()}
    todo = [frozenset()]
    while todo:
        ideal = todo.pop()
        for x in nodes:
            if x not in ideal and below[x] <= ideal:
                bigger = ideal | {x}
                if bigger not in ideals:
                    ideals.add(bigger)
                    todo.append(bigger)
    g = nx.DiGraph()
    g.add_nodes_from(ideals)
    for ideal in ideals:
        for x in nodes:
            if x not in ideal and below[x] <= ideal:
                g.add_edge(ideal, ideal | {x})
    return g


def model_poset(family: str, n: int, m: int) -> tuple[str, nx.DiGraph]:
    if family == "A":
        return f"[{m}]x[{n + 1 - m}]", chain_product(m, n + 1 - m)
    if family == "D":
        if m == 1:
            g = chain_product(2, 2)
            for _ in range(n - 3):
                g = order_ideals(g)
            return f"J^{n - 3}([2]x[2])", g
        if m in (n - 1, n):
            return f"J([2]x[{n - 2}])", order_ideals(chain_product(2, n - 2))
    if family == "E" and (n, m) in ((6, 1), (6, 5), (7, 6)):
        g = chain_product(2, 3)
        for _ in range(n - 4):
            g = order_ideals(g)
        return f"J^{n - 4}([2]x[3])", g
    raise ValueError(f"{family}{n} has no minuscule vertex {m}")


def cover_graph(heap: Heap) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(heap.size))
    g.add_edges_from(heap.covers)
    return g


def iso_type(heap: MinusculeHeap) -> str:
    d = heap.quiver.diagram
    label, model = model_poset(d.family, d.rank, heap.m)
    if model.number_of_nodes() != heap.size or not DiGraphMatcher(cover_graph(heap), model).is_isomorphic():
        raise AssertionError(f"heap of {d.name}, m={heap.m} is not isomorphic to {label}")
    return label


def minuscule_cases(max_rank: int = 7) -> list[tuple[DynkinDiagram, int]]:
    out = []
    for family, ranks in (("A", range(1, max_rank + 1)), ("D", range(4, max_rank + 1)), ("E", (6, 7))):
        for n in ranks:
            d = DynkinDiagram(family, n)
            out += [(d, m) for m in sorted(minuscule_vertices(d))]
    return out
