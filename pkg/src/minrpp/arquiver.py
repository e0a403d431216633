"""Auslander-Reiten quivers of Dynkin quivers, knitted inside ZQ.

A position ``(l, i)`` stands for tau^{-l} P_i.  For an arrow i -> j of Q the
repetition ZQ has arrows ``(l, j) -> (l, i)`` and ``(l, i) -> (l + 1, j)``.
Every position carries a class in the Grothendieck group (a vector indexed by
the vertices of Q); positions of rep Q are exactly those with a positive class.
"""

from __future__ import annotations

from functools import cached_property

from .dynkin import DynkinQuiver, positive_roots

Pos = tuple[int, int]


def root_str(root) -> str:
    return "".join(str(c) for c in root)


def parse_root(text: str) -> tuple[int, ...]:
    if not text.isdigit():
        raise ValueError(f"dimension vector {text!r} must be a string of digits")
    return tuple(int(c) for c in text)


class ArQuiver:
    def __init__(self, quiver: DynkinQuiver):
        self.quiver = quiver
        self.n = quiver.diagram.rank
        self._classes: dict[Pos, tuple[int, ...]] = {}
        self._lo = 0
        self._hi = -1
        for i in quiver.vertices:
            reach = quiver.reachable_from(i)
            self._classes[(0, i)] = tuple(int(j in reach) for j in quiver.vertices)
        self._hi = 0
        self.top = {}
        for i in quiver.vertices:
            ell = 0
            while _positive(self.class_of((ell + 1, i))):
                ell += 1
            self.top[i] = ell
        self.positions: list[Pos] = sorted(
            ((ell, i) for i in quiver.vertices for ell in range(self.top[i] + 1)), key=self.time
        )
        self.root = {p: self.class_of(p) for p in self.positions}
        self.pos_of_root = {r: p for p, r in self.root.items()}
        expected = set(positive_roots(quiver.diagram))
        if len(self.pos_of_root) != len(self.positions) or set(self.pos_of_root) != expected:
            raise AssertionError(f"knitting of {quiver} did not produce the positive roots")

    # -- the repetition ZQ ---------------------------------------------------
    def _extend(self, ell: int) -> None:
        q = self.quiver
        while self._hi < ell:
            nxt = self._hi + 1
            # successors inside the new slice come from sinks first
            for i in reversed(q.order):
                total = [0] * self.n
                for s in self.successors((nxt - 1, i)):
                    _add(total, self._classes[s])
                self._classes[(nxt, i)] = _sub(total, self._classes[(nxt - 1, i)])
            self._hi = nxt
        while self._lo > ell:
            prv = self._lo - 1
            for i in q.order:
                total = [0] * self.n
                for s in self.predecessors((prv + 1, i)):
                    _add(total, self._classes[s])
                self._classes[(prv, i)] = _sub(total, self._classes[(prv + 1, i)])
            self._lo = prv

    def class_of(self, pos: Pos) -> tuple[int, ...]:
        if pos not in self._classes:
            self._extend(pos[0])
        return self._classes[pos]

    def successors(self, pos: Pos) -> list[Pos]:
        ell, i = pos
        q = self.quiver
        return [(ell + 1, j) for j in q.successors(i)] + [(ell, k) for k in q.predecessors(i)]

    def predecessors(self, pos: Pos) -> list[Pos]:
        ell, i = pos
        q = self.quiver
        return [(ell, j) for j in q.successors(i)] + [(ell - 1, k) for k in q.predecessors(i)]

    def time(self, pos: Pos) -> int:
        """Strictly increasing along every arrow of ZQ."""
        ell, i = pos
        return 2 * self.n * ell + self.n - self.quiver.number[i]

    # -- rep Q -----------------------------------------------------------------
    def in_rep(self, pos: Pos) -> bool:
        ell, i = pos
        return 0 <= ell <= self.top[i]

    @cached_property
    def arrows(self) -> list[tuple[Pos, Pos]]:
        return [(p, s) for p in self.positions for s in self.successors(p) if self.in_rep(s)]

    def tau(self, pos: Pos) -> Pos | None:
        ell, i = pos
        return (ell - 1, i) if ell >= 1 else None

    def pi(self, pos: Pos) -> int:
        return pos[1]

    @cached_property
    def injective_orbit(self) -> dict[int, int]:
        """Vertex j -> the tau-orbit containing the injective I_j."""
        q = self.quiver
        out = {}
        for j in q.vertices:
            dim = tuple(int(j in q.reachable_from(v)) for v in q.vertices)
            ell, o = self.pos_of_root[dim]
            if ell != self.top[o]:
                raise AssertionError(f"injective I_{j} is not at the end of its orbit")
            out[j] = o
        return out

    @cached_property
    def coxeter_number(self) -> int:
        return self.top[1] + self.top[self.injective_orbit[1]] + 2

    def shift(self, pos: Pos, k: int = 1) -> Pos:
        """The suspension [k] on positions of ZQ."""
        ell, j = pos
        back = {o: v for v, o in self.injective_orbit.items()}
        for _ in range(k):
            o = self.injective_orbit[j]
            ell, j = ell + self.top[o] + 1, o
        for _ in range(-k):
            ell, j = ell - self.top[j] - 1, back[j]
        return (ell, j)

    def support_at(self, m: int) -> tuple[list[Pos], list[tuple[Pos, Pos]]]:
        nodes = [p for p in self.positions if self.root[p][m - 1] > 0]
        keep = set(nodes)
        return nodes, [(a, b) for a, b in self.arrows if a in keep and b in keep]

    def up_closure(self, start) -> set[Pos]:
        seen = set(start)
        todo = list(start)
        while todo:
            for s in self.successors(todo.pop()):
                if self.in_rep(s) and s not in seen:
                    seen.add(s)
                    todo.append(s)
        return seen

    def dot(self, highlight=()) -> str:
        marked = set(highlight)
        lines = ["digraph ar {", "  rankdir=LR;"]
        for p in self.positions:
            style = ", style=bold" if p in marked else ""
            lines.append(f'  "{root_str(self.root[p])}" [label="{root_str(self.root[p])}\\npi={p[1]}"{style}];')
        for a, b in self.arrows:
            lines.append(f'  "{root_str(self.root[a])}" -> "{root_str(self.root[b])}";')
        lines.append("}")
        return "\n".join(lines)


def ar_quiver(quiver: DynkinQuiver) -> ArQuiver:
    return ArQuiver(quiver)


def _positive(v) -> bool:
    return all(c >= 0 for c in v) and any(v)


def _add(acc: list[int], v) -> None:
    for k, c in enumerate(v):
        acc[k] += c


def _sub(a, b) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))
