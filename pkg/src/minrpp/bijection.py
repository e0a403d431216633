"""The bijection between objects of C_{Q,m} and reverse plane partitions.

The forward map runs over every indecomposable of the window, right to left.
When the object at a position is reached, the already-filled heap elements in
its tau-orbit are toggled (inside the subposet of filled elements), and if the
position belongs to the heap it is filled with the max of its filled upper
covers plus its multiplicity.  Running the same process left to right on the
opposite order gives the data of the dual algebra, which is what the
infinity part of a split object uses.

A heart Xi derived equivalent to Q is described by a section of ZQ: vertex i
gets the slice index of the projective P^Xi_i.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property

from .arquiver import ArQuiver, Pos
from .dynkin import DynkinQuiver
from .heap import MinusculeHeap, ant
from .rpp import INF, Ext, Rpp, cofin


# -- the recurrence ----------------------------------------------------------

def run_recurrence(heap, events, mults, dual=False, trace=None) -> dict[int, int]:
    """Fill the carriers named in ``events``.

    ``events`` is the processing order as (orbit, carrier-or-None) pairs.  In
    the dual run the roles of upper and lower covers are exchanged.
    """
    up, down = (heap.down, heap.up) if dual else (heap.up, heap.down)
    val: dict[int, int] = {}
    by_orbit = defaultdict(list)
    for orbit, x in events:
        for y in by_orbit[orbit]:
            val[y] = _toggle_inside(val, up[y], down[y], val[y], heap, y)
        if x is not None:
            val[x] = max((val[z] for z in up[x] if z in val), default=0) + mults[x]
            by_orbit[orbit].append(x)
        if trace is not None:
            trace.append(dict(val))
    return val


def _toggle_inside(val, ups, downs, v, heap, y) -> int:
    lows = [val[z] for z in downs if z in val]
    if not lows:
        raise AssertionError(f"toggle at {heap.ids[y]} has no filled neighbour on the far side")
    new = max((val[z] for z in ups if z in val), default=0) + min(lows) - v
    if new < 0:
        raise AssertionError(f"negative entry at {heap.ids[y]}")
    return new


def invert_recurrence(heap, events, values: dict[int, int], dual=False) -> dict[int, int]:
    up, down = (heap.down, heap.up) if dual else (heap.up, heap.down)
    val = dict(values)
    by_orbit = defaultdict(list)
    for orbit, x in events:
        if x is not None:
            by_orbit[orbit].append(x)
    if set(val) != {x for _, x in events if x is not None}:
        raise ValueError("filling does not match the carriers of the recurrence")
    mults = {}
    for orbit, x in reversed(events):
        if x is not None:
            c = val[x] - max((val[z] for z in up[x] if z in val), default=0)
            if c < 0:
                raise ValueError(f"not a reverse plane partition: negative multiplicity at {heap.ids[x]}")
            mults[x] = c
            del val[x]
            by_orbit[orbit].pop()
        for y in by_orbit[orbit]:
            val[y] = _toggle_inside(val, up[y], down[y], val[y], heap, y)
    return mults


# -- Q itself ----------------------------------------------------------------

def linearize(heap: MinusculeHeap) -> list[int]:
    """Heap elements in the processing order (maximal element first)."""
    return [heap.pos_index[p] for p in event_order(heap.arq) if p in heap.pos_index]


def event_order(arq: ArQuiver) -> list[Pos]:
    return sorted(arq.positions, key=arq.time, reverse=True)


def _events(heap: MinusculeHeap, order=None):
    order = event_order(heap.arq) if order is None else order
    return [(p[1], heap.pos_index.get(p)) for p in order]


def mult_vector(heap, mults) -> list[int]:
    """Normalize a multiplicity vector given as a dict keyed by id or a list."""
    if isinstance(mults, dict):
        unknown = set(mults) - set(heap.ids)
        if unknown:
            raise ValueError(f"summands {sorted(unknown)} are not supported at the minuscule vertex")
        out = [int(mults.get(x, 0)) for x in heap.ids]
    else:
        out = [int(c) for c in mults]
        if len(out) != heap.size:
            raise ValueError(f"expected {heap.size} multiplicities, got {len(out)}")
    if any(c < 0 for c in out):
        raise ValueError(f"multiplicities must be non-negative, got {out}")
    return out


def _heap(quiver, m) -> MinusculeHeap:
    return quiver if isinstance(quiver, MinusculeHeap) else MinusculeHeap(quiver, m)


def rho(quiver, m=None, mults=None, order=None, trace=None) -> Rpp:
    heap = _heap(quiver, m)
    c = mult_vector(heap, mults if mults is not None else {})
    val = run_recurrence(heap, _events(heap, order), c, trace=trace)
    return Rpp(heap, [val[x] for x in range(heap.size)])


def rho_inverse(quiver, m=None, rpp=None) -> list[int]:
    heap = _heap(quiver, m)
    values = rpp.values if isinstance(rpp, Rpp) else rpp
    if any(isinstance(v, Ext) for v in values):
        raise ValueError("rho_inverse needs finite entries; use split_for_rpp for extended fillings")
    got = invert_recurrence(heap, _events(heap), dict(enumerate(values)))
    return [got[x] for x in range(heap.size)]


# -- hearts as sections of ZQ -------------------------------------------------

class Window:
    """The heart rep Xi, given by the slice index of each projective P^Xi_i."""

    def __init__(self, arq: ArQuiver, slices):
        self.arq = arq
        self.s = {int(i): int(v) for i, v in dict(slices).items()}
        self.quiver  # validates the section

    @classmethod
    def of_q(cls, arq: ArQuiver) -> "Window":
        return cls(arq, {i: 0 for i in arq.quiver.vertices})

    def key(self) -> tuple[int, ...]:
        return tuple(self.s[i] for i in sorted(self.s))

    def __eq__(self, other):
        return isinstance(other, Window) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Window({self.s})"

    @cached_property
    def quiver(self) -> DynkinQuiver:
        q = self.arq.quiver
        arrows = []
        for i, j in q.arrows:
            if self.s[j] == self.s[i]:
                arrows.append((i, j))
            elif self.s[j] == self.s[i] + 1:
                arrows.append((j, i))
            else:
                raise ValueError(f"slices {self.s} do not form a section of ZQ")
        return DynkinQuiver(q.diagram, arrows)

    def last(self, i: int) -> int:
        psi = self.arq.injective_orbit
        return self.s[psi[i]] + self.arq.top[i]

    def contains(self, pos: Pos) -> bool:
        ell, i = pos
        return self.s[i] <= ell <= self.last(i)

    @cached_property
    def positions(self) -> list[Pos]:
        out = [(ell, i) for i in self.s for ell in range(self.s[i], self.last(i) + 1)]
        return sorted(out, key=self.arq.time)

    def sources(self) -> list[int]:
        return [i for i in self.quiver.vertices if self.quiver.is_source(i)]

    def reflect(self, i: int, direction: str = "source") -> "Window":
        """sigma_i: at a source the window moves left, at a sink it moves right."""
        if direction == "source":
            if not self.quiver.is_source(i):
                raise ValueError(f"vertex {i} is not a source of {self.quiver}")
            step = -1
        elif direction == "sink":
            if not self.quiver.is_sink(i):
                raise ValueError(f"vertex {i} is not a sink of {self.quiver}")
            step = 1
        else:
            raise ValueError(f"direction must be 'source' or 'sink', got {direction!r}")
        s = dict(self.s)
        s[i] += step
        return Window(self.arq, s)

    def tau(self) -> "Window":
        return Window(self.arq, {i: v - 1 for i, v in self.s.items()})

    def normalized(self) -> "Window":
        """The same heart in the root category, shifted so that min slice is in (-h, 0]."""
        h = self.arq.coxeter_number
        shift = h * (-min(self.s.values()) // h)
        return Window(self.arq, {i: v + shift for i, v in self.s.items()})

    def dims(self) -> dict[Pos, tuple[int, ...]]:
        """Dimension vectors, as representations of Xi, of the window's objects."""
        xi = ArQuiver(self.quiver)
        out = {(self.s[i] + ell, i): xi.root[(ell, i)] for ell, i in xi.positions}
        if set(out) != set(self.positions):
            raise AssertionError(f"AR quiver of {self.quiver} does not fill {self}")
        return out


@dataclass(frozen=True)
class Placement:
    case: str          # "right": even part of X in the window, odd part to its left
    lift: int          # the heap sits at slices shifted by lift * h
    even: frozenset    # heap elements whose object lies in the window
    filter: int        # bitmask of P^even


def placement(heap: MinusculeHeap, window: Window) -> Placement:
    arq = window.arq
    h = arq.coxeter_number
    lo, hi = min(window.s.values()), max(window.s.values())
    for k in range(lo // h - 2, hi // h + 3):
        where = []
        for p in heap.positions:
            q = (p[0] + k * h, p[1])
            if window.contains(q):
                where.append(0)
            elif window.contains(arq.shift(q, -1)):
                where.append(1)
            elif window.contains(arq.shift(q, 1)):
                where.append(-1)
            else:
                where.append(None)
        if None in where:
            continue
        even = frozenset(x for x in range(heap.size) if where[x] == 0)
        if all(w in (0, -1) for w in where):
            return Placement("right", k, even, sum(1 << x for x in even))
        if all(w in (0, 1) for w in where):
            flip = ant(heap)
            return Placement("left", k, even, sum(1 << flip[x] for x in even))
    raise AssertionError(f"no lift of the heap fits around {window}")


def _window_events(heap, window, carriers: dict[Pos, int], descending: bool):
    order = sorted(window.positions, key=window.arq.time, reverse=descending)
    return [(p[1], carriers.get(p)) for p in order]


def _carriers(heap, window, place: Placement, part: str) -> dict[Pos, int]:
    arq = window.arq
    h = arq.coxeter_number
    out = {}
    for x, p in enumerate(heap.positions):
        q = (p[0] + place.lift * h, p[1])
        if part == "even" and x in place.even:
            out[q] = x
        elif part == "odd" and x not in place.even:
            sign = 1 if place.case == "right" else -1
            out[arq.shift(q, sign)] = x
    return out


def _plan(heap, window, place):
    """The two recurrences making up rho^Xi: (carriers, descending?, dual?, part)."""
    even = _carriers(heap, window, place, "even")
    odd = _carriers(heap, window, place, "odd")
    if place.case == "right":
        return [(even, True, False, "even"), (odd, False, True, "odd")]
    return [(even, False, True, "even"), (odd, True, False, "odd")]


def rho_window(heap: MinusculeHeap, window: Window, mults) -> Rpp:
    """rho^Xi of the object X of C_{Q,m} with the given multiplicities."""
    c = mult_vector(heap, mults)
    place = placement(heap, window)
    flip = ant(heap) if place.case == "left" else list(range(heap.size))
    values = [None] * heap.size
    for carriers, descending, dual, part in _plan(heap, window, place):
        events = _window_events(heap, window, carriers, descending)
        got = run_recurrence(heap, events, c, dual=dual)
        for x, v in got.items():
            values[flip[x]] = v if part == "even" else INF - v
    return Rpp(heap, values, None)


def window_inverse(heap: MinusculeHeap, window: Window, rpp: Rpp) -> list[int]:
    place = placement(heap, window)
    flip = ant(heap) if place.case == "left" else list(range(heap.size))
    mults = [0] * heap.size
    for carriers, descending, dual, part in _plan(heap, window, place):
        events = _window_events(heap, window, carriers, descending)
        values = {}
        for x in carriers.values():
            v = rpp.values[flip[x]]
            if (part == "even") == isinstance(v, Ext):
                raise ValueError(f"filling does not split along the window {window}")
            values[x] = v if part == "even" else -v.off
        mults_part = invert_recurrence(heap, events, values, dual=dual)
        for x, v in mults_part.items():
            mults[x] = v
    return mults


# -- split objects -------------------------------------------------------------

def canonical_window(heap: MinusculeHeap, filt: int) -> Window:
    """A heart whose finite region is exactly the order filter ``filt``."""
    if not heap.is_filter(filt):
        raise ValueError("expected an order filter of the heap")
    arq = heap.arq
    up = arq.up_closure([heap.positions[x] for x in heap.elements(filt)])
    hit = {heap.pos_index[p] for p in up if p in heap.pos_index}
    if hit != set(heap.elements(filt)):
        raise AssertionError("upward closure in the AR quiver leaks outside the filter")
    s = {}
    for i in arq.quiver.vertices:
        mine = [ell for ell, j in up if j == i]
        s[i] = min(mine) if mine else arq.top[i] + 1
    return Window(arq, s)


@dataclass
class SplitObject:
    heap: MinusculeHeap
    window: Window
    mults: list[int]

    @cached_property
    def place(self) -> Placement:
        return placement(self.heap, self.window)

    @property
    def filter(self) -> int:
        return self.place.filter

    @property
    def even(self) -> dict[str, int]:
        return {self.heap.ids[x]: self.mults[x] for x in sorted(self.place.even) if self.mults[x]}

    @property
    def odd(self) -> dict[str, int]:
        return {self.heap.ids[x]: self.mults[x] for x in range(self.heap.size)
                if x not in self.place.even and self.mults[x]}

    @classmethod
    def from_parts(cls, heap, filt: int, even: dict, odd: dict) -> "SplitObject":
        window = canonical_window(heap, filt)
        mults = [0] * heap.size
        for part, inside in ((even, True), (odd, False)):
            for key, c in part.items():
                x = heap.index[key]
                if bool(filt >> x & 1) != inside:
                    raise ValueError(f"summand {key} lies on the wrong side of the filter")
                mults[x] = int(c)
        return cls(heap, window, mults)


def rho_xi(split: SplitObject) -> Rpp:
    return rho_window(split.heap, split.window, split.mults)


def split_for_rpp(heap: MinusculeHeap, rpp: Rpp) -> SplitObject:
    filt = sum(1 << x for x, v in enumerate(rpp.values) if not isinstance(v, Ext))
    window = canonical_window(heap, filt)
    return SplitObject(heap, window, window_inverse(heap, window, rpp))


def reflect_filter(heap: MinusculeHeap, window: Window, i: int, direction: str = "source"):
    """Reflect the heart at i; returns the new window and its finite region."""
    new = window.reflect(i, direction)
    return new, placement(heap, new).filter


def reachable_windows(arq: ArQuiver) -> list[Window]:
    """Hearts reachable from Q by reflections at sources, up to tau^h."""
    start = Window.of_q(arq).normalized()
    seen = {start}
    todo = [start]
    while todo:
        w = todo.pop()
        for i in w.sources():
            nxt = w.reflect(i).normalized()
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return sorted(seen, key=Window.key)


__all__ = [
    "INF", "cofin", "rho", "rho_inverse", "linearize", "event_order", "run_recurrence",
    "invert_recurrence", "Window", "placement", "rho_window", "window_inverse", "SplitObject",
    "rho_xi", "split_for_rpp", "reflect_filter", "canonical_window", "reachable_windows",
]
