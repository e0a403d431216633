"""Reverse plane partitions on heaps and their toggle dynamics.

Values are plain ints, or ``Ext`` for the entries infinity - k.  A filling is
stored as a tuple indexed by heap element.
"""

from __future__ import annotations

import math
import random
from functools import total_ordering


@total_ordering
class Ext:
    """The value ``inf * infinity + off``; only inf == 1 and off <= 0 is a valid entry."""

    __slots__ = ("inf", "off")

    def __init__(self, inf: int, off: int):
        self.inf = inf
        self.off = off

    def key(self) -> tuple[int, int]:
        return (self.inf, self.off)

    def __eq__(self, other):
        return _parts(other) == self.key() if isinstance(other, (int, Ext)) else NotImplemented

    def __lt__(self, other):
        return self.key() < _parts(other) if isinstance(other, (int, Ext)) else NotImplemented

    def __hash__(self):
        return hash(self.key())

    def __add__(self, other):
        a, b = _parts(other)
        return make_value(self.inf + a, self.off + b)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = _parts(other)
        return make_value(self.inf - a, self.off - b)

    def __rsub__(self, other):
        a, b = _parts(other)
        return make_value(a - self.inf, b - self.off)

    def __repr__(self):
        if self.inf == 1:
            return "inf" if self.off == 0 else f"inf-{-self.off}"
        return f"Ext({self.inf}, {self.off})"


def _parts(v) -> tuple[int, int]:
    return v.key() if isinstance(v, Ext) else (0, v)


def make_value(inf: int, off: int):
    return off if inf == 0 else Ext(inf, off)


INF = Ext(1, 0)


def cofin(k: int) -> Ext:
    if k < 0:
        raise ValueError(f"infinity - k needs k >= 0, got {k}")
    return Ext(1, -k)


def is_cofinite(v) -> bool:
    return isinstance(v, Ext)


def check_entry(v) -> None:
    inf, off = _parts(v)
    if not ((inf == 0 and off >= 0) or (inf == 1 and off <= 0)):
        raise ValueError(f"{v!r} is not an entry of N or infinity - N")


def value_to_json(v):
    return {"cofin": -v.off} if isinstance(v, Ext) else v


def value_from_json(v):
    if isinstance(v, dict):
        return cofin(int(v["cofin"]))
    if isinstance(v, str) and v.startswith("inf"):
        return cofin(int(v[4:] or 0)) if v != "inf" else INF
    return int(v)


class Rpp:
    """An order-reversing filling of a heap; ``N`` is None for extended entries."""

    __slots__ = ("heap", "values", "N")

    def __init__(self, heap, values, N=None, check=True):
        self.heap = heap
        if isinstance(values, dict):
            values = [values[x] if x in values else values[heap.ids[x]] for x in range(heap.size)]
        self.values = tuple(values)
        self.N = N
        if check:
            self.validate()

    def validate(self) -> None:
        if len(self.values) != self.heap.size:
            raise ValueError(f"expected {self.heap.size} values, got {len(self.values)}")
        for x, v in enumerate(self.values):
            if self.N is None:
                check_entry(v)
            elif not (isinstance(v, int) and 0 <= v <= self.N):
                raise ValueError(f"value {v!r} at {self.heap.ids[x]} is outside [0, {self.N}]")
            for y in self.heap.up[x]:
                if self.values[y] > v:
                    raise ValueError(
                        f"not order-reversing: {self.heap.ids[x]}={v!r} < {self.heap.ids[y]}={self.values[y]!r}"
                    )

    def __getitem__(self, key):
        return self.values[self.heap.index[key] if isinstance(key, str) else key]

    def __eq__(self, other):
        return isinstance(other, Rpp) and self.values == other.values and self.N == other.N

    def __hash__(self):
        return hash((self.values, self.N))

    def as_dict(self) -> dict:
        return {self.heap.ids[x]: v for x, v in enumerate(self.values)}

    def partitions(self):
        from .jordan import from_multiset

        return tuple(from_multiset(self.values[x] for x in self.heap.fibres.get(v, []))
                     for v in sorted(self.heap.adjacency))

    def to_json(self) -> dict:
        return {
            "heap": self.heap.to_json(),
            "N": "extended" if self.N is None else self.N,
            "values": {self.heap.ids[x]: value_to_json(v) for x, v in enumerate(self.values)},
        }

    @classmethod
    def from_json(cls, heap, data) -> "Rpp":
        N = data.get("N", "extended")
        N = None if N == "extended" else int(N)
        vals = {k: value_from_json(v) for k, v in data["values"].items()}
        missing = set(heap.ids) - set(vals)
        if missing:
            raise ValueError(f"filling misses elements {sorted(missing)}")
        return cls(heap, [vals[i] for i in heap.ids], N)

    def __repr__(self):
        return f"Rpp({self.as_dict()}, N={self.N})"


def _toggled(heap, values: list, x: int, top) -> object:
    ups = [values[y] for y in heap.up[x]]
    downs = [values[y] for y in heap.down[x]]
    hi = max(ups) if ups else 0
    lo = min(downs) if downs else top
    if top is not None and not isinstance(top, Ext):
        return hi + lo - values[x]
    new = hi + lo - values[x]
    check_entry(new)
    return new


def _top(rpp: Rpp):
    return INF if rpp.N is None else rpp.N


def toggle(rpp: Rpp, x) -> Rpp:
    heap = rpp.heap
    x = heap.index[x] if isinstance(x, str) else x
    values = list(rpp.values)
    values[x] = _toggled(heap, values, x, _top(rpp))
    return Rpp(heap, values, rpp.N, check=False)


def toggle_fibre(rpp: Rpp, i: int, reverse: bool = False) -> Rpp:
    heap = rpp.heap
    values = list(rpp.values)
    chain = heap.fibres.get(i, [])
    for x in (reversed(chain) if reverse else chain):
        values[x] = _toggled(heap, values, x, _top(rpp))
    return Rpp(heap, values, rpp.N, check=False)


def vertex_order(heap) -> tuple[int, ...]:
    q = getattr(heap, "quiver", None)
    return q.order if q is not None else tuple(sorted(heap.adjacency))


def promotion(rpp: Rpp, order=None) -> Rpp:
    order = vertex_order(rpp.heap) if order is None else order
    heap = rpp.heap
    values = list(rpp.values)
    top = _top(rpp)
    for i in order:
        for x in heap.fibres.get(i, []):
            values[x] = _toggled(heap, values, x, top)
    return Rpp(heap, values, rpp.N, check=False)


def orbit_length(rpp: Rpp, limit: int = 10_000) -> int:
    cur = promotion(rpp)
    k = 1
    while cur.values != rpp.values:
        cur = promotion(cur)
        k += 1
        if k > limit:
            raise RuntimeError(f"promotion orbit longer than {limit}")
    return k


def all_rpps(heap, N: int):
    """Every filling with entries in [0, N]."""
    order = list(reversed(heap.linear))
    values = [0] * heap.size

    def rec(k):
        if k == len(order):
            yield Rpp(heap, values, N, check=False)
            return
        x = order[k]
        floor = max((values[y] for y in heap.up[x]), default=0)
        for v in range(floor, N + 1):
            values[x] = v
            yield from rec(k + 1)

    yield from rec(0)


def all_extended_rpps(heap, bound: int):
    """Every extended filling with entries in [0, bound] or infinity - [0, bound]."""
    ladder = list(range(bound + 1)) + [cofin(k) for k in range(bound, -1, -1)]
    order = list(reversed(heap.linear))
    slot = [0] * heap.size

    def rec(k):
        if k == len(order):
            yield Rpp(heap, [ladder[s] for s in slot], None, check=False)
            return
        x = order[k]
        floor = max((slot[y] for y in heap.up[x]), default=0)
        for s in range(floor, len(ladder)):
            slot[x] = s
            yield from rec(k + 1)

    yield from rec(0)


def random_rpp(heap, N: int, rng: random.Random) -> Rpp:
    values = [rng.randint(0, N) for _ in range(heap.size)]
    for x in reversed(heap.linear):
        values[x] = max([values[x]] + [values[y] for y in heap.up[x]])
    return Rpp(heap, values, N)


def random_extended_rpp(heap, rng: random.Random, spread: int = 6) -> Rpp:
    seed = sum(1 << x for x in range(heap.size) if rng.random() < 0.5)
    finite = heap.up_closure(seed)
    values = [0] * heap.size
    for x in reversed(heap.linear):
        if finite >> x & 1:
            values[x] = max([rng.randint(0, spread)] + [values[y] for y in heap.up[x]])
    offs = [0] * heap.size
    for x in heap.linear:
        if not finite >> x & 1:
            offs[x] = max([rng.randint(0, spread)] + [offs[y] for y in heap.down[x]])
            values[x] = cofin(offs[x])
    return Rpp(heap, values, None)


def promotion_order(heap, N=None, mode="exhaustive", count=500, seed=0) -> int:
    """Least k with pro^k = id over the tested fillings (lcm of orbit sizes)."""
    if mode == "exhaustive":
        if N is None:
            raise ValueError("exhaustive mode needs a bound N")
        samples = all_rpps(heap, N)
    elif mode == "sampled":
        rng = random.Random(seed)
        if N is None:
            samples = (random_extended_rpp(heap, rng) for _ in range(count))
        else:
            samples = (random_rpp(heap, N, rng) for _ in range(count))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    order = 1
    for r in samples:
        order = math.lcm(order, orbit_length(r))
    return order


def restrict_infinity(rpp: Rpp, N: int) -> Rpp:
    values = []
    for v in rpp.values:
        if isinstance(v, Ext):
            v = N + v.off
        if not 0 <= v <= N:
            raise ValueError(f"N={N} is not close enough to infinity for {rpp}")
        values.append(v)
    try:
        return Rpp(rpp.heap, values, N)
    except ValueError as err:
        raise ValueError(f"N={N} is not close enough to infinity: {err}") from None
