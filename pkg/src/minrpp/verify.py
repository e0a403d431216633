"""Verification sweeps shared by the command line and the test suite.

Each function returns a JSON-ready dict with an ``ok`` flag.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter

from . import typea
from .bijection import (
    Window, canonical_window, placement, reachable_windows, rho, rho_inverse, rho_window,
)
from .dynkin import DynkinDiagram, DynkinQuiver
from .heap import MinusculeHeap, ant, iso_type, verify_heap
from .oracle import build_tilde_poset, gen_jf, gk_partition
from .rpp import (
    all_rpps, orbit_length, promotion, promotion_order, random_extended_rpp, toggle_fibre,
)


def axioms(heap: MinusculeHeap) -> dict:
    rep = verify_heap(heap)
    out = {"check": "axioms", "checks": dict(rep.checks), "failures": {k: [list(map(str, f)) for f in v]
                                                                       for k, v in rep.failures.items()}}
    try:
        ant(heap)
        out["checks"]["ant"] = True
    except AssertionError as err:
        out["checks"]["ant"] = False
        out["failures"]["ant"] = [str(err)]
    try:
        out["iso_type"] = iso_type(heap)
        out["checks"]["iso-type"] = True
    except AssertionError as err:
        out["checks"]["iso-type"] = False
        out["failures"]["iso-type"] = [str(err)]
    out["ok"] = all(out["checks"].values())
    return out


def periodicity(heap: MinusculeHeap, N=None, mode="exhaustive", count=500, seed=0) -> dict:
    h = heap.arq.coxeter_number
    order = promotion_order(heap, N, mode, count, seed)
    return {"check": "periodicity", "N": "extended" if N is None else N, "mode": mode,
            "coxeter_number": h, "order": order, "ok": h % order == 0}


def extended_order(heap: MinusculeHeap, count=200, seed=0) -> dict:
    """pro^h = id on sampled extended fillings, with rho(S_m) as a witness of order h."""
    h = heap.arq.coxeter_number
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        r = random_extended_rpp(heap, rng)
        cur = r
        for _ in range(h):
            cur = promotion(cur)
        bad += cur != r
    simple = "".join("1" if v == heap.m else "0" for v in heap.quiver.vertices)
    witness = orbit_length(rho(heap, None, {simple: 1}))
    return {"check": "extended-order", "coxeter_number": h, "samples": count, "failures": bad,
            "witness_orbit": witness, "ok": bad == 0 and witness == h}


def oracle(heap: MinusculeHeap, count=50, seed=0, samples=None, prime=None, max_mult=2) -> dict:
    rng = random.Random(seed)
    bad = []
    for k in range(count):
        mults = [rng.randint(0, max_mult) for _ in range(heap.size)]
        want = rho(heap, None, mults).partitions()
        got = gen_jf(heap.quiver, {heap.roots[x]: c for x, c in enumerate(mults) if c},
                     samples=samples, prime=prime, seed=seed * 1000 + k)
        if got.partitions != want:
            bad.append({"mults": mults, "oracle": got.partitions, "rho": want})
    return {"check": "oracle", "cases": count, "failures": bad, "ok": not bad}


def _rectangle(kind: str, rows: int, cols: int):
    n = rows + cols - 1
    d = DynkinDiagram("A", n)
    orient = typea.hg_quiver_orient(n) if kind == "hg" else typea.rsk_quiver_orient(n, cols)
    return MinusculeHeap(DynkinQuiver.from_orient(d, orient), cols)


def rectangle_equality(kind: str, rows=3, cols=3) -> dict:
    """rho against Hillman-Grassl or RSK on every 0/1 multiplicity vector."""
    heap = _rectangle(kind, rows, cols)
    build = typea.hillman_grassl if kind == "hg" else typea.rsk_rect
    bad = []
    for mults in itertools.product((0, 1), repeat=heap.size):
        grid = typea.heap_to_grid(rho(heap, None, list(mults)), cols, kind)
        if grid != build((rows, cols), typea.hooks_of(heap, mults)):
            bad.append(list(mults))
    return {"check": kind, "shape": [rows, cols], "cases": 2 ** heap.size, "failures": bad[:5],
            "ok": not bad}


def greene_kleitman(heap: MinusculeHeap, max_mult=2) -> dict:
    bad = []
    cases = 0
    for mults in itertools.product(range(max_mult + 1), repeat=heap.size):
        parts = rho(heap, None, list(mults)).partitions()
        for i in heap.quiver.vertices:
            cases += 1
            got = gk_partition(build_tilde_poset(heap, list(mults), i))
            if got != parts[i - 1]:
                bad.append({"mults": list(mults), "vertex": i, "gk": got, "rho": parts[i - 1]})
    return {"check": "gk", "cases": cases, "failures": bad[:5], "ok": not bad}


def _series(dims, n: int, degree: int) -> Counter:
    out = Counter({(0,) * n: 1})
    for d in dims:
        step = Counter()
        for mono, c in out.items():
            k = 0
            while True:
                e = tuple(a + k * b for a, b in zip(mono, d))
                if sum(e) > degree:
                    break
                step[e] += c
                k += 1
        out = step
    return out


def _enumerated(heap: MinusculeHeap, filt: int, degree: int) -> Counter:
    keep = heap.elements(filt)
    sub = heap.induced(keep)
    n = heap.quiver.diagram.rank
    out = Counter()
    for r in all_rpps(sub, degree):
        if sum(r.values) > degree:
            continue
        e = [0] * n
        for x, v in enumerate(r.values):
            e[heap.fibre[keep[x]] - 1] += v
        out[tuple(e)] += 1
    return out


def genfun(heap: MinusculeHeap, degree=8, filt=None) -> dict:
    """Fillings of an order filter against the product over its hearts' dimension vectors."""
    filt = heap.full_mask if filt is None else filt
    if not filt:
        return {"check": "genfun", "filter": [], "ok": True}
    window = canonical_window(heap, filt)
    place = placement(heap, window)
    h = heap.arq.coxeter_number
    dims = window.dims()
    factors = [dims[(heap.positions[x][0] + place.lift * h, heap.positions[x][1])]
               for x in heap.elements(filt)]
    left = _enumerated(heap, filt, degree)
    right = _series(factors, heap.quiver.diagram.rank, degree)
    return {"check": "genfun", "filter": [heap.ids[x] for x in heap.elements(filt)],
            "degree": degree, "monomials": len(right), "ok": left == right}


def togref(heap: MinusculeHeap, max_mult=1) -> dict:
    """Reflecting the heart at a source toggles the fibre, over every reachable heart."""
    windows = reachable_windows(heap.arq)
    filters = {placement(heap, w).filter for w in windows}
    bad = []
    cases = 0
    for w in windows:
        for i in w.sources():
            nxt = w.reflect(i)
            for mults in itertools.product(range(max_mult + 1), repeat=heap.size):
                cases += 1
                if rho_window(heap, nxt, list(mults)) != toggle_fibre(rho_window(heap, w, list(mults)), i):
                    bad.append({"window": w.key(), "vertex": i, "mults": list(mults)})
    # a full sweep of source reflections is tau, and its toggles are promotion
    sweep = Window.of_q(heap.arq)
    for i in heap.quiver.order:
        sweep = sweep.reflect(i)
    swept = sweep == Window.of_q(heap.arq).tau()
    for mults in itertools.product(range(max_mult + 1), repeat=heap.size):
        if rho_window(heap, sweep, list(mults)) != promotion(rho(heap, None, list(mults))):
            swept = False
    every_filter = filters == set(heap.filters())
    return {"check": "togref", "windows": len(windows), "cases": cases, "failures": bad[:5],
            "sweep_is_promotion": swept, "every_filter": every_filter,
            "ok": not bad and swept and every_filter}


def roundtrip(heap: MinusculeHeap, max_mult=2) -> dict:
    seen = {}
    bad = []
    for mults in itertools.product(range(max_mult + 1), repeat=heap.size):
        r = rho(heap, None, list(mults))
        if rho_inverse(heap, None, r) != list(mults):
            bad.append(list(mults))
        if r.values in seen:
            bad.append([list(mults), seen[r.values]])
        seen[r.values] = list(mults)
    return {"check": "roundtrip", "cases": len(seen), "failures": bad[:5], "ok": not bad}
