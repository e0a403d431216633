"""Linear-algebra oracle: generic Jordan forms of nilpotent endomorphisms.

Everything is exact arithmetic over F_p, held in int64 numpy arrays.  With
p around 3e4 every intermediate product stays far below 2**63.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx
import numpy as np

from .dynkin import DynkinQuiver, reflect_root, sigma_vertex
from .jordan import as_partition, conjugate, dominance_leq

DEFAULT_PRIME = 32003
RETRY_PRIME = 1000003


def oracle_defaults(prime=None, samples=None, seed=None) -> tuple[int, int, int]:
    """Fill unset parameters from ORACLE_PRIME / ORACLE_SAMPLES / ORACLE_SEED."""
    prime = int(os.environ.get("ORACLE_PRIME", DEFAULT_PRIME)) if prime is None else prime
    samples = int(os.environ.get("ORACLE_SAMPLES", 8)) if samples is None else samples
    seed = int(os.environ.get("ORACLE_SEED", 0)) if seed is None else seed
    if samples < 1:
        raise ValueError(f"need at least one sample, got {samples}")
    return prime, samples, seed


# -- F_p linear algebra -----------------------------------------------------------

def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(a, p: int) -> int:
    if np.size(a) == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Columns spanning {x : a x = 0}."""
    a = np.asarray(a, dtype=np.int64)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    red, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for r, c in enumerate(pivots):
            basis[c, k] = -red[r, f] % p
    return basis


def matpow(a: np.ndarray, k: int, p: int) -> np.ndarray:
    out = np.eye(a.shape[0], dtype=np.int64)
    for _ in range(k):
        out = out @ a % p
    return out


def jordan_type(n: np.ndarray, p: int) -> tuple[int, ...]:
    """Jordan type of a nilpotent matrix from the ranks of its powers."""
    dim = n.shape[0]
    ranks = [dim]
    power = np.eye(dim, dtype=np.int64)
    while ranks[-1]:
        power = power @ n % p
        r = rank(power, p)
        if r == ranks[-1]:
            raise ValueError("matrix is not nilpotent")
        ranks.append(r)
    at_least = [a - b for a, b in zip(ranks, ranks[1:])]
    return conjugate(as_partition(at_least)) if at_least else ()


def quotient_jordan_type(n: np.ndarray, sub: np.ndarray, p: int) -> tuple[int, ...]:
    """Jordan type of n acting on V / span(columns of sub); sub must be n-stable."""
    dim = n.shape[0]
    base = rank(sub.T, p) if sub.size else 0
    ranks = []
    power = np.eye(dim, dtype=np.int64)
    while True:
        both = np.hstack([power, sub]) if sub.size else power
        ranks.append(rank(both.T, p) - base)
        if ranks[-1] == 0:
            break
        power = power @ n % p
        if len(ranks) > dim + 1:
            raise ValueError("matrix is not nilpotent on the quotient")
    at_least = [a - b for a, b in zip(ranks, ranks[1:])]
    return conjugate(as_partition(at_least)) if at_least else ()


# -- representations ------------------------------------------------------------------

@dataclass
class MatrixRep:
    quiver: DynkinQuiver
    dims: dict[int, int]
    maps: dict[tuple[int, int], np.ndarray]

    def __post_init__(self):
        for (s, t) in self.quiver.arrows:
            shape = self.maps[(s, t)].shape
            if shape != (self.dims[t], self.dims[s]):
                raise ValueError(f"map {s}->{t} has shape {shape}, expected {(self.dims[t], self.dims[s])}")

    def dimvector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.quiver.vertices)


def simple_rep(quiver: DynkinQuiver, i: int) -> MatrixRep:
    dims = {v: int(v == i) for v in quiver.vertices}
    maps = {(s, t): np.zeros((dims[t], dims[s]), dtype=np.int64) for s, t in quiver.arrows}
    return MatrixRep(quiver, dims, maps)


def _reflect_minus(rep: MatrixRep, k: int, target: DynkinQuiver, p: int) -> MatrixRep:
    """Apply the reflection functor at the source k of rep's quiver, landing in target."""
    outs = rep.quiver.successors(k)
    stacked = np.vstack([rep.maps[(k, j)] for j in outs])
    proj = nullspace(stacked.T, p).T  # rows kill the image of V_k
    dims = dict(rep.dims)
    dims[k] = proj.shape[0]
    maps = {}
    offset = 0
    block = {}
    for j in outs:
        block[j] = (offset, offset + rep.dims[j])
        offset += rep.dims[j]
    for s, t in target.arrows:
        if t == k:
            lo, hi = block[s]
            maps[(s, t)] = proj[:, lo:hi] % p
        else:
            maps[(s, t)] = rep.maps[(s, t)]
    return MatrixRep(target, dims, maps)


def indec_matrices(quiver: DynkinQuiver, root, p: int = DEFAULT_PRIME) -> MatrixRep:
    return _indec(quiver, tuple(root), p)


@lru_cache(maxsize=None)
def _indec(quiver: DynkinQuiver, root: tuple[int, ...], p: int) -> MatrixRep:
    if len(root) != quiver.diagram.rank or any(c < 0 for c in root) or not any(root):
        raise ValueError(f"{root} is not a positive root of {quiver.diagram.name}")
    steps = []
    q, beta = quiver, root
    limit = 4 * len(root) * (len(root) + 1)
    while True:
        for k in reversed(q.order):
            simple = tuple(int(v == k) for v in q.vertices)
            if beta == simple:
                rep = simple_rep(q, k)
                for prev, kk in reversed(steps):
                    rep = _reflect_minus(rep, kk, prev, p)
                if rep.dimvector() != root:
                    raise AssertionError(f"built {rep.dimvector()} instead of {root}")
                return rep
            steps.append((q, k))
            beta = reflect_root(q.diagram, beta, k)
            q = sigma_vertex(q, k)
            if any(c < 0 for c in beta) or len(steps) > limit:
                raise ValueError(f"{root} is not a positive root of {quiver.diagram.name}")


def hom_basis(x: MatrixRep, y: MatrixRep, p: int = DEFAULT_PRIME) -> list[dict[int, np.ndarray]]:
    verts = list(x.quiver.vertices)
    offsets, total = {}, 0
    for v in verts:
        offsets[v] = total
        total += y.dims[v] * x.dims[v]
    rows = []
    for s, t in x.quiver.arrows:
        eq = np.zeros((y.dims[t] * x.dims[s], total), dtype=np.int64)
        a, b = offsets[s], offsets[s] + y.dims[s] * x.dims[s]
        eq[:, a:b] += np.kron(y.maps[(s, t)], np.eye(x.dims[s], dtype=np.int64))
        a, b = offsets[t], offsets[t] + y.dims[t] * x.dims[t]
        eq[:, a:b] -= np.kron(np.eye(y.dims[t], dtype=np.int64), x.maps[(s, t)].T)
        rows.append(eq % p)
    system = np.vstack(rows) if rows else np.zeros((0, total), dtype=np.int64)
    basis = nullspace(system, p) if total else np.zeros((0, 0), dtype=np.int64)
    out = []
    for k in range(basis.shape[1]):
        vec = basis[:, k]
        out.append({
            v: vec[offsets[v]:offsets[v] + y.dims[v] * x.dims[v]].reshape(y.dims[v], x.dims[v])
            for v in verts
        })
    return out


def is_morphism(x: MatrixRep, y: MatrixRep, theta: dict, p: int) -> bool:
    return all(
        np.array_equal(y.maps[(s, t)] @ theta[s] % p, theta[t] @ x.maps[(s, t)] % p)
        for s, t in x.quiver.arrows
    )


# -- generic Jordan form ------------------------------------------------------------

@dataclass
class GenJF:
    partitions: tuple
    agree: bool
    prime: int
    samples: list = field(default_factory=list)


@dataclass
class NilSample:
    blocks: dict[int, np.ndarray]


def _summands(mults) -> list[tuple[int, ...]]:
    out = []
    for root, k in sorted(mults.items()):
        out += [tuple(root)] * int(k)
    return out


def direct_sum(quiver: DynkinQuiver, mults: dict, p: int = DEFAULT_PRIME) -> MatrixRep:
    """Block-diagonal sum, summands in the same order sample_nilpotent uses."""
    reps = [indec_matrices(quiver, u, p) for u in _summands(mults)]
    dims = {v: sum(r.dims[v] for r in reps) for v in quiver.vertices}
    maps = {}
    for s, t in quiver.arrows:
        block = np.zeros((dims[t], dims[s]), dtype=np.int64)
        rs = rt = 0
        for r in reps:
            block[rt:rt + r.dims[t], rs:rs + r.dims[s]] = r.maps[(s, t)]
            rs += r.dims[s]
            rt += r.dims[t]
        maps[(s, t)] = block
    return MatrixRep(quiver, dims, maps)


def sample_nilpotent(quiver: DynkinQuiver, mults: dict, p: int, rng: np.random.Generator) -> NilSample:
    """A random nilpotent endomorphism of the direct sum, vertex by vertex."""
    summands = _summands(mults)
    reps = [indec_matrices(quiver, u, p) for u in summands]
    homs = {}
    blocks = {}
    for v in quiver.vertices:
        sizes = [r.dims[v] for r in reps]
        starts = np.cumsum([0] + sizes)
        blocks[v] = np.zeros((starts[-1], starts[-1]), dtype=np.int64)
    for a, u in enumerate(summands):
        for b, w in enumerate(summands):
            if u == w:
                if a >= b:
                    continue
                c = int(rng.integers(p))
                part = {v: c * np.eye(reps[a].dims[v], dtype=np.int64) for v in quiver.vertices}
            else:
                if (w, u) not in homs:
                    homs[(w, u)] = hom_basis(reps[b], reps[a], p)
                basis = homs[(w, u)]
                if not basis:
                    continue
                coeffs = rng.integers(p, size=len(basis))
                part = {v: sum(int(c) * h[v] for c, h in zip(coeffs, basis)) % p for v in quiver.vertices}
            for v in quiver.vertices:
                ra = sum(r.dims[v] for r in reps[:a])
                rb = sum(r.dims[v] for r in reps[:b])
                blocks[v][ra:ra + reps[a].dims[v], rb:rb + reps[b].dims[v]] = part[v]
    return NilSample(blocks)


def _jf_tuple(quiver, sample: NilSample, p: int) -> tuple:
    return tuple(jordan_type(sample.blocks[v], p) if sample.blocks[v].size else () for v in quiver.vertices)


def _dominates(a: tuple, b: tuple) -> bool:
    return all(dominance_leq(y, x) for x, y in zip(a, b))


def gen_jf(quiver: DynkinQuiver, mults: dict, samples=None, prime=None, seed=None, retry=True) -> GenJF:
    """Dominance-maximal Jordan data over random nilpotent endomorphisms.

    ``mults`` maps dimension vectors to multiplicities.  If no sample
    dominates all others, the run is repeated once at a larger prime.
    """
    prime, samples, seed = oracle_defaults(prime, samples, seed)
    got = []
    for k in range(samples):
        rng = np.random.default_rng([seed, k])
        got.append(_jf_tuple(quiver, sample_nilpotent(quiver, mults, prime, rng), prime))
    best = [g for g in got if all(_dominates(g, h) for h in got)]
    if best:
        return GenJF(best[0], agree=len(set(got)) == 1, prime=prime, samples=got)
    if retry and prime != RETRY_PRIME:
        return gen_jf(quiver, mults, 2 * samples, RETRY_PRIME, seed, retry=False)
    raise RuntimeError(f"samples have no dominance maximum: {got}")


def _shift_matrix(dims: list[int]) -> np.ndarray:
    total = sum(dims)
    n = np.zeros((total, total), dtype=np.int64)
    start = 0
    for d in dims:
        for i in range(d - 1):
            n[start + i + 1, start + i] = 1
        start += d
    return n


def generic_coker_jf(a: int, b: int, c: int, p=None, seed=None) -> tuple[int, ...]:
    """Jordan type on the cokernel of a random map k[N]/N^b -> k[N]/N^a + k[N]/N^c."""
    if not a >= b >= c >= 0:
        raise ValueError(f"need a >= b >= c >= 0, got ({a}, {b}, {c})")
    p, _, seed = oracle_defaults(p, None, seed)
    rng = np.random.default_rng([seed, a, b, c])
    n = _shift_matrix([a, c])
    gen = np.zeros(a + c, dtype=np.int64)
    # the generator is killed by N^b, so in k[N]/N^a it lies in N^(a-b) k[N]
    gen[a - b:a] = rng.integers(p, size=b)
    gen[a:] = rng.integers(p, size=c)
    image = np.column_stack([matpow(n, k, p) @ gen % p for k in range(b)]) if b else np.zeros((a + c, 0), np.int64)
    return quotient_jordan_type(n, image, p)


# -- Greene-Kleitman in type A ---------------------------------------------------------

def chain_union(poset: nx.DiGraph, k: int) -> int:
    """Largest number of elements covered by k disjoint chains (min-cost flow)."""
    closure = nx.transitive_closure_dag(poset)
    g = nx.DiGraph()
    g.add_node("s", demand=-k)
    g.add_node("t", demand=k)
    g.add_edge("s", "t", capacity=k, weight=0)
    for v in poset.nodes:
        g.add_edge("s", ("in", v), capacity=1, weight=0)
        g.add_edge(("in", v), ("out", v), capacity=1, weight=-1)
        g.add_edge(("out", v), "t", capacity=1, weight=0)
    for u, v in closure.edges:
        g.add_edge(("out", u), ("in", v), capacity=1, weight=0)
    cost, _ = nx.network_simplex(g)
    return -cost


def gk_partition(poset: nx.DiGraph, max_size: int = 25) -> tuple[int, ...]:
    size = poset.number_of_nodes()
    if size > max_size:
        raise ValueError(f"poset has {size} elements, above the bound {max_size}")
    if not nx.is_directed_acyclic_graph(poset):
        raise ValueError("relation graph has a cycle")
    deltas = [0]
    while deltas[-1] < size:
        deltas.append(chain_union(poset, len(deltas)))
    return as_partition(b - a for a, b in zip(deltas, deltas[1:]))


def build_tilde_poset(heap, mults, i: int) -> nx.DiGraph:
    """Summands supported at i, each blown up into a chain of its multiplicity."""
    if heap.quiver.diagram.family != "A":
        raise ValueError(f"the chain-poset construction is for type A, got {heap.quiver.diagram.name}")
    from .bijection import mult_vector

    c = mult_vector(heap, mults)
    keep = [x for x in range(heap.size) if c[x] and heap.roots[x][i - 1]]
    g = nx.DiGraph()
    for x in keep:
        nodes = [(heap.ids[x], k) for k in range(c[x])]
        g.add_nodes_from(nodes)
        g.add_edges_from(zip(nodes, nodes[1:]))
    for x in keep:
        for y in keep:
            if heap.less(x, y):
                g.add_edge((heap.ids[x], c[x] - 1), (heap.ids[y], 0))
    return g
