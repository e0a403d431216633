"""Partitions, dominance, interlacing and the diff/sigma_k rules."""

from __future__ import annotations

from dataclasses import dataclass

Partition = tuple[int, ...]


def as_partition(parts) -> Partition:
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not a partition")
    return parts


def from_multiset(parts) -> Partition:
    return tuple(sorted((p for p in parts if p), reverse=True))


def part(p: Partition, i: int) -> int:
    """The i-th part, 1-based, zero-padded."""
    return p[i - 1] if 0 < i <= len(p) else 0


def conjugate(p: Partition) -> Partition:
    return tuple(sum(1 for x in p if x > j) for j in range(p[0])) if p else ()


def dominance_leq(g: Partition, k: Partition) -> bool:
    if sum(g) != sum(k):
        raise ValueError(f"dominance needs equal sizes, got |{g}|={sum(g)} and |{k}|={sum(k)}")
    a = b = 0
    for i in range(1, max(len(g), len(k)) + 1):
        a += part(g, i)
        b += part(k, i)
        if a > b:
            return False
    return True


def partitions_of(n: int, cap: int | None = None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def _chain_ok(seq) -> bool:
    return all(a >= b for a, b in zip(seq, seq[1:]))


def _interlaced_nonneg(lam: Partition, mu: Partition, t: int) -> bool:
    span = len(lam) + len(mu) + t + 3
    seq = [part(mu, j) for j in range(1, t + 2)]
    for k in range(1, span):
        seq += [part(lam, k), part(mu, t + 2 * k), part(mu, t + 2 * k + 1)]
    return _chain_ok(seq)


def _interlaced_nonpos(lam: Partition, mu: Partition, t: int) -> bool:
    s = -t
    if any(part(lam, i) != part(mu, i) for i in range(1, s + 1)):
        return False
    span = len(lam) + len(mu) + 3
    seq = [part(mu, s + 1)]
    for k in range(1, span):
        seq += [part(lam, s + k), part(mu, s + 2 * k), part(mu, s + 2 * k + 1)]
    return _chain_ok(seq)


def is_interlaced(lam: Partition, mu: Partition, t: int) -> bool:
    if t > 0:
        return _interlaced_nonneg(lam, mu, t)
    if t < 0:
        return _interlaced_nonpos(lam, mu, t)
    a, b = _interlaced_nonneg(lam, mu, 0), _interlaced_nonpos(lam, mu, 0)
    if a != b:
        raise AssertionError(f"t=0 readings disagree for {lam}, {mu}")
    return a


@dataclass(frozen=True)
class Interlacing:
    values: frozenset
    degenerate: bool = False


def interlace_values(lam: Partition, mu: Partition) -> Interlacing:
    bound = len(lam) + len(mu) + 2
    valid = [t for t in range(-bound, bound + 1) if is_interlaced(lam, mu, t)]
    if valid and (valid[-1] == bound or valid[0] == -bound):
        nonneg = [t for t in valid if t >= 0]
        return Interlacing(frozenset(nonneg[:1] or valid[-1:]), True)
    return Interlacing(frozenset(valid))


def diff(mu: Partition, lam: Partition, t: int) -> Partition:
    if not is_interlaced(lam, mu, t):
        raise ValueError(f"lambda={lam} and mu={mu} are not {t}-interlaced")
    if t >= 0:
        head = [part(mu, j) for j in range(1, t + 1)]
        offset = t
    else:
        head = []
        offset = -t
    tail = []
    for k in range(1, len(lam) + len(mu) + 2):
        tail.append(part(mu, offset + 2 * k - 1) + part(mu, offset + 2 * k) - part(lam, (0 if t >= 0 else -t) + k))
    return as_partition(head + tail)


def preferred_t(lam: Partition, mu: Partition) -> int:
    found = interlace_values(lam, mu)
    if not found.values:
        raise ValueError(f"lambda={lam} and mu={mu} are not t-interlaced for any t")
    nonneg = sorted(t for t in found.values if t >= 0)
    return nonneg[0] if nonneg else max(found.values)


def sigma_k_tuple(nu, quiver, k: int):
    """Replace nu^k by diff(nu^adj(k), nu^k); k must be a source or a sink."""
    if quiver.is_source(k):
        nbrs = quiver.successors(k)
    elif quiver.is_sink(k):
        nbrs = quiver.predecessors(k)
    else:
        raise ValueError(f"vertex {k} is neither a source nor a sink")
    nu = [as_partition(p) for p in nu]
    lam = nu[k - 1]
    mu = from_multiset(x for j in nbrs for x in nu[j - 1])
    t = preferred_t(lam, mu)
    out = list(nu)
    out[k - 1] = diff(mu, lam, t)
    return tuple(out)


def fits_in(nu, heap, region: int | None = None):
    """Place nu^i down fibre i of the region, largest part lowest.

    Returns {element index: value}, or None when the result is not
    order-reversing.  Too many parts for a fibre raises ValueError.
    """
    region = heap.full_mask if region is None else region
    values = {}
    for v in heap.adjacency:
        chain = [x for x in heap.fibres.get(v, []) if region >> x & 1]
        parts = as_partition(nu[v - 1])
        if len(parts) > len(chain):
            raise ValueError(f"partition {parts} has more parts than fibre {v} has elements ({len(chain)})")
        for x, p in zip(chain, list(parts) + [0] * (len(chain) - len(parts))):
            values[x] = p
    for x in values:
        for y in heap.up[x]:
            if y in values and values[y] > values[x]:
                return None
    return values


def read_partitions(heap, values) -> tuple[Partition, ...]:
    """Fibre partitions of an all-finite filling."""
    out = []
    for v in sorted(heap.adjacency):
        out.append(from_multiset(values[x] for x in heap.fibres.get(v, [])))
    return tuple(out)
