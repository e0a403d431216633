import itertools
import random

import networkx as nx
import numpy as np
import pytest
from conftest import make_heap, make_quiver

from minrpp.dynkin import positive_roots
from minrpp.jordan import as_partition, dominance_leq
from minrpp.oracle import (
    DEFAULT_PRIME, MatrixRep, build_tilde_poset, chain_union, direct_sum, gen_jf,
    generic_coker_jf, gk_partition, hom_basis, indec_matrices, is_morphism, jordan_type,
    matpow, nullspace, oracle_defaults, quotient_jordan_type, rank, sample_nilpotent, simple_rep,
)

P = DEFAULT_PRIME


def test_rank_and_nullspace():
    a = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(a, P) == 2
    ns = nullspace(a, P)
    assert ns.shape == (3, 1)
    assert not (a @ ns % P).any()
    assert rank(np.zeros((0, 3), dtype=np.int64), P) == 0


def test_jordan_type_of_shift_blocks():
    n = np.zeros((6, 6), dtype=np.int64)
    for i in (1, 2, 4):
        n[i, i - 1] = 1
    assert jordan_type(n, P) == (3, 2, 1)
    assert jordan_type(np.zeros((2, 2), dtype=np.int64), P) == (1, 1)
    with pytest.raises(ValueError, match="not nilpotent"):
        jordan_type(np.eye(2, dtype=np.int64), P)


def _union(a, b):
    return tuple(sorted(a + b, reverse=True))


def _sum(a, b):
    return as_partition(sorted((x + y for x, y in itertools.zip_longest(a, b, fillvalue=0)), reverse=True))


def test_subspace_and_quotient_types_bracket_the_whole():
    # for an N-stable U: type(U) union type(V/U) <= type(V) <= type(U) + type(V/U)
    rng = np.random.default_rng(5)
    for _ in range(200):
        dim = int(rng.integers(2, 8))
        k = int(rng.integers(1, dim))
        n = np.triu(rng.integers(0, 3, size=(dim, dim)), 1).astype(np.int64)
        sub = np.eye(dim, dtype=np.int64)[:, :k]
        mu = jordan_type(n, P)
        lam = jordan_type(n[:k, :k], P)
        nu = quotient_jordan_type(n, sub, P)
        assert sum(lam) + sum(nu) == dim
        assert dominance_leq(_union(lam, nu), mu)
        assert dominance_leq(mu, _sum(lam, nu))


def test_matrix_rep_shape_check():
    q = make_quiver("A2", "1>2")
    with pytest.raises(ValueError, match="shape"):
        MatrixRep(q, {1: 1, 2: 1}, {(1, 2): np.zeros((2, 1), dtype=np.int64)})


class TestHoms:
    @pytest.fixture
    def q(self):
        return make_quiver("A3", "1>2<3")

    def test_projective_to_simples(self, q):
        p1 = indec_matrices(q, (1, 1, 0))
        assert len(hom_basis(p1, simple_rep(q, 1))) == 1
        assert len(hom_basis(p1, simple_rep(q, 2))) == 0
        assert len(hom_basis(simple_rep(q, 2), p1)) == 1

    def test_basis_elements_are_morphisms(self, q):
        x = direct_sum(q, {(1, 1, 0): 1, (0, 1, 1): 2})
        for theta in hom_basis(x, x):
            assert is_morphism(x, x, theta, P)

    @pytest.mark.parametrize("name", ["D4", "E6", "E8"])
    def test_indecomposables_are_bricks(self, name):
        q = make_quiver(name)
        for root in positive_roots(q.diagram):
            rep = indec_matrices(q, root)
            assert rep.dimvector() == tuple(root)
            assert len(hom_basis(rep, rep)) == 1

    def test_non_roots_are_rejected(self, q):
        with pytest.raises(ValueError, match="not a positive root"):
            indec_matrices(q, (1, 0, 1))
        with pytest.raises(ValueError, match="not a positive root"):
            indec_matrices(q, (0, 0, 0))


class TestGenericJordanForm:
    @pytest.fixture
    def q(self):
        return make_quiver("A3", "1>2<3")

    @pytest.mark.parametrize("a, b, c, d", [(1, 1, 1, 0), (2, 0, 0, 1), (0, 2, 1, 1), (3, 1, 2, 2)])
    def test_closed_form(self, q, a, b, c, d):
        mults = {(0, 1, 0): a, (0, 1, 1): b, (1, 1, 0): c, (1, 1, 1): d}
        got = gen_jf(q, {k: v for k, v in mults.items() if v}, samples=4, seed=1)
        want = ((c + d,), (max(b, c) + a + d, min(b, c)), (b + d,))
        assert got.partitions == tuple(as_partition(p) for p in want)

    def test_samples_are_nilpotent_endomorphisms(self):
        q = make_quiver("D4")
        mults = {(1, 1, 0, 0): 2, (1, 1, 1, 1): 1, (1, 2, 1, 1): 1}
        rep = direct_sum(q, mults)
        rng = np.random.default_rng(0)
        for _ in range(5):
            s = sample_nilpotent(q, mults, P, rng)
            assert is_morphism(rep, rep, s.blocks, P)
            for v, b in s.blocks.items():
                assert not matpow(b, b.shape[0], P).any()

    def test_maximum_dominates_every_sample(self):
        q = make_quiver("A4", "1<2>3<4")
        res = gen_jf(q, {(0, 1, 1, 0): 2, (1, 1, 1, 1): 1, (0, 1, 0, 0): 1}, samples=6)
        for s in res.samples:
            assert all(dominance_leq(y, x) for x, y in zip(res.partitions, s))
        assert res.prime == P

    def test_environment_defaults(self, monkeypatch):
        monkeypatch.setenv("ORACLE_PRIME", "101")
        monkeypatch.setenv("ORACLE_SAMPLES", "3")
        assert oracle_defaults() == (101, 3, 0)
        with pytest.raises(ValueError, match="at least one sample"):
            oracle_defaults(samples=0)


@pytest.mark.parametrize("a, b, c", [(a, b, c) for a in range(7) for b in range(a + 1) for c in range(b + 1)])
def test_generic_cokernel_is_one_block(a, b, c):
    assert generic_coker_jf(a, b, c) == as_partition([a + c - b])


def test_cokernel_argument_order():
    with pytest.raises(ValueError, match="a >= b >= c"):
        generic_coker_jf(1, 2, 0)


# -- Greene-Kleitman ------------------------------------------------------------------

def _width(closure, subset):
    for size in range(len(subset), 0, -1):
        for s in itertools.combinations(subset, size):
            if not any(closure.has_edge(x, y) for x in s for y in s):
                return size
    return 0


def _brute_chain_union(poset, k):
    # a set is a union of k chains iff its widest antichain has at most k elements
    closure = nx.transitive_closure_dag(poset)
    nodes = list(poset.nodes)
    return max(len(s) for r in range(len(nodes) + 1) for s in itertools.combinations(nodes, r)
               if _width(closure, s) <= k)


def _random_poset(rng, n):
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3)
    return g


def test_chain_union_against_brute_force():
    rng = random.Random(2)
    for _ in range(40):
        g = _random_poset(rng, rng.randint(1, 7))
        for k in range(1, 4):
            assert chain_union(g, k) == _brute_chain_union(g, k)


def test_chain_and_antichain():
    assert gk_partition(nx.path_graph(5, create_using=nx.DiGraph)) == (5,)
    g = nx.DiGraph()
    g.add_nodes_from(range(4))
    assert gk_partition(g) == (1, 1, 1, 1)


def test_gk_rejects_bad_posets():
    with pytest.raises(ValueError, match="cycle"):
        gk_partition(nx.cycle_graph(3, create_using=nx.DiGraph))
    with pytest.raises(ValueError, match="above the bound"):
        gk_partition(nx.path_graph(30, create_using=nx.DiGraph))


def test_tilde_poset_is_type_a_only():
    with pytest.raises(ValueError, match="type A"):
        build_tilde_poset(make_heap("D4", None, 1), [1] * 6, 1)


def test_tilde_poset_sizes():
    h = make_heap("A3", "1>2<3", 2)
    mults = [2, 0, 1, 3]
    g = build_tilde_poset(h, mults, 2)
    assert g.number_of_nodes() == 6
    assert nx.is_directed_acyclic_graph(g)


def test_hom_on_two_vertices():
    q = make_quiver("A2", "1>2")
    p1 = indec_matrices(q, (1, 1))
    assert len(hom_basis(simple_rep(q, 1), simple_rep(q, 1))) == 1
    # Hom(P_1, M) has the dimension of M at vertex 1
    assert len(hom_basis(p1, simple_rep(q, 1))) == 1
    assert len(hom_basis(p1, simple_rep(q, 2))) == 0


def test_interval_module_maps():
    q = make_quiver("A4", "1>2<3<4")
    rep = indec_matrices(q, (0, 1, 1, 0))
    for (s, t), mat in rep.maps.items():
        if rep.dims[s] and rep.dims[t]:
            assert mat.shape == (1, 1) and mat[0, 0] % P != 0
        else:
            assert mat.size == 0


def test_simple_alone_has_one_block():
    q = make_quiver("A3", "1>2<3")
    assert gen_jf(q, {(0, 1, 0): 1}).partitions == ((), (1,), ())


def test_closed_form_instance():
    q = make_quiver("A3", "1>2<3")
    got = gen_jf(q, {(0, 1, 0): 1, (0, 1, 1): 2, (1, 1, 1): 3})
    assert got.partitions == ((3,), (6,), (5,))


def test_tilde_poset_examples():
    from minrpp.bijection import rho

    h = make_heap("A3", "1>2<3", 2)
    mults = [{"010": 1, "011": 1, "110": 1}.get(x, 0) for x in h.ids]
    assert gk_partition(build_tilde_poset(h, mults, 2)) == (2, 1)
    assert build_tilde_poset(h, [0] * 4, 2).number_of_nodes() == 0
    chain = build_tilde_poset(h, [3 if x == "011" else 0 for x in h.ids], 2)
    assert gk_partition(chain) == (3,)

    big = make_heap("A5", "1<2<3<4<5", 3)
    hg_mults = {"11100": 4, "01100": 3, "00110": 1, "01110": 1, "00111": 1, "11111": 2}
    mults = [hg_mults.get(x, 0) for x in big.ids]
    poset = build_tilde_poset(big, mults, 3)
    assert poset.number_of_nodes() == 12
    assert gk_partition(poset) == rho(big, None, mults).partitions()[2]
