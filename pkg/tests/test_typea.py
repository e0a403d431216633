import itertools
from collections import Counter

import pytest
from conftest import make_heap

from minrpp import typea
from minrpp.bijection import rho
from minrpp.verify import rectangle_equality

HG_HEAP = ("A5", "1<2<3<4<5", 3)
RSK_HEAP = ("A5", "1>2>3<4<5", 3)
HG_MULTS = {"11100": 4, "01100": 3, "00110": 1, "01110": 1, "00111": 1, "11111": 2}
RSK_MULTS = {"11100": 4, "01100": 3, "01110": 1, "11111": 1, "00110": 1, "00111": 2}
HG_GRID = [[0, 2, 3], [2, 2, 3], [6, 8, 10]]
RSK_GRID = [[1, 1, 3], [1, 3, 4], [5, 8, 8]]


def test_orientation_strings():
    assert typea.hg_quiver_orient(5) == HG_HEAP[1]
    assert typea.rsk_quiver_orient(5, 3) == RSK_HEAP[1]


def test_rim_hooks_and_dimension_vectors():
    shape = (3, 3)
    assert typea.rimhook_dimvector(shape, (3, 3)) == (0, 0, 1, 0, 0)
    assert typea.rimhook_dimvector(shape, (1, 1)) == (1, 1, 1, 1, 1)
    for r, c in itertools.product(range(1, 4), repeat=2):
        assert typea.dimvector_rimhook(shape, typea.rimhook_dimvector(shape, (r, c))) == (r, c)
    with pytest.raises(ValueError, match="does not fit"):
        typea.rimhook_dimvector(shape, (4, 1))
    with pytest.raises(ValueError, match="through vertex"):
        typea.dimvector_rimhook(shape, (1, 1, 0, 0, 0))
    with pytest.raises(ValueError, match="0/1 vector"):
        typea.dimvector_rimhook(shape, (1, 2, 1, 0, 0))


def test_hooks_are_border_strips():
    # every hook is a connected border strip through the SE corner, of size given by its dimension vector
    for rows, cols in [(3, 3), (2, 4), (4, 2)]:
        for r, c in itertools.product(range(1, rows + 1), range(1, cols + 1)):
            size = sum(typea.rimhook_dimvector((rows, cols), (r, c)))
            assert size == (rows - r) + (cols - c) + 1


class TestReferenceGrids:
    def test_hillman_grassl_reference(self):
        h = make_heap(*HG_HEAP)
        grid = typea.heap_to_grid(rho(h, None, HG_MULTS), 3, "hg")
        assert grid == HG_GRID
        hooks = typea.hooks_of(h, [HG_MULTS.get(x, 0) for x in h.ids])
        assert typea.hillman_grassl((3, 3), hooks) == HG_GRID

    def test_rsk_reference(self):
        h = make_heap(*RSK_HEAP)
        grid = typea.heap_to_grid(rho(h, None, RSK_MULTS), 3, "rsk")
        assert grid == RSK_GRID
        hooks = typea.hooks_of(h, [RSK_MULTS.get(x, 0) for x in h.ids])
        assert typea.rsk_rect((3, 3), hooks) == RSK_GRID


def _macmahon(a, b, c):
    from fractions import Fraction

    out = Fraction(1)
    for i, j, k in itertools.product(range(1, a + 1), range(1, b + 1), range(1, c + 1)):
        out *= Fraction(i + j + k - 1, i + j + k - 2)
    return out


def _all_grids(rows, cols, top):
    for cells in itertools.product(range(top + 1), repeat=rows * cols):
        grid = [list(cells[r * cols:(r + 1) * cols]) for r in range(rows)]
        if typea.is_grid_rpp(grid):
            yield grid


@pytest.mark.parametrize("shape", [(2, 3), (3, 3), (3, 2)])
def test_hillman_grassl_bijective(shape):
    count = 0
    for grid in _all_grids(*shape, 2):
        hooks = typea.hillman_grassl_inverse(grid)
        assert typea.hillman_grassl(shape, hooks) == grid
        # weight: each hook adds its size to the total
        assert sum(grid[r][c] for r in range(shape[0]) for c in range(shape[1])) == sum(
            k * sum(typea.rimhook_dimvector(shape, hk)) for hk, k in hooks.items())
        count += 1
    assert count == _macmahon(*shape, 2)


@pytest.mark.parametrize("shape", [(2, 3), (3, 3), (3, 2)])
def test_rsk_bijective(shape):
    for grid in _all_grids(*shape, 2):
        assert typea.rsk_rect(shape, typea.rsk_rect_inverse(grid)) == grid


def test_forward_maps_produce_plane_partitions():
    for hooks in itertools.combinations_with_replacement(list(itertools.product(range(1, 4), repeat=2)), 3):
        for build in (typea.hillman_grassl, typea.rsk_rect):
            assert typea.is_grid_rpp(build((3, 3), Counter(hooks)))


def test_inverse_rejects_non_rpp():
    for inverse in (typea.hillman_grassl_inverse, typea.rsk_rect_inverse):
        with pytest.raises(ValueError, match="not a reverse plane partition"):
            inverse([[2, 1], [3, 3]])


@pytest.mark.parametrize("kind", ["hg", "rsk"])
def test_rho_matches_classical_on_0_1_inputs(kind):
    rep = rectangle_equality(kind, 3, 3)
    assert rep["cases"] == 512 and rep["ok"], rep["failures"]


@pytest.mark.parametrize("kind, rows, cols", [("hg", 2, 3), ("rsk", 3, 2), ("hg", 2, 2), ("rsk", 2, 4)])
def test_rho_matches_classical_on_other_rectangles(kind, rows, cols):
    assert rectangle_equality(kind, rows, cols)["ok"]


def test_heap_index_corners():
    assert typea.heap_index((0, 0, 1, 0, 0), 3, "hg") == (3, 3)
    assert typea.heap_index((1, 1, 1, 1, 1), 3, "hg") == (1, 1)
    assert typea.heap_index((1, 1, 1, 1, 1), 3, "rsk") == (1, 3)
    with pytest.raises(ValueError, match="orientation"):
        typea.heap_index((1, 1, 1), 2, "pak")


class TestCounterexample:
    """An orientation whose rho agrees with neither classical bijection."""

    MULTS = {"01100": 1, "01110": 1, "11111": 2, "00110": 2}

    @pytest.fixture
    def data(self):
        h = make_heap("A5", "1<2>3<4>5", 3)
        mults = [self.MULTS.get(x, 0) for x in h.ids]
        return h, rho(h, None, mults), typea.hooks_of(h, mults)

    def test_maximal_entry(self, data):
        h, r, _ = data
        top = [x for x in range(h.size) if not h.up[x]]
        assert len(top) == 1
        assert h.ids[top[0]] == "01110"
        assert r.values[top[0]] == 1

    def test_classical_maps_put_zero_on_top(self, data):
        _, _, hooks = data
        hg = typea.hillman_grassl((3, 3), hooks)
        rsk = typea.rsk_rect((3, 3), hooks)
        assert hg == [[0, 2, 2], [2, 2, 3], [2, 2, 4]]
        assert rsk == [[0, 0, 2], [0, 1, 5], [2, 4, 5]]
        assert hg[0][0] == rsk[0][0] == 0


def test_inverse_of_reference_grid():
    h = make_heap(*HG_HEAP)
    r = rho(h, None, HG_MULTS)
    from minrpp.bijection import rho_inverse

    assert dict((x, c) for x, c in zip(h.ids, rho_inverse(h, None, r)) if c) == HG_MULTS
    hooks = typea.hillman_grassl_inverse(HG_GRID)
    assert hooks == typea.hooks_of(h, [HG_MULTS.get(x, 0) for x in h.ids])


def test_small_hook_examples():
    assert typea.dimvector_rimhook((2, 4), (0, 0, 1, 1, 0)) == (2, 3)
    for build in (typea.hillman_grassl, typea.rsk_rect):
        assert build((3, 3), []) == typea.zero_grid((3, 3))
        assert build((3, 3), [(3, 3)]) == [[0, 0, 0], [0, 0, 0], [0, 0, 1]]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_copies_of_the_full_border_hook(k):
    h = make_heap(*RSK_HEAP)
    grid = typea.heap_to_grid(rho(h, None, {"11111": k}), 3, "rsk")
    assert typea.rsk_rect((3, 3), [(1, 1)] * k) == grid
    hg = make_heap(*HG_HEAP)
    assert typea.hillman_grassl((3, 3), [(1, 1)] * k) == typea.heap_to_grid(rho(hg, None, {"11111": k}), 3, "hg")
