from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hadamard_delta.errors import (
    IndexOutOfRange,
    LevelMismatch,
    NotInCell,
    ParameterOutOfRange,
    TargetMismatch,
)
from hadamard_delta.hadamard import hadamard
from hadamard_delta.realization import (
    AffineDecomposition,
    BaryPoint,
    PrismCell,
    PrismPoint,
    affine_image,
    cell_decompose,
    cell_membership,
    compare_on_grid,
    contraction_value,
    cover_index,
    homotopy_point,
    homotopy_point_by_pushforward,
    overlap_consistency,
    prism_grid,
    prism_triangulation,
    realize_map,
    s_coord,
    simplex_grid,
    standard_contraction,
    step_index,
    triangulation_vertices,
    vertex,
)
from hadamard_delta.simplex import compose, constant_map, enumerate_maps, identity, make_map

M = make_map
HALF = F(1, 2)


def bp(*xs):
    return BaryPoint(tuple(F(x) for x in xs))


def pp(u, t):
    return PrismPoint(u, F(t))


# ---------------------------------------------------------------------------
# independent oracles


def solve(rows, rhs):
    """Gauss-Jordan over Fractions; rows must be square and nonsingular."""
    n = len(rows)
    a = [list(map(F, r)) + [F(b)] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def oracle_weights(m, k, p):
    """Barycentric weights of p with respect to the vertices of S_k."""
    verts = PrismCell(m, k).vertices
    rows = []
    for i in range(m + 1):
        rows.append([1 if vi == i else 0 for vi, _ in verts])
    rows.append([vt for _, vt in verts])
    return solve(rows, list(p.base.coords) + [p.t])


def oracle_affine(alpha, m, k, p):
    """Convex combination of vertex values: bottom to vertex 0, (e_i,1) to alpha(i)."""
    out = [F(0)] * (alpha.target + 1)
    for w, (i, t) in zip(oracle_weights(m, k, p), PrismCell(m, k).vertices):
        out[alpha(i) if t == 1 else 0] += w
    return BaryPoint(tuple(out))


def oracle_pushforward(alpha, u):
    return BaryPoint(tuple(
        sum((u[i] for i in range(alpha.source + 1) if alpha(i) == j), F(0))
        for j in range(alpha.target + 1)
    ))


# ---------------------------------------------------------------------------
# examples


def test_bary_point_invariants():
    assert bp(HALF, HALF).level == 1
    with pytest.raises(ParameterOutOfRange):
        bp(F(2, 3), F(2, 3))
    with pytest.raises(ParameterOutOfRange):
        bp(F(3, 2), F(-1, 2))
    with pytest.raises(ParameterOutOfRange):
        pp(bp(1), F(3, 2))
    assert bp(F(2, 4), F(1, 2)).coords == (HALF, HALF)


def test_realize_map_examples():
    u = bp(F(1, 3), F(1, 3), F(1, 3))
    assert realize_map(identity(2), u) == u
    assert realize_map(M(2, 1, [0, 0, 1]), u) == bp(F(2, 3), F(1, 3))
    assert realize_map(constant_map(2, 3, 0), u) == vertex(3, 0)
    with pytest.raises(LevelMismatch):
        realize_map(identity(1), u)


def test_step_index_examples():
    assert step_index(M(2, 1, [0, 0, 1])) == 1
    assert step_index(M(1, 1, [1, 1])) == -1
    assert step_index(M(1, 1, [0, 0])) == 1
    with pytest.raises(TargetMismatch):
        step_index(M(1, 2, [0, 2]))


def test_s_coord_examples():
    u = bp(HALF, HALF)
    assert s_coord(M(1, 1, [0, 1]), u) == HALF
    assert s_coord(M(1, 1, [0, 0]), u) == 0
    assert s_coord(M(1, 1, [1, 1]), u) == 1
    with pytest.raises(LevelMismatch):
        s_coord(M(2, 1, [0, 0, 1]), u)


def test_homotopy_point_examples():
    u = bp(HALF, HALF)
    assert homotopy_point(identity(1), M(1, 1, [0, 1]), u) == u
    for alpha in enumerate_maps(2, 2):
        w = bp(F(1, 6), F(1, 3), HALF)
        assert homotopy_point(alpha, constant_map(2, 1, 0), w) == vertex(2, 0)
        assert homotopy_point(alpha, constant_map(2, 1, 1), w) == realize_map(alpha, w)
    with pytest.raises(LevelMismatch):
        homotopy_point(identity(2), M(1, 1, [0, 1]), u)


def test_cell_membership_examples():
    assert cell_membership(1, 0, pp(bp(HALF, HALF), HALF))
    assert not cell_membership(1, 0, pp(bp(HALF, HALF), F(1, 4)))
    assert cell_membership(1, 0, pp(vertex(1, 0), 0))
    with pytest.raises(IndexOutOfRange):
        cell_membership(1, 2, pp(vertex(1, 0), 0))
    with pytest.raises(LevelMismatch):
        cell_membership(2, 0, pp(vertex(1, 0), 0))


def test_cover_index_examples():
    third = F(1, 3)
    assert cover_index(pp(bp(third, third, third), HALF)) == {1}
    for u in simplex_grid(2, 3):
        assert 2 in cover_index(pp(u, 0))
        assert 0 in cover_index(pp(u, 1))


def test_cell_decompose_examples():
    d = cell_decompose(1, 0, pp(bp(HALF, HALF), HALF))
    assert d.a == (HALF,) and d.b == (0, HALF)
    m = 2
    for k in range(m + 1):
        d = cell_decompose(m, k, pp(vertex(m, k), 0))
        assert d.a[k] == 1 and sum(d.a) + sum(d.b) == 1 and sum(d.b) == 0
        d = cell_decompose(m, k, pp(vertex(m, k), 1))
        assert d.b[0] == 1 and sum(d.a) == 0
    with pytest.raises(NotInCell):
        cell_decompose(1, 0, pp(bp(HALF, HALF), F(1, 4)))


def test_affine_image_examples():
    d = AffineDecomposition(0, (HALF,), (F(0), HALF))
    assert affine_image(identity(1), d) == bp(HALF, HALF)
    alpha = M(2, 3, [1, 2, 3])
    d0 = AffineDecomposition(2, (F(1, 4), F(1, 4), HALF), (F(0),))
    assert affine_image(alpha, d0) == vertex(3, 0)
    for i in range(3):
        a = tuple(F(0) for _ in range(i + 1))
        b = tuple(F(1) if j == 0 else F(0) for j in range(3 - i))
        assert affine_image(alpha, AffineDecomposition(i, a, b)) == vertex(3, alpha(i))
    with pytest.raises(LevelMismatch):
        affine_image(identity(1), d0)


def test_decomposition_shape_checks():
    with pytest.raises(LevelMismatch):
        AffineDecomposition(1, (F(1),), (F(0),))
    with pytest.raises(ParameterOutOfRange):
        AffineDecomposition(0, (HALF,), (HALF, HALF))


def test_standard_contraction_examples():
    w = bp(HALF, HALF)
    assert standard_contraction(w, 1) == w
    assert standard_contraction(w, 0) == vertex(1, 0)
    assert standard_contraction(w, HALF) == bp(F(3, 4), F(1, 4))
    with pytest.raises(ParameterOutOfRange):
        standard_contraction(w, F(5, 4))


def test_prism_triangulation_examples():
    (a0, b0), (a1, b1) = prism_triangulation(1)
    assert (a0.values, b0.values) == ((0, 0, 1), (0, 1, 1))
    assert (a1.values, b1.values) == ((0, 1, 1), (0, 0, 1))
    assert triangulation_vertices(1, 0) == [(0, 0), (0, 1), (1, 1)]
    assert triangulation_vertices(1, 1) == [(0, 0), (1, 0), (1, 1)]
    assert triangulation_vertices(0, 0) == [(0, 0), (0, 1)]


def test_triangulation_matches_cells():
    for m in range(5):
        for k, (a, b) in enumerate(prism_triangulation(m)):
            assert step_index(b) == k
            assert triangulation_vertices(m, k) == PrismCell(m, k).vertices


def test_probe_example():
    rep = compare_on_grid(1, 1, identity(1), 2)
    assert rep.max_deviation == F(1, 4)
    assert rep.witness == pp(bp(HALF, HALF), HALF)
    assert rep.witness_affine == bp(HALF, HALF)
    assert rep.witness_contraction == bp(F(3, 4), F(1, 4))
    assert rep.vertex_agreement and rep.slice_agreement


def test_probe_degenerate_cases():
    assert compare_on_grid(1, 1, M(1, 1, [0, 0]), 2).max_deviation == 0
    for m, n in product(range(3), repeat=2):
        for alpha in enumerate_maps(m, n):
            rep = compare_on_grid(n, m, alpha, 1)
            assert rep.max_deviation == 0 and rep.points == (m + 1) * 2


def test_probe_rejects_wrong_shape():
    with pytest.raises(LevelMismatch):
        compare_on_grid(2, 1, identity(1), 2)


def test_grid_contents():
    assert len(simplex_grid(2, 4)) == 15
    grid = prism_grid(2, 3)
    assert pp(bp(F(1, 3), F(1, 3), F(1, 3)), 0) in grid
    assert pp(bp(F(1, 3), F(1, 3), F(1, 3)), 1) in grid
    # barycenter is added even when the lattice misses it
    assert pp(bp(F(1, 3), F(1, 3), F(1, 3)), HALF) in prism_grid(2, 2)
    assert len(set(grid)) == len(grid)
    with pytest.raises(ParameterOutOfRange):
        prism_grid(1, 0)


# ---------------------------------------------------------------------------
# oracles against the closed forms


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_decompose_matches_linear_solve(m):
    for p in prism_grid(m, 3):
        for k in cover_index(p):
            d = cell_decompose(m, k, p)
            assert list(d.a) + list(d.b[1:]) == oracle_weights(m, k, p)[:k + 1] + oracle_weights(m, k, p)[k + 2:]
            assert list(d.a) + list(d.b) == oracle_weights(m, k, p)
            assert d.reconstruct() == p and d.t == p.t


@pytest.mark.parametrize("m,n", [(1, 1), (2, 2), (2, 3), (3, 2)])
def test_affine_image_matches_vertex_oracle(m, n):
    for alpha in enumerate_maps(m, n):
        for p in prism_grid(m, 3):
            for k in cover_index(p):
                assert affine_image(alpha, cell_decompose(m, k, p)) == oracle_affine(alpha, m, k, p)


def test_realize_map_matches_fibre_sums():
    for m, n in product(range(4), repeat=2):
        for alpha in enumerate_maps(m, n):
            for u in simplex_grid(m, 3):
                assert realize_map(alpha, u) == oracle_pushforward(alpha, u)


# ---------------------------------------------------------------------------
# invariants


def test_two_path_identity_exhaustive():
    for m, n in product(range(4), repeat=2):
        grid = simplex_grid(m, 4)
        for alpha in enumerate_maps(m, n):
            for beta in enumerate_maps(m, 1):
                for u in grid:
                    assert homotopy_point(alpha, beta, u) == homotopy_point_by_pushforward(alpha, beta, u)


def test_s_consistency_and_lower_face():
    for m in range(4):
        for beta in enumerate_maps(m, 1):
            k = step_index(beta)
            for u in simplex_grid(m, 4):
                s = s_coord(beta, u)
                assert s == realize_map(beta, u)[1]
                if k < 0:
                    continue
                p = pp(u, s)
                assert cell_membership(m, k, p)
                for alpha in enumerate_maps(m, 2):
                    assert homotopy_point(alpha, beta, u) == affine_image(alpha, cell_decompose(m, k, p))


def test_triangulation_gluing():
    for m in range(4):
        cells = prism_triangulation(m)
        grid = simplex_grid(m + 1, 3)
        for alpha in enumerate_maps(m, 2):
            for k, (ak, bk) in enumerate(cells):
                for w in grid:
                    p = pp(realize_map(ak, w), s_coord(bk, w))
                    lhs = homotopy_point(compose(alpha, ak), bk, w)
                    assert lhs == affine_image(alpha, cell_decompose(m, k, p))


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_cover_and_overlap(m):
    for p in prism_grid(m, 4):
        assert cover_index(p)
    for n in range(3):
        for alpha in enumerate_maps(m, n):
            assert overlap_consistency(m, alpha, 3).ok


def test_boundary_points_agree_across_cells():
    u = bp(F(1, 4), F(1, 4), HALF)
    p = pp(u, HALF)  # t equals sum of u_i for i > 1, so cells 1 and 2 meet here
    assert cover_index(p) == {1, 2}
    alpha = M(2, 2, [0, 1, 2])
    assert affine_image(alpha, cell_decompose(2, 1, p)) == affine_image(alpha, cell_decompose(2, 2, p))


def test_vertex_and_slice_agreement():
    for m, n in product(range(4), repeat=2):
        for alpha in enumerate_maps(m, n):
            for k in range(m + 1):
                for v in PrismCell(m, k).vertex_points():
                    assert affine_image(alpha, cell_decompose(m, k, v)) == contraction_value(alpha, v)
            for u in simplex_grid(m, 2):
                for t in (0, 1):
                    p = pp(u, t)
                    for k in cover_index(p):
                        assert affine_image(alpha, cell_decompose(m, k, p)) == contraction_value(alpha, p)


@st.composite
def bary(draw, m, denom=12):
    cuts = sorted(draw(st.lists(st.integers(0, denom), min_size=m, max_size=m)))
    edges = [0] + cuts + [denom]
    return BaryPoint(tuple(F(edges[i + 1] - edges[i], denom) for i in range(m + 1)))


@settings(max_examples=150)
@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_random_points_two_path_and_cells(m, n, data):
    u = data.draw(bary(m))
    alpha = data.draw(st.sampled_from(enumerate_maps(m, n)))
    beta = data.draw(st.sampled_from(enumerate_maps(m, 1)))
    v = homotopy_point(alpha, beta, u)
    assert v == realize_map(hadamard(alpha, beta), u)
    assert all(x >= 0 for x in v.coords) and sum(v.coords) == 1
    t = F(data.draw(st.integers(0, 12)), 12)
    p = pp(u, t)
    ks = cover_index(p)
    assert ks
    images = {affine_image(alpha, cell_decompose(m, k, p)) for k in ks}
    assert len(images) == 1
    assert images.pop() == oracle_affine(alpha, m, min(ks), p)
