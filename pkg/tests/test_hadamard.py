from itertools import product

import pytest
from hypothesis import given, strategies as st

from hadamard_delta.errors import SourceMismatch, SourceTargetMismatch, TargetMismatch
from hadamard_delta.hadamard import (
    factor_hadamard,
    hadamard,
    hadamard_source_naturality,
    homotopy,
    homotopy_endpoints,
    homotopy_level,
    simplicial_map_check,
)
from hadamard_delta.simplex import (
    MonotoneMap,
    compose,
    constant_map,
    count_maps,
    enumerate_maps,
    identity,
    make_map,
)


def test_unit_and_zero_ends():
    alpha = make_map(2, 2, [0, 1, 2])
    assert hadamard(alpha, constant_map(2, 1, 1)).values == (0, 1, 2)
    assert hadamard(alpha, constant_map(2, 1, 0)).values == (0, 0, 0)


def test_pointwise_product():
    h = hadamard(make_map(1, 2, [0, 2]), make_map(1, 2, [1, 2]))
    assert (h.source, h.target, h.values) == (1, 4, (0, 4))


def test_source_mismatch():
    with pytest.raises(SourceMismatch):
        hadamard(identity(1), identity(2))


def test_degenerate_target():
    for alpha in enumerate_maps(2, 3):
        h = hadamard(alpha, constant_map(2, 0, 0))
        assert h.target == 0 and h.values == (0, 0, 0)


def test_source_naturality_examples():
    a, b = make_map(1, 2, [0, 2]), make_map(1, 2, [1, 2])
    assert hadamard_source_naturality(a, b, identity(1))
    theta = make_map(1, 1, [0, 0])
    assert compose(hadamard(a, b), theta).values == (0, 0)
    assert hadamard_source_naturality(a, b, theta)
    with pytest.raises(SourceTargetMismatch):
        hadamard_source_naturality(a, b, identity(2))


def test_source_naturality_exhaustive():
    for k, m, p, q in product(range(3), range(3), range(3), range(3)):
        for theta in enumerate_maps(k, m):
            for a in enumerate_maps(m, p):
                for b in enumerate_maps(m, q):
                    assert hadamard_source_naturality(a, b, theta)


@pytest.mark.parametrize("p,q", [(1, 1), (2, 1)])
def test_simplicial_map_check(p, q):
    res = simplicial_map_check(p, q, 3)
    assert res.ok and res.instances > 0


def test_constant_theta_gives_vertex_value():
    a, b = make_map(2, 2, [0, 1, 2]), make_map(2, 2, [1, 1, 2])
    for v in range(3):
        theta = constant_map(1, 2, v)
        assert compose(hadamard(a, b), theta).values == (a(v) * b(v),) * 2


def test_monotone_closure_and_commutativity():
    for m, p, q in product(range(4), repeat=3):
        for a in enumerate_maps(m, p):
            for b in enumerate_maps(m, q):
                ab = hadamard(a, b)
                assert list(ab.values) == sorted(ab.values)
                assert max(ab.values) <= p * q
                assert ab.values == hadamard(b, a).values


def test_associativity():
    for m, p, q, r in product(range(3), repeat=4):
        for a in enumerate_maps(m, p):
            for b in enumerate_maps(m, q):
                for c in enumerate_maps(m, r):
                    assert hadamard(hadamard(a, b), c) == hadamard(a, hadamard(b, c))


def test_homotopy_endpoints_examples():
    alpha = make_map(2, 2, [0, 1, 2])
    assert homotopy(alpha, constant_map(2, 1, 1)) == alpha
    assert homotopy(alpha, constant_map(2, 1, 0)).values == (0, 0, 0)
    # n = 0: both ends coincide
    for m in range(3):
        a = constant_map(m, 0, 0)
        assert homotopy(a, constant_map(m, 1, 0)) == homotopy(a, constant_map(m, 1, 1))


def test_homotopy_rejects_non_interval():
    with pytest.raises(TargetMismatch):
        homotopy(identity(1), make_map(1, 2, [0, 2]))


def test_homotopy_endpoints_report():
    res = homotopy_endpoints(2, 3)
    assert res.ok
    assert res.instances == 2 * sum(count_maps(m, 2) for m in range(4))


def test_homotopy_level_table_total():
    lvl = homotopy_level(2, 2)
    assert len(lvl.table) == count_maps(2, 2) * count_maps(2, 1)
    alpha, beta = make_map(2, 2, [0, 1, 2]), make_map(2, 1, [0, 1, 1])
    assert lvl(alpha, beta).values == (0, 1, 2)


def brute_force_factor(h, p, q):
    """Scan every pair of value tables, monotone or not, then keep the monotone ones."""
    m = h.source
    out = []
    for av in product(range(p + 1), repeat=m + 1):
        for bv in product(range(q + 1), repeat=m + 1):
            if list(av) == sorted(av) and list(bv) == sorted(bv):
                if all(x * y == v for x, y, v in zip(av, bv, h.values)):
                    out.append((av, bv))
    return out


def test_non_factorization_witness():
    h = make_map(1, 4, [3, 3])
    assert factor_hadamard(h, 2, 2) == []
    assert count_maps(1, 2) * count_maps(1, 2) == 36
    assert brute_force_factor(h, 2, 2) == []


def test_factorization_found():
    h = make_map(1, 4, [0, 4])
    found = factor_hadamard(h, 2, 2)
    assert (make_map(1, 2, [0, 2]), make_map(1, 2, [1, 2])) in found
    assert sorted((a.values, b.values) for a, b in found) == sorted(brute_force_factor(h, 2, 2))


def test_unit_factorization():
    for f in enumerate_maps(2, 3):
        assert (f, constant_map(2, 1, 1)) in factor_hadamard(f, 3, 1)


def test_factor_target_mismatch():
    with pytest.raises(TargetMismatch):
        factor_hadamard(make_map(1, 3, [0, 3]), 2, 2)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.data())
def test_factor_results_multiply_back(m, p, q, data):
    a = data.draw(st.sampled_from(enumerate_maps(m, p)))
    b = data.draw(st.sampled_from(enumerate_maps(m, q)))
    h = hadamard(a, b)
    found = factor_hadamard(h, p, q)
    assert (a, b) in found
    assert all(hadamard(x, y) == h for x, y in found)
    assert isinstance(h, MonotoneMap)
