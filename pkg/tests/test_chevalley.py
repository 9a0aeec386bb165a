"""Chevalley structure constants, the compact form and Killing forms."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from conftest import light_pipeline, pipeline
from sasakian.chevalley import compact_real_form, coroot_element
from sasakian.linalg import spaxpy
from sasakian.roots import cartan_number, highest_root, root_string

SMALL = ["A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3", "D4"]
BIG = ["F4", "A5", "D5", "E6"]


def test_a1_sl2_relations():
    _, cb, _ = light_pipeline("A1")
    h, e, f = 0, cb.e_index((1,)), cb.e_index((-1,))
    assert cb.table.bracket(h, e) == {e: 2}
    assert cb.table.bracket(h, f) == {f: -2}
    assert cb.table.bracket(e, f) == {h: 1}


def test_a2_constants_all_unit():
    rs, cb, _ = light_pipeline("A2")
    vals = {abs(v) for v in cb.nconst.values()}
    assert vals == {1}


def test_g2_constants_reach_three():
    rs, cb, _ = light_pipeline("G2")
    vals = {abs(v) for v in cb.nconst.values()}
    assert {2, 3} <= vals


@pytest.mark.parametrize("name", SMALL + BIG)
def test_constants_are_p_plus_one(name):
    rs, cb, _ = light_pipeline(name)
    for (beta, gamma), n in cb.nconst.items():
        if gamma == tuple(-x for x in beta):
            continue
        p, _ = root_string(rs, beta, gamma)
        assert abs(n) == p + 1, (beta, gamma)


@pytest.mark.parametrize("name", SMALL)
def test_jacobi_exact_all_triples(name):
    _, cb, _ = light_pipeline(name)
    for i, j, k in itertools.combinations(range(cb.dim), 3):
        assert not cb.table.jacobi_defect(i, j, k)


@pytest.mark.parametrize("name", BIG)
def test_jacobi_exact_random_triples(name):
    _, cb, _ = light_pipeline(name)
    rng = random.Random(7)
    for _ in range(1000):
        i, j, k = (rng.randrange(cb.dim) for _ in range(3))
        assert not cb.table.jacobi_defect(i, j, k)


def test_antisymmetry():
    _, cb, _ = light_pipeline("G2")
    for i in range(cb.dim):
        for j in range(cb.dim):
            lhs = cb.table.bracket(i, j)
            rhs = {k: -v for k, v in cb.table.bracket(j, i).items()}
            assert lhs == rhs


@pytest.mark.parametrize("name", SMALL + BIG)
def test_coroot_relation(name):
    rs, cb, _ = light_pipeline(name)
    for beta in rs.positives:
        e = cb.e_index(beta)
        f = cb.e_index(tuple(-x for x in beta))
        assert cb.table.bracket(e, f) == cb.coroot_vec(beta)
        # the defining normalization of the coroot
        h = coroot_element(cb, beta)
        pairing = sum(v * cartan_number(rs, rs.simple_root(j), beta)
                      for j, v in h.items())
        assert pairing == 2


def test_coroot_killing_normalization_c2():
    # the long maximal root of C2: B(H_a, H_a) = 4(n + 2) with n = 1
    rs, cb, _ = light_pipeline("C2")
    h = coroot_element(cb, highest_root(rs))
    assert cb.table.killing_vec(h, h) == 12


@pytest.mark.parametrize("name,expected_dim", [("A1", 3), ("A2", 8), ("G2", 14), ("F4", 52)])
def test_compact_dimension(name, expected_dim):
    p = pipeline(name)
    assert p.cf.dim == expected_dim == p.rs.num_roots + p.rs.rank


def test_a1_compact_killing_is_minus_eight():
    # oracle: the three adjoint matrices of sp(1) with [T,U]=2V, [T,V]=-2U, [U,V]=2T
    p = pipeline("A1")
    assert p.cf.killing == [[-8, 0, 0], [0, -8, 0], [0, 0, -8]]
    ad_t = [[0, 0, 0], [0, 0, -2], [0, 2, 0]]
    tr = sum(sum(ad_t[i][k] * ad_t[k][i] for k in range(3)) for i in range(3))
    assert tr == -8


def leading_minors_positive(m):
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return True


@pytest.mark.parametrize("name", ["A2", "C2", "G2", "B3"])
def test_compact_killing_negative_definite(name):
    p = pipeline(name)
    neg = [[-x for x in row] for row in p.cf.killing]
    assert leading_minors_positive(neg)


@pytest.mark.parametrize("name", ["A2", "C2", "G2"])
def test_compact_killing_ad_invariant(name):
    p = pipeline(name)
    tab = p.cf.table
    d = p.cf.dim
    for i, j, k in itertools.product(range(d), repeat=3):
        lhs = tab.killing_vec(tab.bracket(i, j), {k: 1})
        rhs = tab.killing_vec({j: 1}, tab.bracket(i, k))
        assert lhs + rhs == 0


def _complexified_bracket_oracle(cb, cf):
    """Recompute the compact table through complex arithmetic in the Chevalley
    basis: elements are (real, imaginary) sparse pairs."""
    rs = cb.rs
    r = rs.rank

    def basis_pair(idx):
        if idx < r:
            return {}, {idx: 1}                      # i H_j
        p, which = divmod(idx - r, 2)
        beta = rs.positives[p]
        e = cb.e_index(beta)
        f = cb.e_index(tuple(-x for x in beta))
        if which == 0:
            return {e: 1, f: -1}, {}                 # U
        return {}, {e: 1, f: 1}                      # V

    def cbracket(x, y):
        xr, xi = x
        yr, yi = y
        re = cb.table.bracket_vec(xr, yr)
        spaxpy(re, -1, cb.table.bracket_vec(xi, yi))
        im = cb.table.bracket_vec(xr, yi)
        spaxpy(im, 1, cb.table.bracket_vec(xi, yr))
        return re, im

    def to_compact(re, im):
        out = {}
        for j in range(r):
            assert re.get(j, 0) == 0
            if im.get(j, 0):
                out[j] = im[j]
        for p, beta in enumerate(rs.positives):
            e = cb.e_index(beta)
            f = cb.e_index(tuple(-x for x in beta))
            u2 = re.get(e, 0) - re.get(f, 0)
            assert im.get(e, 0) - im.get(f, 0) == 0
            v2 = im.get(e, 0) + im.get(f, 0)
            assert re.get(e, 0) + re.get(f, 0) == 0
            if u2:
                assert u2 % 2 == 0
                out[cf.u_index(p)] = u2 // 2
            if v2:
                assert v2 % 2 == 0
                out[cf.v_index(p)] = v2 // 2
        return out

    table = {}
    for i in range(cf.dim):
        for j in range(i + 1, cf.dim):
            re, im = cbracket(basis_pair(i), basis_pair(j))
            row = to_compact(re, im)
            if row:
                table[(i, j)] = row
    return table


@pytest.mark.parametrize("name", ["A2", "C2", "G2"])
def test_compact_table_matches_complexified_oracle(name):
    p = pipeline(name)
    oracle = _complexified_bracket_oracle(p.cb, p.cf)
    for i in range(p.cf.dim):
        for j in range(i + 1, p.cf.dim):
            assert p.cf.table.bracket(i, j) == oracle.get((i, j), {}), (i, j)


def _independent_n(rs):
    theta = highest_root(rs)
    return sum(1 for b in rs.roots if cartan_number(rs, theta, b) == 1) // 2


@pytest.mark.parametrize("name", SMALL + BIG)
def test_killing_of_maximal_coroot(name):
    # B(H_alpha, H_alpha) = 4(n + 2), n read off the grading independently
    rs, cb, _ = light_pipeline(name)
    h = coroot_element(cb, highest_root(rs))
    n = _independent_n(rs)
    assert cb.table.killing_vec(h, h) == 4 * (n + 2)


def test_structure_table_json_deterministic(tmp_path):
    rs, cb, _ = light_pipeline("A2")
    cf = compact_real_form(cb)
    doc1 = cf.table.to_json()
    doc2 = compact_real_form(cb).table.to_json()
    assert doc1 == doc2


def test_a2_compact_table_golden():
    import pathlib
    p = pipeline("A2")
    golden = pathlib.Path(__file__).parent / "golden" / "a2_compact_table.json"
    assert p.cf.table.to_json() == golden.read_text().strip()
