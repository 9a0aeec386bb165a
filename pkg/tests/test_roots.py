"""Root system generation against an independent reflection-closure oracle."""

from __future__ import annotations

from fractions import Fraction

import pytest

from sasakian.errors import InvalidLieTypeError, NotARootError
from sasakian.roots import (LieType, build_root_system, cartan_matrix,
                            cartan_number, highest_root, is_maximal,
                            root_string)

TYPES = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "D5", "G2", "F4", "E6"]


def closure_oracle(cartan):
    """Orbit of the simple roots under repeated simple reflections."""
    n = len(cartan)
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(n):
                c = sum(cartan[i][j] * b[j] for j in range(n))
                img = tuple(x - c * int(j == i) for j, x in enumerate(b))
                if img not in roots:
                    roots.add(img)
                    nxt.append(img)
        frontier = nxt
    return roots


def leading_minors_positive(m):
    """Independent positive-definiteness oracle via exact elimination."""
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


@pytest.mark.parametrize("bad", ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G1"])
def test_rank_bounds_rejected(bad):
    with pytest.raises(InvalidLieTypeError) as exc:
        LieType.parse(bad)
    assert "requires" in str(exc.value)


def test_parse_case_insensitive():
    assert str(LieType.parse("e8")) == "E8"
    assert str(LieType.parse(" g2 ")) == "G2"
    for junk in ["X2", "A", "3A", "A-1"]:
        with pytest.raises(InvalidLieTypeError):
            LieType.parse(junk)


@pytest.mark.parametrize("name", TYPES + ["E8"])
def test_roots_match_closure_oracle(name):
    rs = build_root_system(name)
    oracle = closure_oracle(rs.cartan)
    assert set(rs.roots) == oracle


def test_known_counts():
    expected = {"A1": 2, "A2": 6, "A3": 12, "B2": 8, "B3": 18, "C2": 8,
                "C3": 18, "D4": 24, "D5": 40, "G2": 12, "F4": 48,
                "E6": 72, "E7": 126, "E8": 240}
    for name, count in expected.items():
        assert build_root_system(name).num_roots == count, name


@pytest.mark.parametrize("name", TYPES)
def test_root_invariants(name):
    rs = build_root_system(name)
    for b in rs.roots:
        assert any(b)
        signs = {1 if x > 0 else -1 for x in b if x}
        assert len(signs) == 1  # uniform sign
        neg = tuple(-x for x in b)
        assert rs.is_root(neg)
    # closed under every simple reflection
    for b in rs.roots:
        for i in range(rs.rank):
            assert rs.is_root(rs.reflect(i, b))


@pytest.mark.parametrize("name", TYPES)
def test_symmetrized_form_positive_definite(name):
    rs = build_root_system(name)
    assert rs.sym == [list(row) for row in zip(*rs.sym)]
    assert leading_minors_positive(rs.sym)
    # long roots have squared length 2
    assert max(rs.norm2(b) for b in rs.roots) == 2


def test_cartan_number_examples():
    for name in TYPES:
        rs = build_root_system(name)
        for b in rs.roots[:6]:
            assert cartan_number(rs, b, b) == 2
    a2 = build_root_system("A2")
    assert cartan_number(a2, a2.simple_root(0), a2.simple_root(1)) == -1
    # the G2 extreme: short simple root against the long simple root
    g2 = build_root_system("G2")
    assert cartan_number(g2, g2.simple_root(0), g2.simple_root(1)) == -3
    with pytest.raises(NotARootError):
        cartan_number(a2, (5, 5), a2.simple_root(0))


def test_cartan_number_integral_on_lattice():
    rs = build_root_system("G2")
    for alpha in rs.roots:
        val = cartan_number(rs, alpha, (7, -3))
        assert isinstance(val, int)


def test_highest_root_examples():
    cases = {"A2": (1, 1), "G2": (3, 2), "C2": (2, 1), "B3": (1, 2, 2),
             "D4": (1, 2, 1, 1), "F4": (2, 3, 4, 2), "E6": (1, 2, 2, 3, 2, 1)}
    for name, want in cases.items():
        rs = build_root_system(name)
        theta = highest_root(rs)
        assert theta == want
        # dominance over every root, coefficientwise
        assert all(all(x <= y for x, y in zip(b, theta)) for b in rs.positives)


@pytest.mark.parametrize("name", TYPES + ["E7", "E8"])
def test_highest_root_is_maximal(name):
    rs = build_root_system(name)
    theta = highest_root(rs)
    assert is_maximal(rs, theta)
    row_vals = {abs(cartan_number(rs, theta, b)) for b in rs.roots}
    assert row_vals <= {0, 1, 2}


def test_is_maximal_examples():
    a2 = build_root_system("A2")
    assert is_maximal(a2, (1, 1))
    a1 = build_root_system("A1")
    assert is_maximal(a1, (1,))
    g2 = build_root_system("G2")
    assert not is_maximal(g2, g2.simple_root(0))


def test_root_string_examples():
    a2 = build_root_system("A2")
    assert root_string(a2, a2.simple_root(0), a2.simple_root(1)) == (0, 1)
    g2 = build_root_system("G2")
    assert root_string(g2, g2.simple_root(0), g2.simple_root(1)) == (0, 3)
    d4 = build_root_system("D4")
    assert root_string(d4, d4.simple_root(0), d4.simple_root(2)) == (0, 0)
    with pytest.raises(ValueError):
        root_string(a2, (1, 0), (1, 0))
    with pytest.raises(ValueError):
        root_string(a2, (1, 0), (-1, 0))


@pytest.mark.parametrize("name", ["A2", "B2", "C3", "G2", "F4", "D4"])
def test_string_identity_p_minus_q(name):
    rs = build_root_system(name)
    for alpha in rs.roots:
        neg = tuple(-x for x in alpha)
        for beta in rs.roots:
            if beta in (alpha, neg):
                continue
            p, q = root_string(rs, alpha, beta)
            assert p - q == cartan_number(rs, alpha, beta)


def test_cartan_matrix_shapes():
    a, d = cartan_matrix(LieType.parse("F4"))
    assert a == [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    assert d == [1, 1, Fraction(1, 2), Fraction(1, 2)]
