from collections import Counter
from fractions import Fraction

import pytest

from branchkit.algebra import Series, subalgebra_generators, weight
from branchkit.minors import (
    Minor,
    MinorPolynomial as P,
    cartan_weight,
    minor,
    reported_weight_component,
    right_act,
)
from branchkit.oracle import evaluation_rank, sample_points, vanishes_at
from branchkit.rank2 import (
    Tableau2,
    catalog,
    enumerate_tableaux2,
    is_g1_highest_admissible,
    vector_of_tableau2,
    weight_of_tableau2,
)

from test_algebra import valid_weights


def test_catalog_spec_examples():
    c2 = catalog(Series("C", 2))
    assert set(c2.minors) == {
        minor(2, (-2,)),
        minor(2, (-1,)),
        minor(2, (1,)),
        minor(2, (-2, -1)),
        minor(2, (-2, 1)),
        minor(2, (-1, 1)),
    }
    b2 = catalog(Series("B", 2))
    assert minor(2, (-2, 0)) in b2.minors
    d3 = catalog(Series("D", 3))
    for cols in [(-3, 2), (-3, -2, -1), (-3, -1, 1), (-3, 1, 2)]:
        assert minor(3, cols) in d3.minors
    d3n = catalog(Series("D", 3), negative_case=True)
    assert minor(3, (-3, -2, 1), bar=True) in d3n.minors


@pytest.mark.parametrize("kind,n", [(k, n) for k in "ABCD" for n in (2, 3)])
def test_catalog_minors_are_subalgebra_highest(kind, n):
    s = Series(kind, n)
    sub = subalgebra_generators(s)
    points = sample_points(s, 12, seed=6)
    cases = [False, True] if kind == "D" else [False]
    for negative in cases:
        for m in catalog(s, negative_case=negative).minors:
            for g in sub.raising:
                acted = right_act(g, P.of(m), s)
                ok, _ = vanishes_at(acted, points)
                assert ok, (str(m), str(g))


def test_admissibility_spec_examples():
    c = Series("C", 2)
    w = weight(c, [2, 1])
    good = P.of(minor(2, (1,))) * P.of(minor(2, (-2, -1)))
    assert is_g1_highest_admissible(good, w, c).ok
    bad = P.of(minor(2, (1,))) * P.of(minor(2, (-1,)))
    assert not is_g1_highest_admissible(bad, w, c).ok
    # a non-catalog minor is rejected outright
    stray = P.of(Minor((-2, 1), (-2, -1)))
    assert not is_g1_highest_admissible(stray, w, c).ok


def test_enumerate_tableaux2_counts():
    c = Series("C", 2)
    assert len(enumerate_tableaux2(c, weight(c, [1, 0]))) == 3
    b = Series("B", 2)
    ts = enumerate_tableaux2(b, weight(b, [1, 0]))
    assert len(ts) == 3 and all(t.sigma == 0 for t in ts)
    d = Series("D", 2)
    ts = enumerate_tableaux2(d, weight(d, [1, 0]))
    assert len(ts) == 4
    assert sorted(t.s2 for t in ts) == [-1, 0, 0, 1]


def test_o4_count_identity():
    d = Series("D", 2)
    for m2, m1 in [(1, 0), (2, 1), (2, -1), (3, 0), (Fraction(3, 2), Fraction(-1, 2))]:
        w = weight(d, [m2, m1])
        expected = (m2 - m1 + 1) * (m2 + m1 + 1)
        assert len(enumerate_tableaux2(d, w)) == expected


def test_vector_spec_examples():
    c = Series("C", 2)
    # single-monomial tableau with k2 = s2: a1^(m2-k2) a(-2)^(k2-m1)
    # a(-2,1)^(m1-k1) a(-2,-1)^(k1)
    t = Tableau2(c, Fraction(2), Fraction(1), Fraction(2), Fraction(0), Fraction(2))
    v = vector_of_tableau2(t)
    assert v == P.monomial({minor(2, (-2,)): 1, minor(2, (-2, 1)): 1})
    # zero tableau
    z = Tableau2(c, Fraction(0), Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    assert vector_of_tableau2(z) == P.constant(1)
    # Laurent monomial for the even orthogonal block
    d = Series("D", 2)
    td = Tableau2(d, Fraction(1), Fraction(0), Fraction(0), None, Fraction(-1))
    assert vector_of_tableau2(td) == P.monomial(
        {minor(2, (-2,)): Fraction(-1), minor(2, (1,)): 1, minor(2, (-1,)): 1}
    )


def test_b_half_integer_vectors_have_square_root_shape():
    b = Series("B", 2)
    w = weight(b, ["1/2", "1/2"])
    ts = enumerate_tableaux2(b, w)
    assert len(ts) == 2
    vs = {str(vector_of_tableau2(t)) for t in ts}
    top = minor(2, (-2, -1))
    expected = {
        str(P.monomial({top: Fraction(1, 2)})),
        str(P.monomial({minor(2, (-2, 0)): Fraction(1), top: Fraction(-1, 2)})),
    }
    assert vs == expected


@pytest.mark.parametrize(
    "kind,m",
    [
        ("A", [2, 1]),
        ("C", [2, 1]),
        ("B", [1, 1]),
        ("B", ["3/2", "1/2"]),
        ("D", [2, 1]),
        ("D", [2, -1]),
        ("D", ["3/2", "-1/2"]),
    ],
)
def test_vectors_are_weight_correct_annihilated_independent(kind, m):
    s = Series(kind, 2)
    w = weight(s, m)
    ts = enumerate_tableaux2(s, w)
    sub = subalgebra_generators(s)
    points = sample_points(s, 15, seed=8)
    vecs = []
    for t in ts:
        v = vector_of_tableau2(t)
        vecs.append(v)
        s2, comp = weight_of_tableau2(t)
        cw = cartan_weight(v, s)
        assert cw.weight is not None and cw.weight[0] == s2
        assert reported_weight_component(v, s) == comp
        assert is_g1_highest_admissible(v, w, s).ok
        for g in sub.raising:
            acted = right_act(g, v, s)
            ok, _ = vanishes_at(acted, points)
            assert ok, (t.to_json(), str(g))
    assert evaluation_rank(vecs, s, points=len(vecs) + 8, seed=3) == len(vecs)


def test_counts_match_oracle_for_all_small_weights():
    from branchkit.dimension import branching_multiplicities

    for kind in "ABCD":
        s = Series(kind, 2)
        for w in valid_weights(s, 2):
            got = Counter((t.s2,) for t in enumerate_tableaux2(s, w))
            assert dict(got) == branching_multiplicities(s, w).table, str(w)
