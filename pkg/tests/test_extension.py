from collections import Counter
from fractions import Fraction

import pytest

from branchkit.algebra import Series, subalgebra_generators, weight
from branchkit.dimension import branching_multiplicities, subalgebra_dimension, weyl_dimension
from branchkit.extension import (
    ExtensionProblem,
    TableauN,
    eliminate_dependent,
    enumerate_tableaux_n,
    extension_basis_gl3,
    extension_map,
    span_monomials_rank3,
    vector_of_tableau_n,
    weight_of_tableau_n,
)
from branchkit.minors import (
    MinorPolynomial as P,
    cartan_weight,
    minor,
    reported_weight_component,
    right_act,
)
from branchkit.oracle import evaluation_rank, sample_points, vanishes_at


def gl3_pattern_count(m2, m1, m0):
    count = 0
    for k2 in range(m1, m2 + 1):
        for k1 in range(m0, m1 + 1):
            count += k2 - k1 + 1
    return count


def test_extension_basis_counts():
    assert len(extension_basis_gl3(ExtensionProblem(0, 0, 0))) == 1
    assert len(extension_basis_gl3(ExtensionProblem(1, 0, 0))) == 3
    total = len(extension_basis_gl3(ExtensionProblem(2, 1, 0))) + len(
        extension_basis_gl3(ExtensionProblem(2, 1, 1))
    )
    assert total == 8 == gl3_pattern_count(2, 1, 0)


def test_extension_basis_is_independent():
    a2 = Series("A", 2)
    basis = extension_basis_gl3(ExtensionProblem(2, 1, 0))
    vs = [v for _, v in basis]
    assert evaluation_rank(vs, a2, points=len(vs) + 8, seed=2) == len(vs)


def test_extension_problem_rejects_bad_differences():
    with pytest.raises(ValueError):
        ExtensionProblem(1, 2, 0)
    with pytest.raises(ValueError):
        ExtensionProblem(2, Fraction(1, 2), 0)
    # simultaneously half-integer parameters are fine
    ExtensionProblem(Fraction(3, 2), Fraction(1, 2), Fraction(1, 2))


def test_span_monomials_rank3_spec_examples():
    c3 = Series("C", 3)
    monos = span_monomials_rank3(c3, weight(c3, [1, 0, 0]))
    # m1 = 0 forces trivial top factors
    assert all(all(m.order < 3 for m in mono) for mono in monos)
    b3 = Series("B", 3)
    monos_b = span_monomials_rank3(b3, weight(b3, [1, 1, 1]))
    tops = {m for mono in monos_b for m in mono if m.order == 3}
    assert tops == {minor(3, (-3, -2, -1)), minor(3, (-3, -1, 1)), minor(3, (-3, -2, 0))}
    d3 = Series("D", 3)
    monos_d = span_monomials_rank3(d3, weight(d3, [1, 1, 1]))
    # each order-3 factor counts once toward the last sum; the mixed minor
    # a(-3,1,2) therefore occurs alone
    assert any(
        mono.get(minor(3, (-3, 1, 2))) == 1 and len([m for m in mono if m.order == 3]) == 1
        for mono in monos_d
    )


def test_span_monomials_rank3_negative_case_degree_sums():
    d3 = Series("D", 3)
    w = weight(d3, [1, 1, -1])
    for mono in span_monomials_rank3(d3, w):
        order2 = sum((e for m, e in mono.items() if m.order == 2), Fraction(0))
        assert order2 == w.entry(2) - abs(w.entry(1))  # r_{-2} = m2 - |m1|
        order3 = sum((e for m, e in mono.items() if m.order == 3), Fraction(0))
        assert order3 == abs(w.entry(1))


def test_eliminate_dependent_rules():
    d3 = Series("D", 3)
    a = lambda *cols: minor(3, cols)  # noqa: E731
    # rule for a(-3,2): shifts one into each partner, one out of the base
    q, laurent = eliminate_dependent(d3, {a(-3, 2): Fraction(1)})
    assert (q.q_3m1, q.q_3p1, q.q_32) == (1, 1, -1)
    ((key, coeff),) = laurent.terms.items()
    assert coeff == -1
    # untouched monomial passes through
    q2, laurent2 = eliminate_dependent(d3, {a(-3, -2): Fraction(2)})
    assert (q2.q_32, q2.q_3m1, q2.q_3p1) == (2, 0, 0)
    # the doubled rule for the mixed order-3 minor
    q3, _ = eliminate_dependent(d3, {a(-3, 1, 2): Fraction(1)})
    assert (q3.q_3p1, q3.q_32, q3.q_top) == (2, -2, 1)
    # negative case routes through the -1 column with a positive sign
    q4, laurent4 = eliminate_dependent(
        d3, {minor(3, (-3, -1, 1), bar=True): Fraction(1)}
    )
    assert (q4.q_3m1, q4.q_32, q4.q_top) == (1, -1, 1)
    assert list(laurent4.terms.values()) == [Fraction(1)]


def test_eliminate_dependent_is_function_preserving():
    # the rewrite equals the original as a function on the group
    d3 = Series("D", 3)
    pts = sample_points(d3, 15, seed=4)
    a = lambda *cols: minor(3, cols)  # noqa: E731
    for mono in [
        {a(-3, 2): Fraction(1), a(-3, -2): Fraction(1)},
        {a(-3, -1, 1): Fraction(1), a(-3, -2): Fraction(1)},
        {a(-3, 1, 2): Fraction(1), a(-3, -2): Fraction(2)},
        {minor(3, (-3, -1, 2), bar=True): Fraction(1), a(-3, -2): Fraction(2)},
    ]:
        _, laurent = eliminate_dependent(d3, mono)
        diff = P.monomial(mono) - laurent
        ok, _ = vanishes_at(diff, pts)
        assert ok, mono


def test_extension_map_spec_example():
    c3 = Series("C", 3)
    mono = {
        minor(3, (-3,)): Fraction(2),
        minor(3, (1,)): Fraction(1),
        minor(3, (-1,)): Fraction(1),
        minor(3, (-3, 1)): Fraction(1),
        minor(3, (-1, 1)): Fraction(2),
        minor(3, (-3, -2)): Fraction(1),  # fixed part, dropped
        minor(3, (-3, -2, -1)): Fraction(1),  # fixed part, dropped
    }
    image = extension_map(c3, mono)
    assert image == {
        minor(2, (-2,)): Fraction(2),
        minor(2, (1,)): Fraction(1),
        minor(2, (-1,)): Fraction(1),
        minor(2, (-2, 1)): Fraction(1),
        minor(2, (-1, 1)): Fraction(2),
    }
    # the fixed part alone maps to the constant monomial
    assert extension_map(c3, {minor(3, (-3, -2)): Fraction(3)}) == {}


def test_extension_map_even_orthogonal_swaps_columns():
    d3 = Series("D", 3)
    mono = {minor(3, (-3, -1)): Fraction(1), minor(3, (1,)): Fraction(2)}
    image = extension_map(d3, mono)
    # the pair image of a(-3,-1) is a(-2,1); the +-1 columns swap
    assert image == {minor(2, (-2, 1)): Fraction(1), minor(2, (-1,)): Fraction(2)}


def test_tableau_n_betweenness_validation():
    c3 = Series("C", 3)
    w2 = weight(Series("C", 2), [1, 0])
    from branchkit.rank2 import Tableau2

    block = Tableau2(Series("C", 2), Fraction(1), Fraction(0), Fraction(1), Fraction(0), Fraction(1))
    TableauN(c3, (Fraction(2),), (Fraction(1),), (Fraction(1),), block)
    with pytest.raises(ValueError):
        TableauN(c3, (Fraction(2),), (Fraction(0),), (Fraction(0),), block)  # k3 < m2
    with pytest.raises(ValueError):
        TableauN(c3, (Fraction(2),), (Fraction(2),), (Fraction(0),), block)  # s3 < k2


def test_enumerate_tableaux_n_degenerates_to_rank2():
    from branchkit.rank2 import Tableau2, enumerate_tableaux2

    c2 = Series("C", 2)
    w = weight(c2, [1, 0])
    assert enumerate_tableaux_n(c2, w) == enumerate_tableaux2(c2, w)


def test_enumerate_tableaux_n_spec_counts():
    c3 = Series("C", 3)
    ts = enumerate_tableaux_n(c3, weight(c3, [1, 0, 0]))
    assert len(ts) == 3
    srows = sorted(weight_of_tableau_n(t)[0] for t in ts)
    assert srows == [(0, 0), (0, 0), (1, 0)]
    for kind in "ABCD":
        s = Series(kind, 3)
        assert len(enumerate_tableaux_n(s, weight(s, [0, 0, 0]))) == 1


FULL_CASES = [
    ("A", [2, 1, 0]),
    ("C", [1, 1, 1]),
    ("C", [2, 1, 0]),
    ("B", [1, 1, 0]),
    ("B", ["3/2", "1/2", "1/2"]),
    ("D", [2, 1, 0]),
    ("D", [2, 1, -1]),
    ("D", ["3/2", "1/2", "-1/2"]),
]


@pytest.mark.parametrize("kind,m", FULL_CASES)
def test_basis_against_oracle(kind, m):
    s = Series(kind, 3)
    w = weight(s, m)
    ts = enumerate_tableaux_n(s, w)
    counts = Counter(weight_of_tableau_n(t)[0] for t in ts)
    assert dict(counts) == branching_multiplicities(s, w).table
    assert sum(
        subalgebra_dimension(s, srow) for srow in (weight_of_tableau_n(t)[0] for t in ts)
    ) == weyl_dimension(s, w)
    sub = subalgebra_generators(s)
    pts = sample_points(s, 15, seed=9)
    vecs = []
    for t in ts:
        v = vector_of_tableau_n(t)
        vecs.append(v)
        srow, comp = weight_of_tableau_n(t)
        cw = cartan_weight(v, s)
        assert cw.weight is not None and cw.weight[:2] == srow
        assert reported_weight_component(v, s) == comp
        for g in sub.raising:
            ok, _ = vanishes_at(right_act(g, v, s), pts)
            assert ok, (t.to_json(), str(g))
    assert evaluation_rank(vecs, s, points=len(vecs) + 10, seed=5) == len(vecs)


@pytest.mark.parametrize("kind,m", [("C", [1, 0, 0, 0]), ("D", [1, 1, 1, -1])])
def test_chain_extends_beyond_rank_three(kind, m):
    s = Series(kind, 4)
    w = weight(s, m)
    ts = enumerate_tableaux_n(s, w)
    rows = [weight_of_tableau_n(t)[0] for t in ts]
    assert dict(Counter(rows)) == branching_multiplicities(s, w).table
    pts = sample_points(s, 10, seed=13)
    sub = subalgebra_generators(s)
    vecs = []
    for t in ts:
        v = vector_of_tableau_n(t)
        vecs.append(v)
        srow, comp = weight_of_tableau_n(t)
        cw = cartan_weight(v, s)
        assert cw.weight is not None and cw.weight[:3] == srow
        assert reported_weight_component(v, s) == comp
        for g in sub.raising:
            ok, _ = vanishes_at(right_act(g, v, s), pts)
            assert ok
    assert evaluation_rank(vecs, s, points=len(vecs) + 8, seed=3) == len(vecs)


def test_slice_isomorphism_counts_across_series():
    # Corollary-level check: per fixed interface value, the number of cells
    # equals the gl3 extension count, uniformly in the series.
    for kind in "ABCD":
        s = Series(kind, 3)
        w = weight(s, [2, 1, 0])
        ts = enumerate_tableaux_n(s, w)
        per_iface = Counter()
        for t in ts:
            per_iface[t.block.interface_k2, t.block] += 0  # touch attribute
        # group cells by the block they extend
        by_block = Counter()
        for t in ts:
            by_block[t.block] += 1
        for block, count in by_block.items():
            problem = ExtensionProblem(Fraction(2), Fraction(1), block.interface_k2)
            assert count == len(extension_basis_gl3(problem)), (kind, block.to_json())
