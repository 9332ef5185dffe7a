"""The left-extension procedure: gl3/gl1 extension spaces, the series
extension maps, and assembly of tableaux and vectors for arbitrary rank.

Each extension step j converts the distinguished one-column factor of the
previous level into the two-minor pair of the next, transporting
coefficients unchanged; every other factor acquires the new column -j.  For
the even orthogonal series the dependent minors are eliminated first, the
interface value of the rank-2 block is max(m2 - k, l - m1) (resp. the
mirrored expression when m1 < 0), and the +-1 columns swap roles in the
non-negative case.  These choices are forced by exactness: the restriction
multiplicities, the eigenvector structure and the weight bookkeeping pin
them; see the tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import HighestWeight, Series, as_fraction, weight
from .minors import Minor, MinorPolynomial, is_bar, minor
from .rank2 import Tableau2, enumerate_tableaux2, vector_of_tableau2, weight_of_tableau2

P = MinorPolynomial


@dataclass(frozen=True)
class ExtensionProblem:
    """Parameters (m_top, m_mid, k_mid); the space depends only on the two
    differences, which must be non-negative integers."""

    m_top: Fraction
    m_mid: Fraction
    k_mid: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "m_top", as_fraction(self.m_top))
        object.__setattr__(self, "m_mid", as_fraction(self.m_mid))
        object.__setattr__(self, "k_mid", as_fraction(self.k_mid))
        d1 = self.m_top - self.m_mid
        d2 = self.m_mid - self.k_mid
        if d1 < 0 or d2 < 0 or d1.denominator != 1 or d2.denominator != 1:
            raise ValueError("differences must be non-negative integers")


def _ext_vector(m_top, m_mid, k_mid, k2, s) -> P:
    """Basis vector of the gl3 extension space for the tableau (k2, s)."""
    j = k2 - s
    cap_u = k2 - m_mid
    cap_v = m_mid - k_mid
    a = lambda *cols: minor(2, cols)  # noqa: E731
    total = P.zero()
    for u in range(max(0, int(j - cap_v)), min(int(j), int(cap_u)) + 1):
        v = int(j) - u
        coeff = Fraction(
            1,
            factorial(u) * factorial(v) * factorial(int(cap_u) - u) * factorial(int(cap_v) - v),
        )
        total = total + P.monomial(
            {
                a(-2): Fraction(int(cap_u) - u),
                a(-1): Fraction(u),
                a(1): m_top - k2,
                a(-2, 1): Fraction(int(cap_v) - v),
                a(-1, 1): Fraction(v),
            },
            coeff,
        )
    return total.normalized()


def extension_basis_gl3(p: ExtensionProblem) -> list[tuple[tuple[Fraction, Fraction], P]]:
    """Tableau-indexed basis of the gl3 / gl1 extension space."""
    out = []
    k2 = p.m_mid
    while k2 <= p.m_top:
        s = p.k_mid
        while s <= k2:
            out.append(((k2, s), _ext_vector(p.m_top, p.m_mid, p.k_mid, k2, s)))
            s += 1
        k2 += 1
    return out


# ---------------------------------------------------------------------------
# Rank-3 monomial spaces (the explicit lists of the subalgebra-highest span)


def _f2_minors(series: Series, negative: bool) -> list[Minor]:
    n = 3
    if series.kind in ("A", "C"):
        cols = [(-3, -2, -1), (-3, -1, 1), (-3, -2, 1)]
        return [minor(n, c) for c in cols]
    if series.kind == "B":
        return [minor(n, (-3, -2, -1)), minor(n, (-3, -1, 1)), minor(n, (-3, -2, 0))]
    if not negative:
        return [minor(n, (-3, -2, -1)), minor(n, (-3, -1, 1)), minor(n, (-3, 1, 2))]
    return [
        minor(n, (-3, -2, 1), bar=True),
        minor(n, (-3, -1, 1), bar=True),
        minor(n, (-3, -1, 2), bar=True),
    ]


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def span_monomials_rank3(series: Series, w: HighestWeight) -> list[dict[Minor, Fraction]]:
    """All rank-3 product monomials spanning the subalgebra-highest space.

    Non-negative exponents on the order-1 and order-2 catalog minors and the
    series-specific order-3 factors; each order-3 factor counts once toward
    the last degree sum (the even orthogonal doubling lives in the
    elimination rules, not here).  Integer weights only.
    """
    if series.n != 3:
        raise ValueError("the explicit rank-3 space needs n = 3")
    if w.is_half_integer:
        raise ValueError("rank-3 monomial enumeration is for integer weights")
    n = 3
    m3, m2, m1 = w.entry(3), w.entry(2), w.entry(1)
    negative = series.kind == "D" and m1 < 0
    r3 = int(m3 - m2)
    r2 = int(m2 - abs(m1)) if series.kind == "D" else int(m2 - m1)
    top = int(abs(m1))
    order1 = [minor(n, (-3,)), minor(n, (-1,)), minor(n, (1,))]
    order2 = [
        minor(n, (-3, -2)),
        minor(n, (-3, -1)),
        minor(n, (-3, 1)),
        minor(n, (-1, 1)),
    ]
    if series.kind == "D":
        order2.append(minor(n, (-3, 2)))
    f2 = _f2_minors(series, negative)
    out: list[dict[Minor, Fraction]] = []
    for c1 in _compositions(r3, len(order1)):
        for c2 in _compositions(r2, len(order2)):
            for c3 in _compositions(top, len(f2)):
                mono: dict[Minor, Fraction] = {}
                for m, e in zip(order1 + order2 + f2, c1 + c2 + c3):
                    if e:
                        mono[m] = Fraction(e)
                out.append(mono)
    return out


@dataclass(frozen=True)
class QExponents:
    """Adjusted exponents after eliminating the dependent rank-3 minors."""

    q_32: Fraction  # exponent of a(-3,-2); may be negative
    q_3m1: Fraction  # exponent of a(-3,-1)
    q_3p1: Fraction  # exponent of a(-3,1)
    q_top: Fraction  # exponent of the order-3 principal (or bar) factor


def eliminate_dependent(series: Series, mono: dict[Minor, Fraction]) -> tuple[QExponents, P]:
    """Rewrite a rank-3 even-orthogonal monomial without dependent minors.

    Substitutes a(-3,2), the mixed order-3 minors, and their bar variants via
    the quadratic relations, producing a Laurent monomial (with sign) whose
    exponents are the q-values.  The sum identity
    q(-3,-2) + q(-3,-1) + q(-3,1) + p(-1,1) = m-2 - |m-1| is asserted.
    """
    if series.kind != "D":
        raise ValueError("elimination applies to the even orthogonal series")
    n = 3
    a = lambda *cols: minor(n, cols)  # noqa: E731
    ab = lambda *cols: minor(n, cols, bar=True)  # noqa: E731
    negative = any(is_bar(m, n) for m in mono)
    exps = {m: e for m, e in mono.items() if e}
    sign = 1
    out: dict[Minor, Fraction] = {}

    def add(m: Minor, e: Fraction) -> None:
        s = out.get(m, Fraction(0)) + e
        if s:
            out[m] = s
        else:
            out.pop(m, None)

    top = ab(-3, -2, 1) if negative else a(-3, -2, -1)
    partner = a(-3, -1) if negative else a(-3, 1)
    mixed1 = ab(-3, -1, 1) if negative else a(-3, -1, 1)
    mixed2 = ab(-3, -1, 2) if negative else a(-3, 1, 2)
    for m, e in exps.items():
        if m == a(-3, 2):
            # a(-3,2) a(-3,-2) = -a(-3,1) a(-3,-1)
            sign *= (-1) ** int(e)
            add(a(-3, 1), e)
            add(a(-3, -1), e)
            add(a(-3, -2), -e)
        elif m == mixed1:
            # mixed * a(-3,-2) = +/- partner * top
            if not negative:
                sign *= (-1) ** int(e)
            add(partner, e)
            add(top, e)
            add(a(-3, -2), -e)
        elif m == mixed2:
            # mixed2 * a(-3,-2)^2 = - partner^2 * top
            sign *= (-1) ** int(e)
            add(partner, 2 * e)
            add(top, e)
            add(a(-3, -2), -2 * e)
        else:
            add(m, e)
    q = QExponents(
        out.get(a(-3, -2), Fraction(0)),
        out.get(a(-3, -1), Fraction(0)),
        out.get(a(-3, 1), Fraction(0)),
        out.get(top, Fraction(0)),
    )
    # q(-3,-2) + q(-3,-1) + q(-3,1) + p(-1,1) equals the original order-2
    # exponent sum (the second degree condition); checked against the input.
    order2_in = sum(
        (e for m, e in exps.items() if m.order == 2 and m != a(-1, 1)), Fraction(0)
    )
    q_sum = q.q_32 + q.q_3m1 + q.q_3p1
    if q_sum != order2_in:
        raise AssertionError("elimination broke the degree bookkeeping")
    return q, P.monomial(out, sign)


# ---------------------------------------------------------------------------
# Extension maps (per-monomial column relabeling onto the gl3 alphabet)


def _step_roles(series: Series, negative: bool, j: int) -> dict[str, tuple]:
    """Column tuples for one extension step, keyed by role.

    replaced: the factor converted into the new pair; the others are the
    images of the gl3 alphabet under the preimage map.
    """
    if series.kind == "D" and not negative:
        # the +-1 columns swap roles in the non-negative even orthogonal case
        return {
            "base": (-j,),
            "single": (1,),  # image of the gl3 a(-1)
            "fixed": (-1,),  # image of the gl3 a(1); exponent m_{-j} - k_{-j}
            "pair_high": (-j, -1),
            "pair_low": (-1, 1),
            "replaced": (-1,),
        }
    return {
        "base": (-j,),
        "single": (-1,),
        "fixed": (1,),
        "pair_high": (-j, 1),
        "pair_low": (-1, 1),
        "replaced": (1,),
    }


def extension_map(series: Series, mono: dict[Minor, Fraction], j: int = 3) -> dict[Minor, Fraction]:
    """Image of a slice monomial in the gl3 extension alphabet.

    The fixed factors (everything carrying the -j column except the pair
    members) are dropped; the remaining exponents transfer onto
    a(-2), a(-1), a(1), a(-2,1), a(-1,1).
    """
    n = series.n
    negative = any(is_bar(m, n) for m in mono)
    roles = _step_roles(series, negative, j)
    a2 = lambda *cols: minor(2, cols)  # noqa: E731
    image: dict[Minor, Fraction] = {}
    targets = {
        roles["base"]: a2(-2),
        roles["single"]: a2(-1),
        roles["fixed"]: a2(1),
        roles["pair_high"]: a2(-2, 1),
        roles["pair_low"]: a2(-1, 1),
    }
    for m, e in mono.items():
        if is_bar(m, n) or (m.cols[0] == -j and m.cols not in targets):
            continue  # fixed part
        tgt = targets.get(m.cols)
        if tgt is None:
            continue
        image[tgt] = image.get(tgt, Fraction(0)) + e
    return image


# ---------------------------------------------------------------------------
# Tableaux for arbitrary rank


@dataclass(frozen=True)
class TableauN:
    """Branching pattern: rows m, k, s over columns -n..-3 plus a rank-2 block."""

    series: Series
    m_row: tuple[Fraction, ...]  # (m_{-n}, ..., m_{-3})
    k_row: tuple[Fraction, ...]  # (k_{-n}, ..., k_{-3})
    s_row: tuple[Fraction, ...]  # (s_{-n}, ..., s_{-3})
    block: Tableau2

    def __post_init__(self) -> None:
        n = self.series.n
        if not (len(self.m_row) == len(self.k_row) == len(self.s_row) == n - 2):
            raise ValueError("row lengths must be n - 2")
        dens = {x.denominator for x in self.m_row + self.k_row + self.s_row}
        dens |= {self.block.m2.denominator, self.block.s2.denominator}
        if len(dens) > 1:
            raise ValueError("entries must be simultaneously integer or half-integer")
        chain_m = self.m_row + (self.block.m2,)
        for j in range(n - 2):
            if not (chain_m[j] >= self.k_row[j] >= chain_m[j + 1]):
                raise ValueError("betweenness fails on the k row")
        ifaces = self.k_row[1:] + (self.block.interface_k2,)
        for j in range(n - 2):
            if not (self.k_row[j] >= self.s_row[j] >= ifaces[j]):
                raise ValueError("betweenness fails on the s row")

    def entries(self) -> dict:
        return {
            "m": [str(x) for x in self.m_row] + [str(self.block.m2), str(self.block.m1)],
            "k": [str(x) for x in self.k_row]
            + ([str(self.block.k2)] if self.block.k1 is None else [str(self.block.k2), str(self.block.k1)]),
            "s": [str(x) for x in self.s_row] + [str(self.block.s2)],
        }

    def to_json(self) -> dict:
        doc = dict(self.entries(), series=self.series.kind, n=self.series.n)
        if self.series.kind == "B":
            doc["sigma"] = self.block.sigma
        return doc


def enumerate_tableaux_n(series: Series, w: HighestWeight) -> list[TableauN] | list[Tableau2]:
    """All tableaux for the weight; degenerates to the rank-2 catalog at n = 2."""
    n = series.n
    if w.series != series:
        raise ValueError("weight does not belong to the series")
    s2 = Series(series.kind, 2)
    w2 = weight(s2, (w.entry(2), w.entry(1)))
    blocks = enumerate_tableaux2(s2, w2)
    if n == 2:
        return blocks
    out: list[TableauN] = []

    def grow(j: int, k_acc: tuple, s_acc: tuple, block: Tableau2) -> None:
        # rows are accumulated from -3 leftwards
        if j > n:
            out.append(
                TableauN(
                    series,
                    tuple(w.entry(i) for i in range(n, 2, -1)),
                    tuple(reversed(k_acc)),
                    tuple(reversed(s_acc)),
                    block,
                )
            )
            return
        lower = block.interface_k2 if j == 3 else k_acc[-1]
        k = w.entry(j - 1)
        while k <= w.entry(j):
            s = lower
            while s <= k:
                grow(j + 1, k_acc + (k,), s_acc + (s,), block)
                s += 1
            k += 1

    for block in blocks:
        grow(3, (), (), block)
    return out


# ---------------------------------------------------------------------------
# Vectors


def _barlike(m: Minor) -> bool:
    """Bar factors at any chain level carry rows (-d, ..., -2, 1)."""
    return m.order >= 2 and m.rows == tuple(range(-m.order, -1)) + (1,)


def _prepend_column(poly: P, series: Series, j: int) -> P:
    n = series.n

    def bump(m: Minor) -> Minor:
        cols = (-j,) + m.cols
        if _barlike(m):
            return Minor(tuple(range(-m.order - 1, -1)) + (1,), cols)
        return minor(n, cols)

    return poly.map_minors(bump)


def _extend_step(
    poly: P,
    series: Series,
    j: int,
    m_top: Fraction,
    m_mid: Fraction,
    k_new: Fraction,
    s_new: Fraction,
    interface: Fraction,
    negative: bool,
) -> P:
    """One left-extension step: convert the replaced one-column factor into
    the new pair and attach column -j to everything else."""
    n = series.n
    roles = _step_roles(series, negative, j)
    rf = minor(n, roles["replaced"])
    pt = m_mid - interface
    if pt.denominator != 1 or pt < 0:
        raise ValueError("interface must not exceed the middle weight")
    base = minor(n, roles["base"])
    single = minor(n, roles["single"])
    fixed = minor(n, roles["fixed"])
    pair_high = minor(n, roles["pair_high"])
    pair_low = minor(n, roles["pair_low"])

    cap_u = k_new - m_mid
    jj = k_new - s_new
    ext = P.zero()
    if series.kind == "D":
        # One monomial per cell: the generic sum degenerates through the
        # quadratic relations (distinct cells would collide), and any term of
        # the family carries the same weights.  Keeping the pair-high content
        # maximal stays inside the representation (see the notes on
        # realizability in the tests).
        x = min(pt, s_new - interface)
        p_exp = (s_new - interface) - x
        v = pt - x
        u = (k_new - m_mid) - p_exp
        ext = P.monomial(
            {
                base: p_exp,
                single: u,
                fixed: m_top - k_new,
                pair_high: x,
                pair_low: v,
            }
        )
    else:
        for u in range(max(0, int(jj - pt)), min(int(jj), int(cap_u)) + 1):
            v = int(jj) - u
            coeff = Fraction(
                1,
                factorial(u) * factorial(v) * factorial(int(cap_u) - u) * factorial(int(pt) - v),
            )
            ext = ext + P.monomial(
                {
                    base: Fraction(int(cap_u) - u),
                    single: Fraction(u),
                    fixed: m_top - k_new,
                    pair_high: Fraction(int(pt) - v),
                    pair_low: Fraction(v),
                },
                coeff,
            )
    if ext.is_zero():
        raise ValueError("empty extension sum; tableau invariants violated upstream")

    out = P.zero()
    for key, coeff in poly.terms.items():
        factors = dict(key)
        have = factors.pop(rf, Fraction(0))
        if have < pt:
            raise ValueError("replaced factor has insufficient exponent")
        if have > pt:
            factors[rf] = have - pt
        rest = _prepend_column(P.monomial(factors, coeff), series, j)
        out = out + ext * rest
    return out


def vector_of_tableau_n(t: TableauN | Tableau2) -> P:
    """Build the block vector and pull it through the chain of extensions."""
    if isinstance(t, Tableau2):
        return vector_of_tableau2(t)
    series = t.series
    n = series.n
    negative = t.block.negative_case
    v = vector_of_tableau2(t.block, ambient=n)
    interface = t.block.interface_k2
    m_chain = (t.block.m2,) + tuple(reversed(t.m_row))  # m_{-2}, m_{-3}, ..., m_{-n}
    for j in range(3, n + 1):
        idx = j - 3
        k_new = t.k_row[len(t.k_row) - 1 - idx]
        s_new = t.s_row[len(t.s_row) - 1 - idx]
        v = _extend_step(
            v, series, j, m_chain[idx + 1], m_chain[idx], k_new, s_new, interface, negative
        )
        interface = k_new
    return v.normalized()


def weight_of_tableau_n(t: TableauN | Tableau2) -> tuple[tuple[Fraction, ...], Fraction]:
    """(s-row including s_{-2}, distinguished component) under the direct
    right-action convention: the eigenvalue of F(-1,-1), or of
    E(-1,-1) - E(1,1) for series A.

    A, C: 2*sum(k) - sum(m) - sum(s); B subtracts sigma as well.  Even
    orthogonal, m_{-1} >= 0: -2*sum(k) + sum(m) + sum(s); in the negative
    case the F(1,1) eigenvalue is the negative of the returned value.
    """
    if isinstance(t, Tableau2):
        s2, w1 = weight_of_tableau2(t)
        return (s2,), w1
    kind = t.series.kind
    b = t.block
    s_all = t.s_row + (b.s2,)
    sum_m = sum(t.m_row, Fraction(0)) + b.m2 + b.m1
    sum_s = sum(s_all, Fraction(0))
    sum_k = sum(t.k_row, Fraction(0)) + b.k2
    if kind in ("A", "C", "B"):
        sum_k += b.k1
        w1 = 2 * sum_k - sum_m - sum_s - (b.sigma if kind == "B" else 0)
    elif not b.negative_case:
        w1 = -2 * sum_k + sum_m + sum_s
    else:
        w1 = 2 * sum_k - sum_m + 2 * b.m1 - sum_s
    return s_all, w1
