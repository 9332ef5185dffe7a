"""Independent ground truth: Weyl dimensions and brute-force branching.

Branching multiplicities are computed by character restriction plus
dominant-weight peeling, sharing no code path with the tableau machinery it
validates.  Half-integer weights are doubled into the integer lattice inside
the Freudenthal recursion and rescaled at the end.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import HighestWeight, Series, as_fraction, weight

Vec = tuple[Fraction, ...]


def _pairs(k: int):
    for i in range(k):
        for j in range(i + 1, k):
            yield i, j


def weyl_dim_gl(lam: Sequence[Fraction]) -> int:
    lam = [as_fraction(x) for x in lam]
    k = len(lam)
    num, den = Fraction(1), Fraction(1)
    for i, j in _pairs(k):
        num *= lam[i] - lam[j] + j - i
        den *= Fraction(j - i)
    d = num / den
    assert d.denominator == 1 and d > 0
    return int(d)


def weyl_dim_bcd(kind: str, lam: Sequence[Fraction]) -> int:
    lam = [as_fraction(x) for x in lam]
    k = len(lam)
    if k == 0:
        return 1
    if kind == "B":
        l = [x + (k - i - 1) + Fraction(1, 2) for i, x in enumerate(lam)]
        rho = [Fraction(2 * (k - i) - 1, 2) for i in range(k)]
    elif kind == "C":
        l = [x + (k - i) for i, x in enumerate(lam)]
        rho = [Fraction(k - i) for i in range(k)]
    elif kind == "D":
        l = [x + (k - i - 1) for i, x in enumerate(lam)]
        rho = [Fraction(k - i - 1) for i in range(k)]
    else:
        raise ValueError(kind)
    num, den = Fraction(1), Fraction(1)
    for i, j in _pairs(k):
        num *= l[i] ** 2 - l[j] ** 2
        den *= rho[i] ** 2 - rho[j] ** 2
    if kind in ("B", "C"):
        for i in range(k):
            num *= l[i]
            den *= rho[i]
    d = num / den
    assert d.denominator == 1 and d > 0, (kind, lam, d)
    return int(d)


def weyl_dimension(series: Series, w: HighestWeight) -> int:
    """Dimension of the irreducible representation with highest weight w."""
    if w.series != series:
        raise ValueError("weight does not belong to the series")
    if series.kind == "A":
        return weyl_dim_gl(tuple(w.m) + (Fraction(0),))
    return weyl_dim_bcd(series.kind, w.m)


def subalgebra_dimension(series: Series, nu: Sequence[Fraction]) -> int:
    """Dimension of the rank-(n-1) subalgebra irrep with highest weight nu."""
    nu = tuple(as_fraction(x) for x in nu)
    if series.kind == "A":
        return weyl_dim_gl(nu)
    if len(nu) == 1:
        if series.kind == "B":
            return int(2 * nu[0] + 1)
        if series.kind == "C":
            return int(nu[0] + 1)
        return 1  # o(2): characters
    return weyl_dim_bcd(series.kind, nu)


# ---------------------------------------------------------------------------
# Weight multiplicities (Freudenthal), in the doubled integer lattice


def _positive_roots(kind: str, k: int) -> list[tuple[int, ...]]:
    roots: list[tuple[int, ...]] = []

    def e(i: int, j: int | None = None, sj: int = 1) -> tuple[int, ...]:
        v = [0] * k
        v[i] = 1
        if j is not None:
            v[j] += sj
        return tuple(v)

    if kind == "A":
        for i, j in _pairs(k):
            roots.append(e(i, j, -1))
        return roots
    for i, j in _pairs(k):
        roots.append(e(i, j, -1))
        roots.append(e(i, j, 1))
    if kind == "B":
        for i in range(k):
            roots.append(e(i))
    elif kind == "C":
        for i in range(k):
            v = [0] * k
            v[i] = 2
            roots.append(tuple(v))
    return roots


def _simple_roots(kind: str, k: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(k - 1):
        v = [0] * k
        v[i], v[i + 1] = 1, -1
        out.append(tuple(v))
    v = [0] * k
    if kind == "B":
        v[k - 1] = 1
        out.append(tuple(v))
    elif kind == "C":
        v[k - 1] = 2
        out.append(tuple(v))
    elif kind == "D" and k >= 2:
        v[k - 2], v[k - 1] = 1, 1
        out.append(tuple(v))
    return out


def _rho(kind: str, k: int) -> tuple[Fraction, ...]:
    if kind == "A":
        return tuple(Fraction(k - 1 - 2 * i, 2) for i in range(k))
    if kind == "B":
        return tuple(Fraction(2 * (k - i) - 1, 2) for i in range(k))
    if kind == "C":
        return tuple(Fraction(k - i) for i in range(k))
    return tuple(Fraction(k - i - 1) for i in range(k))


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def weight_multiplicities(kind: str, lam: Sequence[Fraction]) -> dict[Vec, int]:
    """Full weight system of the irrep via the Freudenthal recursion.

    ``kind`` is one of A (gl on len(lam) coordinates), B, C, D.  Half-integer
    weights are handled by doubling; the returned weights are in the original
    scale.
    """
    lam = tuple(as_fraction(x) for x in lam)
    k = len(lam)
    if k == 0:
        return {(): 1}
    doubled = any(x.denominator == 2 for x in lam)
    scale = 2 if doubled else 1
    lam_i = tuple(int(x * scale) for x in lam)
    roots = [tuple(scale * c for c in r) for r in _positive_roots(kind, k)]
    simples = [tuple(scale * c for c in r) for r in _simple_roots(kind, k)]
    if not simples and not roots:
        return {lam: 1}  # rank-1 even orthogonal: a character
    rho = tuple(x * scale for x in _rho(kind, k))
    lam_rho = tuple(Fraction(a) + b for a, b in zip(lam_i, rho))
    norm_top = _dot(lam_rho, lam_rho)

    mult: dict[tuple[int, ...], int] = {lam_i: 1}
    # Process by increasing depth below the top weight; every weight is
    # reachable from the top through weights by subtracting simple roots.
    from heapq import heappop, heappush

    delta = tuple(k - i for i in range(k))  # positive on every positive root

    def level(mu: tuple[int, ...]) -> int:
        return sum((a - b) * d for a, b, d in zip(lam_i, mu, delta))

    seen = {lam_i}
    heap: list[tuple[int, tuple[int, ...]]] = []
    for s in simples:
        child = tuple(a - b for a, b in zip(lam_i, s))
        if child not in seen:
            seen.add(child)
            heappush(heap, (level(child), child))
    while heap:
        _, mu = heappop(heap)
        mu_rho = tuple(Fraction(a) + b for a, b in zip(mu, rho))
        denom = norm_top - _dot(mu_rho, mu_rho)
        if denom <= 0:
            continue
        total = Fraction(0)
        for alpha in roots:
            up = mu
            while True:
                up = tuple(a + b for a, b in zip(up, alpha))
                if level(up) < 0:
                    break
                m_up = mult.get(up, 0)
                if m_up:
                    total += 2 * m_up * _dot(up, alpha)
        m = total / denom
        assert m.denominator == 1 and m >= 0
        if m:
            mult[mu] = int(m)
            for s in simples:
                child = tuple(a - b for a, b in zip(mu, s))
                if child not in seen:
                    seen.add(child)
                    heappush(heap, (level(child), child))
    if scale == 1:
        return {tuple(Fraction(c) for c in mu): m for mu, m in mult.items()}
    return {tuple(Fraction(c, 2) for c in mu): m for mu, m in mult.items()}


# ---------------------------------------------------------------------------
# Branching by restriction and dominant peeling


@dataclass
class BranchingTable:
    series: Series
    table: dict[Vec, int]

    def to_json(self) -> dict:
        return {
            "multiplicities": {
                ",".join(str(x) for x in nu): m for nu, m in sorted(self.table.items())
            }
        }


def _sub_kind(series: Series) -> str:
    return series.kind


def _is_dominant_sub(series: Series, nu: Vec) -> bool:
    if series.kind == "A":
        return all(a >= b for a, b in zip(nu, nu[1:]))
    if len(nu) == 1:
        return series.kind == "D" or nu[0] >= 0
    chain = nu[:-1] + ((abs(nu[-1]),) if series.kind == "D" else (nu[-1],))
    return all(a >= b for a, b in zip(chain, chain[1:])) and chain[-1] >= 0


def branching_multiplicities(series: Series, w: HighestWeight, bound: int = 3) -> BranchingTable:
    """Restrict the weight system to the subalgebra Cartan and peel off
    subalgebra irreps greedily from lexicographically maximal weights."""
    if any(abs(x) > bound for x in w.m):
        raise ValueError(f"weight entries exceed the brute-force bound {bound}")
    n = series.n
    if series.kind == "A":
        full = weight_multiplicities("A", tuple(w.m) + (Fraction(0),))
        keep = n - 1
    else:
        full = weight_multiplicities(series.kind, w.m)
        keep = n - 1
    restricted: dict[Vec, int] = {}
    for mu, m in full.items():
        nu = mu[:keep]
        restricted[nu] = restricted.get(nu, 0) + m
    table: dict[Vec, int] = {}
    while restricted:
        nu = max(restricted)
        if not _is_dominant_sub(series, nu):
            raise AssertionError(f"peeling hit a non-dominant maximal weight {nu}")
        count = restricted[nu]
        if count <= 0:
            raise AssertionError("peeling went negative; oracle inconsistency")
        table[nu] = table.get(nu, 0) + count
        if series.kind == "D" and len(nu) == 1:
            sub_weights: dict[Vec, int] = {nu: 1}
        else:
            sub_weights = weight_multiplicities(series.kind, nu)
        for mu, m in sub_weights.items():
            s = restricted.get(mu, 0) - m * count
            if s:
                restricted[mu] = s
            else:
                restricted.pop(mu, None)
    bt = BranchingTable(series, table)
    total = sum(m * subalgebra_dimension(series, nu) for nu, m in table.items())
    if total != weyl_dimension(series, w):
        raise AssertionError("branching table fails the dimension invariant")
    return bt


def verify_branching(
    series: Series,
    w: HighestWeight,
    trials: int = 50,
    seed: int = 0,
    jobs: int = 1,
) -> dict:
    """Full cross-check of the constructed basis against the oracle.

    Compares per-s-row tableau counts with the restriction multiplicities,
    the dimension bookkeeping against the Weyl formula, and runs the
    annihilation, weight and rank checks on every constructed vector.
    """
    from collections import Counter
    from concurrent.futures import ThreadPoolExecutor

    from .algebra import subalgebra_generators
    from .extension import enumerate_tableaux_n, vector_of_tableau_n, weight_of_tableau_n
    from .minors import cartan_weight, reported_weight_component, right_act
    from .oracle import evaluation_rank, zero_test

    tableaux = enumerate_tableaux_n(series, w)
    rows = [weight_of_tableau_n(t) for t in tableaux]
    counts = Counter(srow for srow, _ in rows)
    table = branching_multiplicities(series, w).table
    counts_ok = dict(counts) == table
    dim_total = sum(subalgebra_dimension(series, srow) for srow, _ in rows)
    dim_expected = weyl_dimension(series, w)
    vectors = [vector_of_tableau_n(t) for t in tableaux]
    raising = subalgebra_generators(series).raising

    def check_vector(idx: int) -> dict:
        v = vectors[idx]
        srow, comp = rows[idx]
        entry: dict = {"tableau": tableaux[idx].to_json()}
        cw = cartan_weight(v, series)
        weight_ok = cw.weight is not None and cw.weight[: series.n - 1] == srow
        comp_ok = weight_ok and reported_weight_component(v, series) == comp
        ann_ok = True
        for g in raising:
            acted = right_act(g, v, series)
            if acted.is_zero():
                continue
            if not zero_test(acted, series, trials=trials, seed=seed).is_zero:
                ann_ok = False
                entry["failing_generator"] = str(g)
                break
        entry.update(
            {"srow_matches": weight_ok, "component_matches": comp_ok, "annihilated": ann_ok}
        )
        return entry

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            vector_reports = list(pool.map(check_vector, range(len(tableaux))))
    else:
        vector_reports = [check_vector(i) for i in range(len(tableaux))]
    vectors_ok = all(
        r["srow_matches"] and r["component_matches"] and r["annihilated"]
        for r in vector_reports
    )
    rank = evaluation_rank(vectors, series, points=len(vectors) + 10, seed=seed) if vectors else 0
    rank_ok = rank == len(vectors)
    report = {
        "series": series.kind,
        "n": series.n,
        "weight": [str(x) for x in w.m],
        "tableau_count": len(tableaux),
        "counts_match_oracle": counts_ok,
        "dimension": {"constructed": dim_total, "weyl": dim_expected, "pass": dim_total == dim_expected},
        "rank": {"value": rank, "expected": len(vectors), "pass": rank_ok},
        "vectors": vector_reports,
        "pass": counts_ok and dim_total == dim_expected and vectors_ok and rank_ok,
    }
    return report
