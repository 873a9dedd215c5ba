"""Upper bounds on the largest Laplacian eigenvalue.

Every bound lands in a BoundReport carrying the bound value, the computed
lambda_n, the slack, and a witness for where the maximum was attained, so
callers can both rank bounds and audit them.  ``holds`` uses a relative
tolerance of 1e-8 scaled by max(1, lambda_n).
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import Hypergraph, adjacency_matrix, degree_profile, laplacian
from .errors import (
    BadWeightFunctionError,
    NoEdgesError,
    NotUniformError,
    TooSmallError,
)
from .spectral import eigendecompose, lambda_n as _lambda_n

HOLDS_TOL = 1e-8


@dataclass(frozen=True)
class NeighborhoodProfile:
    """Per-vertex neighbor sets and mean neighbor degree m_i.

    ``mean_degree[i]`` averages d_j over the distinct neighbors j of i by
    default; the weighted variant averages with adjacency multiplicities,
    (sum_j a_ij d_j) / d_i.  NaN where d_i == 0.
    """

    neighbor_sets: tuple
    mean_degree: np.ndarray
    weighted: bool


def neighborhood_profile(h: Hypergraph, weighted: bool = False) -> NeighborhoodProfile:
    a = adjacency_matrix(h)
    d = degree_profile(h).d.astype(np.float64)
    sets = tuple(frozenset(np.flatnonzero(a[i]).tolist()) for i in range(h.n))
    with np.errstate(invalid="ignore", divide="ignore"):
        if weighted:
            mean = (a @ d) / d
        else:
            mean = ((a > 0).astype(np.float64) @ d) / d
    mean[d == 0] = np.nan
    return NeighborhoodProfile(sets, mean, weighted)


@dataclass(frozen=True)
class BoundReport:
    name: str
    value: float
    lambda_n: float
    slack: float
    holds: bool
    witness: Optional[tuple]


def _report(name: str, value: float, lam: float, witness) -> BoundReport:
    slack = value - lam
    return BoundReport(
        name=name,
        value=float(value),
        lambda_n=float(lam),
        slack=float(slack),
        holds=bool(slack >= -HOLDS_TOL * max(1.0, lam)),
        witness=witness,
    )


def _resolve_lambda_n(h: Hypergraph, lam: Optional[float]) -> float:
    if lam is not None:
        return float(lam)
    if h.n < 2:
        raise TooSmallError("eigenvalue bounds need at least two vertices")
    return _lambda_n(eigendecompose(laplacian(h)))


def _adjacent_pairs(h: Hypergraph, a: np.ndarray):
    pairs = [
        (i, j)
        for i in range(h.n)
        for j in range(i + 1, h.n)
        if a[i, j] > 0
    ]
    if not pairs:
        raise NoEdgesError("bound over adjacent pairs needs at least one edge")
    return pairs


def _max_over_pairs(pairs, score) -> tuple:
    best = None
    best_pair = None
    for i, j in pairs:
        s = score(i, j)
        if best is None or s > best:
            best, best_pair = s, (i, j)
    return best, best_pair


def bound_twice_max_delta(h: Hypergraph, lambda_n: Optional[float] = None) -> BoundReport:
    """lambda_n <= 2 * max_i delta_i."""
    lam = _resolve_lambda_n(h, lambda_n)
    delta = degree_profile(h).delta
    i = int(np.argmax(delta))
    return _report("twice_max_laplacian_degree", 2.0 * float(delta[i]), lam, (i,))


def bound_delta_pair_sum(h: Hypergraph, lambda_n: Optional[float] = None) -> BoundReport:
    """lambda_n <= max over adjacent pairs of delta_i + delta_j."""
    lam = _resolve_lambda_n(h, lambda_n)
    a = adjacency_matrix(h)
    delta = degree_profile(h).delta
    value, pair = _max_over_pairs(
        _adjacent_pairs(h, a), lambda i, j: float(delta[i] + delta[j])
    )
    return _report("adjacent_laplacian_degree_sum", value, lam, pair)


def zhu_generic_bound(
    h: Hypergraph,
    f: Callable[[int, int], float],
    strict_exclusion: bool = False,
    lambda_n: Optional[float] = None,
) -> BoundReport:
    """lambda_n <= max over adjacent i~j of
    |N(i) & N(j)| + (sum_{l in N(i)\\N(j)} f(i,l) + sum_{l in N(j)\\N(i)} f(j,l)) / f(i,j)
    for any symmetric positive f on adjacent pairs.

    By default the difference sets are taken literally, so l may hit j (or
    i); ``strict_exclusion`` drops both endpoints from the sums.
    """
    lam = _resolve_lambda_n(h, lambda_n)
    a = adjacency_matrix(h)
    profile = neighborhood_profile(h)
    sets = profile.neighbor_sets
    pairs = _adjacent_pairs(h, a)

    def score(i: int, j: int) -> float:
        fij = float(f(i, j))
        if not fij > 0.0:
            raise BadWeightFunctionError(
                f"f({i},{j}) = {fij} but adjacent pairs need f > 0"
            )
        only_i = sets[i] - sets[j]
        only_j = sets[j] - sets[i]
        if strict_exclusion:
            only_i = only_i - {i, j}
            only_j = only_j - {i, j}
        total = sum(float(f(i, l)) for l in only_i)
        total += sum(float(f(j, l)) for l in only_j)
        return len(sets[i] & sets[j]) + total / fij

    value, pair = _max_over_pairs(pairs, score)
    name = "generic_weight" + ("_strict" if strict_exclusion else "")
    return _report(name, value, lam, pair)


def bound_zhu_uniform(h: Hypergraph, lambda_n: Optional[float] = None) -> BoundReport:
    """Degree/mean-degree bound for uniform hypergraphs:
    lambda_n <= max over adjacent i~j of
    [d_i(d_i + m_i) + d_j(d_j + m_j) - 2 * sum_{l in N(i) & N(j)} d_l] / (d_i + d_j).

    Sharp for 2-graphs; k >= 3 can break it (the battery records offenders).
    """
    lam = _resolve_lambda_n(h, lambda_n)
    dp = degree_profile(h)
    if h.m == 0:
        raise NoEdgesError("uniform degree bound needs at least one edge")
    if dp.k_min != dp.k_max:
        raise NotUniformError(
            f"edge sizes range over [{dp.k_min}, {dp.k_max}]; bound needs a uniform hypergraph"
        )
    value, pair = _zhu_bracket_max(h, weighted=False)
    return _report("zhu_uniform", value, lam, pair)


def bound_zhu_nonuniform(
    h: Hypergraph,
    weighted: bool = False,
    lambda_n: Optional[float] = None,
) -> BoundReport:
    """Uniform bracket scaled by (k_max - 1)/(k_min - 1) for mixed edge
    sizes.  ``weighted`` swaps in multiplicity-weighted neighbor sums (and a
    min-multiplicity common term); both readings are recorded by the battery
    because neither survives every instance.
    """
    lam = _resolve_lambda_n(h, lambda_n)
    dp = degree_profile(h)
    if h.m == 0:
        raise NoEdgesError("degree bound needs at least one edge")
    factor = (dp.k_max - 1) / (dp.k_min - 1)
    value, pair = _zhu_bracket_max(h, weighted=weighted)
    name = "zhu_nonuniform" + ("_weighted" if weighted else "")
    return _report(name, factor * value, lam, pair)


def _zhu_bracket_max(h: Hypergraph, weighted: bool) -> tuple:
    a = adjacency_matrix(h)
    d = degree_profile(h).d.astype(np.float64)
    pairs = _adjacent_pairs(h, a)
    support = a > 0

    def score(i: int, j: int) -> float:
        if weighted:
            sum_i = float(a[i] @ d)
            sum_j = float(a[j] @ d)
            common = float(np.minimum(a[i], a[j]) @ d)
        else:
            sum_i = float(d[support[i]].sum())
            sum_j = float(d[support[j]].sum())
            common = float(d[support[i] & support[j]].sum())
        num = d[i] * d[i] + sum_i + d[j] * d[j] + sum_j - 2.0 * common
        return num / (d[i] + d[j])

    return _max_over_pairs(pairs, score)


@dataclass(frozen=True)
class EdgeDegreeSumCheck:
    """Max over edges of the in-edge degree sum, versus lambda_n.

    exceeded=True exhibits a hypergraph whose lambda_n is larger than every
    edge's degree sum -- possible once edges overlap enough.
    """

    edge_max: int
    lambda_n: float
    exceeded: bool
    witness_edge: Optional[tuple]


def check_edge_degree_sum(h: Hypergraph, lambda_n: Optional[float] = None) -> EdgeDegreeSumCheck:
    lam = _resolve_lambda_n(h, lambda_n)
    d = degree_profile(h).d
    best = 0
    witness = None
    for edge in h.edges:
        total = int(sum(d[v] for v in edge))
        if total > best:
            best, witness = total, edge
    return EdgeDegreeSumCheck(
        edge_max=best,
        lambda_n=lam,
        exceeded=bool(lam > best + HOLDS_TOL * max(1.0, lam)),
        witness_edge=witness,
    )


def all_bounds(h: Hypergraph, lambda_n: Optional[float] = None) -> list:
    """Every applicable bound, in a fixed order (for reports)."""
    lam = _resolve_lambda_n(h, lambda_n)
    out = [bound_twice_max_delta(h, lam)]
    if h.m > 0:
        out.append(bound_delta_pair_sum(h, lam))
        dp = degree_profile(h)
        if dp.k_min == dp.k_max:
            out.append(bound_zhu_uniform(h, lam))
        out.append(bound_zhu_nonuniform(h, weighted=False, lambda_n=lam))
        out.append(bound_zhu_nonuniform(h, weighted=True, lambda_n=lam))
    return out
