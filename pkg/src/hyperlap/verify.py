"""Batch verification: hard invariants and recorded empirical claims.

Hard checks must hold on every instance (within stated tolerances) and any
failure fails the whole report.  Recorded claims are bounds that provably
cannot hold universally; the battery counts violations and keeps witnesses
instead of failing.  Everything is deterministic for a fixed instance list.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Optional

import numpy as np

from .bounds import (
    HOLDS_TOL,
    bound_delta_pair_sum,
    bound_twice_max_delta,
    bound_zhu_nonuniform,
    bound_zhu_uniform,
    check_edge_degree_sum,
)
from .core import (
    Hypergraph,
    adjacency_matrix,
    connected_components,
    degree_profile,
    laplacian,
)
from .cuts import (
    ENUMERATION_CAP,
    _scan_arrays,
    fiedler_sweep,
    isoperimetric,
    max_cut,
)
from .generators import SplitMix64, random_hypergraph
from .spectral import (
    eigendecompose,
    spectral_component_count,
    zero_threshold,
)

_WITNESS_CAP = 5
_FAILURE_CAP = 5

# Full quadratic-identity cross-check up to this n; sampled masks beyond.
_FULL_QUAD_N = 12
_QUAD_SAMPLES = 256


@dataclass
class CheckResult:
    """One hard check aggregated over every instance."""

    name: str
    checked: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def record(self, instance: str, detail: Optional[str]) -> None:
        self.checked += 1
        if detail is not None:
            self.failed += 1
            if len(self.failures) < _FAILURE_CAP:
                self.failures.append(f"{instance}: {detail}")


@dataclass
class RecordedClaim:
    """A bound checked but allowed to fail; violations are collected."""

    name: str
    checked: int = 0
    violations: int = 0
    witnesses: list = field(default_factory=list)

    def record(self, witness: Optional[dict]) -> None:
        self.checked += 1
        if witness is not None:
            self.violations += 1
            if len(self.witnesses) < _WITNESS_CAP:
                self.witnesses.append(witness)


@dataclass
class VerifyReport:
    source: str
    instance_count: int
    hard_checks: list
    recorded: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.hard_checks)


class _Instance:
    """Shared per-instance computations for the checks."""

    def __init__(self, name: str, h: Hypergraph, index: int):
        self.name = name
        self.h = h
        self.index = index
        self.dp = degree_profile(h)
        self.a = adjacency_matrix(h)
        self.lap = laplacian(h)
        self.fro = float(np.linalg.norm(self.lap, "fro"))
        self.spectrum = eigendecompose(self.lap)
        self.lam = self.spectrum.eigenvalues
        self.lam_n = float(self.lam[-1]) if h.n >= 2 else 0.0
        self.components = connected_components(h)
        self.connected = len(self.components) == 1
        self.enumerable = h.n <= ENUMERATION_CAP
        self._scan = None

    def scan(self):
        if self._scan is None:
            self._scan = _scan_arrays(self.h)
        return self._scan


def _check_laplacian_structure(ctx: _Instance) -> Optional[str]:
    h, a, dp = ctx.h, ctx.a, ctx.dp
    if not np.array_equal(a, a.T):
        return "adjacency not symmetric"
    if np.any(np.diagonal(a) != 0):
        return "adjacency diagonal not zero"
    if np.any(a < 0) or np.any(a != np.floor(a)):
        return "adjacency entries not nonnegative integers"
    d = dp.d
    cap = np.minimum.outer(d, d)
    np.fill_diagonal(cap, 0)
    if np.any(a > cap):
        return "pair multiplicity exceeds min(d_i, d_j)"
    if not np.array_equal(a.sum(axis=1), dp.delta.astype(np.float64)):
        return "delta differs from adjacency row sums"
    if np.any(ctx.lap.sum(axis=1) != 0):
        return "Laplacian row sums not exactly zero"
    if h.m > 0:
        if np.any(dp.delta < (dp.k_min - 1) * d) or np.any(
            dp.delta > (dp.k_max - 1) * d
        ):
            return "delta outside [(k_min-1) d, (k_max-1) d]"
        if dp.k_min == dp.k_max and np.any(dp.delta != (dp.k_min - 1) * d):
            return "uniform hypergraph with delta != (k-1) d"
    return None


def _check_spectrum_certificates(ctx: _Instance) -> Optional[str]:
    lam, vec = ctx.spectrum.eigenvalues, ctx.spectrum.eigenvectors
    scale = max(1.0, ctx.fro)
    residual = float(
        np.max(np.linalg.norm(ctx.lap @ vec - vec * lam, axis=0))
    )
    if residual > 1e-8 * scale:
        return f"eigen residual {residual:.3e}"
    ortho = float(np.max(np.abs(vec.T @ vec - np.eye(ctx.h.n))))
    if ortho > 1e-10:
        return f"eigenvectors not orthonormal ({ortho:.3e})"
    if np.any(np.diff(lam) < 0):
        return "eigenvalues not ascending"
    if float(lam[0]) < -1e-10 * scale:
        return f"negative eigenvalue {float(lam[0]):.3e}"
    trace = float(np.trace(ctx.lap))
    if abs(float(lam.sum()) - trace) > 1e-8 * max(1.0, abs(trace)):
        return "eigenvalue sum differs from trace"
    return None


def _check_connectivity_agreement(ctx: _Instance) -> Optional[str]:
    thr = zero_threshold(ctx.lap)
    count = spectral_component_count(ctx.spectrum, thr)
    if count != len(ctx.components):
        return (
            f"zero multiplicity {count} != component count {len(ctx.components)}"
        )
    if ctx.h.n >= 2:
        spectral = float(ctx.lam[1]) > thr
        if spectral != ctx.connected:
            return "spectral connectivity disagrees with union-find"
    return None


def _check_degree_bounds(ctx: _Instance) -> Optional[str]:
    twice = bound_twice_max_delta(ctx.h, ctx.lam_n)
    if not twice.holds:
        return f"2 max delta = {twice.value} < lambda_n = {twice.lambda_n}"
    if ctx.h.m == 0:
        return None
    pair = bound_delta_pair_sum(ctx.h, ctx.lam_n)
    if not pair.holds:
        return f"max delta_i+delta_j = {pair.value} < lambda_n = {pair.lambda_n}"
    if pair.value > twice.value:
        return "pair-sum bound exceeds twice-max bound"
    return None


def _check_zhu_two_graph(ctx: _Instance) -> Optional[str]:
    if ctx.h.m == 0 or not (ctx.dp.k_min == ctx.dp.k_max == 2):
        return None
    rep = bound_zhu_uniform(ctx.h, ctx.lam_n)
    if not rep.holds:
        return f"2-graph bound {rep.value} < lambda_n {rep.lambda_n}"
    return None


def _check_subset_sandwich(ctx: _Instance) -> Optional[str]:
    if not ctx.enumerable or ctx.h.m == 0 or ctx.h.n < 2:
        return None
    boundary, _, sizes = ctx.scan()
    n, dp = ctx.h.n, ctx.dp
    lam2 = float(ctx.lam[1])
    pairs = sizes.astype(np.float64) * (n - sizes.astype(np.float64))
    lower = 4.0 * lam2 * pairs / (n * dp.k_max**2)
    upper = ctx.lam_n * pairs / (n * (dp.k_min - 1))
    b = boundary.astype(np.float64)
    bad_low = np.flatnonzero(b < lower - 1e-8)
    if bad_low.size:
        s = int(bad_low[0])
        return f"boundary {boundary[s]} below lower bound {lower[s]:.6f} (mask {s})"
    bad_high = np.flatnonzero(b > upper + 1e-8)
    if bad_high.size:
        s = int(bad_high[0])
        return f"boundary {boundary[s]} above upper bound {upper[s]:.6f} (mask {s})"
    return None


def _check_quadratic_identity(ctx: _Instance) -> Optional[str]:
    if not ctx.enumerable:
        return None
    _, quad, _ = ctx.scan()
    n = ctx.h.n
    p = n - 1
    lap_int = ctx.lap.astype(np.int64)
    if n <= _FULL_QUAD_N:
        masks = np.arange(1 << p, dtype=np.int64)
    else:
        rng = SplitMix64(0xA5C3 + ctx.index)
        masks = np.array(
            sorted({rng.randrange(1 << p) for _ in range(_QUAD_SAMPLES)}),
            dtype=np.int64,
        )
    chi = ((masks[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.int64)
    expected = np.einsum("si,ij,sj->s", chi, lap_int, chi)
    if not np.array_equal(quad[masks], expected):
        bad = int(masks[np.flatnonzero(quad[masks] != expected)[0]])
        return f"edge-contribution sum differs from chi^T L chi (mask {bad})"
    return None


def _check_maxcut_iso_bounds(ctx: _Instance) -> Optional[str]:
    if not ctx.enumerable or ctx.h.m == 0 or ctx.h.n < 2:
        return None
    n, dp = ctx.h.n, ctx.dp
    mc, _ = max_cut(ctx.h)
    bound = n * ctx.lam_n / (4.0 * (dp.k_min - 1))
    if mc > bound + 1e-8:
        return f"max cut {mc} above n lambda_n / (4 (k_min - 1)) = {bound:.6f}"
    if ctx.connected:
        iso, _ = isoperimetric(ctx.h)
        low = 2.0 * float(ctx.lam[1]) / dp.k_max**2
        if float(iso) < low - 1e-8:
            return f"isoperimetric {iso} below 2 lambda_2 / k_max^2 = {low:.6f}"
    return None


def _check_sweep_ratio(ctx: _Instance) -> Optional[str]:
    if not ctx.enumerable or not ctx.connected or ctx.h.n < 2 or ctx.h.m == 0:
        return None
    subset, report = fiedler_sweep(ctx.h, ctx.spectrum)
    ratio = Fraction(report.boundary_size, len(subset))
    iso, _ = isoperimetric(ctx.h)
    if ratio < iso:
        return f"sweep ratio {ratio} below isoperimetric number {iso}"
    return None


_HARD_CHECKS = (
    ("laplacian_structure", _check_laplacian_structure),
    ("spectrum_certificates", _check_spectrum_certificates),
    ("connectivity_agreement", _check_connectivity_agreement),
    ("degree_bounds", _check_degree_bounds),
    ("zhu_two_graph", _check_zhu_two_graph),
    ("subset_sandwich", _check_subset_sandwich),
    ("quadratic_identity", _check_quadratic_identity),
    ("maxcut_iso_bounds", _check_maxcut_iso_bounds),
    ("sweep_ratio", _check_sweep_ratio),
)


def _record_zhu(ctx: _Instance, weighted: bool) -> Optional[dict]:
    if ctx.h.m == 0 or ctx.h.n < 2:
        return None
    rep = bound_zhu_nonuniform(ctx.h, weighted=weighted, lambda_n=ctx.lam_n)
    if rep.holds:
        return None
    return {
        "instance": ctx.name,
        "bound": rep.value,
        "lambda_n": rep.lambda_n,
        "pair": list(rep.witness),
    }


def _record_zhu_uniform_k3(ctx: _Instance) -> Optional[dict]:
    dp = ctx.dp
    if ctx.h.m == 0 or ctx.h.n < 2 or dp.k_min != dp.k_max or dp.k_min < 3:
        return None
    rep = bound_zhu_uniform(ctx.h, ctx.lam_n)
    if rep.holds:
        return None
    return {
        "instance": ctx.name,
        "bound": rep.value,
        "lambda_n": rep.lambda_n,
        "pair": list(rep.witness),
    }


def _record_maxcut_printed(ctx: _Instance) -> Optional[dict]:
    if not ctx.enumerable or ctx.h.m == 0 or ctx.h.n < 2:
        return None
    mc, witness = max_cut(ctx.h)
    bound = ctx.h.n * ctx.lam_n / (4.0 * (ctx.dp.k_max - 1))
    if mc <= bound + 1e-8:
        return None
    return {
        "instance": ctx.name,
        "max_cut": mc,
        "bound": bound,
        "witness": list(witness),
    }


def _record_edge_degree_sum(ctx: _Instance) -> Optional[dict]:
    if ctx.h.m == 0 or ctx.h.n < 2:
        return None
    chk = check_edge_degree_sum(ctx.h, ctx.lam_n)
    if not chk.exceeded:
        return None
    return {
        "instance": ctx.name,
        "edge_max": chk.edge_max,
        "lambda_n": chk.lambda_n,
        "edge": list(chk.witness_edge),
    }


_RECORDED = (
    ("zhu_nonuniform_distinct", lambda ctx: _record_zhu(ctx, weighted=False)),
    ("zhu_nonuniform_weighted", lambda ctx: _record_zhu(ctx, weighted=True)),
    ("zhu_uniform_k3plus", _record_zhu_uniform_k3),
    ("maxcut_kmax_bound", _record_maxcut_printed),
    ("edge_degree_sum_exceeded", _record_edge_degree_sum),
)


def verify_instances(instances: Iterable, source: str) -> VerifyReport:
    """Run every check over (name, hypergraph) pairs."""
    checks = [CheckResult(name) for name, _ in _HARD_CHECKS]
    recorded = [RecordedClaim(name) for name, _ in _RECORDED]
    count = 0
    for index, (name, h) in enumerate(instances):
        ctx = _Instance(name, h, index)
        count += 1
        for result, (_, fn) in zip(checks, _HARD_CHECKS):
            result.record(name, fn(ctx))
        for claim, (_, fn) in zip(recorded, _RECORDED):
            claim.record(fn(ctx))
    return VerifyReport(
        source=source,
        instance_count=count,
        hard_checks=checks,
        recorded=recorded,
    )


def random_battery(
    n: int, m: int, k_min: int, k_max: int, count: int, seed: int
) -> list:
    """Fixed-shape battery: instance i uses seed ``seed + i``."""
    return [
        (
            f"random(n={n},m={m},k={k_min}..{k_max},seed={seed + i})",
            random_hypergraph(n, m, k_min, k_max, seed + i),
        )
        for i in range(count)
    ]


def varied_battery(
    count: int,
    base_seed: int,
    n_lo: int = 4,
    n_hi: int = 9,
    k_lo: int = 2,
    k_hi: int = 4,
    require: Optional[str] = None,
) -> list:
    """Battery with varied shapes, deterministic in base_seed.

    ``require`` filters by rejection: "connected" or "nonuniform".
    """
    out = []
    for i in range(count):
        rng = SplitMix64(base_seed + i)
        for _ in range(10_000):
            n = n_lo + rng.randrange(n_hi - n_lo + 1)
            hi = min(k_hi, n)
            lo = min(k_lo, hi)
            available = sum(comb(n, k) for k in range(lo, hi + 1))
            m = min(available, 2 + rng.randrange(n + 2))
            h = random_hypergraph(n, m, lo, hi, seed=rng.next_u64())
            if require == "connected" and len(connected_components(h)) != 1:
                continue
            if require == "nonuniform":
                dp = degree_profile(h)
                if dp.k_min == dp.k_max:
                    continue
            out.append((f"varied(seed={base_seed + i})", h))
            break
        else:  # pragma: no cover
            raise RuntimeError("battery rejection loop failed to terminate")
    return out
