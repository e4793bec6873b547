"""Batch-request planning over multiplicity codes.

Serving k symbols at once assigns each request its own direction family,
then drops from every line the points that other requests read.  A line
loses at most one point per foreign line (distinct lines meet in at most
one point, and directions from different families are never parallel), so
with d <= m*(q - k*m^(s-1) - 2) each line keeps enough points for
erasure interpolation and the k coordinate sets come out disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .multiplicity import MultCodeParams
from .pir import RecoveryPlan, build_direction_families, make_plan, recover_symbol


@dataclass(frozen=True)
class BatchParams:
    params: MultCodeParams
    k: int


def validate_batch_params(params: MultCodeParams, k: int) -> BatchParams:
    """Check the batch inequalities; a violation names the one that failed.

    k = 0 is vacuously fine: there is nothing to serve.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return BatchParams(params=params, k=0)
    m, d, s, q = params.m, params.d, params.s, params.q
    bound = m * (q - k * m ** (s - 1) - 2)
    if d > bound:
        raise ValueError(
            f"d <= m*(q - k*m^(s-1) - 2) violated: d={d} > {bound}")
    if k > params.k_pir:
        raise ValueError(
            f"k <= floor(q/m)^(s-1) violated: k={k} > {params.k_pir}")
    return BatchParams(params=params, k=k)


@dataclass(frozen=True)
class BatchPlan:
    request: tuple  # sorted multiset of target points
    plans: tuple    # one RecoveryPlan per request, pairwise disjoint


def _full_line(params, w0, v):
    field = params.field
    return frozenset(tuple(field.add(a, field.mul(lam, b)) for a, b in zip(w0, v))
                     for lam in range(params.q))


def plan_batch(bp: BatchParams, request) -> BatchPlan:
    """Disjoint recovering plans for a multiset of k target points.

    Requests are served in sorted order; request j uses direction family
    j and drops every line point that is another request's target or lies
    on any of another request's lines.
    """
    params = bp.params
    request = tuple(sorted(tuple(w) for w in request))
    if len(request) != bp.k:
        raise ValueError(f"expected {bp.k} requests, got {len(request)}")
    families = build_direction_families(params.q, params.m, params.s)
    grids = [families.grids[j] for j in range(len(request))]
    line_points = [frozenset().union(*(_full_line(params, w0, v) for v in grid))
                   for w0, grid in zip(request, grids)]
    drop_budget = bp.k * params.m ** (params.s - 1)
    field = params.field
    plans = []
    for j, w0 in enumerate(request):
        foreign = set()
        for j2 in range(len(request)):
            if j2 != j:
                foreign.add(request[j2])
                foreign.update(line_points[j2])
        lines = []
        for v in grids[j]:
            drops = set()
            for lam in range(1, params.q):
                pt = tuple(field.add(a, field.mul(lam, b)) for a, b in zip(w0, v))
                if pt in foreign:
                    drops.add(lam)
            assert len(drops) <= drop_budget, \
                f"line through {w0} exceeded its drop budget: {sorted(drops)}"
            lines.append((v, frozenset(drops)))
        plans.append(make_plan(params, w0, j, lines))
    for a in range(len(plans)):
        for b in range(a + 1, len(plans)):
            assert not (plans[a].coordinates & plans[b].coordinates), \
                "planned coordinate sets overlap"
    return BatchPlan(request=request, plans=tuple(plans))


def recover_batch(codeword, batch_plan: BatchPlan) -> list:
    """Recover each requested symbol from its plan, in request order."""
    return [recover_symbol(codeword, plan) for plan in batch_plan.plans]


# ---------------------------------------------------------------------------
# redundancy-exponent curves for batch availability n^eps
# ---------------------------------------------------------------------------

def batch_delta_qary(eps) -> Fraction:
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError("eps must be >= 0")
    if eps >= Fraction(1, 2):
        return Fraction(1, 2) + eps
    return Fraction(3, 4) + eps / 2


def batch_delta_binary(eps) -> Fraction:
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError("eps must be >= 0")
    if eps >= Fraction(1, 2):
        return Fraction(1, 2) + eps
    return Fraction(5, 6) + eps / 3


def batch_delta_curves(eps_grid, variant="qary") -> list:
    if variant not in ("qary", "binary"):
        raise ValueError(f"unknown variant {variant!r}")
    delta = batch_delta_qary if variant == "qary" else batch_delta_binary
    return [{"epsilon": Fraction(eps), "delta": delta(eps), "variant": variant}
            for eps in eps_grid]
