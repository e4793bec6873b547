"""Construction-independent certification of availability claims.

Everything here works from a generator matrix and claimed coordinate
sets: linear-algebra recovering-set checks, exhaustive (or seeded,
sampled) PIR and batch certification, brute-force minimum distance, and
black-box generator extraction.  For linear codes, a symbol being a
function of a coordinate restriction is the same as the matching unit
vector lying in the restricted column span; the brute-force functional
oracle below cross-checks that equivalence at tiny sizes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .gf import CapacityError

MIN_DISTANCE_GUARD = 2 * 10 ** 7
FUNCTIONAL_ORACLE_GUARD = 10 ** 4
DEFAULT_REQUEST_LIMIT = 10 ** 6


@dataclass(frozen=True)
class GeneratorMatrix:
    """Systematic n x N generator: rows encode the unit messages and the
    columns at info_positions form an identity."""

    field: object
    rows: tuple
    info_positions: tuple

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def N(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)


def extract_generator(fld, encoder, n, N, trials=50, rng=None) -> GeneratorMatrix:
    """Rows are the encodings of the unit messages; additivity is
    certified on random message pairs before the matrix is trusted."""
    rng = rng or random.Random(0)
    rows = []
    for i in range(n):
        unit = [0] * n
        unit[i] = 1
        cw = list(encoder(unit))
        if len(cw) != N:
            raise ValueError(f"encoder returned length {len(cw)}, expected {N}")
        rows.append(cw)
    for _ in range(trials):
        a = [rng.randrange(fld.q) for _ in range(n)]
        b = [rng.randrange(fld.q) for _ in range(n)]
        ab = [fld.add(x, y) for x, y in zip(a, b)]
        lhs = list(encoder(ab))
        rhs = [fld.add(x, y) for x, y in zip(encoder(a), encoder(b))]
        if lhs != rhs:
            raise ValueError("encoder is not additive; cannot certify as linear")
    info = _detect_info_positions(fld, rows)
    return GeneratorMatrix(field=fld, rows=tuple(tuple(r) for r in rows),
                           info_positions=info)


def _detect_info_positions(fld, rows):
    n = len(rows)
    found = {}
    for j in range(len(rows[0])):
        col = tuple(row[j] for row in rows)
        nz = [r for r in range(n) if col[r]]
        if len(nz) == 1 and col[nz[0]] == 1 and nz[0] not in found:
            found[nz[0]] = j
    if len(found) < n:
        missing = [i for i in range(n) if i not in found]
        raise ValueError(f"encoder is not systematic: no unit column for rows {missing}")
    return tuple(found[i] for i in range(n))


def is_recovering_set(G: GeneratorMatrix, i: int, R):
    """Whether message symbol i is a function of the coordinates in R;
    for a linear code that is membership of the unit vector in the
    restricted column span.  Returns (ok, coefficients or None)."""
    target = [0] * G.n
    target[i] = 1
    return _solve_recovery(G, target, R)


def is_recovering_position(G: GeneratorMatrix, j: int, R):
    """Same test for an arbitrary codeword position j."""
    return _solve_recovery(G, list(G.column(j)), R)


def _solve_recovery(G, target, R):
    cols_idx = sorted(R)
    coeffs = linalg.solve_in_span(G.field, [G.column(j) for j in cols_idx], target)
    if coeffs is None:
        return False, None
    return True, {j: c for j, c in zip(cols_idx, coeffs) if c}


def recover_value(G: GeneratorMatrix, coeffs, codeword) -> int:
    """Apply recovery coefficients to codeword values."""
    fld = G.field
    acc = 0
    for j, c in coeffs.items():
        acc = fld.add(acc, fld.mul(c, codeword[j]))
    return acc


@dataclass
class Report:
    """Outcome of a certification run; failures are data, not errors."""

    kind: str
    total: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)  # (request_id, detail)
    seed: int | None = None
    sampled: bool = False

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.total > 0

    def record(self, request_id, detail=None):
        self.total += 1
        if detail is None:
            self.passed += 1
        else:
            self.failures.append((request_id, detail))

    def summary(self) -> dict:
        return {"total": self.total, "passed": self.passed,
                "failed": self.failed, "seed": self.seed}

    def csv_rows(self):
        yield ("request_id", "status", "detail")
        for rid, detail in self.failures:
            yield (rid, "fail", detail)
        if not self.failures:
            yield ("all", "pass", f"{self.passed} requests")


def _sets_disjoint(sets):
    seen = set()
    for s in sets:
        if seen & set(s):
            return False
        seen |= set(s)
    return True


def certify_pir(G: GeneratorMatrix, claims, k: int,
                position_targets=None) -> Report:
    """Check that every target's k claimed sets are valid recovering sets
    and pairwise disjoint.

    ``claims`` maps a target id to its list of coordinate sets.  By
    default a target id is a message index; ``position_targets`` may map
    target ids to lists of codeword positions instead, in which case each
    set must recover all of them.
    """
    report = Report(kind="pir")
    for target, sets in claims.items():
        problems = []
        if len(sets) != k:
            problems.append(f"expected {k} sets, got {len(sets)}")
        if not _sets_disjoint(sets):
            problems.append("sets overlap")
        for si, R in enumerate(sets):
            if position_targets is None:
                ok, _ = is_recovering_set(G, target, R)
                if not ok:
                    problems.append(f"set {si} does not recover message {target}")
            else:
                for pos in position_targets[target]:
                    ok, _ = is_recovering_position(G, pos, R)
                    if not ok:
                        problems.append(f"set {si} does not recover position {pos}")
        report.record(target, "; ".join(problems) or None)
    return report


def certify_batch(G: GeneratorMatrix, planner, k: int, requests,
                  positions_of=None, seed=None, sampled=False) -> Report:
    """Run the planner on every request and check validity plus pairwise
    disjointness of the returned sets.

    Requests are multisets of target ids; ``positions_of`` maps a target
    id to the codeword positions its set must recover (default: the id is
    a message index).
    """
    report = Report(kind="batch", seed=seed, sampled=sampled)
    for rid, request in enumerate(requests):
        try:
            sets = planner(request)
        except Exception as exc:  # planner failures are certification data
            report.record(rid, f"planner failed on {request}: {exc}")
            continue
        problems = []
        if len(sets) != len(request):
            problems.append(f"planner returned {len(sets)} sets for {request}")
        elif not _sets_disjoint(sets):
            problems.append(f"sets overlap for {request}")
        else:
            for target, R in zip(sorted(request), sets):
                if positions_of is None:
                    ok, _ = is_recovering_set(G, target, R)
                    if not ok:
                        problems.append(f"set for {target} in {request} invalid")
                else:
                    for pos in positions_of(target):
                        ok, _ = is_recovering_position(G, pos, R)
                        if not ok:
                            problems.append(
                                f"set for {target} in {request} misses position {pos}")
        report.record(rid, "; ".join(problems) or None)
    return report


def enumerate_requests(num_targets: int, k: int, targets=None,
                       limit=DEFAULT_REQUEST_LIMIT, seed=0):
    """All size-k multisets of targets, or a seeded sample when the full
    enumeration exceeds ``limit``.  Returns (requests, seed_used, sampled).
    """
    targets = list(targets) if targets is not None else list(range(num_targets))
    total = 1
    for i in range(k):
        total = total * (len(targets) + i) // (i + 1)  # C(n+k-1, k)
    if total <= limit:
        return itertools.combinations_with_replacement(targets, k), None, False
    rng = random.Random(seed)
    sample = (tuple(sorted(rng.choices(targets, k=k))) for _ in range(limit))
    return sample, seed, True


def min_distance(G: GeneratorMatrix, symbol_size: int = 1) -> int:
    """Exact minimum nonzero codeword weight by message enumeration.

    Weight counts nonzero blocks of ``symbol_size`` consecutive
    coordinates, so multi-component symbols can be scored as units.
    """
    fld = G.field
    q, n = fld.q, G.n
    if q ** n > MIN_DISTANCE_GUARD:
        raise CapacityError(f"{q}^{n} messages exceed the enumeration guard")
    if G.N % symbol_size:
        raise ValueError("symbol_size must divide the code length")
    if fld.e == 1:
        return _min_distance_prime(G, symbol_size)
    columns = list(zip(*G.rows))
    best = None
    for msg in itertools.product(range(q), repeat=n):
        if not any(msg):
            continue
        cw = linalg.matvec(fld, columns, list(msg))
        w = sum(1 for b in range(0, G.N, symbol_size)
                if any(cw[b:b + symbol_size]))
        if best is None or w < best:
            best = w
    return best


def _min_distance_prime(G, symbol_size):
    q, n, N = G.field.q, G.n, G.N
    gen = np.array(G.rows, dtype=np.int64)
    total = q ** n
    radix = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    best = N + 1
    chunk = 1 << 14
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = (idx[:, None] // radix) % q
        if start == 0:
            msgs = msgs[1:]  # drop the zero message
            if msgs.shape[0] == 0:
                continue
        cw = (msgs @ gen) % q
        weights = cw.reshape(cw.shape[0], -1, symbol_size).any(axis=2).sum(axis=1)
        best = min(best, int(weights.min()))
    return best


def functional_recovery_oracle(G: GeneratorMatrix, i: int, R) -> bool:
    """Brute-force check that message symbol i is determined by the
    restriction to R, by enumerating every message."""
    fld = G.field
    q, n = fld.q, G.n
    if q ** n > FUNCTIONAL_ORACLE_GUARD:
        raise CapacityError(f"{q}^{n} messages exceed the oracle guard")
    cols = [G.column(j) for j in sorted(R)]
    seen = {}
    for msg in itertools.product(range(q), repeat=n):
        key = tuple(linalg._dot(fld, msg, col) for col in cols)
        if seen.setdefault(key, msg[i]) != msg[i]:
            return False
    return True
