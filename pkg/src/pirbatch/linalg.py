"""Dense linear algebra over a Field: elimination, inversion, span tests.

Matrices are lists of row lists of ints.  Everything here is exact and
desk-scale; a bitmask fast path covers GF(2).
"""

from __future__ import annotations


def matvec(field, rows, v):
    out = []
    for row in rows:
        acc = 0
        for a, x in zip(row, v):
            if a and x:
                acc = field.add(acc, field.mul(a, x))
        out.append(acc)
    return out


def matmul(field, a_rows, b_rows):
    cols = list(zip(*b_rows))
    return [[_dot(field, row, col) for col in cols] for row in a_rows]


def _dot(field, u, v):
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc


def invert(field, rows):
    """Inverse of a square matrix; ValueError if singular."""
    n = len(rows)
    work = [list(r) + [1 if i == j else 0 for j in range(n)]
            for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        inv_p = field.inv(work[col][col])
        work[col] = [field.mul(inv_p, x) for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [field.sub(x, field.mul(f, y))
                           for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def row_echelon_with_combos(field, rows):
    """Reduce rows to echelon form, tracking each output row as a
    combination of the inputs.

    Returns (ech, combos, pivot_cols): ech[i] has leading 1 at
    pivot_cols[i], and ech[i] == combos[i] @ rows.
    """
    width = len(rows[0]) if rows else 0
    nrows = len(rows)
    ech, combos, pivot_cols = [], [], []
    for ridx, row in enumerate(rows):
        vec = list(row)
        combo = [0] * nrows
        combo[ridx] = 1
        for i, pc in enumerate(pivot_cols):
            c = vec[pc]
            if c:
                vec = [field.sub(x, field.mul(c, y)) for x, y in zip(vec, ech[i])]
                combo = [field.sub(x, field.mul(c, y)) for x, y in zip(combo, combos[i])]
        lead = next((j for j in range(width) if vec[j]), None)
        if lead is None:
            continue
        inv_l = field.inv(vec[lead])
        ech.append([field.mul(inv_l, x) for x in vec])
        combos.append([field.mul(inv_l, x) for x in combo])
        pivot_cols.append(lead)
    return ech, combos, pivot_cols


def solve_in_span(field, columns, target):
    """Coefficients expressing ``target`` as a combination of ``columns``,
    or None when target is outside their span.

    Free coefficients are set to zero, so the answer is deterministic.
    """
    if not columns:
        return [] if not any(target) else None
    n = len(target)
    if field.q == 2:
        masks = [_pack(col) for col in columns]
        sol = solve_in_span_gf2(masks, _pack(target))
        return None if sol is None else [(sol >> i) & 1 for i in range(len(columns))]
    # eliminate on rows of [columns | target]
    work = [[col[r] for col in columns] + [target[r]] for r in range(n)]
    ncols = len(columns)
    ech, _, pivot_cols = row_echelon_with_combos(field, work)
    if ncols in pivot_cols:
        return None  # pivot in the target column: inconsistent
    coeffs = [0] * ncols
    for row, pc in reversed(list(zip(ech, pivot_cols))):
        acc = row[ncols]
        for j in range(pc + 1, ncols):
            if row[j] and coeffs[j]:
                acc = field.sub(acc, field.mul(row[j], coeffs[j]))
        coeffs[pc] = acc
    return coeffs


def _pack(vec):
    m = 0
    for i, v in enumerate(vec):
        if v:
            m |= 1 << i
    return m


def solve_in_span_gf2(column_masks, target_mask):
    """GF(2) span membership on bitmask columns.

    Returns a mask over column indices whose XOR equals the target, or
    None when unreachable.
    """
    basis = []  # (vector, combo) with distinct leading bits, descending
    for idx, col in enumerate(column_masks):
        v, combo = col, 1 << idx
        for bv, bc in basis:
            if v ^ bv < v:
                v ^= bv
                combo ^= bc
        if v:
            basis.append((v, combo))
            basis.sort(key=lambda t: -t[0])
    t, sol = target_mask, 0
    for bv, bc in basis:
        if t ^ bv < t:
            t ^= bv
            sol ^= bc
    return sol if t == 0 else None
