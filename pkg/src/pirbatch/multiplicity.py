"""Multiplicity codes: order-m derivative evaluations of bounded-degree
polynomials at every point of F_q^s, with a systematic view and
restriction of codewords to lines.

Codeword coordinates are indexed by the points of F_q^s in lexicographic
order of coordinate vectors (field elements in their canonical int
order).  Each symbol is the graded-lex vector of Hasse derivatives of
weight < m at that point, so the base-field layout is point-major,
derivative-component-minor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .gf import Field
from .mpoly import (
    Poly,
    count_degree,
    count_monomials,
    hasse_derivative,
    monomials_below,
    monomials_of_weight,
    monomials_up_to_degree,
    order_m_evaluation,
)


@dataclass(frozen=True)
class MultCodeParams:
    """Parameters (m, d, s, q): derivative order, degree bound, variable
    count and field."""

    field: Field
    m: int
    d: int
    s: int

    def __post_init__(self):
        if self.m < 1 or self.s < 1 or self.d < 0:
            raise ValueError("need m >= 1, s >= 1, d >= 0")
        if self.d >= self.m * self.q:
            raise ValueError(
                f"d={self.d} >= m*q={self.m * self.q}: encoding map is not injective")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def num_points(self) -> int:
        return self.q ** self.s

    @property
    def symbol_width(self) -> int:
        """Base-field entries per symbol."""
        return count_monomials(self.s, self.m)

    @property
    def base_length(self) -> int:
        return self.num_points * self.symbol_width

    @property
    def base_dim(self) -> int:
        return count_degree(self.s, self.d)

    @property
    def k_pir(self) -> int:
        return (self.q // self.m) ** (self.s - 1)


@lru_cache(maxsize=None)
def code_points(params: MultCodeParams) -> tuple:
    """All q^s coordinate points in codeword order."""
    return tuple(itertools.product(range(params.q), repeat=params.s))


def point_index(params: MultCodeParams, w) -> int:
    idx = 0
    for c in w:
        idx = idx * params.q + c
    return idx


def base_position(params: MultCodeParams, w, component: int) -> int:
    """Flat base-field index of one symbol component."""
    return point_index(params, w) * params.symbol_width + component


class MultCodeword:
    """One codeword: a symbol (order-m evaluation tuple) per point."""

    __slots__ = ("params", "symbols")

    def __init__(self, params: MultCodeParams, symbols):
        symbols = tuple(tuple(s) for s in symbols)
        if len(symbols) != params.num_points:
            raise ValueError("wrong number of symbols")
        if any(len(s) != params.symbol_width for s in symbols):
            raise ValueError("symbol width mismatch")
        self.params = params
        self.symbols = symbols

    def __getitem__(self, w) -> tuple:
        return self.symbols[point_index(self.params, w)]

    def base_values(self) -> list:
        """Flat base-field vector, point-major."""
        return [v for sym in self.symbols for v in sym]

    def __eq__(self, other):
        return (isinstance(other, MultCodeword)
                and self.params == other.params and self.symbols == other.symbols)

    @classmethod
    def from_base_values(cls, params, values):
        if len(values) != params.base_length:
            raise ValueError("wrong base-field length")
        w = params.symbol_width
        return cls(params, [tuple(values[i:i + w]) for i in range(0, len(values), w)])


def encode_poly(params: MultCodeParams, P: Poly) -> MultCodeword:
    """Evaluate all Hasse derivatives of weight < m at every point."""
    if P.field != params.field or P.s != params.s:
        raise ValueError("polynomial ring does not match the code parameters")
    if P.degree() > params.d:
        raise ValueError(f"degree {P.degree()} exceeds bound d={params.d}")
    derivs = [hasse_derivative(P, i) for i in monomials_below(params.s, params.m)]
    return MultCodeword(params, [tuple(D.evaluate(w) for D in derivs)
                                 for w in code_points(params)])


@dataclass(frozen=True)
class SystematicView:
    """Information positions plus the invertible map from information
    values to polynomial coefficients (rows index info symbols, columns
    index basis monomials in graded-lex order)."""

    params: MultCodeParams
    info_positions: tuple
    transform: tuple


@lru_cache(maxsize=None)
def systematic_view(params: MultCodeParams) -> SystematicView:
    """Deterministic systematic view: information positions are the first
    pivot columns of the generator map in coordinate order."""
    field = params.field
    basis = monomials_up_to_degree(params.s, params.d)
    rows = [encode_poly(params, Poly(field, params.s, {i: 1})).base_values()
            for i in basis]
    n = len(rows)
    pivots = []
    reduced = []  # echelon basis of the column space seen so far
    for col in range(params.base_length):
        vec = [row[col] for row in rows]
        for lead, bvec in reduced:
            c = vec[lead]
            if c:
                vec = [field.sub(x, field.mul(c, y)) for x, y in zip(vec, bvec)]
        lead = next((r for r in range(n) if vec[r]), None)
        if lead is not None:
            inv_l = field.inv(vec[lead])
            reduced.append((lead, [field.mul(inv_l, x) for x in vec]))
            pivots.append(col)
            if len(pivots) == n:
                break
    if len(pivots) < n:
        raise RuntimeError("generator map is rank deficient")
    sub = [[rows[r][c] for c in pivots] for r in range(n)]
    transform = linalg.invert(field, sub)
    return SystematicView(params, tuple(pivots),
                          tuple(tuple(r) for r in transform))


def coefficients_from_info(view: SystematicView, info) -> list:
    field = view.params.field
    n = len(view.info_positions)
    if len(info) != n:
        raise ValueError(f"expected {n} information symbols, got {len(info)}")
    # info row-vector times transform
    cols = list(zip(*view.transform))
    return [linalg._dot(field, info, col) for col in cols]


def systematic_encode(view: SystematicView, info) -> MultCodeword:
    """Encode so the base-field values at info_positions equal ``info``."""
    params = view.params
    coeffs = coefficients_from_info(view, info)
    basis = monomials_up_to_degree(params.s, params.d)
    P = Poly(params.field, params.s,
             {i: c for i, c in zip(basis, coeffs) if c})
    return encode_poly(params, P)


def extract_info(view: SystematicView, codeword: MultCodeword) -> list:
    values = codeword.base_values()
    return [values[j] for j in view.info_positions]


@lru_cache(maxsize=None)
def _component_rows(params: MultCodeParams, v: tuple) -> tuple:
    """For each derivative order j < m along direction v, the (symbol
    component, v^i) pairs whose weighted sum gives the j-th univariate
    Hasse derivative of the line restriction."""
    field = params.field
    rows = []
    offset = 0
    for j in range(params.m):
        row = []
        for i in monomials_of_weight(params.s, j):
            vpow = 1
            for vt, it in zip(v, i):
                if it:
                    vpow = field.mul(vpow, field.pow(vt, it))
            row.append((offset, vpow))
            offset += 1
        rows.append(tuple(row))
    return tuple(rows)


def line_samples(codeword, w0, v, drops=frozenset(), params=None):
    """Order-m univariate evaluations of the codeword's restriction to the
    line w0 + lambda*v, for every nonzero undropped lambda.

    ``codeword`` is anything mapping a point tuple to its symbol; passing a
    restriction that covers only the line is enough.
    """
    if params is None:
        params = codeword.params
    field = params.field
    v = tuple(v)
    w0 = tuple(w0)
    if all(c == 0 for c in v):
        raise ValueError("direction must be nonzero")
    if 0 in drops or any(not 0 <= lam < params.q for lam in drops):
        raise ValueError("drops must be nonzero field elements")
    rows = _component_rows(params, v)
    out = []
    for lam in range(1, params.q):
        if lam in drops:
            continue
        w = tuple(field.add(a, field.mul(lam, b)) for a, b in zip(w0, v))
        sym = codeword[w]
        ev = []
        for row in rows:
            acc = 0
            for pos, vpow in row:
                x = sym[pos]
                if x and vpow:
                    acc = field.add(acc, field.mul(x, vpow))
            ev.append(acc)
        out.append((lam, tuple(ev)))
    return out


def code_profile(params: MultCodeParams) -> dict:
    """Headline parameters: symbol length N, dimension n (in symbols, as a
    rational, and in base-field units), availability, distance bound and
    the symbol alphabet size Q."""
    sigma = params.symbol_width
    return {
        "N": params.num_points,
        "n": Fraction(params.base_dim, sigma),
        "n_base": params.base_dim,
        "N_base": params.base_length,
        "k_pir": params.k_pir,
        "rate": Fraction(params.base_dim, sigma * params.num_points),
        "distance_bound": (1 - Fraction(params.d, params.m * params.q))
        * params.num_points,
        "Q": params.q ** sigma,
    }


def to_descriptor(params: MultCodeParams) -> dict:
    return {
        "family": "multiplicity",
        "m": params.m,
        "d": params.d,
        "s": params.s,
        "q": params.q,
        "modulus": list(params.field.modulus),
    }


def params_from_descriptor(desc: dict) -> MultCodeParams:
    field = Field.from_order(desc["q"], modulus=desc.get("modulus"))
    return MultCodeParams(field=field, m=desc["m"], d=desc["d"], s=desc["s"])
