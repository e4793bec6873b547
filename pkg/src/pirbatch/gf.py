"""Exact arithmetic over finite fields GF(p^e) plus small prime utilities.

Field elements are plain ints in ``[0, q)``.  For an extension field the
int encodes the element's coefficient vector over GF(p) in base p::

    a = c0 + c1*p + ... + c_{e-1}*p**(e-1)

so 0 and 1 are the additive and multiplicative identities in every field,
and sorting ints gives the canonical element order used for codeword
indexing throughout the package (0 first, 1 second, then the rest).
"""

from __future__ import annotations

MAX_FIELD_SIZE = 1 << 16

# fields up to this size get an eagerly built multiplication table
_TABLE_LIMIT = 64


class CapacityError(ValueError):
    """A desk-scale size guard was exceeded."""


def is_prime(n: int) -> bool:
    """Primality by trial division; fine for the sizes this package allows."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def smallest_prime_above(bound: int) -> int:
    """The least prime strictly greater than ``bound``."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    n = bound + 1
    while not is_prime(n):
        n += 1
    return n


# ---------------------------------------------------------------------------
# polynomials over GF(p), used only for modulus bookkeeping
# coefficient tuples, lowest power first
# ---------------------------------------------------------------------------

def _poly_mod(num: tuple, den: tuple, p: int) -> tuple:
    # den is monic
    rem = list(num)
    dd = len(den) - 1
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            for j, dc in enumerate(den):
                rem[i - dd + j] = (rem[i - dd + j] - c * dc) % p
    while rem and rem[-1] == 0:
        rem.pop()
    return tuple(rem)


def _is_irreducible(coeffs: tuple, p: int) -> bool:
    """Brute-force factor search: no monic factor of degree 1..deg/2."""
    deg = len(coeffs) - 1
    if coeffs[0] == 0:
        return deg == 1  # divisible by x
    for f in range(1, deg // 2 + 1):
        for enc in range(p ** f):
            low, n = [], enc
            for _ in range(f):
                low.append(n % p)
                n //= p
            if not _poly_mod(coeffs, tuple(low) + (1,), p):
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> tuple:
    # smallest by integer encoding of the lower coefficients; matches the
    # element order convention above
    for enc in range(p ** e):
        low, n = [], enc
        for _ in range(e):
            low.append(n % p)
            n //= p
        cand = tuple(low) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise RuntimeError(f"no irreducible polynomial of degree {e} over GF({p})")


class Field:
    """GF(p^e) with an explicit monic irreducible modulus.

    Parameters
    ----------
    characteristic : prime p, certified by trial division.
    extension_degree : e >= 1.
    modulus : optional coefficient list of length e+1, lowest power first,
        monic and irreducible (certified by brute-force factor search).
        Defaults to the irreducible of degree e with the smallest integer
        encoding, so element representations are stable across runs.
        Degree-1 fields use the identity modulus (0, 1).

    All operations are pure functions on ints; instances are immutable
    after construction and safe for unrestricted concurrent use.
    """

    def __init__(self, characteristic: int, extension_degree: int = 1,
                 modulus=None):
        p, e = characteristic, extension_degree
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError("extension_degree must be >= 1")
        q = p ** e
        if q > MAX_FIELD_SIZE:
            raise CapacityError(f"field size {q} exceeds cap {MAX_FIELD_SIZE}")
        if modulus is None:
            modulus = (0, 1) if e == 1 else _smallest_irreducible(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree extension_degree")
            if e == 1:
                if modulus != (0, 1):
                    raise ValueError("degree-1 fields use the identity modulus (0, 1)")
            elif not _is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.e = e
        self.q = q
        self.modulus = modulus
        self._mul_table = None
        if e > 1 and q <= _TABLE_LIMIT:
            self._mul_table = [[self._mul_raw(a, b) for b in range(q)]
                               for a in range(q)]

    @classmethod
    def from_order(cls, q: int, modulus=None) -> "Field":
        """Build GF(q) for a prime power q."""
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        p = 2
        while q % p:
            p += 1
        e, n = 0, q
        while n % p == 0:
            n //= p
            e += 1
        if n != 1:
            raise ValueError(f"{q} is not a prime power")
        return cls(p, e, modulus)

    # -- element codec ------------------------------------------------------

    def coeffs(self, a: int) -> tuple:
        """Coefficient vector of ``a`` over GF(p), length e, lowest power first."""
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of {self!r}")
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coeffs(self, cs) -> int:
        cs = tuple(cs)
        if len(cs) != self.e or any(not 0 <= c < self.p for c in cs):
            raise ValueError(f"bad coefficient vector {cs} for {self!r}")
        a = 0
        for c in reversed(cs):
            a = a * self.p + c
        return a

    def from_int(self, n: int) -> int:
        """Embed an integer through the prime subfield."""
        return n % self.p

    def elements(self) -> list:
        """All q elements in canonical order: 0, 1, then the rest."""
        return list(range(self.q))

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p, out, shift = self.p, 0, 1
        for _ in range(self.e):
            out += (a % p + b % p) % p * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        p, out, shift = self.p, 0, 1
        for _ in range(self.e):
            out += -a % p * shift
            a //= p
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_raw(self, a: int, b: int) -> int:
        p = self.p
        da = self.coeffs(a)
        db = self.coeffs(b)
        prod = [0] * (2 * self.e - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        rem = _poly_mod(tuple(prod), self.modulus, p)
        a = 0
        for c in reversed(rem):
            a = a * p + c
        return a

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises ZeroDivisionError for 0."""
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        if self.e == 1:
            return pow(a, n, self.p)
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Field)
                and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"Field({self.p})"
        return f"Field({self.p}, {self.e}, modulus={list(self.modulus)})"
