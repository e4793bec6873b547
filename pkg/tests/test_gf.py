import pytest

from pirbatch.gf import CapacityError, Field, is_prime, smallest_prime_above

PRIME_POWERS_TO_64 = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27,
                      29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64]


def gf4_mul_oracle(a, b):
    # carry-less multiply then reduce by x^2 + x + 1, all over GF(2)
    prod = 0
    for i in range(2):
        if (b >> i) & 1:
            prod ^= a << i
    for i in (3, 2):
        if (prod >> i) & 1:
            prod ^= 0b111 << (i - 2)
    return prod


def test_prime_field_add():
    f = Field(7)
    assert f.add(3, 5) == 1


def test_prime_field_inverse_matches_search():
    f = Field(7)
    expected = next(x for x in range(1, 7) if 3 * x % 7 == 1)
    assert expected == 5
    assert f.inv(3) == 5


def test_gf4_square_of_x():
    f = Field(2, 2, modulus=[1, 1, 1])
    x = f.from_coeffs((0, 1))
    assert f.mul(x, x) == f.from_coeffs((1, 1))  # x*x = x + 1


def test_gf4_mul_matches_reduction_oracle():
    f = Field(2, 2, modulus=[1, 1, 1])
    for a in range(4):
        for b in range(4):
            assert f.mul(a, b) == gf4_mul_oracle(a, b)


def test_enumerate_order():
    assert Field(3).elements() == [0, 1, 2]
    assert Field(2).elements() == [0, 1]
    f4 = Field.from_order(4)
    assert f4.elements() == [0, 1, 2, 3]
    # 0, 1, x, x+1 in coefficient form
    assert [f4.coeffs(a) for a in f4.elements()] == [(0, 0), (1, 0), (0, 1), (1, 1)]


def test_smallest_prime_above():
    assert smallest_prime_above(72) == 73
    assert smallest_prime_above(1) == 2
    k, r = 2, 3
    assert smallest_prime_above(2 * k**2 * r**2) == 73


def test_is_prime_small():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_capacity_guard():
    with pytest.raises(CapacityError):
        Field(2, 17)


def test_invalid_characteristic_and_modulus():
    with pytest.raises(ValueError):
        Field(6)
    with pytest.raises(ValueError):
        Field(2, 2, modulus=[0, 0, 1])  # x^2 is reducible
    with pytest.raises(ValueError):
        Field(2, 2, modulus=[1, 1])  # wrong length


def test_zero_inverse_rejected():
    with pytest.raises(ZeroDivisionError):
        Field(5).inv(0)
    with pytest.raises(ZeroDivisionError):
        Field.from_order(9).inv(0)


def test_default_moduli_are_conventional():
    assert Field.from_order(4).modulus == (1, 1, 1)     # x^2+x+1
    assert Field.from_order(8).modulus == (1, 1, 0, 1)  # x^3+x+1
    assert Field.from_order(9).modulus == (1, 0, 1)     # x^2+1


@pytest.mark.parametrize("q", PRIME_POWERS_TO_64)
def test_field_axioms_exhaustive(q):
    f = Field.from_order(q)
    mul = [[f.mul(a, b) for b in range(q)] for a in range(q)]
    add = [[f.add(a, b) for b in range(q)] for a in range(q)]
    els = range(q)
    # commutativity and identities
    for a in els:
        assert add[a][0] == a and mul[a][1] == a and mul[a][0] == 0
        for b in els:
            assert add[a][b] == add[b][a] and mul[a][b] == mul[b][a]
    # associativity and distributivity
    for a in els:
        for b in els:
            ab_add, ab_mul = add[a][b], mul[a][b]
            for c in els:
                assert add[ab_add][c] == add[a][add[b][c]]
                assert mul[ab_mul][c] == mul[a][mul[b][c]]
                assert mul[a][add[b][c]] == add[ab_mul][mul[a][c]]
    # unique additive and multiplicative inverses
    for a in els:
        assert sum(1 for b in els if add[a][b] == 0) == 1
        if a:
            invs = [b for b in els if mul[a][b] == 1]
            assert invs == [f.inv(a)]


@pytest.mark.parametrize("q", [2, 5, 8, 9, 16, 49])
def test_enumerate_no_duplicates_nonzero_differences(q):
    f = Field.from_order(q)
    els = f.elements()
    assert len(set(els)) == q
    for i, a in enumerate(els):
        for b in els[i + 1:]:
            assert f.sub(a, b) != 0


def test_pow_and_div():
    f = Field.from_order(16)
    for a in range(1, 16):
        assert f.mul(a, f.inv(a)) == 1
        assert f.pow(a, 15) == 1  # multiplicative group order
        assert f.div(f.mul(a, 7), 7) == a
    assert f.pow(0, 0) == 1
    assert f.pow(5, -1) == f.inv(5)


def test_coeffs_roundtrip():
    f = Field(3, 2)
    for a in range(9):
        assert f.from_coeffs(f.coeffs(a)) == a
    with pytest.raises(ValueError):
        f.coeffs(9)
    with pytest.raises(ValueError):
        f.from_coeffs((3, 0))
