import random
from fractions import Fraction

import pytest

from g2weyl.numberfield import (
    FieldElement,
    FieldZeroDivisionError,
    ONE,
    SQRT2,
    SQRT3,
    SQRT6,
    UnsupportedRadicalError,
    ZERO,
    rational,
    sqrt_rational,
)


def test_addition_examples():
    assert rational(1) + SQRT2 + (rational(-1) + SQRT3) == SQRT2 + SQRT3
    x = FieldElement(Fraction(2, 7), Fraction(-1), Fraction(3, 5), Fraction(4))
    assert x + ZERO == x
    assert SQRT6 + (-SQRT6) == ZERO


def test_multiplication_examples():
    assert SQRT2 * SQRT3 == SQRT6
    assert (ONE + SQRT2) * (rational(-1) + SQRT2) == ONE
    assert SQRT6 * SQRT6 == rational(6)
    assert SQRT2 * SQRT6 == rational(2) * SQRT3
    assert SQRT3 * SQRT6 == rational(3) * SQRT2


def test_inverse_simple_values():
    assert SQRT2.inverse() == SQRT2 / 2
    assert rational(2).inverse() == rational(1, 2)


def test_inverse_of_full_element_multiplies_back_to_one():
    x = ONE + SQRT2 + SQRT3 + SQRT6
    inv = x.inverse()
    assert x * inv == ONE
    # rationalizing (1+sqrt2)(1+sqrt3) by conjugation gives (1-sqrt2-sqrt3+sqrt6)/2
    assert inv == (ONE - SQRT2 - SQRT3 + SQRT6) / 2


def test_inverse_of_zero_raises():
    with pytest.raises(FieldZeroDivisionError):
        ZERO.inverse()


def test_sqrt_rational_examples():
    assert sqrt_rational(Fraction(3, 2)) == SQRT6 / 2
    assert sqrt_rational(4) == rational(2)
    assert sqrt_rational(0) == ZERO
    assert sqrt_rational(Fraction(2, 3)) == SQRT6 / 3
    with pytest.raises(UnsupportedRadicalError):
        sqrt_rational(5)
    with pytest.raises(UnsupportedRadicalError):
        sqrt_rational(Fraction(-1, 2))


def test_sqrt_rational_squares_back():
    for num in range(0, 30):
        for den in (1, 2, 3, 4, 6, 9):
            r = Fraction(num, den)
            try:
                root = sqrt_rational(r)
            except UnsupportedRadicalError:
                continue
            assert root * root == FieldElement(r)
            # non-negative leading sign: the first nonzero coordinate is positive
            coords = [root.a, root.b, root.c, root.d]
            lead = next((c for c in coords if c), Fraction(0))
            assert lead >= 0


def _random_element(rng):
    return FieldElement(
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
    )


def test_field_axioms_random_sweep():
    rng = random.Random(20240229)
    for _ in range(500):
        x, y, z = (_random_element(rng) for _ in range(3))
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        if x:
            assert x * x.inverse() == ONE


def test_power():
    assert (ONE + SQRT2) ** 0 == ONE
    assert SQRT2**2 == rational(2)
    assert SQRT2 ** (-2) == rational(1, 2)
    assert (SQRT3 / 2) ** 3 == rational(3, 8) * SQRT3


def test_equality_is_canonical():
    a = SQRT6 / 2
    b = FieldElement(0, 0, 0, Fraction(1, 2))
    assert a == b
    assert (a - b).is_zero()
    assert hash(a) == hash(b)


def test_record_round_trip():
    x = FieldElement(Fraction(1, 2), 0, 0, Fraction(-1, 3))
    record = x.to_record()
    assert record == {"a": "1/2", "b": "0", "c": "0", "d": "-1/3"}
    assert FieldElement.from_record(record) == x


def test_display_forms():
    assert str(SQRT6 / 2) == "√6/2"
    assert str(ZERO) == "0"
    assert str(rational(-3, 2) * SQRT2) == "-3√2/2"
    assert str(ONE / 2 + SQRT6 / 2) == "1/2 + √6/2"
    assert str(rational(2) - SQRT3) == "2 - √3"
    assert str(-SQRT2) == "-√2"


def test_rejects_floats():
    with pytest.raises(TypeError):
        FieldElement(0.5)  # type: ignore[arg-type]
    with pytest.raises(TypeError):
        ONE * 0.5  # type: ignore[operator]
