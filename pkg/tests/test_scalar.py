import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qgk.scalar import (
    LaurentQ,
    ONE,
    Q,
    ZERO,
    check_point,
    laurent_arith,
    near_pole,
    parse_complex,
    qnum,
)

laurents = st.dictionaries(
    st.integers(-4, 4), st.fractions(max_denominator=7).filter(lambda f: abs(f) < 50), max_size=4
).map(LaurentQ)


def test_basic_arithmetic_examples():
    assert laurent_arith(Q, Q**-1, "mul") == ONE
    diff = laurent_arith(Q, Q, "sub")
    assert diff.is_zero() and diff.terms == {}
    assert laurent_arith(Q - Q**-1, Q + Q**-1, "mul") == Q**2 - Q**-2
    with pytest.raises(ValueError):
        laurent_arith(Q, Q, "div")


def test_bar_examples():
    assert Q.bar() == Q**-1
    assert (Q - Q**-1).bar() == -(Q - Q**-1)
    assert (3 + 2 * Q**2).bar() == 3 + 2 * Q**-2


def test_eval_examples():
    assert (Q - Q**-1).eval(1) == 0
    assert Q.eval(2) == 2
    assert (Q - Q**-1).eval(2) == pytest.approx(1.5)
    assert (Q - Q**-1).eval(1j) == pytest.approx(2j)


def test_canonical_form_drops_zeros():
    a = LaurentQ({0: 1, 3: 0, -2: Fraction(0)})
    assert a.terms == {0: Fraction(1)}
    assert LaurentQ(a.terms) == a
    assert hash(LaurentQ({1: 2})) == hash(2 * Q)


def test_equality_with_scalars():
    assert LaurentQ.const(3) == 3
    assert ZERO == 0
    assert Q != 1


def test_negative_power_needs_monomial():
    assert (2 * Q) ** -1 == Fraction(1, 2) * Q**-1
    with pytest.raises(ValueError):
        (Q + 1) ** -1


def test_qnum_signs():
    assert qnum(0) == 1
    assert qnum(1) == -Q
    assert qnum(-1) == -(Q**-1)
    assert qnum(2) == Q**2


def test_json_roundtrip():
    a = Fraction(1, 3) * Q**-2 - 7 + Q**5
    assert LaurentQ.from_json(a.to_json()) == a


def test_subs_one_exact():
    assert (Q - Q**-1).subs_one() == 0
    assert (Fraction(1, 2) * Q**3 + Q**-1).subs_one() == Fraction(3, 2)


def test_degrees():
    a = Q**-3 + 4 * Q**2
    assert (a.min_degree(), a.max_degree()) == (-3, 2)


def test_check_point_rejects_bad_values():
    for bad in (0, float("nan"), complex(float("inf"), 0)):
        with pytest.raises(ValueError):
            check_point(bad)


def test_parse_complex():
    assert parse_complex("0.7+0.2i") == complex(0.7, 0.2)
    assert parse_complex("-1.5i") == -1.5j
    assert parse_complex("2") == 2
    with pytest.raises(ValueError):
        parse_complex("q+1")


def test_near_pole():
    assert near_pole(0.05)
    assert near_pole(1j * math.pi + 0.01)
    assert not near_pole(0.5 + 0.5j)


@given(laurents, laurents)
def test_bar_is_ring_homomorphism(a, b):
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(laurents, laurents, st.floats(0.1, 10), st.floats(-math.pi, math.pi))
def test_eval_is_multiplicative(a, b, r, phi):
    z = cmath.rect(r, phi)
    lhs = (a * b).eval(z)
    rhs = a.eval(z) * b.eval(z)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs), abs(a.eval(z)) * abs(b.eval(z)))
