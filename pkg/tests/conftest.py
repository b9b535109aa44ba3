import pytest
from fractions import Fraction

from albertkit.deg3 import CubicQuotient, Matrix3, SplitEtale
from albertkit.fields import PrimeField, RationalField
from albertkit.tits import tits_first

BIG_PRIME = 2147483647


@pytest.fixture(scope="session")
def rationals():
    return RationalField()


@pytest.fixture(scope="session")
def f7():
    return PrimeField(7)


@pytest.fixture(scope="session")
def f101():
    return PrimeField(101)


@pytest.fixture(scope="session")
def f_big():
    return PrimeField(BIG_PRIME)


@pytest.fixture(scope="session")
def split_q_model(rationals):
    """Tits model on SplitEtale over Q with lambda = 2."""
    return tits_first(SplitEtale(rationals), Fraction(2))


@pytest.fixture(scope="session")
def cubic_q_model(rationals):
    """Tits model on Q[t]/(t^3 - 2) with lambda = 1."""
    E = CubicQuotient(rationals, Fraction(-2), Fraction(0), Fraction(0))
    return tits_first(E, Fraction(1))


@pytest.fixture(scope="session")
def split_fp_model(f_big):
    """Tits model on SplitEtale over the 31-bit prime field, lambda = 2."""
    return tits_first(SplitEtale(f_big), 2)


@pytest.fixture(scope="session")
def albert_f7(f7):
    return tits_first(Matrix3(f7), 1)


@pytest.fixture(scope="session")
def albert_big(f_big):
    return tits_first(Matrix3(f_big), 1)
