import math

import pytest

from ealab import resolve_param


def test_numbers_pass_through():
    assert resolve_param(0.02, 100) == 0.02
    assert resolve_param(7, 100) == 7.0
    assert resolve_param("0.02", 100) == 0.02
    assert resolve_param("1e-3", 100) == 0.001


def test_ln_n():
    assert resolve_param("ln(n)", 100) == pytest.approx(4.605170186, abs=1e-9)
    assert resolve_param("LN(N)", 100) == pytest.approx(math.log(100))


def test_power_of_n():
    assert resolve_param("n^0.4", 100) == pytest.approx(6.309573445, abs=1e-9)
    assert resolve_param("n^1", 7) == 7.0
    assert resolve_param("n^-0.5", 4) == 0.5


def test_n_ln_n():
    assert resolve_param("n*ln(n)", 100) == pytest.approx(460.5170186, abs=1e-7)
    assert resolve_param("N * LN(N)", 100) == pytest.approx(460.5170186, abs=1e-7)


def test_threshold_form_needs_lambda():
    assert resolve_param("(e/(e-1))^-lambda", 100, lam=7) == pytest.approx(
        0.04032732429, abs=1e-10
    )
    with pytest.raises(ValueError, match="lambda"):
        resolve_param("(e/(e-1))^-lambda", 100)


def test_rejects_unknown_forms():
    with pytest.raises(ValueError, match="allowed forms"):
        resolve_param("foo", 100)
    with pytest.raises(ValueError, match="my_field"):
        resolve_param("foo", 100, name="my_field")
    with pytest.raises(ValueError):
        resolve_param("n^x", 100)
    with pytest.raises(ValueError):
        resolve_param("", 100)
    with pytest.raises(ValueError):
        resolve_param(True, 100)
    with pytest.raises(ValueError):
        resolve_param(None, 100)
