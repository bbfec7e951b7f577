"""Adaptive quadrature: exact values, hints, determinism."""

import math

import pytest

from curvgreen.errors import NoConvergenceError
from curvgreen.quadrature import quad


def test_sine_integral():
    got = quad(math.sin, 0.0, math.pi, tol=1e-12)
    assert got.value == pytest.approx(2.0, abs=1e-12)
    assert got.abs_err_est <= 1e-12


def test_constant_integrand():
    got = quad(lambda x: 1.0, -1.0, 1.0, tol=1e-12)
    assert got.value == pytest.approx(2.0, abs=1e-13)


def test_left_algebraic_singularity():
    got = quad(lambda x: x ** -0.5, 0.0, 1.0, tol=1e-12,
               hint=("left_alg", 0.5))
    assert got.value == pytest.approx(2.0, abs=1e-11)


def test_right_algebraic_singularity():
    got = quad(lambda x: (1.0 - x) ** -0.25, 0.0, 1.0, tol=1e-12,
               hint=("right_alg", 0.25))
    assert got.value == pytest.approx(4.0 / 3.0, abs=1e-11)


def test_positive_power_nonsmooth():
    # (x)^{3/2}: handled by a negative-exponent hint
    got = quad(lambda x: x ** 1.5, 0.0, 1.0, tol=1e-13,
               hint=("left_alg", -1.5))
    assert got.value == pytest.approx(0.4, abs=1e-12)


def test_complex_integrand():
    got = quad(lambda x: complex(math.cos(x), math.sin(x)), 0.0, math.pi,
               tol=1e-12)
    assert got.value == pytest.approx(0.0 + 2.0j, abs=1e-11)


def test_oscillatory():
    got = quad(lambda x: math.cos(40.0 * x), 0.0, 1.0, tol=1e-12)
    assert got.value == pytest.approx(math.sin(40.0) / 40.0, abs=1e-12)


def test_budget_exceeded():
    with pytest.raises(NoConvergenceError):
        quad(lambda x: abs(x - 1 / math.pi) ** -0.97, 0.0, 1.0, tol=1e-12,
             max_panels=50)


def test_deterministic():
    def f(x):
        return math.exp(-3.0 * x) * math.cos(7.0 * x) / math.sqrt(x + 1e-3)

    a = quad(f, 0.0, 2.0, tol=1e-11)
    b = quad(f, 0.0, 2.0, tol=1e-11)
    assert a.value == b.value
    assert a.terms_used == b.terms_used
