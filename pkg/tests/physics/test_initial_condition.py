import math

import numpy as np
import pytest

from kurapinn.physics.models.initial_condition_kind import InitialConditionKind
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.physics.rules.initial_condition import (
    initial_condition,
    initial_condition_array,
)
from kurapinn.runtime.models.errors import ConfigError, DomainError

POLY = ProblemSpec(ic=InitialConditionKind.Polynomial)
PIECEWISE = ProblemSpec(ic=InitialConditionKind.Piecewise)


def test_polynomial_values():
    assert initial_condition(POLY, math.pi) == pytest.approx(3 / (2 * math.pi))
    assert initial_condition(POLY, math.pi) == pytest.approx(0.477465, abs=1e-6)
    assert initial_condition(POLY, 0.0) == 0.0
    assert initial_condition(POLY, 2 * math.pi) == 0.0


def test_polynomial_mass_is_one():
    theta = np.linspace(0.0, 2 * math.pi, 2**16 + 1)
    values = initial_condition_array(POLY, theta)
    mass = np.sum(0.5 * (values[1:] + values[:-1]) * np.diff(theta))
    assert mass == pytest.approx(1.0, abs=1e-8)


def test_piecewise_values():
    assert initial_condition(PIECEWISE, math.pi) == pytest.approx(2 / (3 * math.pi))
    assert initial_condition(PIECEWISE, 0.0) == pytest.approx(1 / (3 * math.pi))


def test_dirac_value_superposes_bump_and_plateau():
    eps = math.pi / 32
    spec = ProblemSpec(ic=InitialConditionKind.Dirac, eps=eps)
    assert initial_condition(spec, 3 * math.pi / 4) == pytest.approx(
        1 / (8 * eps) + 0.5
    )
    assert initial_condition(spec, math.pi) == pytest.approx(0.5)
    assert initial_condition(spec, 0.1) == 0.0


@pytest.mark.parametrize("theta", [-0.01, 2 * math.pi + 0.01, math.nan])
def test_outside_domain_is_an_error(theta):
    with pytest.raises(DomainError):
        initial_condition(POLY, theta)


@pytest.mark.parametrize("eps", [0.0, math.pi / 4, 1.0])
def test_dirac_width_is_validated(eps):
    with pytest.raises(ConfigError):
        ProblemSpec(ic=InitialConditionKind.Dirac, eps=eps)


@pytest.mark.parametrize("K,T", [(0.0, 1.0), (1.0, 0.0), (-1.0, 1.0)])
def test_problem_spec_is_validated(K, T):
    with pytest.raises(ConfigError):
        ProblemSpec(K=K, T=T)
