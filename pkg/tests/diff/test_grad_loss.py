import numpy as np
import pytest

from kurapinn.diff.rules.grad_loss import grad_loss
from kurapinn.net.models.activation_kind import ActivationKind
from kurapinn.net.rules.flatten_params import flatten_params, unflatten_like
from kurapinn.physics.models.problem_spec import ProblemSpec
from kurapinn.physics.models.quadrature_rule import QuadratureRule
from kurapinn.physics.rules.loss_ic import loss_ic, traced_loss_ic
from kurapinn.physics.rules.loss_residual import loss_residual, residual_square_sum
from kurapinn.runtime.models.errors import NonFiniteError
from kurapinn.sampling.models.collocation_set import CollocationSet


def _sum_of_squares(net):
    total = None
    for var in net.parameters():
        term = var.square().sum()
        total = term if total is None else total + term
    return total


def _fd_gradient(f, params, h):
    vector = flatten_params(params)
    grad = np.zeros_like(vector)
    for k in range(vector.size):
        step = np.zeros_like(vector)
        step[k] = h
        grad[k] = (
            f(unflatten_like(vector + step, params))
            - f(unflatten_like(vector - step, params))
        ) / (2 * h)
    return grad


def test_sum_of_squares_gradient(random_net):
    config, params = random_net(depth=2, width=3)
    value, grad = grad_loss(params, config, _sum_of_squares)
    vector = flatten_params(params)
    assert value == pytest.approx(np.sum(vector**2))
    np.testing.assert_allclose(grad, 2 * vector, rtol=1e-15)


def test_squared_output_of_zero_net_only_touches_output_bias(constant_net):
    config, params = constant_net(0.0)

    def loss(net):
        return net.evaluate(np.array([1.0]), np.array([0.5])).u.square().sum()

    value, grad = grad_loss(params, config, loss)
    assert value == 0.0
    assert np.all(grad == 0.0)

    config, params = constant_net(0.5)
    _, grad = grad_loss(params, config, loss)
    # Only the output bias sees a nonzero path; d(c²)/dc = 2c
    assert grad[-1] == pytest.approx(1.0)
    assert np.all(grad[:-1] == 0.0)


def test_linearity(random_net):
    config, params = random_net(depth=2, width=4)
    theta = np.array([0.5, 2.0, 4.0])
    t = np.array([0.1, 0.4, 0.9])

    def f(net):
        return net.evaluate(theta, t).u.sum()

    def g(net):
        return _sum_of_squares(net)

    _, grad_f = grad_loss(params, config, f)
    _, grad_g = grad_loss(params, config, g)
    _, grad_combined = grad_loss(params, config, lambda net: f(net) * 2.5 + g(net) * -0.75)
    np.testing.assert_allclose(
        grad_combined, 2.5 * grad_f - 0.75 * grad_g, rtol=1e-12, atol=1e-12
    )


def _kink_free_points(rng, params, quad, margin_fn, n_points=6):
    """Collocation and IC points at which no ReLU unit sits near its kink."""
    for _ in range(200):
        theta = rng.uniform(0, 2 * np.pi, n_points)
        t = rng.uniform(0, 1, n_points)
        ic_points = rng.uniform(0, 2 * np.pi, n_points)
        all_theta = np.concatenate([theta, np.tile(quad.nodes, n_points), ic_points])
        all_t = np.concatenate(
            [t, np.repeat(t, quad.n_nodes), np.zeros(n_points)]
        )
        if margin_fn(params, all_theta, all_t) > 1e-4:
            return theta, t, ic_points
    raise AssertionError("no kink-free point set found")


def test_total_loss_gradient_matches_central_differences(
    small_net, preactivation_margin
):
    config, params = small_net
    spec = ProblemSpec()
    quad = QuadratureRule(n_nodes=8)
    rng = np.random.Generator(np.random.PCG64(config.seed))
    if config.activation is ActivationKind.Relu:
        theta, t, ic_points = _kink_free_points(rng, params, quad, preactivation_margin)
    else:
        theta, t = rng.uniform(0, 2 * np.pi, 6), rng.uniform(0, 1, 6)
        ic_points = rng.uniform(0, 2 * np.pi, 6)
    colloc = CollocationSet(theta=theta, t=t, T=1.0, seed=config.seed)

    def traced(net):
        l_res = residual_square_sum(net, spec, quad, colloc.theta, colloc.t) / 6.0
        return l_res + traced_loss_ic(net, spec, ic_points)

    def numeric(p):
        return loss_residual(p, config, spec, quad, colloc) + loss_ic(
            p, config, spec, ic_points
        )

    value, grad = grad_loss(params, config, traced)
    assert value == pytest.approx(numeric(params), rel=1e-12)
    expected = _fd_gradient(numeric, params, h=1e-6)
    np.testing.assert_allclose(grad, expected, rtol=1e-5, atol=1e-8)


def test_non_finite_loss_is_an_error(make_net):
    config, params = make_net()

    def loss(net):
        return net.evaluate(np.array([1.0]), np.array([0.0])).u.sum() * np.inf

    with pytest.raises(NonFiniteError):
        grad_loss(params, config, loss)
