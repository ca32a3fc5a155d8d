import math

import pytest

from kurapinn.sweep.models.record_status import RecordStatus
from kurapinn.sweep.models.sweep_record import SweepRecord


@pytest.fixture
def make_record():
    def make(
        activation="tanh",
        depth=4,
        width=64,
        epochs=4096,
        n_colloc=1024,
        seed=0,
        energy_norm=1e-3,
        wall_clock_seconds=10.0,
        status=RecordStatus.Ok,
        parallelism=1,
    ):
        return SweepRecord(
            fingerprint=f"{activation}-L{depth}-n{width}-e{epochs}-r{n_colloc}-s{seed}-0",
            activation=activation,
            depth=depth,
            width=width,
            epochs=epochs,
            n_colloc=n_colloc,
            n_ic=512,
            n_quad=128,
            learning_rate=1e-3,
            lambda_res=1.0,
            lambda_ic=1.0,
            seed=seed,
            cell_seed=12345,
            init_seed=678,
            K=1.0,
            T=1.0,
            ic="poly",
            eps=math.pi / 32,
            init_scheme="glorot_uniform",
            rng_algorithm="PCG64",
            energy_norm=energy_norm,
            wall_clock_seconds=wall_clock_seconds,
            status=status,
            parallelism=parallelism,
        )

    return make
