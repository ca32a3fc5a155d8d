# Lower bound on the wave speed used to size Δt when the velocity vanishes
MIN_WAVE_SPEED = 1e-12


def stable_time_step(alpha: float, dtheta: float, cfl: float, remaining: float) -> float:
    """Step with Courant number `cfl` for wave speed `alpha`, at most `remaining`."""
    return min(cfl * dtheta / max(alpha, MIN_WAVE_SPEED), remaining)
