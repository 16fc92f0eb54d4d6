from hypothesis import HealthCheck, settings

# exact arithmetic goes through sympy; the first examples pay its warm-up
settings.register_profile(
    "conflab",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("conflab")
