from hypothesis import HealthCheck, settings

# the exact oracles are exponential, so wall-clock deadlines only add noise
settings.register_profile("pabfree", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("pabfree")
