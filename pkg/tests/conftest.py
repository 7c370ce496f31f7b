import os

from hypothesis import HealthCheck, settings

# deterministic example generation so two runs see the same inputs
settings.register_profile("repo", derandomize=True, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))
