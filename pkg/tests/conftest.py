from hypothesis import settings

# the sandbox this runs in is slow and the compiled/pure kernel switch makes
# per-example timing noisy; example counts stay at the default
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")
