"""Engine size caps.

The environment variable WATCHWALK_MAX_N may lower (never raise) every cap.
"""

import os

# One 64-bit word per out-neighbourhood.
HARD_MAX_VERTICES = 64
# State space of the generic walk engine is n * 2^n.
HARD_MAX_ENGINE = 24
# Exact canonical labelling cap.
HARD_MAX_CANON = 12
# Census default cap; order 10 needs an explicit opt-in.
CENSUS_DEFAULT_MAX = 9
CENSUS_HARD_MAX = 10


def _env_cap() -> int | None:
    raw = os.environ.get("WATCHWALK_MAX_N")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value >= 1 else None


def _capped(hard: int) -> int:
    env = _env_cap()
    return hard if env is None else min(hard, env)


def max_vertices() -> int:
    return _capped(HARD_MAX_VERTICES)


def max_engine_vertices() -> int:
    return _capped(HARD_MAX_ENGINE)


def max_canon_vertices() -> int:
    return _capped(HARD_MAX_CANON)


def max_census_order(allow_large: bool = False) -> int:
    return _capped(CENSUS_HARD_MAX if allow_large else CENSUS_DEFAULT_MAX)
