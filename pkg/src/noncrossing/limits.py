"""Enumeration caps.

Every enumerator is capped so that a typo cannot trigger a combinatorial
explosion.  Caps can be overridden per call (``limit=``) and from the CLI.
"""

from .errors import LimitExceeded

DEFAULT_LIMITS = {
    "nc": 12,
    "ncl": 9,
    "ncs": 12,
    "ncls": 5,
    "trees": 10,
    "bicolor": 7,
    "theorem": 6,
    "word": 12,
}


def check_limit(kind: str, n: int, limit: int | None = None) -> None:
    """Raise :class:`LimitExceeded` when ``n`` exceeds the cap for ``kind``."""
    cap = DEFAULT_LIMITS[kind] if limit is None else limit
    if n > cap:
        raise LimitExceeded(f"{kind} is capped at {cap} (requested {n})")
