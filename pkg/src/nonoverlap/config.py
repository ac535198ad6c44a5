import os

DEFAULT_ENUM_CAP = 2 ** 24
ENUM_CAP_ENV = "NOC_ENUM_CAP"


class EnumerationCapExceeded(ValueError):
    pass


def enum_cap() -> int:
    """Largest word-space size an exhaustive scan may visit (env-overridable)."""
    raw = os.environ.get(ENUM_CAP_ENV)
    return int(raw) if raw else DEFAULT_ENUM_CAP


def check_cap(q: int, length: int, cap: int | None = None) -> None:
    limit = enum_cap() if cap is None else cap
    if q ** length > limit:
        raise EnumerationCapExceeded(
            f"{q}^{length} = {q ** length} words exceeds enumeration cap {limit}"
        )
