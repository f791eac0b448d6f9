import os
from contextlib import contextmanager
from contextvars import ContextVar

from .errors import ResourceError

DEFAULT_MAX_DIM = 20000
ENV_VAR = "TOKEN_SPECTRA_MAX_DIM"

_override: ContextVar[int | None] = ContextVar("max_dim_override", default=None)


def resolve_max_dim(flag: int | None = None) -> int:
    """Explicit argument, then an active ``size_guard`` block, then the
    environment variable, then the default."""
    if flag is not None:
        return int(flag)
    if _override.get() is not None:
        return _override.get()
    env = os.environ.get(ENV_VAR)
    return int(env) if env else DEFAULT_MAX_DIM


@contextmanager
def size_guard(limit: int | None):
    token = _override.set(None if limit is None else int(limit))
    try:
        yield
    finally:
        _override.reset(token)


def check_dim(dim: int, max_dim: int | None = None, what: str = "operator") -> None:
    limit = resolve_max_dim(max_dim)
    if dim > limit:
        raise ResourceError(f"{what} dimension {dim} exceeds size guard {limit} "
                            f"(raise with --max-dim or {ENV_VAR})")
