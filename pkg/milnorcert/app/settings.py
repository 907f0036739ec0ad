import os


def _int_env(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def log_dir() -> str:
    return os.getenv("MILNORCERT_LOG_DIR", "/tmp/milnorcert")


def default_seed() -> int:
    return _int_env("MILNORCERT_SEED", 0)


def max_retries() -> int:
    return _int_env("MILNORCERT_MAX_RETRIES", 25, minimum=1)


def max_refinements() -> int:
    return _int_env("MILNORCERT_MAX_REFINEMENTS", 9, minimum=1)


def default_jobs() -> int:
    return _int_env("MILNORCERT_JOBS", 1, minimum=1)
