import os

from dotenv import load_dotenv
from pydantic import BaseModel

from exceptions.exceptions import ConfigurationError

load_dotenv()


class OracleSettings(BaseModel):
    path_oracle_max_n: int = 20
    witness_oracle_max_n: int = 20
    snake_oracle_max_n: int = 14
    chromatic_oracle_max_n: int = 16
    path_enumeration_cap: int = 1_000_000
    verify_trace_max_n: int = 12
    log_level: str = "INFO"


def _int_from_env(variable: str) -> int | None:
    raw = os.getenv(variable)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(variable, raw)
    if value < 0:
        raise ConfigurationError(variable, raw)
    return value


def get_settings() -> OracleSettings:
    """Read oracle bounds from the environment.

    EVENPAIR_ORACLE_MAX_N moves all four size guards at once; the
    per-oracle variables win over it when both are set.
    """
    values: dict[str, int | str] = {}

    shared = _int_from_env("EVENPAIR_ORACLE_MAX_N")
    if shared is not None:
        values["path_oracle_max_n"] = shared
        values["witness_oracle_max_n"] = shared
        values["snake_oracle_max_n"] = shared
        values["chromatic_oracle_max_n"] = shared

    for field, variable in (
        ("witness_oracle_max_n", "EVENPAIR_WITNESS_MAX_N"),
        ("snake_oracle_max_n", "EVENPAIR_SNAKE_MAX_N"),
        ("chromatic_oracle_max_n", "EVENPAIR_CHROMATIC_MAX_N"),
        ("path_enumeration_cap", "EVENPAIR_PATH_CAP"),
        ("verify_trace_max_n", "EVENPAIR_VERIFY_TRACE_MAX_N"),
    ):
        value = _int_from_env(variable)
        if value is not None:
            values[field] = value

    log_level = os.getenv("EVENPAIR_LOG_LEVEL")
    if log_level:
        values["log_level"] = log_level.upper()

    return OracleSettings(**values)
