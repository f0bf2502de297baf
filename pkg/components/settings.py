import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from components.errors import ParameterError

load_dotenv()

ENV_PREFIX = "UDG_"


class Settings(BaseModel):
    """Runtime defaults, overridable through the environment or a .env file."""

    # largest instance the brute-force oracles accept
    oracle_cap: int = Field(20, ge=0)
    # point count at or below which the k x k square solvers stop dividing
    square_base_threshold: int = Field(12, ge=0)
    log_level: str = "WARNING"
    # wall times make bench CSV files differ between runs
    bench_timing: bool = False


def load_settings(environ=None) -> Settings:
    """
    Build a Settings object from environment variables prefixed with UDG_.

    Args:
        environ (Mapping[str, str], optional): Source of variables, defaults to os.environ.

    Returns:
        Settings: The validated settings.

    Raises:
        ParameterError: If a variable holds a value the model rejects.
    """
    environ = os.environ if environ is None else environ
    values = {}
    for name in Settings.model_fields:
        key = ENV_PREFIX + name.upper()
        if key in environ:
            values[name] = environ[key]
    try:
        return Settings(**values)
    except ValidationError as e:
        raise ParameterError(f"invalid settings: {e}") from e


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()
