from pydantic_settings import BaseSettings
from decouple import config


class Settings(BaseSettings):
    # Command line defaults
    NEVDERIV_DEFAULT_DEGREE: int = config("NEVDERIV_DEFAULT_DEGREE", default=3, cast=int)
    NEVDERIV_DEFAULT_ORDER: int = config("NEVDERIV_DEFAULT_ORDER", default=0, cast=int)
    NEVDERIV_DEFAULT_SEED: int = config("NEVDERIV_DEFAULT_SEED", default=1, cast=int)
    NEVDERIV_DEFAULT_SAMPLES: int = config("NEVDERIV_DEFAULT_SAMPLES", default=100_000, cast=int)
    NEVDERIV_STRICT_DOMAIN: bool = config("NEVDERIV_STRICT_DOMAIN", default=False, cast=bool)

    # Newton-Raphson
    NEVDERIV_TOL_RESIDUAL: float = config("NEVDERIV_TOL_RESIDUAL", default=1e-10, cast=float)
    NEVDERIV_TOL_STEP: float = config("NEVDERIV_TOL_STEP", default=1e-12, cast=float)
    NEVDERIV_MAX_ITER: int = config("NEVDERIV_MAX_ITER", default=50, cast=int)
    # floor on |P'| (|P''| for extrema) is this times max(1, table y-scale)
    NEVDERIV_DERIVATIVE_FLOOR_SCALE: float = config(
        "NEVDERIV_DERIVATIVE_FLOOR_SCALE", default=1e-14, cast=float
    )

    # Experiment harness
    NEVDERIV_CHUNK_SIZE: int = config("NEVDERIV_CHUNK_SIZE", default=8192, cast=int)
    NEVDERIV_WORKERS: int = config("NEVDERIV_WORKERS", default=1, cast=int)

    # Logging
    NEVDERIV_LOG_LEVEL: str = config("NEVDERIV_LOG_LEVEL", default="WARNING")

    class Config:
        env_file = ".env"
        extra = "ignore"


settings = Settings()
