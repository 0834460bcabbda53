"""Configuration management for the CSA routing simulator"""

import os

from dotenv import load_dotenv
from pydantic_settings import BaseSettings

# Load environment variables
load_dotenv()


class Settings(BaseSettings):
    """Application settings with environment variable support"""

    # Logging / service
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    DEBUG: bool = os.getenv("DEBUG", "false").lower() == "true"
    API_HOST: str = os.getenv("API_HOST", "0.0.0.0")
    API_PORT: int = int(os.getenv("API_PORT", "8000"))

    # Routing: a packet may take ceil(DEFAULT_TTL_FACTOR * n) hops before it is dropped.
    DEFAULT_TTL_FACTOR: float = float(os.getenv("DEFAULT_TTL_FACTOR", "4.0"))

    # Experiments: process-pool size for seed-parallel runs (1 = serial, in-process).
    # Aggregation is order-independent, so the report is identical for any worker count.
    EXPERIMENT_WORKERS: int = int(os.getenv("EXPERIMENT_WORKERS", "1"))

    # When true, a failed hard check (physical delivery < 100% on connected pairs, a greedy
    # phase that does not strictly decrease) aborts the run. When false it is only logged.
    STRICT_INVARIANTS: bool = os.getenv("STRICT_INVARIANTS", "true").lower() == "true"

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"  # Ignore extra fields from .env


# Create global settings instance
settings = Settings()
