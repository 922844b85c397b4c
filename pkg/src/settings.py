from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    """Runtime settings with environment variable support (HVDIST_ prefix)"""
    model_config = SettingsConfigDict(
        env_prefix="HVDIST_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    BASE_DIR: Path = Path(__file__).parent.parent
    LOG_LEVEL: str = "INFO"
    LOG_DIR: Path = BASE_DIR / "logs"
    OUTPUT_DIR: Path = BASE_DIR / "results"
    DEFAULT_SEED: int = 20210301
    MAX_WORKERS: int = 4
    SLOW_TESTS: bool = False

settings = Settings()
