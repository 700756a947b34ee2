from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class Settings(BaseSettings):
    # Directories
    data_dir: str = Field(default="data", validation_alias="DATA_DIR")
    session_dir: str = Field(default="sessions", validation_alias="GTCF_SESSION_DIR")
    logs_dir: str = Field(default="logs", validation_alias="GTCF_LOGS_DIR")

    # Search defaults
    default_seed: int = Field(default=0, validation_alias="DEFAULT_SEED")
    default_workers: int = Field(default=1, validation_alias="GTCF_WORKERS")

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore", populate_by_name=True
    )


settings = Settings()
