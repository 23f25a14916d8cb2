from pydantic_settings import BaseSettings, SettingsConfigDict
import os


class Settings(BaseSettings):
    env: str = "development"
    log_level: str = "INFO"

    api_title: str = "Pfaffian Orientation API"
    api_version: str = "1.0.0"

    # Largest matrix order handled by the exact permanent/determinant oracle
    oracle_limit: int = 24
    # Largest cyclomatic number for the brute-force existence search
    brute_limit: int = 20
    # Largest side size for perfect matching / circuit enumeration
    enumeration_limit: int = 12
    # Splices are re-verified when the matrix order and matching count stay below these
    splice_check_order: int = 12
    splice_check_limit: int = 10**6
    # Largest digraph whose evenness witness is checked circuit by circuit
    evenness_witness_check_limit: int = 12

    model_config = SettingsConfigDict(
        env_prefix="PFAFFIAN_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


# Set environment to test if running tests
if os.environ.get("TESTING") == "1":
    settings = Settings(env="test")
else:
    settings = Settings()
