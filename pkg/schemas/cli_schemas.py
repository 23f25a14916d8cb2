from enum import Enum

from pydantic import BaseModel, Field


class OutputFormat(str, Enum):
    TEXT = "text"
    DOT = "dot"
    JSON = "json"


class CliConfig(BaseModel):
    """Command-line options shared by every subcommand. Built from flags only."""
    oracle_limit: int = Field(24, gt=0, description="Largest matrix order checked exactly")
    brute_limit: int = Field(20, gt=0, description="Largest cyclomatic number for the brute-force search")
    verify: bool = Field(False, description="Check outputs with the exact oracle when feasible")
    format: OutputFormat = OutputFormat.TEXT
