import pytest
from pydantic import ValidationError

from schemas.cli_schemas import CliConfig, OutputFormat
from schemas.pfaffian_schemas import GraphText


def test_cli_config_defaults():
    """Defaults match the documented command-line defaults."""
    config = CliConfig()
    assert config.oracle_limit == 24
    assert config.brute_limit == 20
    assert config.verify is False
    assert config.format is OutputFormat.TEXT


def test_cli_config_accepts_format_strings():
    """argparse hands the format over as a plain string."""
    assert CliConfig(format="dot").format is OutputFormat.DOT


@pytest.mark.parametrize("field", ["oracle_limit", "brute_limit"])
def test_cli_config_rejects_non_positive_limits(field):
    """Limits must be positive."""
    with pytest.raises(ValidationError):
        CliConfig(**{field: 0})


def test_graph_text_verify_defaults_off():
    assert GraphText(text="bipartite 0 0\n").verify is False
