import pytest

from levelcurves import RunConfig


def test_defaults_are_valid():
    cfg = RunConfig()
    assert cfg.precision_bits <= cfg.max_precision_bits
    assert cfg.output_format == "text"


def test_validation():
    with pytest.raises(ValueError):
        RunConfig(precision_bits=8192, max_precision_bits=4096)
    with pytest.raises(ValueError):
        RunConfig(tolerance=0)
    with pytest.raises(ValueError):
        RunConfig(output_format="yaml")
