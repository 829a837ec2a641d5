import pytest

from localbox.config import load_config_file, setting, silent


def test_config_sections():
    "Every section read by the library is present"
    config = load_config_file()
    for section in ("exact", "drivers", "partition", "alpha", "gnp", "coloring", "codec", "output"):
        assert section in config
    assert config["codec"]["header"] == {"n_bits": 10, "d_bits": 6, "dims_bits": 16}


def test_setting_override():
    "Explicit values win over the configured default"
    assert setting("drivers", "exact_cutoff") == load_config_file()["drivers"]["exact_cutoff"]
    assert setting("drivers", "exact_cutoff", 3) == 3
    assert setting("partition", "strategy", "moser_tardos") == "moser_tardos"
    with pytest.raises(KeyError):
        setting("drivers", "no_such_key")


def test_silent():
    "The default progress sink swallows messages"
    assert silent("anything") is None
