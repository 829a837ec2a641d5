'''
Access to the YAML configuration stored in the `etc` folder.

(c) 2025
'''

import yaml
from pathlib import Path
from functools import lru_cache


@lru_cache(maxsize=1)
def load_config_file() -> dict:
    """
    Loads the YAML configuration file located in the `etc` folder.

    Returns:
        dict: Dictionary containing the configuration loaded from `config.yml`.

    Raises:
        FileNotFoundError: If the configuration file does not exist.
        yaml.YAMLError: If an error occurs while parsing the YAML file.
    """
    fpath = Path(__file__).parent / "etc" / "config.yml"

    with open(fpath, 'r') as file:
        config = yaml.safe_load(file)

    return config


def setting(section: str, key: str, value=None):
    """
    Returns `value` when given, otherwise the configured default `config[section][key]`.

    Args:
        section (str): Top level section of `config.yml` (e.g. "exact").
        key (str): Key inside the section.
        value: Explicit override. `None` means "use the configuration".
    """
    if value is not None:
        return value
    return load_config_file()[section][key]


def silent(msg: str) -> None:
    """Default `message` sink: discards progress messages."""
    return None
