from pydantic.dataclasses import dataclass

from pcfa_workbench.utils.config_loader.read_json import JsonConfigReader
from pcfa_workbench.utils.config_loader.read_yaml import YamlConfigReader


@dataclass
class ConfigReaderInstance:
    json = JsonConfigReader()
    yaml = YamlConfigReader()


def reader_for(conf_path: str):
    """Pick the reader matching a file suffix; YAML is the default."""
    if str(conf_path).lower().endswith(".json"):
        return ConfigReaderInstance.json
    return ConfigReaderInstance.yaml
