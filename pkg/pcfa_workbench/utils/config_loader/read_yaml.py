from pathlib import Path
from typing import Any, Dict

import yaml

from pcfa_workbench.errors import ConfigurationError
from pcfa_workbench.utils.config_loader.config_interface import ConfigReaderInterface


class YamlConfigReader(ConfigReaderInterface):

    def __init__(self):
        super(YamlConfigReader, self).__init__()

    def read_config_from_file(self, conf_path: str) -> Dict[str, Any]:
        with open(Path(conf_path), encoding="utf-8") as file:
            config = yaml.safe_load(file)
        # an empty file loads as None
        if config is None:
            return {}
        if not isinstance(config, dict):
            raise ConfigurationError(f"{conf_path}: top level must be a mapping")
        return config
