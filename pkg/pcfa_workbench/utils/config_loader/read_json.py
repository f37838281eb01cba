import json
from pathlib import Path
from typing import Any, Dict

from pcfa_workbench.errors import ConfigurationError
from pcfa_workbench.utils.config_loader.config_interface import ConfigReaderInterface


class JsonConfigReader(ConfigReaderInterface):

    def __init__(self):
        super(JsonConfigReader, self).__init__()

    def read_config_from_file(self, conf_path: str) -> Dict[str, Any]:
        with open(Path(conf_path), encoding="utf-8") as file:
            config = json.load(file)
        if not isinstance(config, dict):
            raise ConfigurationError(f"{conf_path}: top level must be an object")
        return config
