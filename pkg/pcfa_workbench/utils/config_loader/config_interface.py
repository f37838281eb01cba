import abc
from typing import Any, Dict


class ConfigReaderInterface(abc.ABC):
    """Reads a settings mapping from a file on disk."""

    def __init__(self):
        super().__init__()

    @abc.abstractmethod
    def read_config_from_file(self, conf_path: str) -> Dict[str, Any]:
        raise NotImplementedError()
