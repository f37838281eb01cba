import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Type

from pydantic import BaseModel, Field, field_validator
from pydantic.fields import FieldInfo
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from pcfa_workbench.errors import ConfigurationError
from pcfa_workbench.utils import reader_for

logger = logging.getLogger(__name__)


class AppConfig(BaseModel):
    """Application configurations."""

    # directory level information stays out of the env level config

    BASE_DIR: Path = Path(__file__).resolve().parent.parent.parent

    CONFIG_DIR: Path = BASE_DIR.joinpath("configs")
    LOGS_DIR: Path = BASE_DIR.joinpath("logs")


def resolve_config_file() -> Path:
    """PCFA_CONFIG_FILE wins; otherwise configs/workbench.yaml under the repo root."""
    explicit = os.environ.get("PCFA_CONFIG_FILE")
    if explicit:
        return Path(explicit)
    return AppConfig().CONFIG_DIR.joinpath("workbench.yaml")


class YamlFileSettingsSource(PydanticBaseSettingsSource):
    """Settings layer backed by the YAML (or JSON) workbench config file."""

    def __init__(self, settings_cls: Type[BaseSettings], conf_path: Optional[Path] = None):
        super().__init__(settings_cls)
        self.conf_path = conf_path or resolve_config_file()
        self._data = self._load()

    def _load(self) -> Dict[str, Any]:
        if not self.conf_path.exists():
            logger.debug(f"[YamlFileSettingsSource] no config file at {self.conf_path}")
            return {}
        raw = reader_for(str(self.conf_path)).read_config_from_file(str(self.conf_path))
        # keys are matched case-insensitively against field names
        return {str(key).upper(): value for key, value in raw.items()}

    def get_field_value(self, field: FieldInfo, field_name: str) -> Tuple[Any, str, bool]:
        return self._data.get(field_name.upper()), field_name, False

    def __call__(self) -> Dict[str, Any]:
        values: Dict[str, Any] = {}
        for field_name, field in self.settings_cls.model_fields.items():
            value, key, _ = self.get_field_value(field, field_name)
            if value is not None:
                values[key] = value
        return values


class GlobalConfig(BaseSettings):
    """Global configurations.

    Values come from init kwargs, then PCFA_* environment variables, then
    the .env file, then configs/workbench.yaml, then the defaults below.
    """

    model_config = SettingsConfigDict(env_prefix="PCFA_", env_file=".env", extra="ignore")

    APP_CONFIG: AppConfig = AppConfig()

    ENV_STATE: str = Field("dev", description="dev | prod | test")

    # decision and enumeration ceilings
    DECIDE_STEP_CEILING: int = Field(10_000_000, gt=0)
    CROSSCHECK_WORD_CEILING: int = Field(2_000_000, gt=0)
    MAX_GENERATED_LENGTH: int = Field(5_000_000, gt=0)
    OCA_HORIZON_FACTOR: int = Field(4, gt=0)

    # process fan-out for sweep and crosscheck
    WORKERS: int = Field(1, ge=1)

    LOG_LEVEL: str = "WARNING"
    LOG_JSON: bool = False
    LOG_FILE_ENABLED: bool = False

    @field_validator("LOG_LEVEL")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG", "NOTSET"):
            raise ValueError(f"unknown log level {value!r}")
        return level

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings, env_settings, dotenv_settings, YamlFileSettingsSource(settings_cls), file_secret_settings)

    def get_limits(self) -> Dict[str, int]:
        """Get the ceilings guarding decide, crosscheck and generators."""
        return {
            "decide_step_ceiling": self.DECIDE_STEP_CEILING,
            "crosscheck_word_ceiling": self.CROSSCHECK_WORD_CEILING,
            "max_generated_length": self.MAX_GENERATED_LENGTH,
        }

    def get_logging_config(self) -> Dict[str, Any]:
        """Get logging configuration."""
        return {
            "level": self.LOG_LEVEL,
            "json": self.LOG_JSON,
            "file_enabled": self.LOG_FILE_ENABLED,
            "logs_dir": self.APP_CONFIG.LOGS_DIR,
        }

    def oca_horizon(self, n: int) -> int:
        """Default oca_run horizon for input length n."""
        return self.OCA_HORIZON_FACTOR * n * n


class DevConfig(GlobalConfig):
    """Development configurations."""
    pass


class ProdConfig(GlobalConfig):
    """Production configurations."""

    LOG_JSON: bool = True
    LOG_FILE_ENABLED: bool = True


class UnitTestConfig(GlobalConfig):
    """Configurations used by the test suite."""

    LOG_LEVEL: str = "INFO"
    WORKERS: int = Field(1, ge=1)


class FactoryConfig:
    """Returns a config instance depending on the ENV_STATE variable."""

    def __init__(self, env_state: Optional[str]):
        self.env_state = env_state

    def __call__(self, **overrides: Any) -> GlobalConfig:
        if self.env_state == "dev":
            return DevConfig(**overrides)

        elif self.env_state == "prod":
            return ProdConfig(**overrides)

        elif self.env_state == "test":
            return UnitTestConfig(**overrides)

        raise ConfigurationError(f"unknown ENV_STATE {self.env_state!r}")


app_configs = FactoryConfig(GlobalConfig().ENV_STATE)()
