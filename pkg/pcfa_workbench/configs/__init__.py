from pcfa_workbench.configs.config import GlobalConfig, app_configs

__all__ = ["GlobalConfig", "app_configs"]
