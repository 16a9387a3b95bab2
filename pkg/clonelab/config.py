import io
from pathlib import Path
from typing import Optional, Union

from yaml import safe_dump, safe_load

from .compat import NoExtra, field_validator, model_dump, model_validate
from .exceptions import InstanceTooLarge

__all__ = 'AnalysisConfig', 'load_config', 'load_config_buffer', 'dump_config', 'DEFAULT_CONFIG', 'check_limit'

CONFIG_NAME = 'clonelab.yml'


class AnalysisConfig(NoExtra):
    # upper bounds for the exponential routines
    clone_oracle_limit: int = 16
    axis_oracle_limit: int = 8
    sp_declone_oracle_limit: int = 7
    sc_oracle_limit: int = 8
    exact_search_limit: int = 10

    @field_validator(
        'clone_oracle_limit', 'axis_oracle_limit', 'sp_declone_oracle_limit', 'sc_oracle_limit',
        'exact_search_limit',
    )
    def positive(cls, v):
        if v <= 0:
            raise ValueError(f'Limits must be positive, got {v}')
        return v


DEFAULT_CONFIG = AnalysisConfig()


def load_config_buffer(data: str) -> AnalysisConfig:
    return model_validate(AnalysisConfig, safe_load(io.StringIO(data)) or {})


def load_config(path: Union[Path, str]) -> AnalysisConfig:
    path = Path(path)
    if path.is_dir():
        path = path / CONFIG_NAME
    with open(path) as file:
        return model_validate(AnalysisConfig, safe_load(file) or {})


def dump_config(config: AnalysisConfig) -> str:
    return safe_dump(model_dump(config, exclude_defaults=True))


def check_limit(value: int, limit: Optional[int], field: str, what: str):
    if limit is None:
        limit = getattr(DEFAULT_CONFIG, field)
    if value > limit:
        raise InstanceTooLarge(f'{what} is {value}, but at most {limit} is supported here')
