"""
Application configuration settings loader.
Centralized environment variables and runtime limits for counting and optimization.
"""

import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

__all__ = ['Settings', 'get_settings', 'str_to_bool']


def str_to_bool(value: str) -> bool:
    """
    Converts string to boolean (accepts multiple true formats)
    """

    return value.lower() in {'1', 'true', 'yes', 'on'}


@dataclass
class LogSettings:
    """
    Structured logging configuration
    """

    LEVEL: int = field(default_factory=lambda: int(os.getenv('LOG_LEVEL', '20')))
    JSON: bool = field(default_factory=lambda: str_to_bool(os.getenv('LOG_JSON', 'false')))


@dataclass
class CountSettings:
    """
    Limits of the exact counters
    """

    MAX_STATES: int = field(default_factory=lambda: int(os.getenv('KOSTANT_MAX_STATES', str(10 ** 8))))
    BRUTE_CAP: int = field(default_factory=lambda: int(os.getenv('KOSTANT_BRUTE_CAP', str(10 ** 7))))
    THREADS: int = field(default_factory=lambda: int(os.getenv('KOSTANT_THREADS', '1')))
    MAX_COMPOSITIONS: int = field(default_factory=lambda: int(os.getenv('KOSTANT_MAX_COMPOSITIONS', str(10 ** 6))))

    def __post_init__(self):
        if min(self.MAX_STATES, self.BRUTE_CAP, self.THREADS, self.MAX_COMPOSITIONS) < 1:
            raise ValueError('Counting limits and KOSTANT_THREADS must be positive integers.')


@dataclass
class ScalingSettings:
    """
    Alternating-scaling optimizer configuration
    """

    TOL: float = field(default_factory=lambda: float(os.getenv('SCALING_TOL', '1e-9')))
    MAX_SWEEPS: int = field(default_factory=lambda: int(os.getenv('SCALING_MAX_SWEEPS', str(10 ** 5))))
    EPS: float = field(default_factory=lambda: float(os.getenv('SCALING_EPS', '1e-15')))
    DENOMINATOR: int = field(default_factory=lambda: int(os.getenv('SCALING_DENOMINATOR', str(10 ** 9))))
    STALL_WINDOW: int = field(default_factory=lambda: int(os.getenv('SCALING_STALL_WINDOW', '2000')))

    def __post_init__(self):
        if self.TOL <= 0 or not 0 < self.EPS < 1:
            raise ValueError('SCALING_TOL must be positive and SCALING_EPS must lie in (0, 1).')


@dataclass
class VertexSettings:
    """
    Vertex enumeration limits
    """

    STRUCTURED_MAX_N: int = field(default_factory=lambda: int(os.getenv('VERTEX_STRUCTURED_MAX_N', '8')))
    GENERIC_MAX_N: int = field(default_factory=lambda: int(os.getenv('VERTEX_GENERIC_MAX_N', '5')))


@dataclass
class OutputSettings:
    """
    Output formatting
    """

    FLOAT_DIGITS: int = field(default_factory=lambda: int(os.getenv('OUTPUT_FLOAT_DIGITS', '12')))


@dataclass
class AppSettings:
    """
    Core application settings
    """

    NAME: str = 'kostant-bounds'
    VERSION: str = '0.1.0'

    MODE: str = field(default_factory=lambda: os.getenv('MODE', 'DEV'))
    DEBUG: bool = field(default_factory=lambda: str_to_bool(os.getenv('DEBUG', 'False')))

    def __post_init__(self):
        """
        Post-initialization validation
        """

        if self.MODE not in {'PROD', 'DEV', 'TEST'}:
            raise ValueError(f'Invalid MODE: {self.MODE}. Must be one of `PROD`, `DEV`, `TEST`.')

        # Load from pyproject.toml if exists
        pyproject = Path(f'{os.curdir}/pyproject.toml')
        if pyproject.is_file():
            from kostant_bounds.lib.utils.pyproject import PyProject, decode

            content: PyProject = decode(pyproject.read_text())
            poetry = content.tool.get('poetry', {})
            self.NAME = poetry.get('name', self.NAME)
            self.VERSION = poetry.get('version', self.VERSION)


@dataclass
class Settings:
    """
    Aggregate settings container
    """

    app: AppSettings = field(default_factory=AppSettings)
    log: LogSettings = field(default_factory=LogSettings)
    count: CountSettings = field(default_factory=CountSettings)
    scaling: ScalingSettings = field(default_factory=ScalingSettings)
    vertex: VertexSettings = field(default_factory=VertexSettings)
    output: OutputSettings = field(default_factory=OutputSettings)

    @classmethod
    def from_env(cls, env_name='.env') -> 'Settings':
        """
        Load settings from environment file
        """

        env_path = Path(f'{os.curdir}/{env_name}')
        if env_path.is_file():
            from dotenv import load_dotenv

            load_dotenv(env_path)
        return Settings()


@lru_cache(maxsize=1, typed=True)
def get_settings() -> Settings:
    """
    Cached settings factory
    """

    return Settings.from_env()
