__all__ = [
    'BombieriJSONFormatter',
    'RunContextFilter',
]

from .logging import BombieriJSONFormatter, RunContextFilter
