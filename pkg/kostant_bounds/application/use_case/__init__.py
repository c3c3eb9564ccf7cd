from .check_service import CheckService
from .sweep_service import SweepService

__all__ = ['CheckService', 'SweepService']
