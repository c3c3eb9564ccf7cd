from .asymptotic_command import AsymptoticCommand
from .bound_command import BoundCommand
from .capacity_command import CapacityCommand
from .check_command import CheckCommand
from .command_interface import CommandInterface
from .count_command import CountCommand
from .sweep_command import SweepCommand
from .vertices_command import VerticesCommand

COMMANDS: tuple[type[CommandInterface], ...] = (
    CountCommand,
    BoundCommand,
    CapacityCommand,
    VerticesCommand,
    AsymptoticCommand,
    SweepCommand,
    CheckCommand,
)

__all__ = [
    'COMMANDS',
    'AsymptoticCommand',
    'BoundCommand',
    'CapacityCommand',
    'CheckCommand',
    'CommandInterface',
    'CountCommand',
    'SweepCommand',
    'VerticesCommand',
]
