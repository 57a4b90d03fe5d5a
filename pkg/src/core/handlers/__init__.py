# Handlers module initialization
from .command_handlers import cmd_compute, cmd_list_measures, cmd_sweep, cmd_verify

__all__ = ["cmd_compute", "cmd_list_measures", "cmd_sweep", "cmd_verify"]
