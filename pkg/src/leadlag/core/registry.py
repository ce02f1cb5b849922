from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List


@dataclass(frozen=True)
class Command:
    """One CLI subcommand: argparse wiring plus the handler that runs it."""

    name: str
    help: str
    add_arguments: Callable  # (argparse.ArgumentParser) -> None
    handler: Callable  # (argparse.Namespace) -> int


class CommandRegistry:
    def __init__(self):
        self._commands: Dict[str, Command] = {}

    def register(self, command: Command) -> None:
        if command.name in self._commands:
            raise ValueError(f"Command {command.name} already registered")
        self._commands[command.name] = command

    def get(self, name: str) -> Command:
        if name not in self._commands:
            raise ValueError(f"Command {name} not registered")
        return self._commands[name]

    def list_commands(self) -> List[str]:
        return list(self._commands.keys())
