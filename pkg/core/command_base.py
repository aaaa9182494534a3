from abc import ABC, abstractmethod
from typing import Dict, Any


class CommandBase(ABC):
    """A CLI command: parsed inputs in, {"rows": [...], "summary": {...}} out"""

    name: str = "command"

    @abstractmethod
    def run(self, input: Dict[str, Any]) -> Dict[str, Any]:
        """Run command with input dict and return a renderable payload dict"""
        ...
