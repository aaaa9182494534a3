"""
Logging setup for the measure pipeline
Structured JSON events for commands, errors and soft checks
"""

import json
import logging
import sys
import time
from datetime import datetime
from functools import wraps
from pathlib import Path
from typing import Any, Dict, Optional

from app.config import Settings, settings

PACKAGE_LOGGERS = ("evidence", "possibility", "families", "explorer", "app")


def event(name: str, **fields: Any) -> str:
    """Encode a log event as a JSON string"""
    return json.dumps({"event": name, **fields}, sort_keys=True, default=str)


class Monitor:
    def __init__(self, config: Optional[Settings] = None):
        self.config = config or settings
        self.configured = False
        self.command_logger = logging.getLogger("app.commands")
        self.error_logger = logging.getLogger("app.errors")
        self.metrics = {
            "commands_total": 0,
            "commands_success": 0,
            "commands_error": 0,
            "error_counts": {},
        }

    def setup_loggers(self, level: Optional[str] = None):
        """Attach handlers to the package loggers"""
        if self.configured:
            return
        level = (level or self.config.log_level).upper()

        if self.config.log_json:
            formatter = logging.Formatter('%(asctime)s - %(levelname)s - %(name)s - %(message)s')
        else:
            formatter = logging.Formatter('%(levelname)s %(name)s: %(message)s')

        handlers = []
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setFormatter(formatter)
        handlers.append(stream_handler)

        if self.config.log_dir:
            log_dir = Path(self.config.log_dir)
            log_dir.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(log_dir / "evidence.log")
            file_handler.setFormatter(formatter)
            handlers.append(file_handler)

        for name in PACKAGE_LOGGERS:
            logger = logging.getLogger(name)
            for handler in handlers:
                logger.addHandler(handler)
            logger.setLevel(level)
            logger.propagate = False

        self.configured = True

    def log_command(self, command: str, status: str, duration: float):
        """Log one command invocation"""
        self.metrics["commands_total"] += 1
        if status == "ok":
            self.metrics["commands_success"] += 1
        else:
            self.metrics["commands_error"] += 1

        self.command_logger.info(event(
            "command",
            command=command,
            status=status,
            duration_ms=round(duration * 1000, 2),
        ))

    def log_error(self, error: Exception, context: Optional[Dict[str, Any]] = None):
        """Log error with context"""
        error_type = type(error).__name__
        self.metrics["error_counts"][error_type] = self.metrics["error_counts"].get(error_type, 0) + 1

        self.error_logger.error(event(
            "error",
            timestamp=datetime.now().isoformat(),
            error_type=error_type,
            error_message=str(error),
            context={**getattr(error, "context", {}), **(context or {})},
        ))

    def get_metrics_summary(self) -> Dict[str, Any]:
        """Get current metrics summary"""
        return {
            "total_commands": self.metrics["commands_total"],
            "success_commands": self.metrics["commands_success"],
            "error_commands": self.metrics["commands_error"],
            "error_breakdown": dict(self.metrics["error_counts"]),
        }


# Global monitor instance; handlers are attached by setup_monitoring()
monitor = Monitor()


def track_command(command_name: str):
    """Decorator to time a command and log its outcome"""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()
            status = "ok"
            try:
                return func(*args, **kwargs)
            except Exception as e:
                status = "error"
                monitor.log_error(e, {"command": command_name})
                raise
            finally:
                monitor.log_command(command_name, status, time.perf_counter() - start_time)

        return wrapper
    return decorator


def setup_monitoring(level: Optional[str] = None) -> Monitor:
    """Initialize logging for the CLI"""
    monitor.setup_loggers(level)
    return monitor
