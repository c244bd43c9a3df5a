import json
import os
import sys
from datetime import datetime
from typing import Any, Dict, Optional

from ohg.config import settings
from ohg.models.state import LogEntry


class LoggingService:
    """
    Service for the JSONL event log of the ohg toolkit.
    Entries are appended to a file when one is configured and echoed to stderr
    in debug mode. Nothing is ever written to stdout, which belongs to the
    command output.
    """

    def __init__(self, log_file_path: Optional[str] = None, echo: bool = False):
        self.log_file_path = log_file_path
        self.echo = echo
        self.log_file = None
        if self.log_file_path:
            try:
                directory = os.path.dirname(log_file_path)
                if directory:
                    os.makedirs(directory, exist_ok=True)
                self.log_file = open(log_file_path, "a", encoding="utf-8")
            except OSError as e:
                print(f"Warning: Could not open log file {log_file_path}: {e}", file=sys.stderr)
                self.log_file = None

    def create_log_entry(
        self,
        eventType: str,
        command: Optional[str] = None,
        instanceName: Optional[str] = None,
        verdict: Optional[str] = None,
        textContent: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> LogEntry:
        """
        Creates and logs an entry.

        Args:
            eventType: Type of event (e.g., 'ClassifierVerdict', 'VerifyViolation').
            command: CLI command that produced the event.
            instanceName: Name of the hypergraph instance.
            verdict: Verdict or status string.
            textContent: Relevant text content.
            details: Additional structured data; must be JSON serializable.

        Returns:
            A dictionary representing the created log entry.
        """
        log_entry: LogEntry = {
            "timestamp": datetime.now().isoformat(),
            "eventType": eventType,
        }
        if command is not None:
            log_entry["command"] = command
        if instanceName is not None:
            log_entry["instanceName"] = instanceName
        if verdict is not None:
            log_entry["verdict"] = verdict
        if textContent is not None:
            log_entry["textContent"] = textContent
        if details is not None:
            log_entry["details"] = details

        if self.echo:
            print(f"ohg log: {log_entry}", file=sys.stderr)

        if self.log_file:
            try:
                self.log_file.write(json.dumps(log_entry, ensure_ascii=False, default=str) + "\n")
                self.log_file.flush()
            except OSError as e:
                print(f"Warning: Could not write to log file: {e}", file=sys.stderr)

        return log_entry

    def close(self) -> None:
        if self.log_file:
            self.log_file.close()
            self.log_file = None


_logging_service: Optional[LoggingService] = None


def get_logging_service() -> LoggingService:
    """
    Get or create the global logging service, configured from settings.

    Returns:
        LoggingService instance
    """
    global _logging_service
    if _logging_service is None:
        _logging_service = LoggingService(settings.LOG_FILE or None, echo=settings.DEBUG)
    return _logging_service
