"""
Report model shared by the library checks and the command line.

A report is an ordered list of named checks. Every check has a status
(pass, fail or inconclusive), a short detail text and a witness mapping
holding exact values. Reports convert to plain dictionaries with every
rational written as an exact ``p/q`` string.
"""

import time
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional

from src.core.constants import STATUS_FAIL, STATUS_INCONCLUSIVE, STATUS_PASS


def to_jsonable(value: Any) -> Any:
    """
    Convert a value into JSON-compatible data without losing exactness.

    Args:
        value: Any value produced by the library

    Returns:
        Strings for rationals, lists for sequences and sets, dictionaries for
        mappings and objects exposing ``to_dict``
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return value
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted((to_jsonable(v) for v in value), key=repr)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "item"):
        # numpy scalars
        return to_jsonable(value.item())
    return str(value)


class Check:
    """One named check of a report."""

    def __init__(self, name: str, status: str, detail: str = "",
                 witness: Optional[Dict[str, Any]] = None):
        self.name = name
        self.status = status
        self.detail = detail
        self.witness = witness or {}

    @property
    def passed(self) -> bool:
        return self.status == STATUS_PASS

    @property
    def failed(self) -> bool:
        return self.status == STATUS_FAIL

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "name": self.name,
            "status": self.status,
            "detail": self.detail,
            "witness": to_jsonable(self.witness),
        }

    def __repr__(self) -> str:
        return f"Check({self.name!r}, {self.status!r})"


class Report:
    """
    Ordered collection of checks with free-form data.

    Attributes:
        command: Echo of what produced the report
        checks: Checks in the order they were run
        data: Additional exact results (flags, traces, decoded values)
    """

    def __init__(self, command: str = ""):
        self.command = command
        self.checks: List[Check] = []
        self.data: Dict[str, Any] = {}
        self._started = time.perf_counter()
        self.elapsed: Optional[float] = None

    def add(self, name: str, passed: bool, detail: str = "",
            witness: Optional[Dict[str, Any]] = None) -> Check:
        """
        Record a pass/fail check.

        Args:
            name: Check name
            passed: Outcome
            detail: Short human readable explanation
            witness: Exact values supporting the outcome

        Returns:
            The recorded check
        """
        check = Check(name, STATUS_PASS if passed else STATUS_FAIL, detail, witness)
        self.checks.append(check)
        return check

    def add_inconclusive(self, name: str, detail: str = "",
                         witness: Optional[Dict[str, Any]] = None) -> Check:
        """Record a check that found no counterexample without proving anything."""
        check = Check(name, STATUS_INCONCLUSIVE, detail, witness)
        self.checks.append(check)
        return check

    def extend(self, other: "Report", prefix: str = "") -> None:
        """Append the checks of another report, optionally prefixing their names."""
        for check in other.checks:
            name = f"{prefix}{check.name}" if prefix else check.name
            self.checks.append(Check(name, check.status, check.detail, check.witness))

    def finish(self) -> "Report":
        """Stop the clock."""
        self.elapsed = time.perf_counter() - self._started
        return self

    @property
    def passed(self) -> bool:
        return not any(check.failed for check in self.checks)

    def failures(self) -> List[Check]:
        return [check for check in self.checks if check.failed]

    def get(self, name: str) -> Optional[Check]:
        for check in self.checks:
            if check.name == name:
                return check
        return None

    def __iter__(self) -> Iterator[Check]:
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "command": self.command,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
            "data": to_jsonable(self.data),
            "elapsed": None if self.elapsed is None else round(self.elapsed, 3),
        }


__all__ = ["Check", "Report", "to_jsonable", "STATUS_PASS", "STATUS_FAIL",
           "STATUS_INCONCLUSIVE"]
