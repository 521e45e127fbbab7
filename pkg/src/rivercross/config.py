"""
Budgets and run configuration for rivercross.

Every enumeration in the package is bounded by a budget so that exceeding a
limit is a clean error rather than an exhausted machine. Budgets can be
tightened or relaxed from a YAML run-config file or CLI flags.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Optional, Union


class RivercrossError(Exception):
    """Base class for all rivercross errors."""

    pass


class BudgetExceededError(RivercrossError):
    """Raised when a configured budget would be exceeded.

    Attributes:
        budget: Name of the budget (e.g. 'max_n', 'max_paths').
        limit: Configured limit that was hit.
    """

    def __init__(self, budget: str, limit: int, detail: str = "") -> None:
        message = f"Budget '{budget}' exceeded (limit {limit})"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
        self.budget = budget
        self.limit = limit


@dataclass(frozen=True)
class Budgets:
    """Caps applied to state, path and morphism enumeration.

    Attributes:
        max_n: Largest instance size that may be enumerated.
        max_paths: Largest number of solutions/paths an enumerator may emit.
        max_morphisms: Largest number of morphisms a path category may hold.
        max_bound: Largest path-length bound for category construction.
    """

    max_n: int = 8
    max_paths: int = 1_000_000
    max_morphisms: int = 2_000_000
    max_bound: int = 12

    def check_n(self, n: int) -> None:
        """Reject instance sizes above ``max_n``."""
        if n > self.max_n:
            raise BudgetExceededError(
                "max_n", self.max_n, f"instance size n={n} is too large"
            )

    def check_bound(self, bound: int) -> None:
        """Reject path-length bounds above ``max_bound``."""
        if bound > self.max_bound:
            raise BudgetExceededError(
                "max_bound", self.max_bound, f"path bound L={bound}"
            )

    def check_paths(self, count: int) -> None:
        """Reject path counts above ``max_paths``."""
        if count > self.max_paths:
            raise BudgetExceededError("max_paths", self.max_paths)

    def check_morphisms(self, count: int) -> None:
        """Reject morphism counts above ``max_morphisms``."""
        if count > self.max_morphisms:
            raise BudgetExceededError("max_morphisms", self.max_morphisms)

    def to_dict(self) -> Dict[str, int]:
        return {
            "max_n": self.max_n,
            "max_paths": self.max_paths,
            "max_morphisms": self.max_morphisms,
            "max_bound": self.max_bound,
        }


DEFAULT_BUDGETS = Budgets()

OUTPUT_FORMATS = ("json", "dot", "text")


@dataclass
class RunConfig:
    """Configuration of a single CLI invocation.

    Attributes:
        command: Sub-command name ('solve', 'lift', ...).
        n: Number of couples / missionaries.
        b: Boat capacity; None means capacity(n).
        flavor: 'hw' or 'mc'.
        max_len: Optional cap on solution length for enumeration.
        bound: Path-length bound L for category checks.
        output_format: One of 'json', 'dot', 'text'.
        seed: Seed for sampled checks.
        jobs: Worker threads for partitioned enumeration.
        budgets: Enumeration budgets.
    """

    command: str = "solve"
    n: int = 3
    b: Optional[int] = None
    flavor: str = "mc"
    max_len: Optional[int] = None
    bound: int = 6
    output_format: str = "text"
    seed: int = 0
    jobs: int = 1
    budgets: Budgets = field(default_factory=Budgets)

    @property
    def capacity(self) -> int:
        """Boat capacity in effect (explicit ``b`` or capacity(n))."""
        if self.b is not None:
            return self.b
        from rivercross.model import capacity

        return capacity(self.n)

    def validate(self) -> "RunConfig":
        """Check parameter ranges and budgets.

        Returns:
            self, for chaining.

        Raises:
            ValueError: If a parameter is out of range.
            BudgetExceededError: If a budget is exceeded.
        """
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if self.b is not None and self.b < 1:
            raise ValueError(f"b must be at least 1, got {self.b}")
        if self.flavor not in ("hw", "mc"):
            raise ValueError(f"flavor must be 'hw' or 'mc', got {self.flavor}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"format must be one of {', '.join(OUTPUT_FORMATS)}, "
                f"got {self.output_format}"
            )
        if self.bound < 0:
            raise ValueError(f"L must be non-negative, got {self.bound}")
        if self.max_len is not None and self.max_len < 0:
            raise ValueError(f"max-len must be non-negative: {self.max_len}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}")
        self.budgets.check_n(self.n)
        self.budgets.check_bound(self.bound)
        return self

    def merged(self, overrides: Dict[str, Any]) -> "RunConfig":
        """Return a copy with non-None ``overrides`` applied."""
        values = {k: v for k, v in overrides.items() if v is not None}
        budget_values = {
            k: values.pop(k)
            for k in list(values)
            if k in DEFAULT_BUDGETS.to_dict()
        }
        budgets = replace(self.budgets, **budget_values)
        return replace(self, budgets=budgets, **values)


def load_run_config(path: Union[str, Path]) -> RunConfig:
    """Load a run configuration from a YAML file.

    The file is validated against the packaged ``run-config`` schema.
    Budget keys may appear at top level or under a ``budgets`` mapping.

    Args:
        path: Path to a YAML run-config file.

    Returns:
        RunConfig populated from the file.

    Raises:
        SchemaValidationError: If the file cannot be loaded or is invalid.
    """
    from rivercross.schema import load_yaml_file, validate_document

    data = load_yaml_file(path)
    validate_document(data, "run-config")

    values: Dict[str, Any] = dict(data)
    budgets = values.pop("budgets", {}) or {}
    if "format" in values:
        values["output_format"] = values.pop("format")
    if "L" in values:
        values["bound"] = values.pop("L")
    if "max-len" in values:
        values["max_len"] = values.pop("max-len")
    values.update(budgets)
    return RunConfig().merged(values)
