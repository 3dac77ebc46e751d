"""Node-count budgets shared by the exhaustive searches."""
from __future__ import annotations

import os

ENV_VAR = "SPEEDCOPS_BUDGET"
DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """A search ran out of nodes before reaching an answer."""


def default_budget() -> int:
    raw = os.environ.get(ENV_VAR)
    return int(raw) if raw else DEFAULT_BUDGET


class Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = default_budget() if limit is None else limit
        self.used = 0

    def spend(self, nodes: int = 1) -> None:
        self.used += nodes
        if self.used > self.limit:
            raise BudgetExceeded(f"node budget of {self.limit} exhausted")


def as_budget(budget: Budget | int | None) -> Budget:
    return budget if isinstance(budget, Budget) else Budget(budget)
