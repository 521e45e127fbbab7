"""Unit tests for budgets and run configuration."""

import pytest

from rivercross.config import (
    DEFAULT_BUDGETS,
    BudgetExceededError,
    Budgets,
    RivercrossError,
    RunConfig,
)


# Test default budget values
def test_default_budgets():
    """Defaults cap n at 8 and L at 12."""
    assert DEFAULT_BUDGETS.max_n == 8
    assert DEFAULT_BUDGETS.max_paths == 1_000_000
    assert DEFAULT_BUDGETS.max_morphisms == 2_000_000
    assert DEFAULT_BUDGETS.max_bound == 12


# Test BudgetExceededError carries budget name and limit
def test_budget_exceeded_error_fields():
    """Error records the budget and limit and names both."""
    error = BudgetExceededError("max_paths", 10, "too many")
    assert isinstance(error, RivercrossError)
    assert error.budget == "max_paths"
    assert error.limit == 10
    assert str(error) == "Budget 'max_paths' exceeded (limit 10): too many"


# Test each budget check raises only above its limit
@pytest.mark.parametrize(
    "method,limit_field",
    [
        ("check_n", "max_n"),
        ("check_bound", "max_bound"),
        ("check_paths", "max_paths"),
        ("check_morphisms", "max_morphisms"),
    ],
)
def test_budget_checks(method, limit_field):
    """Values at the limit pass, values above it raise."""
    budgets = Budgets(max_n=4, max_paths=5, max_morphisms=6, max_bound=7)
    limit = getattr(budgets, limit_field)
    getattr(budgets, method)(limit)
    with pytest.raises(BudgetExceededError) as exc_info:
        getattr(budgets, method)(limit + 1)
    assert exc_info.value.budget == limit_field


# Test RunConfig capacity falls back to the capacity formula
@pytest.mark.parametrize("n,expected", [(2, 2), (3, 2), (4, 3), (6, 4)])
def test_run_config_default_capacity(n, expected):
    """Without b the capacity is capacity(n)."""
    assert RunConfig(n=n).capacity == expected


# Test explicit b overrides the formula
def test_run_config_explicit_capacity():
    """An explicit b is used as is."""
    assert RunConfig(n=4, b=2).capacity == 2


# Test validate accepts defaults and returns self
def test_run_config_validate_defaults():
    """Default configuration is valid."""
    config = RunConfig()
    assert config.validate() is config


# Test validate rejects out-of-range parameters
@pytest.mark.parametrize(
    "kwargs",
    [
        {"n": 1},
        {"b": 0},
        {"flavor": "ferry"},
        {"output_format": "xml"},
        {"bound": -1},
        {"max_len": -2},
        {"jobs": 0},
    ],
)
def test_run_config_validate_rejects(kwargs):
    """Each bad parameter raises ValueError."""
    with pytest.raises(ValueError):
        RunConfig(**kwargs).validate()


# Test validate enforces budgets
def test_run_config_validate_budgets():
    """n and L above their budgets raise BudgetExceededError."""
    with pytest.raises(BudgetExceededError):
        RunConfig(n=9).validate()
    with pytest.raises(BudgetExceededError):
        RunConfig(bound=13).validate()


# Test merged ignores None and routes budget keys
def test_run_config_merged():
    """None overrides are dropped and budget names go to budgets."""
    config = RunConfig(n=3, seed=5)
    merged = config.merged({"n": 4, "seed": None, "max_paths": 7})
    assert merged.n == 4
    assert merged.seed == 5
    assert merged.budgets.max_paths == 7
    assert config.n == 3
