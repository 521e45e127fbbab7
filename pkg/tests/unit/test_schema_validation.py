"""Unit tests for schema validation - no filesystem access."""

import pytest

from rivercross.schema import (
    SCHEMA_NAMES,
    SchemaValidationError,
    load_schema,
    validate_document,
)


# Test SchemaValidationError exception creation
def test_error_with_message_only():
    """Test creating error with message only."""
    error = SchemaValidationError("Test error")
    assert str(error) == "Test error"
    assert error.schema_path == ""


# Test SchemaValidationError with schema path
def test_error_with_schema_path():
    """Test creating error with schema path information."""
    error = SchemaValidationError("Validation failed", schema_path="n")
    assert error.schema_path == "n"


# Test every packaged schema loads
@pytest.mark.parametrize("name", SCHEMA_NAMES)
def test_packaged_schemas_load(name):
    """Test packaged schemas are draft-07 objects."""
    schema = load_schema(name)
    assert schema["$schema"].startswith("http://json-schema.org/draft-07")
    assert schema["type"] == "object"


# Test unknown schema names are rejected
def test_unknown_schema():
    """Test an unknown schema name raises."""
    with pytest.raises(SchemaValidationError, match="Unknown schema"):
        load_schema("manifest")


# Test a minimal solutions document
def test_minimal_solutions_document():
    """Test only n, flavor and solutions are required."""
    document = {"n": 3, "flavor": "mc", "solutions": []}
    assert validate_document(document, "solutions") is True


# Test a full solutions document
def test_full_solutions_document():
    """Test optional b, length and count are accepted."""
    document = {
        "n": 3,
        "b": 2,
        "flavor": "mc",
        "length": 1,
        "count": 1,
        "solutions": [["[(3,3)|(0,0):L]", "{(2,0):L}", "[(1,3)|(2,0):R]"]],
    }
    assert validate_document(document, "solutions") is True


# Test invalid solutions documents report the failing path
@pytest.mark.parametrize(
    "document,path",
    [
        ({"n": 1, "flavor": "mc", "solutions": []}, "n"),
        ({"n": 3, "flavor": "ferry", "solutions": []}, "flavor"),
        ({"n": 3, "flavor": "mc", "solutions": [[]]}, "solutions.0"),
        ({"n": 3, "flavor": "mc", "solutions": [[""]]}, "solutions.0.0"),
        ({"n": 3, "flavor": "mc", "solutions": [], "b": 0}, "b"),
    ],
)
def test_invalid_solutions_document(document, path):
    """Test field errors carry a dotted schema path."""
    with pytest.raises(SchemaValidationError) as exc_info:
        validate_document(document, "solutions")
    assert exc_info.value.schema_path == path
    assert f"at '{path}'" in str(exc_info.value)


# Test missing and extra top-level keys
@pytest.mark.parametrize(
    "document",
    [
        {"n": 3, "flavor": "mc"},
        {"n": 3, "flavor": "mc", "solutions": [], "paths": []},
    ],
)
def test_solutions_top_level_errors(document):
    """Test required and unknown keys fail at the top level."""
    with pytest.raises(SchemaValidationError) as exc_info:
        validate_document(document, "solutions")
    assert exc_info.value.schema_path == ""
    assert "Invalid solutions document" in str(exc_info.value)


# Test run configurations
def test_run_config_document():
    """Test a run-config with nested budgets."""
    document = {
        "flavor": "hw",
        "n": 3,
        "L": 4,
        "format": "json",
        "budgets": {"max_paths": 10, "max_bound": 6},
    }
    assert validate_document(document, "run-config") is True


# Test unknown budget keys
def test_run_config_unknown_budget():
    """Test budgets only accept the four known caps."""
    document = {"budgets": {"max_time": 10}}
    with pytest.raises(SchemaValidationError):
        validate_document(document, "run-config")


# Test equivalence reports
def test_equivalence_report_document():
    """Test a report with laws validates."""
    document = {
        "n": 2,
        "b": 2,
        "L": 3,
        "functor": "equivalence",
        "full": True,
        "faithful": True,
        "essentially_surjective": True,
        "morphisms_checked": 10,
        "counterexamples": [],
        "note": "bounded",
        "laws": [{"law": "identity", "subject": "mc", "holds": True}],
    }
    assert validate_document(document, "equivalence-report") is True


# Test equivalence reports need their verdicts
def test_equivalence_report_missing_verdict():
    """Test full is required."""
    document = {
        "n": 2,
        "b": 2,
        "L": 3,
        "faithful": True,
        "essentially_surjective": True,
        "counterexamples": [],
    }
    with pytest.raises(SchemaValidationError, match="full"):
        validate_document(document, "equivalence-report")
