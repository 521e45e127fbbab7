"""
JSON Schema-based validation of rivercross documents.

Solution files, run configurations and equivalence reports are checked
against packaged schemas with the jsonschema library.
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Dict, Optional, TextIO, Union

import yaml

from rivercross.config import RivercrossError

SCHEMA_NAMES = ("solutions", "run-config", "equivalence-report")
SCHEMA_DIR = Path(__file__).parent / "schemas"


class SchemaValidationError(RivercrossError):
    """Raised when a document cannot be loaded or fails its schema.

    Attributes:
        schema_path: Dot-separated location of the failing element, e.g.
            ``solutions.0.3``; empty for load failures and top-level errors.
    """

    def __init__(self, message: str, schema_path: str = "") -> None:
        super().__init__(message)
        self.schema_path = schema_path


def _read(
    file_path: Union[str, Path],
    parse: Callable[[TextIO], Any],
    missing: str = "File not found",
) -> Any:
    """Open and parse a file, turning load failures into schema errors."""
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            return parse(f)
    except FileNotFoundError:
        raise SchemaValidationError(f"{missing}: {file_path}")
    except json.JSONDecodeError as e:
        raise SchemaValidationError(f"Invalid JSON: {e}")
    except yaml.YAMLError as e:
        raise SchemaValidationError(f"Invalid YAML syntax: {e}")


@lru_cache(maxsize=None)
def _packaged(name: str) -> Dict[str, Any]:
    return _read(SCHEMA_DIR / f"{name}.json", json.load, "Schema not found")


def load_schema(
    name: str = "solutions",
    schema_path: Optional[Union[str, Path]] = None,
) -> Dict[str, Any]:
    """Load a rivercross JSON Schema.

    Args:
        name: Packaged schema name, one of ``SCHEMA_NAMES``.
        schema_path: Custom schema file to load instead.

    Raises:
        SchemaValidationError: If the name is unknown or the file cannot be
            read as a JSON object.
    """
    if schema_path is not None:
        schema = _read(schema_path, json.load, "Schema not found")
    elif name in SCHEMA_NAMES:
        schema = _packaged(name)
    else:
        raise SchemaValidationError(
            f"Unknown schema '{name}'; expected one of "
            + ", ".join(SCHEMA_NAMES)
        )
    if not isinstance(schema, dict):
        raise SchemaValidationError(
            f"Schema must be a JSON object, got {type(schema).__name__}"
        )
    return schema


def validate_document(
    document: Any,
    name: str,
    schema_path: Optional[Union[str, Path]] = None,
) -> bool:
    """Validate a document against a packaged schema.

    Returns:
        True if the document is valid

    Raises:
        SchemaValidationError: Naming the schema and, below the top level,
            the dotted location of the first failure.
    """
    import jsonschema

    try:
        jsonschema.validate(document, load_schema(name, schema_path))
    except jsonschema.ValidationError as e:
        where = ".".join(str(p) for p in e.absolute_path)
        raise SchemaValidationError(
            f"Invalid {name} document: {e.message}"
            + (f" at '{where}'" if where else ""),
            schema_path=where,
        )
    return True


def load_yaml_file(file_path: Union[str, Path]) -> Dict[str, Any]:
    """Load a YAML mapping, as used for run-config files."""
    data = _read(file_path, yaml.safe_load)
    if not isinstance(data, dict):
        raise SchemaValidationError(
            f"Expected a YAML mapping in {file_path}, "
            f"got {type(data).__name__}"
        )
    return data


def load_json_file(file_path: Union[str, Path]) -> Any:
    """Load any JSON document; validation is left to the caller."""
    return _read(file_path, json.load)
