from fractions import Fraction
from typing import Any

import orjson

from ..config.runtime_config import current_config


def _default(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def with_schema(kind: str, body: dict[str, Any]) -> dict[str, Any]:
    """Stamp a report body with its kind and the configured schema version."""
    return {"schema_version": current_config().reports.schema_version, "kind": kind, **body}


def dumps_report(obj: Any, pretty: bool = False) -> bytes:
    option = orjson.OPT_SORT_KEYS | orjson.OPT_NON_STR_KEYS
    if pretty:
        option |= orjson.OPT_INDENT_2
    return orjson.dumps(obj, default=_default, option=option)
