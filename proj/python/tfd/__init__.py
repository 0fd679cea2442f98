"""Fixed point data of semifree circle actions on monotone 6-manifolds."""
import json

from ._tfd import (
    TfdError,
    check,
    classify_json,
    exceptional_classes,
    schema_version,
    table,
    verify_fixture,
)


def classify(case="all"):
    """Records of the given case ("I".."IV" or "all") as a list of dicts."""
    return json.loads(classify_json(case))["records"]


__all__ = [
    "TfdError",
    "check",
    "classify",
    "classify_json",
    "exceptional_classes",
    "schema_version",
    "table",
    "verify_fixture",
]
