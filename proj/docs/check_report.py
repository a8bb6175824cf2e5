#!/usr/bin/env python3
"""Validate an fwc JSON report (stdin) against docs/report-schema.json.

Uses jsonschema when available; otherwise falls back to a structural check
of the required keys and basic types.
"""
import json
import pathlib
import sys

schema_path = pathlib.Path(__file__).with_name("report-schema.json")
schema = json.loads(schema_path.read_text())
report = json.load(sys.stdin)

try:
    import jsonschema
    jsonschema.validate(report, schema)
    print("schema ok (jsonschema)")
    sys.exit(0)
except ImportError:
    pass


def fail(msg):
    print("schema violation:", msg)
    sys.exit(1)


def check_required(obj, spec, path):
    for key in spec.get("required", []):
        if key not in obj:
            fail(f"{path}: missing required key '{key}'")


check_required(report, schema, "$")
if not isinstance(report["command"], str):
    fail("$.command: not a string")
check_required(report["options"], schema["properties"]["options"], "$.options")
if "lrc" in report:
    lrc = report["lrc"]
    check_required(lrc, schema["properties"]["lrc"], "$.lrc")
    for side in ("code", "dual"):
        check_required(lrc[side], schema["definitions"]["lrc_profile"], f"$.lrc.{side}")
        if not isinstance(lrc[side]["alphabet"], str):
            fail(f"$.lrc.{side}.alphabet: counts and alphabet sizes are decimal strings")
if "weight_distributions" in report:
    for i, wd in enumerate(report["weight_distributions"]):
        check_required(wd, schema["properties"]["weight_distributions"]["items"], f"$.wd[{i}]")
        for k, v in wd["counts"].items():
            if not (isinstance(v, str) and v.isdigit()):
                fail(f"$.wd[{i}].counts[{k}]: not a decimal string")
print("schema ok (structural)")
