#!/usr/bin/env python3
"""Validate specind JSON output against docs/schemas."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

ROOT = Path(__file__).resolve().parent.parent
SCHEMAS = ROOT / "docs" / "schemas"

CASES = [
    ("spectrum", ["spectrum", "--family", "odd:5"]),
    ("spectrum", ["spectrum", "--in", str(ROOT / "fixtures/spectra/higman_sims.json")]),
    ("bounds", ["bounds", "--family", "petersen", "--k", "1", "--exact"]),
    ("bounds", ["bounds", "--family", "odd:5", "--k", "all"]),
    ("bounds", ["bounds", "--family", "hypercube:4", "--k", "all", "--no-milp"]),
    ("bounds", ["bounds", "--in", str(ROOT / "fixtures/graphs/frucht.g6"), "--k", "2", "--exact"]),
    ("classify", ["classify", "--family", "kneser:6,2", "--k", "1", "--exact"]),
    ("classify", ["classify", "--family", "odd:5", "--k", "3"]),
    ("table", ["table", "t2", "--format", "json"]),
    ("table", ["table", "minor-odd", "--format", "json"]),
    ("table", ["table", "t4", "--format", "json"]),
]


def main() -> int:
    exe = sys.argv[1]
    failed = 0
    for schema_name, args in CASES:
        schema = json.loads((SCHEMAS / f"{schema_name}.schema.json").read_text())
        out = subprocess.run([exe, *args, "--format", "json"] if "--format" not in args else [exe, *args],
                             capture_output=True, text=True, check=False)
        try:
            jsonschema.validate(json.loads(out.stdout), schema)
            print("ok  ", " ".join(args))
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failed += 1
            print("FAIL", " ".join(args), "-", str(e).splitlines()[0])
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
