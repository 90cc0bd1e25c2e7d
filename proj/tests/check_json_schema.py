#!/usr/bin/env python3
"""Validates dqdcavity --format json output against schema/output.schema.json.

Usage: check_json_schema.py DQDCAVITY SCHEMA
Exits 77 (skipped) when the jsonschema package is not installed.
"""

import json
import subprocess
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(77)

RUNS = [
    ["steady"],
    ["steady", "--preset", "fig3-right", "--tunneling-mev", "0.1", "--zeta-mev", "0.05"],
    ["lines", "--tunneling-mev", "0.55", "--zeta-mev", "0.05"],
    ["spectrum", "--points", "21"],
    ["g2", "--taus", "0,0.5,5"],
    ["sweep", "--axis1", "tunneling:0.01:1:2", "--axis2", "zeta:0.01:1:2",
     "--observables", "n_cavity,n_qd1,n_qd2,g2_zero,transition_lines,spectrum", "--points", "5"],
    ["sweep", "--omega2-mev", "1218", "--axis1", "omega2:1218:1218.1:2", "--axis2", "zeta:0.01:1:2"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in RUNS:
        proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors:
            print(f"FAIL {label}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
