#!/usr/bin/env python3
"""Runs every gcdint subcommand and validates its JSON against schemas/."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

RUNS = [
    ["density", "--n", "6"],
    ["density", "--n", "40", "--histogram-cap", "3", "--threads", "2"],
    ["local", "--p", "3", "--n", "100"],
    ["euler", "--prime-limit", "1000"],
    ["euler", "--coprimality", "--prime-limit", "1000"],
    ["mean", "--n", "1000", "--checkpoints", "10,100"],
    ["gl2", "--n", "4"],
    ["totient-sum", "--x", "1000", "--method", "both"],
    ["totient-sum", "--x", "1000000", "--method", "hyperbola"],
    ["coprime", "--n", "100"],
    ["witness", "--c-max", "50"],
    ["convergence", "--n", "10,20"],
    ["error-term", "--x", "10,1000"],
]


def main() -> int:
    tool, schema_dir = sys.argv[1], Path(sys.argv[2])
    schemas = {p.name[: -len(".schema.json")]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        runs = RUNS + [
            ["heatmap", "--n", "20", "--format", "csv", "--out", str(Path(tmp) / "h.csv")],
            ["heatmap", "--n", "20", "--format", "ppm", "--out", str(Path(tmp) / "h.ppm")],
        ]
        seen = set()
        for args in runs:
            proc = subprocess.run([tool, *args], capture_output=True, text=True)
            label = " ".join(args)
            if proc.returncode != 0:
                print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            report = json.loads(proc.stdout)
            command = report.get("command")
            seen.add(command)
            try:
                jsonschema.validate(report, schemas[command])
                print(f"ok   {label}")
            except (KeyError, jsonschema.ValidationError) as e:
                print(f"FAIL {label}: {e}")
                failures += 1
        missing = set(schemas) - seen
        if missing:
            print(f"FAIL schemas never exercised: {sorted(missing)}")
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
