"""Runs the CLI with --format json and validates every line against the schema."""

import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["coeff", "L", "0..30"],
    ["coeff", "a_t", "--t", "11", "0..20", "--route", "oracle"],
    ["count", "odd-sextenary", "4"],
    ["verify", "theorem2", "--max", "300"],
    ["verify", "concluding", "--max", "100"],
    ["verify", "ntp1", "--order", "60"],
    ["selftest"],
]


def main(schema_path, cli):
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft7Validator(schema)
    lines = 0
    for args in RUNS:
        out = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
        if out.returncode not in (0, 1):
            sys.exit(f"{args}: exit {out.returncode}: {out.stderr}")
        for line in out.stdout.splitlines():
            validator.validate(json.loads(line))
            lines += 1
    print(f"{lines} records valid")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
