"""Validate vir JSON reports against the shipped schema.

usage: validate_report.py SCHEMA VIR_BINARY [ARGS...]
Runs the binary with --format json and the given arguments, then validates stdout.
"""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    schema_path, binary, *args = sys.argv[1:]
    with open(schema_path) as f:
        schema = json.load(f)
    proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
    if proc.returncode not in (0, 1):
        print(proc.stderr, file=sys.stderr)
        return 1
    report = json.loads(proc.stdout)
    jsonschema.validate(report, schema)
    expected = "pass" if proc.returncode == 0 else "fail"
    if report["status"] != expected:
        print(f"status {report['status']} does not match exit code {proc.returncode}", file=sys.stderr)
        return 1
    print(f"{' '.join(args)}: valid, {len(report['records'])} records")
    return 0


if __name__ == "__main__":
    sys.exit(main())
