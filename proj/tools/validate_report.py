"""Validate entrench --json reports against report.schema.json.

    validate_report.py SCHEMA FILE...         validate saved reports
    validate_report.py SCHEMA --run EXE ARGS  run EXE --json ARGS and validate stdout
"""
import json
import subprocess
import sys

import jsonschema


def main(argv):
    with open(argv[1]) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    if argv[2] == "--run":
        proc = subprocess.run([argv[3], "--json", *argv[4:]], capture_output=True, text=True)
        if proc.returncode not in (0, 1, 3):
            print(f"exit {proc.returncode}: {proc.stderr}", file=sys.stderr)
            return 1
        reports = [("stdout", proc.stdout)]
    else:
        reports = [(p, open(p).read()) for p in argv[2:]]
    bad = 0
    for name, text in reports:
        errors = sorted(validator.iter_errors(json.loads(text)), key=lambda e: list(e.path))
        for e in errors:
            print(f"{name}: {'/'.join(map(str, e.path))}: {e.message}", file=sys.stderr)
        bad += bool(errors)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
