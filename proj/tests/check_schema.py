"""Validate `posetlab analyze` output against the JSON schema."""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, *inputs = sys.argv[1:]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    for path in inputs:
        out = subprocess.run([cli, "analyze", path], check=True, capture_output=True, text=True).stdout
        jsonschema.validate(json.loads(out), schema)
        print(f"{path}: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
