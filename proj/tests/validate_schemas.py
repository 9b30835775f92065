"""Run the CLI with --format json and validate each output against its schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("series", ["zeta", "--poly", "x^2+1", "--limit", "50"]),
    ("series", ["zeta", "--poly", "x^4-2", "--limit", "200"]),
    ("series", ["lquotient", "--poly", "x^4-2", "--poly", "x^2+2", "--limit", "50"]),
    ("splitting", ["split", "--poly", "x^4+8", "--prime", "2"]),
    ("splitting", ["split", "--poly", "x^2+1", "--prime", "5"]),
    ("splitting", ["split", "--poly", "x^4-2", "--prime", "7"]),
    ("d4_verify", ["d4-verify", "--limit", "100"]),
    ("recon_demo", ["recon-demo", "--seed", "1", "--dump"]),
    ("recon_demo", ["recon-demo", "--seed", "9", "--k", "5"]),
    ("mu_k", ["mu-k", "--k", "2", "--n", "3"]),
    ("mu_k", ["mu-k", "--k", "4", "--n", "4"]),
    ("structures", ["wreath", "--k", "3", "--base", "C2", "--dump"]),
    ("structures", ["wreath", "--k", "2", "--base", "C2"]),
    ("structures", ["wreath", "--k", "3", "--base", "S3", "--action", "natural"]),
]


def main():
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources(
        (name, Resource.from_contents(s)) for name, s in schemas.items()
    )
    for s in schemas.values():
        jsonschema.Draft202012Validator.check_schema(s)

    failures = 0
    for schema_name, args in CASES:
        proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(proc.stdout)
        validator = jsonschema.Draft202012Validator(schemas[f"{schema_name}.schema.json"], registry=registry)
        errors = list(validator.iter_errors(doc))
        if errors:
            print(f"FAIL {label}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {label}")

    overrides = json.loads((schema_dir.parent / "tests" / "cli" / "overrides.json").read_text())
    jsonschema.validate(overrides, schemas["overrides.schema.json"])
    print("ok   tests/cli/overrides.json")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
