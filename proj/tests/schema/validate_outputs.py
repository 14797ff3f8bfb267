"""Runs each abm subcommand into a scratch directory and validates the
emitted manifests and summaries against the JSON schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def load(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def main():
    abm, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name.split(".")[0]: load(p) for p in schema_dir.glob("*.schema.json")}
    runs = [
        ("poly", ["poly", "--order", "3", "--mode", "abm-fixed"], "poly.csv", "poly_summary"),
        ("tov", ["tov", "--pc", "3e35", "--order", "5", "--tol", "1e-6"], "star.csv", "star_summary"),
        ("sieve", ["sieve", "--order", "4", "--tol", "1e-4", "--bracket-tol", "1e-3"], "sieve.json",
         "sieve_summary"),
        ("sweep", ["sweep", "--orders", "4,5", "--tols", "1e-3", "--ref-mass", "1.4e33", "--ref-radius", "9e5"],
         "sweep.csv", "sweep_summary"),
    ]
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for name, args, out, summary_schema in runs:
            target = pathlib.Path(tmp) / out
            proc = subprocess.run([abm, *args, "--out", str(target)], capture_output=True, text=True)
            try:
                if proc.returncode != 0:
                    raise RuntimeError(f"exit {proc.returncode}: {proc.stderr.strip()}")
                jsonschema.validate(load(str(target) + ".manifest.json"), schemas["manifest"])
                jsonschema.validate(json.loads(proc.stdout), schemas[summary_schema])
                if name == "sieve":
                    jsonschema.validate(load(target)["summary"], schemas["sieve_summary"])
                print(f"ok   {name}")
            except (RuntimeError, jsonschema.ValidationError, json.JSONDecodeError) as exc:
                failures += 1
                print(f"fail {name}: {exc}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
