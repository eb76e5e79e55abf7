"""Validates CLI reports against docs/report_schema.json.

usage: validate_schema.py CLI SCHEMA CORPUS_DIR GOLDEN...
"""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, corpus = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    goldens = [pathlib.Path(p) for p in sys.argv[4:]]
    validator = jsonschema.Draft202012Validator(json.loads(schema_path.read_text()))

    failures = 0
    docs = [(str(g), json.loads(g.read_text())) for g in goldens]
    # Cheap depth keeps this fast; every corpus ring and the error path are covered.
    for spec in sorted(corpus.glob("*.ring")):
        out = subprocess.run([cli, "run", str(spec), "--depth", "2", "--no-timings"],
                             capture_output=True, text=True, check=False)
        docs.append((spec.name, json.loads(out.stdout)))
    bad = subprocess.run([cli, "run", "/nonexistent.ring"], capture_output=True, text=True, check=False)
    docs.append(("missing file", json.loads(bad.stdout)))

    for name, doc in docs:
        errors = list(validator.iter_errors(doc))
        for e in errors:
            print(f"{name}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)
    print(f"{len(docs) - failures}/{len(docs)} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
