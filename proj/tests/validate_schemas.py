"""Run the CLI with --json and validate every output against schemas/."""

import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def load_registry(schema_dir):
    resources = []
    for path in sorted(schema_dir.glob("*.schema.json")):
        contents = json.loads(path.read_text())
        Draft202012Validator.check_schema(contents)
        resources.append((path.name, Resource.from_contents(contents)))
    return Registry().with_resources(resources)


def validator(registry, name):
    schema = registry.contents(name)
    return Draft202012Validator(schema, registry=registry)


def run_cli(binary, args, allowed=(0,)):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
    if proc.returncode not in allowed:
        raise SystemExit(f"{' '.join(args)} exited {proc.returncode}: {proc.stderr}")
    return json.loads(proc.stdout)


def main():
    binary, source = sys.argv[1], pathlib.Path(sys.argv[2])
    registry = load_registry(source / "schemas")
    cases = [
        ("classify.schema.json", ["classify", "--json", "<>p1 & p2 -> <>[]<>p1 | <>[]<>p2"], (0,)),
        ("classify.schema.json", ["classify", "--json", "[]p -> <>p"], (3,)),
        ("correspond.schema.json", ["correspond", "--json", "--trace", "<><>p -> <>p"], (0,)),
        ("correspond.schema.json", ["correspond", "--json", "--trace", "!x.<>(x & p) -> <>p"], (0,)),
        ("correspond.schema.json", ["correspond", "--json", "<>[]p -> []<>p"], (2,)),
        ("translate.schema.json", ["translate", "--json", "'i0 <= []~'i1 => 'i0 <= ~'i1"], (0,)),
        ("verify.schema.json", ["verify", "--json", "--samples", "100", "[]p -> p"], (0,)),
        ("axioms-check.schema.json", ["axioms-check", "--json", "--max-worlds", "2"], (0,)),
    ]
    failures = 0
    for schema, args, allowed in cases:
        errors = list(validator(registry, schema).iter_errors(run_cli(binary, args, allowed)))
        for e in errors:
            print(f"{args[0]}: {e.json_path}: {e.message}")
        failures += bool(errors)

    corpus = json.loads((source / "corpus" / "corpus.json").read_text())
    documents = [("corpus.schema.json", corpus)]
    for entry in corpus:
        golden = source / "corpus" / "goldens" / f"{entry['name']}.json"
        documents.append(("golden.schema.json", json.loads(golden.read_text())))
    for schema, doc in documents:
        errors = list(validator(registry, schema).iter_errors(doc))
        for e in errors:
            print(f"{schema}: {e.json_path}: {e.message}")
        failures += bool(errors)

    print(f"{len(cases) + len(documents)} documents checked, {failures} invalid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
