#!/usr/bin/env python3
"""Run the CLI on quick cases and validate every JSON it writes against schemas/."""

import argparse
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema
from referencing import Registry, Resource


def load_schemas(schema_dir):
    schemas = {}
    registry = Registry()
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        schemas[path.name] = doc
        resource = Resource.from_contents(doc)
        registry = registry.with_resources([(path.name, resource), (doc["$id"], resource)])
    return schemas, registry


def validator(schemas, registry, name):
    cls = jsonschema.validators.validator_for(schemas[name])
    cls.check_schema(schemas[name])
    return cls(schemas[name], registry=registry)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True, type=Path)
    parser.add_argument("--schemas", required=True, type=Path)
    args = parser.parse_args()

    schemas, registry = load_schemas(args.schemas)
    check = {name: validator(schemas, registry, name) for name in schemas}
    failures = 0

    def expect_valid(name, instance, label):
        nonlocal failures
        errors = list(check[name].iter_errors(instance))
        for e in errors:
            print(f"FAIL {label}: {e.message} at {list(e.absolute_path)}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")

    def expect_invalid(name, instance, label):
        nonlocal failures
        if check[name].is_valid(instance):
            print(f"FAIL {label}: accepted an invalid document")
            failures += 1
        else:
            print(f"ok   {label} (rejected)")

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        slab_cfg = {"structure": {"type": "layered_stack", "name": "glass",
                                  "layers": [{"thickness": 2.0, "eps": 2.25}]}}
        rod_cfg = {"preset": "paper-2d-crystallite-N1", "resolution": 6,
                   "radii": [2.5, 4.0, 6.0], "probe": [0.0, 0.0]}
        for label, cfg in (("slab config", slab_cfg), ("rod config", rod_cfg)):
            expect_valid("run_config.schema.json", cfg, label)
            (tmp / f"{label.split()[0]}.json").write_text(json.dumps(cfg))
        expect_valid("run_config.schema.json",
                     {"type": "rod_lattice", "layers": 2, "rod_radius": 0.15, "eps_rod": 11.4},
                     "bare structure config")
        expect_invalid("run_config.schema.json", {"resolution": 6}, "config without structure")
        expect_invalid("structure.schema.json",
                       {"type": "rod_lattice", "layers": 0, "rod_radius": 0.15, "eps_rod": 11.4},
                       "zero-ring lattice")

        runs = [
            (["slab-qnm", "--preset", "slab-n2"], "qnm.json", "qnm_slab.schema.json"),
            (["slab-qnm", "--config", str(tmp / "slab.json")], "qnm.json", "qnm_slab.schema.json"),
            (["crystallite-qnm", "--config", str(tmp / "rod.json")], "qnm.json",
             "qnm_crystallite.schema.json"),
            (["mode-volume-sweep", "--config", str(tmp / "rod.json")], "summary.json",
             "summary.schema.json"),
        ]
        for i, (argv, output, schema) in enumerate(runs):
            out_dir = tmp / f"run{i}"
            proc = subprocess.run([str(args.cli), *argv, "--out", str(out_dir)],
                                  capture_output=True, text=True)
            label = " ".join(argv[:3])
            if proc.returncode != 0:
                print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            expect_valid(schema, json.loads((out_dir / output).read_text()), f"{label} -> {output}")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
