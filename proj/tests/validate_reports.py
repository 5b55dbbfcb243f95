"""Runs every CLI subcommand once and validates its JSON report."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main(cli: str, schema_path: str) -> int:
    schema = json.loads(Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        d = Path(tmp)

        def run(*args: str) -> dict:
            proc = subprocess.run([cli, *args], capture_output=True, text=True, check=True)
            return json.loads(proc.stdout)

        reports = {"synth": run("synth", "--kind", "flash-pair", "--seed", "3", "--width", "48",
                                "--height", "40", "--output", str(d / "s"))}
        noisy, flash = str(d / "s_no_flash.pgm"), str(d / "s_flash.pgm")
        for cmd in ["gf", "tvgf", "cgf", "igf", "icgf", "rmsf-gf", "rmsf-cgf", "roll37",
                    "rfnf-seo", "rfnf-gen"]:
            reports[cmd] = run(cmd, "--input", noisy, "--guidance", flash, "--radius", "3",
                               "--output", str(d / f"{cmd}.pgm"),
                               "--metrics-against", str(d / "s_scene.pgm"))
        reports["metrics"] = run("metrics", "--input", noisy, "--metrics-against", noisy)
        reports["bench"] = run("bench", "--width", "64", "--height", "64", "--repeat", "2")

        for name, report in reports.items():
            errors = sorted(validator.iter_errors(report), key=lambda e: e.path)
            status = "ok" if not errors else "INVALID"
            print(f"{name:10s} {status}")
            for e in errors:
                print(f"    {list(e.path)}: {e.message}")
            failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
