"""Runs CLI subcommands with --json, validates every report against the
shipped schemas and checks that reruns are byte-identical."""

import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
docs, ex = root / "docs", root / "examples"
schemas = {p.name: json.loads(p.read_text()) for p in docs.glob("*.schema.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())
report_v = Draft202012Validator(schemas["report.schema.json"], registry=registry)
cert_v = Draft202012Validator(schemas["certificate.schema.json"], registry=registry)

tmp = pathlib.Path(tempfile.mkdtemp())
cert = tmp / "cert.json"
runs = [
    (["analyze", ex / "ex2_3_G.ring"], 0),
    (["gr", ex / "ex3_2.ring", "--iarrobino"], 0),
    (["iarrobino", ex / "ex4_16a.ring"], 0),
    (["sum", "--fibre", ex / "rem2_4c.ring", ex / "ex4_1.ring"], 0),
    (["decompose", ex / "ex2_3.ring", "-o", cert], 0),
    (["decompose", ex / "ex3_2.ring"], 0),
    (["verify", ex / "ex2_3.ring", cert], 0),
    (["poincare", ex / "rem2_4c.ring", "--order", "8", "--fit"], 0),
    (["gen", "--profile", "stretched", "--h", "3", "--s", "4", "--seed", "7", "-o", tmp / "gen"], 0),
    (["--field", "Fp:2", "decompose", ex / "rem2_4c.ring"], 0),
    (["paper-suite"], None),
]
failures = 0
for args, want in runs:
    argv = [cli, "--json"] + [str(a) for a in args]
    first = subprocess.run(argv, capture_output=True, text=True)
    second = subprocess.run(argv, capture_output=True, text=True)
    label = " ".join(str(a) for a in args[:2])
    problems = []
    if want is not None and first.returncode != want:
        problems.append(f"exit {first.returncode}: {first.stderr.strip()}")
    if first.stdout != second.stdout:
        problems.append("output differs between runs")
    try:
        problems += [e.message for e in report_v.iter_errors(json.loads(first.stdout))]
    except json.JSONDecodeError as e:
        problems.append(f"not JSON: {e}")
    if args[0] == "decompose" and "-o" in [str(a) for a in args]:
        problems += [e.message for e in cert_v.iter_errors(json.loads(cert.read_text()))]
    print(("ok    " if not problems else "FAIL  ") + label)
    for p in problems:
        print("      " + p)
    failures += bool(problems)
sys.exit(1 if failures else 0)
