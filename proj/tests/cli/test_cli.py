#!/usr/bin/env python3
"""End-to-end checks of the ufdlab command line: exit codes, determinism,
schema validity and ring export."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI, FIXTURES, SCHEMA_DIR = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
VALIDATOR = Path(__file__).with_name("validate_schema.py")
SCHEMA = SCHEMA_DIR / "claim_report.schema.json"
failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


def check(ok, what):
    print(("ok   " if ok else "FAIL ") + what)
    if not ok:
        failures.append(what)


def params_file(tmp, name, text):
    path = tmp / name
    path.write_text(text)
    return str(path)


def strip_timing(doc):
    reports = doc["reports"] if "reports" in doc else [doc]
    for r in reports:
        r.pop("elapsed_ms", None)
    return doc


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    # exit codes
    r = run("claim", "run", "cex.sseq", "--params", params_file(tmp, "p1.json", '{"n": 5, "expect": [2, 3, 6, 24, 180]}'))
    check(r.returncode == 0, "verified claim exits 0")
    r = run("claim", "run", "cex.sseq", "--params", params_file(tmp, "p2.json", '{"n": 5, "expect": [2, 3, 6, 24, 181]}'))
    check(r.returncode == 1, "refuted claim exits 1")
    r = run("claim", "run", "pham-brieskorn.validate", "--params", params_file(tmp, "p3.json", '{"exponents": [2, 2, 3], "expect": "accepted"}'))
    check(r.returncode == 1, "wrongly expected acceptance exits 1")
    r = run("claim", "run", "condition-p")
    check(r.returncode == 2, "unknown verdict exits 2")
    check(json.loads(r.stdout)["bound"] is not None, "unknown verdict reports a bound")
    check(run("claim", "run", "no.such.claim").returncode == 3, "unknown claim exits 3")
    check(run("claim", "run", "cex.sseq", "--params", params_file(tmp, "p4.json", '{"bogus": 1}')).returncode == 3, "unknown param exits 3")
    check(run("claim", "run", "cex.sseq", "--params", params_file(tmp, "p5.json", "{not json")).returncode == 3, "malformed params exit 3")
    check(run("frobnicate").returncode == 3, "unknown subcommand exits 3")

    # claim list
    r = run("claim", "list", "--json")
    ids = [c["id"] for c in json.loads(r.stdout)] if r.returncode == 0 else []
    check("groebner.soundness" in ids and "trinomial.validate" in ids, "claim list --json names the claims")

    # run-all: exit status, determinism, schema
    outs = []
    for k in range(2):
        out = tmp / f"suite{k}.json"
        r = run("claim", "run-all", "--suite", "acceptance", "--fixtures", str(FIXTURES),
                "--out", str(out))
        check(r.returncode == 0, f"run-all #{k} exits 0")
        outs.append(out)
    docs = [strip_timing(json.loads(o.read_text())) for o in outs]
    check(json.dumps(docs[0], sort_keys=True) == json.dumps(docs[1], sort_keys=True),
          "run-all output is deterministic apart from elapsed_ms")
    single = tmp / "single.json"
    run("claim", "run", "omega.confluence", "--out", str(single))
    v = subprocess.run([sys.executable, str(VALIDATOR), str(SCHEMA), str(outs[0]), str(single)])
    check(v.returncode == 0, "suite and single reports are schema-valid")

    # ring export
    r = run("ring", "export", "--input", str(FIXTURES / "rings" / "pham-brieskorn-235.json"), "--format", "cas-text")
    check(r.returncode == 0 and "weights: X1=15, X2=10, X3=6" in r.stdout, "Pham-Brieskorn (2,3,5) weights 15,10,6")
    r = run("ring", "export", "--input", str(FIXTURES / "rings" / "free-uv.json"), "--format", "cas-text")
    lines = [l for l in r.stdout.splitlines() if l and not l.startswith("#")]
    check(r.returncode == 0 and len(lines) == 2 and lines[1].startswith("variables:"),
          "empty-relation ring exports header and variables only")
    for name in ("mori-235.json", "samuel-uv.json", "pham-brieskorn-235.json"):
        first = tmp / ("a-" + name)
        second = tmp / ("b-" + name)
        r1 = run("ring", "export", "--input", str(FIXTURES / "rings" / name), "--format", "json", "--out", str(first))
        r2 = run("ring", "export", "--input", str(first), "--format", "json", "--out", str(second))
        check(r1.returncode == 0 and r2.returncode == 0 and
              json.loads(first.read_text()) == json.loads(second.read_text()),
              f"json export round trip for {name}")
    check(run("ring", "export", "--input", str(tmp / "missing.json")).returncode == 3, "missing input exits 3")

sys.exit(1 if failures else 0)
