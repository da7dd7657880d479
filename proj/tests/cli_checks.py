#!/usr/bin/env python3
"""Black-box checks of the wigner CLI: exit codes, table shapes,
canonical values, determinism, and CSV/JSON agreement."""

import csv
import io
import json
import math
import subprocess
import sys

BIN = sys.argv[1] if len(sys.argv) > 1 else "./build/tools/wigner"
failures = []


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        failures.append(f"{' '.join(args)}: exit {proc.returncode}, wanted {expect}\n"
                        f"stderr: {proc.stderr.strip()}")
    return proc


def rows_of(proc):
    return list(csv.DictReader(io.StringIO(proc.stdout)))


def check(cond, msg):
    if not cond:
        failures.append(msg)


# verify: spec example invocation, JSON report structure
proc = run("verify", "--a", "0.5", "--trunc", "128", "--margin", "4", "--tol", "1e-9")
report = json.loads(proc.stdout)
check(report["all_pass"] is True, "verify: expected all_pass")
check(len(report["checks"]) == 16, f"verify: 16 records, got {len(report['checks'])}")
check(all(c["pass"] for c in report["checks"]), "verify: every record passes")

# verify: invalid parameter is a configuration error
proc = run("verify", "--a", "-1", expect=2)
check("a must be positive" in proc.stderr, "verify --a -1 message")

# unknown flag / bad subcommand are configuration errors
run("poly", "--family", "nope", "--a", "0.5", "--grid", "0:1:2", expect=2)
run("nonsense", expect=2)

# numerical failure during evaluation is exit 3
run("poly", "--family", "laguerre", "--a", "0.5", "--nmax", "2",
    "--grid", "-1:1:3", "--normalized", expect=3)

# poly: the genhermite example emits (nmax+1) * count rows with a value column
proc = run("poly", "--family", "genhermite", "--a", "0.5", "--nmax", "4",
           "--grid", "-2:2:5", "--normalized")
rows = rows_of(proc)
check(len(rows) == 25, f"poly rows: {len(rows)}")
check("value" in rows[0], "poly: value column")

# operators: x entry [1,0] = sqrt(a)
proc = run("operators", "--a", "0.5", "--trunc", "8", "--which", "x")
rows = rows_of(proc)
check(len(rows) == 64, f"operators rows: {len(rows)}")
entry = next(r for r in rows if r["row"] == "1" and r["col"] == "0")
check(abs(float(entry["re"]) - math.sqrt(0.5)) < 1e-12, "operators x[1,0]")
check(float(entry["im"]) == 0.0, "operators x[1,0] imaginary part")

# wavefunction: free-particle canonical cosine profile
proc = run("wavefunction", "--system", "free", "--a", "0.5", "--E", "1.0",
           "--A", "1", "--B", "0", "--grid", "0:5:11")
for r in rows_of(proc):
    x = float(r["x"])
    want = (2.0) ** (-0.25) * math.cos(math.sqrt(2.0) * x) / math.sqrt(math.pi)
    check(abs(float(r["re"]) - want) < 1e-11, f"wavefunction value at x={x}")
    check(float(r["im"]) == 0.0, f"wavefunction imaginary part at x={x}")

# spectrum: gamma = i^n beta
beta = rows_of(run("spectrum", "--generator", "beta", "--a", "1.1", "--value", "0.6",
                   "--trunc", "16"))
gamma = rows_of(run("spectrum", "--generator", "gamma", "--a", "1.1", "--value", "0.6",
                    "--trunc", "16"))
for n, (rb, rg) in enumerate(zip(beta, gamma)):
    b = complex(float(rb["re"]), float(rb["im"]))
    g = complex(float(rg["re"]), float(rg["im"]))
    check(abs(g - (1j ** n) * b) < 1e-12, f"gamma phase at n={n}")

# gram: deviation column small for the identity-constant families
proc = run("gram", "--family", "genhermite", "--a", "0.3", "--maxdeg", "4")
for r in rows_of(proc):
    check(abs(float(r["deviation"])) < 1e-7, "gram deviation")

# kernel: pz-even is real
proc = run("kernel", "--generator", "pz-even", "--a", "0.8", "--s", "1.1",
           "--grid", "0.2:1.4:4", "--terms", "128")
for r in rows_of(proc):
    check(float(r["im"]) == 0.0, "pz-even kernel should be real")

# determinism: identical bytes across runs
a1 = run("poly", "--family", "mp", "--a", "0.8", "--nmax", "6", "--grid", "-3:3:21",
         "--normalized").stdout
a2 = run("poly", "--family", "mp", "--a", "0.8", "--nmax", "6", "--grid", "-3:3:21",
         "--normalized").stdout
check(a1 == a2, "poly output not byte-identical")

s1 = run("selftest", "--seed", "42").stdout
s2 = run("selftest", "--seed", "42").stdout
check(s1 == s2, "selftest output not byte-identical for fixed seed")
check("all passed" in s1, "selftest reports all passed")

# CSV and JSON emissions carry identical numeric values
cargs = ["spectrum", "--generator", "epsilon0", "--a", "1.3", "--value", "0.9",
         "--trunc", "32"]
crows = rows_of(run(*cargs))
jrows = json.loads(run(*cargs, "--format", "json").stdout)
check(len(crows) == len(jrows), "csv/json row count")
for rc, rj in zip(crows, jrows):
    for col in ("index", "re", "im"):
        check(float(rc[col]) == float(rj[col]), f"csv/json mismatch in {col}")

# --out writes the same bytes the stdout path prints
import os
import tempfile
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "table.csv")
    direct = run(*cargs).stdout
    run(*cargs, "--out", path)
    with open(path) as f:
        check(f.read() == direct, "--out content differs from stdout")

# precision flag shortens the emitted digits
short = run("operators", "--a", "0.5", "--trunc", "8", "--which", "x",
            "--precision", "4").stdout
check("0.7071\n" in short or ",0.7071," in short, "precision flag")

if failures:
    print("CLI checks FAILED:")
    for f in failures:
        print(" -", f)
    sys.exit(1)
print("all CLI checks passed")
