#!/usr/bin/env python3
"""End-to-end checks of the command-line tool: outputs, file formats, exit codes."""

import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1] if len(sys.argv) > 1 else os.environ["LEVYSKEW_CLI"]

failures = []


def run(*args, **kw):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kw)


def check(name, cond, extra=""):
    status = "ok" if cond else "FAIL"
    print(f"{status:4s} {name}" + (f" ({extra})" if extra and not cond else ""))
    if not cond:
        failures.append(name)


BS_ARGS = ["--family", "none", "--sigma", "0.2", "--r", "0.05",
           "--s0", "100", "--k", "100", "--t", "1"]

# Fourier price matches the Black-Scholes value 10.4506...
p = run("price", *BS_ARGS)
check("price exit code", p.returncode == 0, p.stderr)
check("price bs value", abs(float(p.stdout.split()[0]) - 10.450583572185565) < 1e-6,
      p.stdout)

# Series and Fourier agree for a Merton model.
MERTON = ["--family", "merton", "--sigma", "0.2", "--lambda", "1",
          "--mu", "-0.1", "--delta_j", "0.15", "--r", "0.05", "--delta", "0.02"]
pf = run("price", *MERTON, "--s0", "100", "--k", "105", "--t", "0.5")
ps = run("price", *MERTON, "--s0", "100", "--k", "105", "--t", "0.5",
         "--method", "series", "--n-terms", "60")
check("fourier vs series", abs(float(pf.stdout) - float(ps.stdout)) < 1e-6,
      f"{pf.stdout!r} vs {ps.stdout!r}")

# Put via --put obeys parity against the call.
pp = run("price", *MERTON, "--s0", "100", "--k", "105", "--t", "0.5", "--put")
import math
parity = float(pf.stdout) - float(pp.stdout) - (
    100 * math.exp(-0.02 * 0.5) - 105 * math.exp(-0.05 * 0.5))
check("put parity", abs(parity) < 1e-6, str(parity))

# Monte Carlo output is deterministic for a fixed seed.
m1 = run("price", *MERTON, "--method", "mc", "--paths", "20000", "--seed", "7")
m2 = run("price", *MERTON, "--method", "mc", "--paths", "20000", "--seed", "7")
check("mc determinism", m1.stdout == m2.stdout and m1.returncode == 0)

# dual prints the dual spec and a residual, and succeeds.
d = run("dual", *MERTON, "--s0", "100", "--k", "110", "--t", "0.5")
check("dual exit code", d.returncode == 0, d.stderr)
check("dual prints family", "family merton" in d.stdout, d.stdout)
resid_line = [l for l in d.stdout.splitlines() if l.startswith("residual")]
check("dual residual line", bool(resid_line) and float(resid_line[0].split()[1]) <= 2e-7,
      d.stdout)

# dual with an absurdly tight tolerance reports check-failed (exit 4).
d4 = run("dual", *MERTON, "--s0", "100", "--k", "110", "--t", "0.5", "--tol", "1e-18")
check("dual check-failed exit", d4.returncode == 4, str(d4.returncode))

# sk writes the CSV table.
s = run("sk", *MERTON, "--f0", "100", "--t", "0.5", "--xs", "0.01,0.05,0.1")
check("sk exit code", s.returncode == 0, s.stderr)
lines = s.stdout.strip().splitlines()
check("sk header", lines[0] == "x,k_call,k_put,sk,excess", lines[0])
check("sk rows", len(lines) == 4 and lines[1].startswith("0.01,101,"), s.stdout)

# scan sign over beta.
sc = run("scan", *MERTON, "--kind", "sign", "--f0", "100", "--t", "0.5",
         "--betas", "-2,-0.5,1", "--xs", "0.05")
check("scan exit code", sc.returncode == 0, sc.stderr)
sc_lines = sc.stdout.strip().splitlines()
check("scan output", sc_lines[0] == "beta,x,sign" and len(sc_lines) == 4, sc.stdout)

with tempfile.TemporaryDirectory() as tmp:
    # Build a symmetric synthetic chain by pricing with the CLI itself.
    f0, r, t = 100.0, 0.05, 0.5
    rows = []
    for k in range(80, 125, 5):
        args = ["--family", "none", "--sigma", "0.2", "--r", str(r),
                "--delta", str(r), "--s0", str(f0), "--k", str(k), "--t", str(t)]
        c = run("price", *args).stdout.strip()
        q = run("price", *args, "--put").stdout.strip()
        rows.append(f"{k},{c},{q}")
    chain_path = os.path.join(tmp, "chain.csv")
    with open(chain_path, "w") as f:
        f.write("#F=100\n#valuation=2006-08-31\n#expiry=2007-02-28\n")
        f.write("strike,call_mid,put_mid\n")
        f.write("\n".join(rows) + "\n")

    prefix = os.path.join(tmp, "report")
    ch = run("chain", "--input", chain_path, "--out-prefix", prefix)
    check("chain exit code", ch.returncode == 0, ch.stderr)
    check("chain verdict", "consistent-with-symmetry" in ch.stdout, ch.stdout)
    for suffix in ("_table1.csv", "_table2.csv", "_summary.txt"):
        check(f"chain writes {suffix}", os.path.exists(prefix + suffix))
    with open(prefix + "_table1.csv") as f:
        check("table1 header", f.readline().strip() == "k_primary,k_paired,x,x_obs,excess")

    # Malformed chain CSV: input error, exit 2.
    bad_path = os.path.join(tmp, "bad.csv")
    with open(bad_path, "w") as f:
        f.write("#F=100\n95,1.0,2.0\n100,abc,2.0\n105,1.0,2.0\n110,1,1\n")
    bad = run("chain", "--input", bad_path)
    check("malformed csv exit", bad.returncode == 2, str(bad.returncode))

# Missing model: input error.
check("missing family exit", run("price", "--s0", "100").returncode == 2)
check("bad flag exit", run("price", "--nonsense").returncode == 2)
check("bad parameter exit",
      run("price", "--family", "merton", "--lambda", "-1", "--mu", "0",
          "--delta_j", "0.1").returncode == 2)

# CGMY with the integration contour outside the strip: numerical error, exit 3.
check("strip violation exit",
      run("price", "--family", "cgmy", "--c", "1", "--g", "5", "--m", "1.5",
          "--y_exp", "0.5", "--r", "0.05", "--s0", "100", "--k", "100",
          "--t", "0.5").returncode == 3)

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
