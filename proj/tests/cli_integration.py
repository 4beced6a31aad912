#!/usr/bin/env python3
"""End-to-end checks of the CLI: exit codes, JSON round trips, determinism."""
import json
import subprocess
import sys

CLI = sys.argv[1]
failures = 0


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def check(name, cond):
    global failures
    print(("ok" if cond else "FAIL") + "  " + name)
    if not cond:
        failures += 1


# compute: golden value and engine agreement
r = run("compute", "--c", "0,2,0,2", "--engine", "all")
check("compute all engines exit 0", r.returncode == 0)
check("compute all engines agree", "all engines agree" in r.stdout)

r = run("compute", "--c", "1,1,1", "--engine", "recurrence")
check("compute [3]!", r.stdout.strip() == "q^3 + 2*q^2 + 2*q + 1")

r = run("compute", "--c", "0,2,0,2", "--engine", "recurrence", "--format", "json")
poly = json.loads(r.stdout)
check("compute json schema", poly["valuation"] == 2 and poly["coeffs"] == [1, 2, 3, 2, 1])

# usage errors exit 2
check("bad composition exits 2", run("compute", "--c", "1,2").returncode == 2)
check("bad engine exits 2",
      run("compute", "--c", "1,1", "--engine", "zeta").returncode == 2)
check("missing subcommand exits 2", run().returncode == 2)

# table
r = run("table", "--r", "4", "--format", "json")
rows = json.loads(r.stdout)
check("table row count C(7,3)", len(rows) == 35)
check("table A(1) column sums to r! Cat_r",
      sum(int(row["at_one"]) for row in rows) == 24 * 14)
check("table bad r exits 2", run("table", "--r", "9").returncode == 2)

# verify
check("verify r=4 all exits 0",
      run("verify", "--r", "4", "--suite", "all").returncode == 0)
check("verify r=3 subset exits 0",
      run("verify", "--r", "3", "--suite", "carlitz,cyclic").returncode == 0)
check("verify malformed suite exits 2",
      run("verify", "--r", "3", "--suite", "carlitz,bogus").returncode == 2)
r = run("verify", "--r", "3", "--suite", "all", "--json")
rep = json.loads(r.stdout)
check("verify json report", all(entry["pass"] for entry in rep) and len(rep) == 11)

# simulate: determinism and exact column
a = run("simulate", "--c", "0,2,0,2", "--q", "1", "--samples", "2000", "--seed", "11")
b = run("simulate", "--c", "0,2,0,2", "--q", "1", "--samples", "2000", "--seed", "11")
check("simulate byte-identical rerun", a.stdout == b.stdout and a.returncode == 0)
sim = json.loads(a.stdout)
check("simulate exact column",
      any(o["sites"] == [1, 2, 3, 4] and o["exact"] == "3/8" for o in sim["outcomes"]))
check("simulate count total", sum(o["count"] for o in sim["outcomes"]) == 2000)
check("simulate bad q exits 2",
      run("simulate", "--c", "2,0", "--q", "-1", "--samples", "10").returncode == 2)

# trees
r = run("trees", "--kind", "postnikov", "--word", "2244")
check("trees postnikov 2244 has 2 trees", len(json.loads(r.stdout)) == 2)
r = run("trees", "--kind", "bilabeled", "--c", "2,0,1")
check("trees bilabeled (2,0,1) has 3 trees", len(json.loads(r.stdout)) == 3)
r = run("trees", "--kind", "postnikov", "--word", "1", "--format", "dot")
check("trees dot output", r.stdout.startswith("digraph"))
check("trees bad kind exits 2",
      run("trees", "--kind", "ternary", "--c", "1,1").returncode == 2)

# qhit
r = run("qhit", "--lambda", "5,5,3,3,3,0", "--format", "json")
hit = json.loads(r.stdout)
check("qhit reference example", hit["a"] == -1 and hit["beta"] == [1, 2, 3]
      and hit["gf_check"] is True and r.returncode == 0)
check("qhit non-partition exits 2", run("qhit", "--lambda", "1,2").returncode == 2)

# qvolume
r = run("qvolume", "--lambda", "2,1,0")
check("qvolume lambda example", r.stdout.strip() == "3/2*q + 3/2")
r = run("qvolume", "--mu", "1,1,1", "--at-q", "1")
check("qvolume Thm value 16", r.stdout.strip() == "16")
check("qvolume both inputs exits 2",
      run("qvolume", "--lambda", "1,0", "--mu", "1").returncode == 2)

sys.exit(1 if failures else 0)
