#!/usr/bin/env python3
"""Black-box checks of the command-line interface."""

import json
import subprocess
import sys

BIN = sys.argv[1]
failures = 0


def run(*args, expect_code=0):
    global failures
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300)
    if proc.returncode != expect_code:
        failures += 1
        print(f"FAIL {' '.join(args)}: exit {proc.returncode}, expected {expect_code}")
        print(proc.stdout)
        print(proc.stderr)
        return None
    print(f"PASS {' '.join(args)}")
    return proc.stdout


out = run("verify-paper")
if out is not None:
    assert "all examples verified" in out, out

out = run("--json", "verify-paper")
if out is not None:
    doc = json.loads(out)
    assert doc["ok"] is True
    assert len(doc["reports"]) == 4
    gen = doc["reports"][0]["code"]["generator"]
    assert gen == [1, 1, 2, 0, 2, 2, 1]

out = run("report", "--preset", "ex1", "--family", "inverse-apn")
if out is not None:
    assert "code: [8,2,6]" in out, out
    assert "minpoly: x^6+2x^5+2x^4+2x^2+x+1" in out, out

out = run("--json", "report", "--p", "3", "--m", "3", "--family", "inverse-apn", "--auto-field")
if out is not None:
    doc = json.loads(out)
    assert doc["code"]["n"] == 26 and doc["code"]["k"] == 8
    assert doc["span"] == 18

out = run("coset", "--q", "3", "--n", "8")
if out is not None:
    assert out.splitlines()[0].startswith("0 (size 1)")

out = run("--json", "coset", "--q", "2", "--n", "31", "--leader", "1")
if out is not None:
    assert json.loads(out)["coset"] == [1, 2, 4, 8, 16]

out = run("seq", "--preset", "ex3", "--e", "29", "--emit", "span")
if out is not None:
    assert out.strip() == "16"

out = run("seq", "--preset", "ex3", "--e", "29", "--emit", "minpoly")
if out is not None:
    assert out.strip() == "x^16+x^14+x^13+x^10+x^9+x^8+x^7+x^6+x^5+x^2+x+1"

out = run("seq", "--preset", "ex1", "--e", "7", "--emit", "values")
if out is not None:
    assert out.strip() == "1 0 1 0 0 2 1 2"

out = run("--threads", "2", "seq", "--preset", "ex3", "--e", "29", "--emit", "du")
if out is not None:
    assert out.strip() == "2"

out = run("--json", "rsets", "--i", "2")
if out is not None:
    doc = json.loads(out)
    assert doc["total"] == 16 and len(doc["mixed"]) == 7

out = run("dobbertin", "--i", "2", "--emit", "span")
if out is not None:
    assert out.strip() == "160"

out = run("dobbertin", "--i", "1", "--emit", "minpoly")
if out is not None:
    assert out.strip() == "x^16+x^14+x^13+x^10+x^9+x^8+x^7+x^6+x^5+x^2+x+1"

out = run("inverse-apn", "--preset", "ex1", "--emit", "support")
if out is not None:
    assert "support-size=6" in out

out = run("--json", "seq", "--preset", "ex1", "--e", "7", "--emit", "minpoly")
if out is not None:
    doc = json.loads(out)
    assert doc["minpoly_coeffs"] == [1, 1, 2, 0, 2, 2, 1]
    assert doc["reduced_support"] == [0, 2, 4, 5]

out = run("--json", "dobbertin", "--i", "1", "--emit", "minpoly")
if out is not None:
    doc = json.loads(out)
    assert doc["span"] == 16 and doc["reduced_support"] == [0, 20, 24, 29]

out = run("--json", "code", "--from", "dobbertin", "--preset", "ex4")
if out is not None:
    doc = json.loads(out)
    assert doc["n"] == 1023 and doc["k"] == 863
    assert doc["d_lower"] >= 5
    assert doc["dual"]["k"] == 160

out = run("seq", "--field", "p=2,s=1,m=4,mod=1,1,0,0,1,alpha=0,1", "--e", "14", "--emit", "span")
if out is not None:
    assert out.strip() == "8"

out = run("--json", "report", "--family", "dobbertin", "--i", "3")
if out is not None:
    doc = json.loads(out)
    assert doc["span"] == 616 and doc["params"]["n"] == 32767

# determinism: identical invocations must produce identical bytes
a = run("report", "--preset", "ex2", "--family", "inverse-apn")
b = run("report", "--preset", "ex2", "--family", "inverse-apn")
if a is not None and b is not None and a != b:
    failures += 1
    print("FAIL determinism: outputs differ")

# exit-code taxonomy
run("report", "--preset", "ex9", "--family", "inverse-apn", expect_code=2)
run("report", "--family", "bogus", "--preset", "ex1", expect_code=2)
run("dobbertin", "--i", "5", "--emit", "support", expect_code=3)
run("bogus-subcommand", expect_code=2)

print(f"{failures} failure(s)")
sys.exit(failures)
