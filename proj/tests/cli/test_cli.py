"""CLI examples and exit codes. Usage: python3 test_cli.py <cyclemetrics executable>"""
import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1]
failures = []


def run(args, stdin=None):
    p = subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def report(args, stdin=None, code=0):
    rc, out, err = run(["--json", *args], stdin)
    check(rc == code, f"{args}: exit {rc}, wanted {code}: {err.strip()}")
    return json.loads(out)["result"] if out.strip() else None


def check(cond, what):
    if not cond:
        failures.append(what)


def gen(*args):
    rc, out, err = run(["gen", *args])
    assert rc == 0, err
    return out


c8 = gen("cycle", "8")
lok = gen("lok-counterexample")

# pipelines from the command reference
w = report(["width", "--witness"], c8)
check(w["width"] == 4 and w["witness"]["distance"] == 4, f"C8 width {w}")
iso = report(["iso-longest"], lok)
check(iso["length"] == 6, f"counterexample iso {iso}")

with tempfile.TemporaryDirectory() as tmp:
    t5 = gen("tri-grid", "5")
    cert_path = os.path.join(tmp, "t5.json")
    a = report(["support-approx", "--certificate", cert_path], t5)
    check(a["lower"] >= 1 and a["upper"] == a["width"] + 4, f"T5 approx {a}")
    t5_path = os.path.join(tmp, "t5.txt")
    open(t5_path, "w").write(t5)
    v = report(["verify-cert", "-i", t5_path, "--cert", cert_path])
    check(v["ok"], "T5 certificate")

    c8_path = os.path.join(tmp, "c8.txt")
    open(c8_path, "w").write(c8)
    c8_cert = os.path.join(tmp, "c8.json")
    report(["support-approx", "-i", c8_path, "--certificate", c8_cert])
    check(report(["verify-cert", "-i", c8_path, "--cert", c8_cert])["ok"], "C8 certificate")
    doc = json.load(open(c8_cert))
    doc["claimed_k"] = doc["verified_k"] + 1
    json.dump(doc, open(c8_cert, "w"))
    bad = report(["verify-cert", "-i", c8_path, "--cert", c8_cert], code=4)
    check(not bad["ok"] and "triple" in bad["violation"], f"tampered C8 certificate {bad}")

    lok_path = os.path.join(tmp, "lok.txt")
    open(lok_path, "w").write(lok)
    iso_cert = os.path.join(tmp, "iso7.json")
    json.dump({"length": 7, "cycle": [0, 1, 2, 3, 4, 5, 6]}, open(iso_cert, "w"))
    bad = report(["verify-cert", "-i", lok_path, "--cert", iso_cert], code=4)
    check(sorted(bad["pair"]) == ["a3", "x"], f"isometric violation {bad}")

    open(os.path.join(tmp, "junk.json"), "w").write("{not json")
    rc, _, _ = run(["verify-cert", "-i", lok_path, "--cert", os.path.join(tmp, "junk.json")])
    check(rc == 2, f"malformed certificate exit {rc}")

# exit codes
check(run(["width"], "0 1\n2 3\n")[0] == 2, "disconnected input accepted")
check(run(["width"], "0 0\n")[0] == 2, "self-loop accepted")
check(run(["width", "--bogus"], c8)[0] == 2, "unknown flag accepted")
check(run(["frobnicate"])[0] == 2, "unknown subcommand accepted")
check(run(["gen", "cycle"])[0] == 2, "missing generator size accepted")
check(run(["stretch-exact", "--cap", "3"], c8)[0] == 3, "tree cap not enforced")
check(run(["support-exact", "--cap", "0"], c8)[0] == 3, "cycle cap not enforced")
check(run(["dual"], c8)[0] == 2, "dual without faces accepted")
check(run(["--help"])[0] == 0, "help exit code")

# plane commands
g33 = gen("rect-grid", "3", "3", "--plane")
d = report(["dual"], g33)
check(d["nodes"] == 5 and len(d["edges"]) == 12, f"P3xP3 dual {d}")
dv = report(["verify-duality", "--all-trees"], g33)
check(dv["trees"] == 192 and dv["tree_failures"] == 0 and dv["equal_plus_one"], f"P3xP3 duality {dv}")
dc = report(["verify-duality"], gen("cycle", "8", "--plane"))
check(dc["congestion"] == 2 and dc["dual_stretch"] == 1, f"plane C8 duality {dc}")

# exact oracles
check(report(["stretch-exact"], c8)["stretch"] == 7, "C8 stretch")
check(report(["congestion-exact"], c8)["congestion"] == 2, "C8 congestion")
check(report(["lok36-check", "--k", "7"], lok)["conditions_satisfied"], "lemma conditions k=7")
check(not report(["iso-check", "--k", "7"], lok)["found"], "isometric 7-cycle in counterexample")
sub_c8 = run(["gen", "subdivide"], c8)[1]
check(report(["iso-check", "--k", "16"], sub_c8)["found"], "subdivided C8 has isometric 16-cycle")

# bench: default corpus, all checks hold; tree row values
b = report(["bench"])
check(b["violations"] == 0, f"bench violations {b['violations']}")
tree = next(r for r in b["rows"] if r["name"] == "path 6")
check((tree["support"], tree["width"], tree["congestion"], tree["stretch"]) == (0, 0, 1, 1), f"tree row {tree}")
c8row = next(r for r in b["rows"] if r["name"] == "cycle 8")
check(c8row["stretch"] == 7 and c8row["width_lower"] <= c8row["support"] <= c8row["width_upper"], f"C8 row {c8row}")

# row order and content do not depend on the worker count
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as mf:
    json.dump([{"gen": "cycle", "args": [n], "plane": True} for n in range(4, 10)]
              + [{"gen": "complete", "args": [4]}, {"gen": "nope"}], mf)
outs = []
for threads in ("1", "3"):
    p = subprocess.run([CLI, "--json", "bench", "--manifest", mf.name], capture_output=True, text=True,
                       env={**os.environ, "CYCLEMETRICS_THREADS": threads})
    check(p.returncode == 4, f"bench with a bad row exit {p.returncode}")
    rows = json.loads(p.stdout)["result"]["rows"]
    outs.append([{k: v for k, v in r.items() if k != "timing"} for r in rows])
os.unlink(mf.name)
check(outs[0] == outs[1], "bench rows differ between 1 and 3 threads")
check(outs[0][-1]["ok"] is False and outs[0][-2]["ok"] is True, "bad manifest row not isolated")

for f in failures:
    print("FAIL:", f)
print(f"{'ok' if not failures else 'FAILED'}: {len(failures)} failures")
sys.exit(1 if failures else 0)
