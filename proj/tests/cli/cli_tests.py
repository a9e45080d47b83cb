#!/usr/bin/env python3
"""Integration tests that drive the rootsplit executable as a subprocess."""

import argparse
import copy
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

CLI = None
SCHEMAS = None
FAILURES = []


def run(*args, stdin=None):
    p = subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, timeout=300)
    return p.returncode, p.stdout, p.stderr


def check(cond, what):
    print(("ok    " if cond else "FAIL  ") + what)
    if not cond:
        FAILURES.append(what)


def load_schema(name):
    with open(os.path.join(SCHEMAS, name)) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


def valid(validator, doc):
    err = jsonschema.exceptions.best_match(validator.iter_errors(doc))
    if err is not None:
        print("      ", list(err.absolute_path), err.message[:200])
    return err is None


def write(tmp, name, doc):
    path = os.path.join(tmp, name)
    with open(path, "w") as f:
        f.write(doc if isinstance(doc, str) else json.dumps(doc))
    return path


def rep(label, n, m0, m1):
    return {"label": label, "n": n, "m0": m0, "m1": m1}


SINGULAR = rep("singular", 1, [[[0, 0]]], [[[1, 0]]])
MINUS_ONE = rep("minus-one", 1, [[[-1, 0]]], [[[-1, 0]]])


def doc(*reps):
    return {"version": "1.0", "reps": copy.deepcopy(list(reps))}


def case_exit_codes(tmp):
    good = write(tmp, "good.json", doc(MINUS_ONE))
    code, out, _ = run("classify", good)
    check(code == 0, "classify of a valid document exits 0")
    check(json.loads(out)["results"][0]["result"]["options"] == [[-1]], "character -1 has root -1")

    code, _, err = run("classify", write(tmp, "bad.json", "{not json"))
    check(code == 2, "malformed JSON exits 2")
    check("SchemaError" in err, "malformed JSON reports SchemaError")
    extra = doc(MINUS_ONE)
    extra["reps"][0]["colour"] = "red"
    code, _, err = run("classify", write(tmp, "extra.json", extra))
    check(code == 2 and "colour" in err, "unknown key exits 2 and names the key")
    wrong = doc(rep("wrong", 2, [[[1, 0]]], [[[1, 0]]]))
    check(run("chern", write(tmp, "wrong.json", wrong))[0] == 2, "shape mismatch exits 2")
    check(run("classify", os.path.join(tmp, "missing.json"))[0] == 2, "unreadable input exits 2")
    check(run("example", "nope")[0] == 2, "unknown example exits 2")
    check(run("tree", "1", "3")[0] == 2, "tree with m < 2 exits 2")
    check(run("verify", "--ensemble", "bogus")[0] == 2, "unknown ensemble exits 2")
    check(run("verify", "--split", "2+x", "--ensemble", "decomposable", "--dim", "3")[0] == 2, "bad split exits 2")
    check(run("classify", good, "--tol-sing", "-1")[0] == 2, "negative tolerance exits 2")
    check(run("frobnicate")[0] == 2, "unknown subcommand exits 2")
    check(run("--help")[0] == 0, "help exits 0")

    mixed = write(tmp, "mixed.json", doc(SINGULAR, MINUS_ONE))
    code, out, _ = run("classify", mixed)
    check(code == 3, "singular monodromy exits 3")
    check(out.strip() == "", "without keep-going nothing is written")
    code, out, _ = run("classify", mixed, "--keep-going")
    check(code == 3, "keep-going still exits 3")
    results = json.loads(out)["results"]
    check(results[0]["error"]["code"] == "SingularMatrix", "keep-going emits an error object")
    check(results[1]["result"]["options"] == [[-1]], "keep-going classifies the remaining reps")

    code, out, _ = run("verify", "--ensemble", "generic", "--dim", "1", "--count", "200")
    check(code == 0 and json.loads(out)["totalViolations"] == 0, "clean verify run exits 0")
    code, out, _ = run("verify")
    check(code == 0, "default verify suite exits 0")
    # This ensemble at seed 1 contains samples with c1 = -5.
    code, out, _ = run("verify", "--ensemble", "generic", "--dim", "2", "--count", "10000", "--seed", "1")
    report = json.loads(out)
    check(code == 1 and report["totalViolations"] > 0, "verify with proven-bound violations exits 1")
    check(all(v["check"] in ("chern-bound", "root-bound") for v in report["reports"][0]["violations"]),
          "the violations are chern-bound / root-bound")


def case_schema_input(tmp):
    v = load_schema("input.schema.json")
    for name in ("pslz-section5", "aux-character"):
        code, out, _ = run("example", name)
        check(code == 0 and valid(v, json.loads(out)), f"example {name} matches the input schema")
    angle = doc(rep("angles", 2, [[{"angle": "1/3"}, [1, 0]], [[0, 0], [1, 0]]],
                    [[{"angle": "2/3", "modulus": 2.0}, [0, 0]], [[0, 0], [0.5, 0]]]))
    check(valid(v, angle), "angle entries match the input schema")
    check(run("classify", write(tmp, "angle.json", angle))[0] == 0, "angle entries are accepted by the CLI")
    rejected = [
        {"version": "1.0"},
        {"version": "1.0", "reps": [], "extra": 1},
        doc(rep("x", 4, [[[1, 0]]], [[[1, 0]]])),
        doc(rep("x", 1, [[[1, 0, 0]]], [[[1, 0]]])),
        doc(rep("x", 1, [[{"angle": "1/0"}]], [[[1, 0]]])),
        doc(rep("x", 1, [[{"angle": "1/2", "phase": 1}]], [[[1, 0]]])),
        doc(rep("x", 2, [[[1, 0]]], [[[1, 0]]])),
    ]
    for i, bad in enumerate(rejected):
        check(run("classify", write(tmp, f"reject{i}.json", bad))[0] == 2, f"rejected input {i} exits 2")
        check(not v.is_valid(bad), f"rejected input {i} fails the schema")


def case_schema_output(tmp):
    v = load_schema("output.schema.json")
    ex = run("example", "pslz-section5")[1]
    aux = run("example", "aux-character")[1]
    mixed = write(tmp, "mixed.json", doc(
        SINGULAR,
        rep("sub1", 2, [[{"angle": "1/3"}, [1, 0]], [[0, 0], [1, 0]]], [[{"angle": "2/3"}, [0, 0]], [[0, 0], [1, 0]]]),
        rep("generic", 2, [[[0.3, 0.2], [1, 0.5]], [[0.1, 0], [1.2, -0.4]]],
            [[[0.9, 0], [0.2, 0]], [[-0.3, 0.1], [0.7, 0.6]]])))
    runs = [
        (("classify", "-", "--exact"), ex),
        (("classify", "-"), aux),
        (("classify", mixed, "--keep-going"), None),
        (("chern", "-", "--exact"), ex),
        (("chern", mixed, "--keep-going"), None),
        (("tree", "3", "3"), None),
        (("tree", "3", "3", "-4"), None),
        (("tree", "4", "2"), None),
        (("verify", "--ensemble", "decomposable", "--dim", "3", "--split", "2+1", "--count", "50"), None),
        (("verify", "--ensemble", "rationalAngle", "--dim", "3", "--count", "50"), None),
        (("verify", "--ensemble", "generic", "--dim", "2", "--count", "10000"), None),
    ]
    for args, stdin in runs:
        code, out, _ = run(*args, stdin=stdin)
        check(code in (0, 1, 3) and valid(v, json.loads(out)), "output of " + " ".join(args) + " matches the schema")
    path = os.path.join(tmp, "written.json")
    code, out, _ = run("classify", "-", "--out", path, stdin=aux)
    with open(path) as f:
        written = json.load(f)
    check(code == 0 and out == "" and valid(v, written), "--out writes a schema-valid document")


def case_determinism(tmp):
    a = run("verify", "--seed", "42")
    b = run("verify", "--seed", "42")
    check(a[0] == 0 and a[1] == b[1], "verify --seed 42 is byte-identical across runs")
    c = run("verify", "--seed", "43")
    check(c[1] != a[1], "a different seed gives a different report")
    ex = run("example", "pslz-section5")[1]
    check(run("classify", "-", stdin=ex)[1] == run("classify", "-", stdin=ex)[1], "classify output is stable")


def case_presets(tmp):
    code, out, _ = run("example", "pslz-section5")
    check(code == 0, "example pslz-section5 exits 0")
    preset = json.loads(out)
    reps = preset["reps"]
    check(len(reps) == 1 and reps[0]["n"] == 3, "the worked example is one rank-3 rep")
    check(reps[0]["m1"] == [[[1, 0], [1, 0], [1, 0]], [[0, 0], [-1, 0], [0, 0]], [[0, 0], [0, 0], [-1, 0]]],
          "worked example M1 entries")
    check(reps[0]["m0"][1][1] == {"angle": "5/6"} and reps[0]["m0"][2][2] == {"angle": "1/6"},
          "worked example M0 is diag(1, w^5, w)")
    code, out, _ = run("classify", "-", "--exact", stdin=json.dumps(preset))
    r = json.loads(out)["results"][0]
    check(code == 0 and r["result"]["options"] == [[0, -1, -2]], "worked example roots are (0,-1,-2)")
    check(r["chern"]["c1"] == -3 and r["chern"]["exact"], "worked example c1 = -3, exactly")
    seq = r["composition"]["sequences"][0]
    check(seq["subDim"] == 2 and seq["subRoots"]["options"] == [[0, -2]] and seq["quotientRoots"]["options"] == [[-1]],
          "worked example sequence 0 -> {0,-2} -> rho -> {-1} -> 0")
    code, out, _ = run("example", "aux-character", "--pretty")
    check(code == 0 and "aux-character" in out, "example aux-character exits 0")
    code, out, _ = run("classify", "-", stdin=run("example", "aux-character")[1])
    r = json.loads(out)["results"][0]
    check(r["chern"]["c1"] == -1 and r["result"]["options"] == [[-1]], "aux character: c1 = -1, root -1")


def case_tolerances(tmp):
    tiny = write(tmp, "tiny.json", doc(rep("tiny", 1, [[[1e-9, 0]]], [[[1, 0]]])))
    strict = write(tmp, "strict.json", {"tolerances": {"sing": 1e-6}})
    loose = write(tmp, "loose.json", {"tolerances": {"sing": 1e-12}})
    check(run("classify", tiny)[0] == 0, "default eps_sing accepts det 1e-9")
    check(run("classify", tiny, "--tol-sing", "1e-6")[0] == 3, "flag alone overrides the default")
    check(run("classify", tiny, "--config", strict)[0] == 3, "config file overrides the default")
    check(run("classify", tiny, "--config", strict, "--tol-sing", "1e-12")[0] == 0, "flag overrides the config file")
    check(run("classify", tiny, "--config", loose, "--tol-sing", "1e-6")[0] == 3, "flag wins in the other direction")
    bad = write(tmp, "badcfg.json", {"tolerances": {"bogus": 1}})
    check(run("classify", tiny, "--config", bad)[0] == 2, "unknown tolerance in a config file exits 2")


def case_tree(tmp):
    code, out, _ = run("tree", "3", "3")
    t = json.loads(out)
    check(code == 0 and t["patterns"] == [[0, 0, 0], [0, 0, -1], [0, -1, -1], [0, -1, -2]], "tree 3 3 has 4 patterns")
    check(t["status"] == "proven", "tree 3 3 is proven")
    code, out, _ = run("tree", "2", "2")
    check(code == 0 and len(json.loads(out)["patterns"]) == 1, "tree 2 2 has a single pattern")
    a = run("tree", "3", "3", "-4")
    b = run("tree", "3", "3", "--c1-value", "-4")
    check(a[0] == 0 and a[1] == b[1], "negative positional c1 equals --c1-value")
    t = json.loads(a[1])
    check(t["c1"] == -4 and all(sum(p) == -4 for p in t["concrete"]), "concrete patterns sum to c1")
    check(t["concrete"] == [[-1, -1, -2]], "tree 3 3 at c1 = -4")
    check(run("tree", "3", "0")[0] == 2, "tree with d < 1 exits 2")


CASES = {
    "exit-codes": case_exit_codes,
    "schema-input": case_schema_input,
    "schema-output": case_schema_output,
    "determinism": case_determinism,
    "presets": case_presets,
    "tolerances": case_tolerances,
    "tree": case_tree,
}


def main():
    global CLI, SCHEMAS
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    parser.add_argument("--schemas", required=True)
    parser.add_argument("cases", nargs="*")
    args = parser.parse_args()
    unknown = [c for c in args.cases if c not in CASES]
    if unknown:
        parser.error("unknown case(s): " + ", ".join(unknown))
    CLI, SCHEMAS = args.cli, args.schemas
    with tempfile.TemporaryDirectory() as tmp:
        for name in args.cases or list(CASES):
            print(f"[{name}]")
            CASES[name](tmp)
    if FAILURES:
        print(f"{len(FAILURES)} failure(s)")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
